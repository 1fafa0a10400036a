#include "vassiliev/surface_group.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vb {

SurfWord surf_relator(int g) {
  SurfWord r;
  for (int i = 1; i <= 2 * g; ++i) r.push_back(i);
  for (int i = 1; i <= 2 * g; ++i) r.push_back(-i);
  return r;
}

int letter_rank(int l) {
  return 2 * (std::abs(l) - 1) + (l > 0 ? 0 : 1);
}

bool shortlex_less(const SurfWord& a, const SurfWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    int ra = letter_rank(a[k]), rb = letter_rank(b[k]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

std::string format_surf_word(const SurfWord& w) {
  std::string out;
  for (int l : w) {
    if (!out.empty()) out += ' ';
    out += 'w';
    out += std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

SurfWord parse_surf_word(const std::string& text, int g) {
  SurfWord out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || tok[0] != 'w')
      throw parse_error("bad surface letter '" + tok + "'");
    std::size_t p = 1;
    while (p < tok.size() && std::isdigit((unsigned char)tok[p])) ++p;
    if (p == 1) throw parse_error("bad surface letter '" + tok + "'");
    int r = std::stoi(tok.substr(1, p - 1));
    int sign = 1;
    if (p < tok.size()) {
      if (tok.substr(p) != "^-1")
        throw parse_error("bad surface letter '" + tok + "'");
      sign = -1;
    }
    if (r < 1 || r > 2 * g)
      throw parse_error("surface letter '" + tok + "' out of range for genus " +
                        std::to_string(g));
    out.push_back(sign * r);
  }
  return out;
}

SurfaceGroup::SurfaceGroup(int g) : g_(g), relator_(surf_relator(g)) {
  if (g < 1) throw pipeline_error("genus must be at least 1");
  for (int eps : {+1, -1}) {
    SurfWord base = eps == 1 ? relator_ : fw_inv(relator_);
    for (std::size_t o = 0; o < base.size(); ++o) {
      Rotation rot;
      rot.rot.assign(base.begin() + o, base.end());
      rot.rot.insert(rot.rot.end(), base.begin(), base.begin() + o);
      rot.eps = eps;
      rot.pref.assign(base.begin(), base.begin() + o);
      rots_.push_back(std::move(rot));
    }
  }
}

int SurfaceGroup::match_len(const SurfWord& w, std::size_t p,
                            const SurfWord& rot) {
  std::size_t n = 0;
  while (p + n < w.size() && n < rot.size() && w[p + n] == rot[n]) ++n;
  return (int)n;
}

bool SurfaceGroup::dehn_step(SurfWord& w, int thresh) const {
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (const Rotation& r : rots_) {
      int m = match_len(w, p, r.rot);
      if (m > thresh) {
        SurfWord tail(r.rot.begin() + m, r.rot.end());
        SurfWord next(w.begin(), w.begin() + p);
        SurfWord repl = fw_inv(tail);
        next.insert(next.end(), repl.begin(), repl.end());
        next.insert(next.end(), w.begin() + p + m, w.end());
        w = fw_reduce(next);
        return true;
      }
    }
  }
  return false;
}

SurfWord SurfaceGroup::geodesic(SurfWord w, long long& budget) const {
  int thresh = (int)relator_.size() / 2;
  while (dehn_step(w, thresh)) {
    if (--budget < 0) throw fuel_exhausted("normal form budget exceeded");
  }
  return w;
}

SurfWord SurfaceGroup::nf(const SurfWord& w) const {
  SurfWord red = fw_reduce(w);
  long long budget = nf_budget_;
  return nf_impl(red, budget);
}

SurfWord SurfaceGroup::nf_impl(const SurfWord& red, long long& budget) const {
  {
    std::lock_guard<std::mutex> lock(nf_mu_);
    auto it = nf_cache_.find(red);
    if (it != nf_cache_.end()) return it->second;
  }
  SurfWord result;
  if (g_ == 1) {
    int a = 0, b = 0;
    for (int l : red) {
      if (std::abs(l) == 1) a += l > 0 ? 1 : -1;
      else b += l > 0 ? 1 : -1;
    }
    for (int k = 0; k < std::abs(a); ++k) result.push_back(a > 0 ? 1 : -1);
    for (int k = 0; k < std::abs(b); ++k) result.push_back(b > 0 ? 2 : -2);
  } else {
    SurfWord w0 = geodesic(red, budget);
    // Geodesics are unique up to half-relator flips; enumerate the orbit
    // and keep the shortlex-least member. If a flip ever shortens the word
    // the starting point was not geodesic, so start over from there.
    SurfWord best = w0;
    std::vector<SurfWord> stack{w0};
    std::map<SurfWord, bool> seen{{w0, true}};
    int half = (int)relator_.size() / 2;
    while (!stack.empty()) {
      SurfWord u = stack.back();
      stack.pop_back();
      if (--budget < 0) throw fuel_exhausted("normal form budget exceeded");
      for (std::size_t p = 0; p < u.size(); ++p) {
        for (const Rotation& r : rots_) {
          int m = match_len(u, p, r.rot);
          if (m >= half) {
            SurfWord tail(r.rot.begin() + half, r.rot.end());
            SurfWord cand(u.begin(), u.begin() + p);
            SurfWord repl = fw_inv(tail);
            cand.insert(cand.end(), repl.begin(), repl.end());
            cand.insert(cand.end(), u.begin() + p + half, u.end());
            SurfWord v = fw_reduce(cand);
            if (v.size() < u.size()) {
              SurfWord res = nf_impl(v, budget);
              std::lock_guard<std::mutex> lock(nf_mu_);
              nf_cache_[red] = res;
              return res;
            }
            if (!seen.count(v)) {
              seen[v] = true;
              stack.push_back(v);
              if (shortlex_less(v, best)) best = v;
            }
          }
        }
      }
    }
    result = best;
  }
  std::lock_guard<std::mutex> lock(nf_mu_);
  nf_cache_[red] = result;
  return result;
}

SurfWord SurfaceGroup::mul(const SurfWord& a, const SurfWord& b) const {
  SurfWord w = a;
  w.insert(w.end(), b.begin(), b.end());
  return nf(w);
}

SurfWord SurfaceGroup::inv(const SurfWord& w) const { return nf(fw_inv(w)); }

bool SurfaceGroup::is_null(const SurfWord& w) const { return nf(w).empty(); }

bool SurfaceGroup::is_tree_edge(const SurfWord& gamma_nf, int l) const {
  SurfWord ext = gamma_nf;
  ext.push_back(l);
  SurfWord t = nf(ext);
  if (t == ext) return true;
  SurfWord back = t;
  back.push_back(-l);
  return gamma_nf == back;
}

SurfWord SurfaceGroup::expand_faces(const std::vector<FaceFactor>& faces) const {
  SurfWord out;
  for (const FaceFactor& f : faces) {
    SurfWord r = f.sign > 0 ? relator_ : fw_inv(relator_);
    out = fw_concat(out, f.anchor);
    out = fw_concat(out, r);
    out = fw_concat(out, fw_inv(f.anchor));
  }
  return out;
}

std::vector<FaceFactor> SurfaceGroup::fill_null_word(const SurfWord& w,
                                                     Fuel& fuel) const {
  SurfWord red = fw_reduce(w);
  if (!is_null(red))
    throw pipeline_error("cannot fill: word is nontrivial in the surface group");
  std::vector<FaceFactor> out;
  SurfWord cur;
  for (int l : red) {
    if (!is_tree_edge(cur, l)) {
      auto faces = fill_edge(cur, l, fuel);
      out.insert(out.end(), faces.begin(), faces.end());
    }
    cur.push_back(l);
    cur = nf(cur);
  }
  if (!cur.empty()) throw pipeline_error("filling walk did not close up");
  return out;
}

std::vector<FaceFactor> SurfaceGroup::fill_edge(const SurfWord& gamma_nf, int l,
                                                Fuel& fuel) const {
  auto key = std::make_pair(gamma_nf, l);
  {
    std::lock_guard<std::mutex> lock(edge_mu_);
    auto it = edge_cache_.find(key);
    if (it != edge_cache_.end()) return it->second;
  }
  SurfWord ext = gamma_nf;
  ext.push_back(l);
  SurfWord nu = nf(ext);
  std::vector<FaceFactor> faces;
  if (g_ == 1) {
    faces = fill_edge_torus(gamma_nf, l);
  } else {
    SurfWord loop = fw_concat(ext, fw_inv(nu));
    faces = dehn_fill(loop, fuel);
  }
  std::lock_guard<std::mutex> lock(edge_mu_);
  edge_cache_[key] = faces;
  return faces;
}

// On the torus the normal form is w1^a w2^b, so the only non-tree edges are
// the w1-edges taken at b != 0. Such an edge closes up across a fan of |b|
// commutator squares stacked along the w2-direction.
std::vector<FaceFactor> SurfaceGroup::fill_edge_torus(const SurfWord& gamma_nf,
                                                      int l) const {
  int a = 0, b = 0;
  for (int x : gamma_nf) {
    if (std::abs(x) == 1) a += x > 0 ? 1 : -1;
    else b += x > 0 ? 1 : -1;
  }
  auto col = [&](int y) {
    SurfWord c;
    for (int k = 0; k < std::abs(a); ++k) c.push_back(a > 0 ? 1 : -1);
    for (int k = 0; k < std::abs(y); ++k) c.push_back(y > 0 ? 2 : -2);
    return c;
  };
  std::vector<FaceFactor> faces;
  if (l == 1) {
    if (b > 0) {
      for (int y = b - 1; y >= 0; --y) faces.push_back({col(y), -1});
    } else {
      for (int y = b; y < 0; ++y) faces.push_back({col(y), +1});
    }
  } else if (l == -1) {
    SurfWord prev = gamma_nf;
    prev.push_back(-1);
    auto sub = fill_edge_torus(nf(prev), 1);
    for (auto it = sub.rbegin(); it != sub.rend(); ++it)
      faces.push_back({it->anchor, -it->sign});
  } else {
    throw pipeline_error("w2-edges are tree edges on the torus");
  }
  return faces;
}

// Greedy van Kampen filling: find a subword covering more than half of some
// relator rotation, peel off that disc (conjugated to its anchor through a
// tree-decomposed carrier), and recurse on the shortened word.
std::vector<FaceFactor> SurfaceGroup::dehn_fill(SurfWord w, Fuel& fuel) const {
  w = fw_reduce(w);
  if (w.empty()) return {};
  fuel.spend();
  int half = (int)relator_.size() / 2;
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (const Rotation& r : rots_) {
      int m = match_len(w, p, r.rot);
      if (m > half) {
        SurfWord x(w.begin(), w.begin() + p);
        SurfWord v(r.rot.begin() + m, r.rot.end());
        SurfWord c = fw_concat(x, fw_inv(r.pref));
        SurfWord anchor = nf(c);
        SurfWord z = fw_concat(c, fw_inv(anchor));
        auto zf = fill_tree_decomp(z, fuel);
        std::vector<FaceFactor> inv_zf;
        for (auto it = zf.rbegin(); it != zf.rend(); ++it)
          inv_zf.push_back({it->anchor, -it->sign});
        SurfWord rest_w = fw_concat(x, fw_inv(v));
        rest_w.insert(rest_w.end(), w.begin() + p + m, w.end());
        auto rest = dehn_fill(fw_reduce(rest_w), fuel);
        std::vector<FaceFactor> out = zf;
        out.push_back({anchor, r.eps});
        out.insert(out.end(), inv_zf.begin(), inv_zf.end());
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
      }
    }
  }
  throw pipeline_error("filling stuck: no long relator subword");
}

std::vector<FaceFactor> SurfaceGroup::fill_tree_decomp(const SurfWord& w,
                                                       Fuel& fuel) const {
  std::vector<FaceFactor> out;
  SurfWord cur;
  for (int l : w) {
    if (!is_tree_edge(cur, l)) {
      auto faces = fill_edge(cur, l, fuel);
      out.insert(out.end(), faces.begin(), faces.end());
    }
    cur.push_back(l);
    cur = nf(cur);
  }
  if (!cur.empty()) throw pipeline_error("tree decomposition did not close up");
  return out;
}

}  // namespace vb
