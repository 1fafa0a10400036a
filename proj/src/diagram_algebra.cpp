#include "vassiliev/diagram_algebra.hpp"

#include <utility>

namespace vb {

Chord make_chord(const SurfaceGroup& G, int i, int j, const SurfWord& gamma) {
  if (i > j) return {j, i, G.nf(fw_inv(gamma))};
  if (i == j) throw pipeline_error("chord endpoints must differ");
  return {i, j, G.nf(gamma)};
}

void add_into(AElem& acc, const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto it = acc.find(m);
  if (it == acc.end()) {
    acc.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

AElem straighten(const SurfaceGroup& G, const Monomial& m, int N,
                 const Int& coeff) {
  AElem out;
  std::vector<std::pair<Int, Monomial>> work{{coeff, m}};
  while (!work.empty()) {
    auto [c, mono] = std::move(work.back());
    work.pop_back();
    if ((int)mono.size() > N) continue;
    bool sorted = true;
    for (std::size_t p = 0; p + 1 < mono.size(); ++p) {
      const Chord& X = mono[p];      // (k, l, delta)
      const Chord& Y = mono[p + 1];  // (i, j, gamma)
      if (X.i <= Y.i) continue;
      sorted = false;
      Monomial swapped = mono;
      std::swap(swapped[p], swapped[p + 1]);
      if (Y.j == X.i) {
        Chord Z = make_chord(G, Y.i, X.j, fw_concat(Y.label, X.label));
        Monomial yz = mono, zy = mono;
        yz[p] = Y; yz[p + 1] = Z;
        zy[p] = Z; zy[p + 1] = Y;
        work.emplace_back(c, std::move(yz));
        work.emplace_back(-c, std::move(zy));
      } else if (Y.j == X.j) {
        Chord Z = make_chord(G, Y.i, X.i, fw_concat(Y.label, fw_inv(X.label)));
        Monomial yz = mono, zy = mono;
        yz[p] = Y; yz[p + 1] = Z;
        zy[p] = Z; zy[p + 1] = Y;
        work.emplace_back(c, std::move(yz));
        work.emplace_back(-c, std::move(zy));
      }
      work.emplace_back(c, std::move(swapped));
      break;
    }
    if (sorted) add_into(out, mono, c);
  }
  return out;
}

AElem a_one() { return {{Monomial{}, 1}}; }

AElem a_add(const AElem& x, const AElem& y) {
  AElem out = x;
  for (const auto& [m, c] : y) add_into(out, m, c);
  return out;
}

AElem a_scale(const AElem& x, const Int& c) {
  AElem out;
  if (c == 0) return out;
  for (const auto& [m, cc] : x) out.emplace(m, cc * c);
  return out;
}

AElem a_mul(const SurfaceGroup& G, const AElem& x, const AElem& y, int N) {
  AElem out;
  for (const auto& [m1, c1] : x) {
    for (const auto& [m2, c2] : y) {
      if ((int)(m1.size() + m2.size()) > N) continue;
      Monomial prod = m1;
      prod.insert(prod.end(), m2.begin(), m2.end());
      for (const auto& [m, c] : straighten(G, prod, N, c1 * c2))
        add_into(out, m, c);
    }
  }
  return out;
}

Chord h_act_chord(const SurfaceGroup& G, const HElem& h, const Chord& ch) {
  Perm si = perm_inv(h.perm);
  int ni = si[ch.i - 1], nj = si[ch.j - 1];
  SurfWord lab = h.loops[ni - 1];
  lab.insert(lab.end(), ch.label.begin(), ch.label.end());
  SurfWord tail = fw_inv(h.loops[nj - 1]);
  lab.insert(lab.end(), tail.begin(), tail.end());
  return make_chord(G, ni, nj, lab);
}

AElem h_act(const SurfaceGroup& G, const HElem& h, const AElem& x, int N) {
  AElem out;
  for (const auto& [m, c] : x) {
    Monomial nm;
    nm.reserve(m.size());
    for (const Chord& ch : m) nm.push_back(h_act_chord(G, h, ch));
    for (const auto& [m2, c2] : straighten(G, nm, N, c)) add_into(out, m2, c2);
  }
  return out;
}

UElem u_one(int n) { return {{UKey{{}, h_id(n)}, 1}}; }

UElem u_add(const UElem& x, const UElem& y) {
  UElem out = x;
  for (const auto& [k, c] : y) {
    auto it = out.find(k);
    if (it == out.end()) {
      if (c != 0) out.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

UElem u_scale(const UElem& x, const Int& c) {
  UElem out;
  if (c == 0) return out;
  for (const auto& [k, cc] : x) out.emplace(k, cc * c);
  return out;
}

UElem sd_mul(const SurfaceGroup& G, const UElem& x, const UElem& y, int N) {
  UElem out;
  for (const auto& [k1, c1] : x) {
    for (const auto& [k2, c2] : y) {
      AElem acted = h_act(G, k1.h, {{k2.mono, 1}}, N);
      AElem prod = a_mul(G, {{k1.mono, 1}}, acted, N);
      HElem h = h_mul(G, k1.h, k2.h);
      for (const auto& [m, c] : prod) {
        UKey key{m, h};
        auto it = out.find(key);
        Int add = c1 * c2 * c;
        if (it == out.end()) {
          if (add != 0) out.emplace(std::move(key), add);
        } else {
          it->second += add;
          if (it->second == 0) out.erase(it);
        }
      }
    }
  }
  return out;
}

UElem graded_part(const UElem& x, int d) {
  UElem out;
  for (const auto& [k, c] : x)
    if ((int)k.mono.size() == d) out.emplace(k, c);
  return out;
}

int lowest_degree(const UElem& x) {
  int best = -1;
  for (const auto& [k, c] : x) {
    if (c == 0) continue;
    if (best < 0 || (int)k.mono.size() < best) best = (int)k.mono.size();
  }
  return best;
}

AElem magnus_letter(const SurfaceGroup& G, const FLetter& fl, int N) {
  Chord t = make_chord(G, fl.i, fl.j, fl.label);
  AElem out;
  if (fl.e == 1) {
    out.emplace(Monomial{}, 1);
    if (N >= 1) out.emplace(Monomial{t}, 1);
    return out;
  }
  Int sign = 1;
  for (int d = 0; d <= N; ++d) {
    out.emplace(Monomial((std::size_t)d, t), sign);
    sign = -sign;
  }
  return out;
}

AElem magnus_v(const SurfaceGroup& G, const FWord& word, int N) {
  AElem out = a_one();
  for (const FLetter& fl : word)
    out = a_mul(G, out, magnus_letter(G, fl, N), N);
  return out;
}

AElem v_of(const SurfaceGroup& G, const KDecomp& levels, int N) {
  AElem out = a_one();
  for (const FWord& lev : levels)
    out = a_mul(G, out, magnus_v(G, lev, N), N);
  return out;
}

UElem u_of(const SurfaceGroup& G, int n, const BWord& w, int N, Fuel& fuel,
           bool verify) {
  BWord kw = k_part(G, w, n);
  KDecomp levels = decompose(G, n, kw, fuel, verify);
  AElem A = v_of(G, levels, N);
  HElem h = phi(G, w, n);
  UElem out;
  for (const auto& [m, c] : A) out.emplace(UKey{m, h}, c);
  return out;
}

UElem u_linear(const SurfaceGroup& G, int n, const BWord& w, int N, Fuel& fuel,
               bool verify) {
  UElem out;
  for (const auto& [sign, word] : resolve_singular(w))
    out = u_add(out, u_scale(u_of(G, n, word, N, fuel, verify), sign));
  return out;
}

}  // namespace vb
