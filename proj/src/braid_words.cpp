#include "vassiliev/braid_words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vb {

BLetter inv_letter(const BLetter& l) {
  if (l.k == BKind::Tau)
    throw pipeline_error("singular letters have no inverse");
  BLetter m = l;
  m.e = -l.e;
  return m;
}

BWord inv_word(const BWord& w) {
  BWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(inv_letter(*it));
  return out;
}

BWord syn_reduce(const BWord& w) {
  BWord out;
  out.reserve(w.size());
  for (const BLetter& l : w) {
    if (!out.empty() && l.k != BKind::Tau && out.back() == inv_letter(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

int singular_count(const BWord& w) {
  int d = 0;
  for (const BLetter& l : w)
    if (l.k == BKind::Tau) ++d;
  return d;
}

std::string format_letter(const BLetter& l) {
  std::string s;
  switch (l.k) {
    case BKind::A:
      s = "a[" + std::to_string(l.i) + "," + std::to_string(l.r) + "]";
      break;
    case BKind::Sigma:
      s = "s[" + std::to_string(l.i) + "]";
      break;
    case BKind::Tau:
      return "x[" + std::to_string(l.i) + "]";
    case BKind::Twist:
      s = "t[" + std::to_string(l.i) + "," + std::to_string(l.j) + "]";
      break;
    case BKind::Block:
      s = "T[" + std::to_string(l.i) + "," + std::to_string(l.j) + "]";
      break;
  }
  if (l.e < 0) s += "^-1";
  return s;
}

std::string format_braid_word(const BWord& w) {
  std::string out;
  for (const BLetter& l : w) {
    if (!out.empty()) out += ' ';
    out += format_letter(l);
  }
  return out;
}

namespace {

// Splits "a[1,2]^-1" into kind char, bracket arguments and sign.
BLetter parse_letter(const std::string& tok, int n, int g,
                     bool allow_singular) {
  auto fail = [&]() -> BLetter {
    throw parse_error("bad letter '" + tok + "'");
  };
  if (tok.size() < 4) return fail();
  char kind = tok[0];
  if (tok[1] != '[') return fail();
  std::size_t close = tok.find(']');
  if (close == std::string::npos) return fail();
  int e = 1;
  if (close + 1 != tok.size()) {
    if (tok.substr(close + 1) != "^-1") return fail();
    e = -1;
  }
  std::vector<int> args;
  std::string body = tok.substr(2, close - 2);
  std::istringstream in(body);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    if (piece.empty() ||
        !std::all_of(piece.begin(), piece.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      return fail();
    args.push_back(std::stoi(piece));
  }
  auto check = [&](bool ok, const std::string& why) {
    if (!ok) throw parse_error("letter '" + tok + "': " + why);
  };
  switch (kind) {
    case 'a':
      check(args.size() == 2, "expected a[strand,wall]");
      check(1 <= args[0] && args[0] <= n, "strand out of range");
      check(1 <= args[1] && args[1] <= 2 * g, "wall out of range");
      return La(args[0], args[1], e);
    case 's':
      check(args.size() == 1, "expected s[position]");
      check(1 <= args[0] && args[0] <= n - 1, "position out of range");
      return Ls(args[0], e);
    case 'x':
      check(allow_singular, "singular letters not allowed here");
      check(args.size() == 1, "expected x[position]");
      check(1 <= args[0] && args[0] <= n - 1, "position out of range");
      check(e == 1, "singular letters have no inverse");
      return Ltau(args[0]);
    case 't':
    case 'T': {
      check(args.size() == 2, "expected two indices");
      check(1 <= args[0] && args[0] < args[1] && args[1] <= n,
            "indices must satisfy 1 <= i < j <= n");
      return kind == 't' ? Lt(args[0], args[1], e) : LT(args[0], args[1], e);
    }
    default:
      return fail();
  }
}

}  // namespace

BWord parse_braid_word(const std::string& text, int n, int g,
                       bool allow_singular) {
  BWord out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(parse_letter(tok, n, g, allow_singular));
  return out;
}

Perm perm_id(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  return p;
}

Perm perm_of(const BWord& w, int n) {
  Perm p = perm_id(n);
  for (const BLetter& l : w) {
    if (l.k == BKind::Sigma || l.k == BKind::Tau) {
      int j = l.i;
      for (int& x : p) {
        if (x == j) x = j + 1;
        else if (x == j + 1) x = j;
      }
    }
  }
  return p;
}

Perm perm_mul(const Perm& p, const Perm& q) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = q[p[i] - 1];
  return out;
}

Perm perm_inv(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i] - 1] = (int)i + 1;
  return out;
}

int perm_len(const Perm& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

BWord perm_braid(const Perm& p) {
  Perm a = p;
  BWord w;
  for (;;) {
    bool moved = false;
    for (std::size_t j = 0; j + 1 < a.size(); ++j) {
      if (a[j] > a[j + 1]) {
        w.push_back(Ls((int)j + 1, 1));
        std::swap(a[j], a[j + 1]);
        moved = true;
        break;
      }
    }
    if (!moved) return w;
  }
}

namespace {

FreeWord apply_auto(const ArtinImage& img, const FreeWord& w) {
  FreeWord out;
  for (int x : w) {
    const FreeWord& im = img[std::abs(x) - 1];
    if (x > 0)
      out.insert(out.end(), im.begin(), im.end());
    else {
      FreeWord ii = fw_inv(im);
      out.insert(out.end(), ii.begin(), ii.end());
    }
  }
  return fw_reduce(out);
}

}  // namespace

ArtinImage artin_image(const BWord& w, int n) {
  ArtinImage img(n);
  for (int i = 0; i < n; ++i) img[i] = {i + 1};
  for (const BLetter& l : w) {
    if (l.k != BKind::Sigma)
      throw pipeline_error("artin_image: expected a crossing-only word");
    int j = l.i;
    if (j < 1 || j >= n) throw pipeline_error("artin_image: bad index");
    ArtinImage step(n);
    for (int i = 0; i < n; ++i) step[i] = {i + 1};
    if (l.e == 1) {
      step[j - 1] = {j, j + 1, -j};
      step[j] = {j};
    } else {
      step[j - 1] = {j + 1};
      step[j] = {-(j + 1), j, j + 1};
    }
    for (int i = 0; i < n; ++i) img[i] = apply_auto(step, img[i]);
  }
  return img;
}

bool artin_eq(const BWord& u, const BWord& v, int n) {
  return artin_image(u, n) == artin_image(v, n);
}

BWord sigma_word_T(int i, int j) {
  BWord w;
  if (j <= i) return w;
  for (int k = i; k < j; ++k) w.push_back(Ls(k, 1));
  for (int k = j - 1; k >= i; --k) w.push_back(Ls(k, 1));
  return w;
}

BWord sigma_word_t(int i, int j) {
  BWord w = sigma_word_T(i, j);
  BWord lower = inv_word(sigma_word_T(i, j - 1));
  w.insert(w.end(), lower.begin(), lower.end());
  return w;
}

BWord expand_pure(const BWord& w) {
  BWord out;
  for (const BLetter& l : w) {
    if (l.k == BKind::Twist || l.k == BKind::Block) {
      BWord sw = l.k == BKind::Twist ? sigma_word_t(l.i, l.j)
                                     : sigma_word_T(l.i, l.j);
      if (l.e < 0) sw = inv_word(sw);
      out.insert(out.end(), sw.begin(), sw.end());
    } else {
      out.push_back(l);
    }
  }
  return out;
}

BWord conj_sigma_letter(int k, int e, const BLetter& l) {
  if (l.k == BKind::A) {
    int i = l.i, r = l.r;
    if (e == 1) {
      BWord w;
      if (k == i) {
        if (r % 2 == 0)
          w = {La(i + 1, r, 1), Lt(i, i + 1, -1)};
        else
          w = {Lt(i, i + 1, 1), La(i + 1, r, 1)};
      } else if (k == i - 1) {
        if (r % 2 == 0)
          w = {Lt(i - 1, i, 1), La(i - 1, r, 1)};
        else
          w = {La(i - 1, r, 1), Lt(i - 1, i, -1)};
      } else {
        w = {La(i, r, 1)};
      }
      return l.e == 1 ? w : inv_word(w);
    }
    // s_k^-1 y s_k = t[k,k+1]^-1 (s_k y s_k^-1) t[k,k+1]
    BWord out{Lt(k, k + 1, -1)};
    BWord inner = conj_sigma_letter(k, 1, l);
    out.insert(out.end(), inner.begin(), inner.end());
    out.push_back(Lt(k, k + 1, 1));
    return out;
  }
  if (l.k == BKind::Twist) {
    int i = l.i, j = l.j;
    if (e == 1) {
      BWord w;
      if (j == i + 1 && k == i)
        w = {Lt(i, j, 1)};
      else if (k == i - 1)
        w = {Lt(i - 1, j, 1)};
      else if (k == i)
        w = {Lt(i, i + 1, 1), Lt(i + 1, j, 1), Lt(i, i + 1, -1)};
      else if (k == j - 1)
        w = {Lt(i, j - 1, 1)};
      else if (k == j)
        w = {Lt(i, j, -1), Lt(i, j + 1, 1), Lt(i, j, 1)};
      else
        w = {Lt(i, j, 1)};
      return l.e == 1 ? w : inv_word(w);
    }
    BWord out{Lt(k, k + 1, -1)};
    BWord inner = conj_sigma_letter(k, 1, l);
    out.insert(out.end(), inner.begin(), inner.end());
    out.push_back(Lt(k, k + 1, 1));
    return out;
  }
  throw pipeline_error("conj_sigma_letter: expected an a or t letter");
}

BWord conj_sigma_word(const BWord& sigmas, const BWord& w) {
  BWord out = w;
  for (auto it = sigmas.rbegin(); it != sigmas.rend(); ++it) {
    BWord nxt;
    for (const BLetter& x : out) {
      BWord piece = conj_sigma_letter(it->i, it->e, x);
      nxt.insert(nxt.end(), piece.begin(), piece.end());
    }
    out = syn_reduce(nxt);
  }
  return out;
}

BWord to_pure(const BWord& w, int n) {
  BWord pure;
  Perm s = perm_id(n);
  for (const BLetter& l : w) {
    if (l.k == BKind::A) {
      BWord piece = conj_sigma_word(perm_braid(s), {l});
      pure.insert(pure.end(), piece.begin(), piece.end());
    } else if (l.k == BKind::Sigma) {
      int j = l.i;
      Perm sj = perm_id(n);
      std::swap(sj[j - 1], sj[j]);
      Perm s2 = perm_mul(s, sj);
      bool up = perm_len(s2) > perm_len(s);
      // Schreier rewriting against the permutation-braid transversal:
      // only the length-dropping positive and length-raising negative
      // crossings contribute a generator.
      if (l.e == 1 && !up) {
        BWord piece = conj_sigma_word(perm_braid(s2), {Lt(j, j + 1, 1)});
        pure.insert(pure.end(), piece.begin(), piece.end());
      } else if (l.e == -1 && up) {
        BWord piece = conj_sigma_word(perm_braid(s2), {Lt(j, j + 1, -1)});
        pure.insert(pure.end(), piece.begin(), piece.end());
      }
      s = s2;
    } else {
      throw pipeline_error("to_pure: expected a word over a and s letters");
    }
    pure = syn_reduce(pure);
  }
  if (s != perm_id(n))
    throw pipeline_error("to_pure: word has nontrivial permutation");
  return pure;
}

std::vector<std::pair<int, BWord>> resolve_singular(const BWord& w) {
  std::vector<std::pair<int, BWord>> outs{{1, {}}};
  for (const BLetter& l : w) {
    if (l.k == BKind::Tau) {
      std::vector<std::pair<int, BWord>> nxt;
      nxt.reserve(outs.size() * 2);
      for (const auto& [sign, pre] : outs) {
        BWord pos = pre;
        pos.push_back(Ls(l.i, 1));
        nxt.emplace_back(sign, std::move(pos));
        BWord neg = pre;
        neg.push_back(Ls(l.i, -1));
        nxt.emplace_back(-sign, std::move(neg));
      }
      outs = std::move(nxt);
    } else {
      for (auto& [sign, pre] : outs) pre.push_back(l);
    }
  }
  return outs;
}

}  // namespace vb
