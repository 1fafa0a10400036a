#include "vassiliev/combing.hpp"

#include <cstdlib>

namespace vb {

namespace {

BWord relator_translit(const SurfaceGroup& G, int strand) {
  return transliterate(G.rel(), strand);
}

void append(BWord& out, const BWord& piece) {
  out.insert(out.end(), piece.begin(), piece.end());
}

BWord cat(std::initializer_list<BWord> pieces) {
  BWord out;
  for (const BWord& p : pieces) append(out, p);
  return out;
}

}  // namespace

BWord t_to_basis(const SurfaceGroup& G, int n, int l, int e) {
  BWord out;
  if (l < n)
    out.push_back(LT(1, l, 1));
  else
    append(out, relator_translit(G, 1));
  if (l - 1 >= 2) out.push_back(LT(1, l - 1, -1));
  return e == 1 ? out : inv_word(out);
}

namespace {

// T[1,l]^e -> t[1,l] t[1,l-1] ... t[1,2] (or the inverse sequence).
BWord basis_to_t(const BWord& w) {
  BWord out;
  for (const BLetter& x : w) {
    if (x.k == BKind::Block) {
      BWord seq;
      for (int m = x.j; m >= 2; --m) seq.push_back(Lt(1, m, 1));
      append(out, x.e == 1 ? seq : inv_word(seq));
    } else {
      out.push_back(x);
    }
  }
  return out;
}

// --- conjugation by T[K,L]^eps on the T-basis ----------------------------

BWord conj_T_letter(const SurfaceGroup& G, int n, int K, int L, int eps,
                    const BLetter& x) {
  if (x.k == BKind::A) return {x};
  if (x.k != BKind::Block || x.i != 1)
    throw pipeline_error("conj_T_letter: unexpected letter");
  int m = x.j, e = x.e;
  if (m < K || m >= L) return {x};
  BWord TL = L < n ? BWord{LT(1, L, 1)} : relator_translit(G, 1);
  BWord TLi = inv_word(TL);
  BWord C = K - 1 >= 2 ? BWord{LT(1, K - 1, 1)} : BWord{};
  BWord Ci = inv_word(C);
  BWord TK{LT(1, K, 1)};
  BWord TKi = inv_word(TK);
  BWord Tm{LT(1, m, 1)};
  BWord out;
  if (eps == 1) {
    BWord U = cat({C, TKi});
    BWord Ui = cat({TK, Ci});
    out = cat({U, Tm, TLi, Ui, TL});
  } else {
    BWord p = cat({TL, Ci, TK, TLi, C});
    BWord pi = inv_word(p);
    out = cat({p, Ci, Tm, TLi, C, pi, TL});
  }
  out = syn_reduce(out);
  return e == 1 ? out : inv_word(out);
}

BWord conj_T(const SurfaceGroup& G, int n, int K, int L, int eps,
             const BWord& w) {
  BWord out;
  for (const BLetter& x : w) append(out, conj_T_letter(G, n, K, L, eps, x));
  return syn_reduce(out);
}

// t[K,L] = T[K,L] T[K,L-1]^-1, so conjugation composes two T-conjugations.
BWord conj_t(const SurfaceGroup& G, int n, int K, int L, int eps,
             const BWord& w) {
  if (L == K + 1) return conj_T(G, n, K, L, eps, w);
  if (eps == 1)
    return conj_T(G, n, K, L, 1, conj_T(G, n, K, L - 1, -1, w));
  return conj_T(G, n, K, L - 1, 1, conj_T(G, n, K, L, -1, w));
}

// --- conjugation by a[K,R]^eps -------------------------------------------
// Worked in b-coordinates b[l,m] = a[l,m]^(+1 for odd m, -1 for even m),
// which absorb the wall parity into one sign.

int b_sign(int R) { return R % 2 == 1 ? 1 : -1; }

BWord conj_b_t(int K, int R, int beps, int l) {
  BWord P;
  for (int m = K - 1; m >= 2; --m) P.push_back(Lt(1, m, 1));
  BWord Pi = inv_word(P);
  BWord bR{La(1, R, b_sign(R))};
  BWord bRi = inv_word(bR);
  BWord tK{Lt(1, K, 1)};
  BWord tKi = inv_word(tK);
  if (l < K) return {Lt(1, l, 1)};
  if (l == K) {
    if (beps == 1) return cat({P, bRi, tK, bR, Pi});
    return cat({bR, Pi, tK, P, bRi});
  }
  BWord beta;
  if (beps == 1) {
    beta = tKi;
  } else {
    beta = cat({bR, Pi, tK, P, bRi});
  }
  return cat({beta, {Lt(1, l, 1)}, inv_word(beta)});
}

BWord conj_b_b(int K, int R, int beps, int S) {
  BWord bS{La(1, S, b_sign(S))};
  if (S == R) return bS;
  BWord P;
  for (int m = K - 1; m >= 2; --m) P.push_back(Lt(1, m, 1));
  BWord Pi = inv_word(P);
  BWord bR{La(1, R, b_sign(R))};
  BWord bRi = inv_word(bR);
  BWord tK{Lt(1, K, 1)};
  BWord tKi = inv_word(tK);
  if (beps == 1) {
    if (S < R) return cat({tKi, bS});
    return cat({bS, bRi, tK, bR});
  }
  if (S < R) return cat({bR, Pi, tK, P, bRi, bS});
  return cat({bS, Pi, tKi, P});
}

BWord conj_a_letter(const SurfaceGroup& G, int n, int K, int R, int eps,
                    const BLetter& x) {
  int beps = eps * b_sign(R);
  BWord w;
  if (x.k == BKind::A) {
    int S = x.r, e = x.e;
    w = conj_b_b(K, R, beps, S);
    if (b_sign(S) == -1) w = inv_word(w);
    if (e == -1) w = inv_word(w);
  } else if (x.k == BKind::Block && x.i == 1) {
    BWord seq;
    for (int m = x.j; m >= 2; --m) seq.push_back(Lt(1, m, 1));
    if (x.e != 1) seq = inv_word(seq);
    for (const BLetter& t : seq) {
      BWord piece = conj_b_t(K, R, beps, t.j);
      append(w, t.e == 1 ? piece : inv_word(piece));
    }
  } else {
    throw pipeline_error("conj_a_letter: unexpected letter");
  }
  BWord out;
  for (const BLetter& y : syn_reduce(w)) {
    if (y.k == BKind::Twist)
      append(out, t_to_basis(G, n, y.j, y.e));
    else
      out.push_back(y);
  }
  return syn_reduce(out);
}

}  // namespace

BWord conj_strand1_letter(const SurfaceGroup& G, int n, const BLetter& c,
                          const BWord& w) {
  switch (c.k) {
    case BKind::A: {
      BWord out;
      for (const BLetter& x : w)
        append(out, conj_a_letter(G, n, c.i, c.r, c.e, x));
      return syn_reduce(out);
    }
    case BKind::Twist:
      return conj_t(G, n, c.i, c.j, c.e, w);
    case BKind::Block:
      return conj_T(G, n, c.i, c.j, c.e, w);
    default:
      throw pipeline_error("conj_strand1_letter: bad conjugator");
  }
}

BWord conj_strand1(const SurfaceGroup& G, int n, const BWord& conjugators,
                   const BWord& w) {
  BWord out = w;
  for (auto it = conjugators.rbegin(); it != conjugators.rend(); ++it)
    out = conj_strand1_letter(G, n, *it, out);
  return out;
}

std::pair<BWord, BWord> peel(const SurfaceGroup& G, int n, const BWord& w) {
  BWord f_acc, rest;
  for (const BLetter& x : w) {
    bool strand1 = x.i == 1 && (x.k == BKind::A || x.k == BKind::Twist ||
                                x.k == BKind::Block);
    if (strand1) {
      BWord base =
          x.k == BKind::Twist ? t_to_basis(G, n, x.j, x.e) : BWord{x};
      append(f_acc, conj_strand1(G, n, rest, base));
      f_acc = syn_reduce(f_acc);
    } else {
      rest.push_back(x);
    }
  }
  return {syn_reduce(f_acc), syn_reduce(rest)};
}

BWord reindex_down(const BWord& w) {
  BWord out;
  out.reserve(w.size());
  for (const BLetter& x : w) {
    BLetter y = x;
    y.i = x.i - 1;
    if (x.k != BKind::A) y.j = x.j - 1;
    out.push_back(y);
  }
  return out;
}

namespace {

// T[1,k]^e at cursor gamma, spelled in basis letters by the telescoping
// T[1,k] = t[1,k] t[1,k-1] ... t[1,2].
void emit_T(FWord& out, int k, const SurfWord& cur, int e) {
  if (e == 1) {
    for (int m = k; m >= 2; --m) out.push_back({1, m, cur, 1});
  } else {
    for (int m = 2; m <= k; ++m) out.push_back({1, m, cur, -1});
  }
}

}  // namespace

FWord to_free_basis(const SurfaceGroup& G, int n, const BWord& f, Fuel& fuel) {
  FWord out;
  SurfWord cur;
  for (const BLetter& x : f) {
    if (x.k == BKind::Block) {
      emit_T(out, x.j, cur, x.e);
    } else if (x.k == BKind::A && x.i == 1) {
      int l = x.r * x.e;
      if (!G.is_tree_edge(cur, l)) {
        for (const FaceFactor& face : G.fill_edge_faces(cur, l, fuel))
          emit_T(out, n, face.anchor, face.sign);
      }
      cur.push_back(l);
      cur = G.nf(cur);
    } else {
      throw pipeline_error("to_free_basis: unexpected letter");
    }
  }
  if (!cur.empty())
    throw pipeline_error("to_free_basis: strand loop is not null");
  return fb_reduce(out);
}

FWord fb_reduce(const FWord& w) {
  FWord out;
  for (const FLetter& x : w) {
    if (!out.empty() && out.back().i == x.i && out.back().j == x.j &&
        out.back().label == x.label && out.back().e == -x.e)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

BWord fb_expand(const SurfaceGroup& G, int n, const FWord& w) {
  BWord out;
  for (const FLetter& x : w) {
    if (x.i != 1) throw pipeline_error("fb_expand: expected level-1 letters");
    BWord core;
    if (x.j < n)
      core.push_back(LT(1, x.j, 1));
    else
      append(core, relator_translit(G, 1));
    if (x.j - 1 >= 2) core.push_back(LT(1, x.j - 1, -1));
    BWord carrier = transliterate(x.label, 1);
    BWord piece = cat({carrier, core, inv_word(carrier)});
    append(out, x.e == 1 ? piece : inv_word(piece));
  }
  return syn_reduce(out);
}

FWord lift_fb(const FWord& w, int d) {
  FWord out = w;
  for (FLetter& x : out) {
    x.i += d;
    x.j += d;
  }
  return out;
}

KDecomp decompose(const SurfaceGroup& G, int n, const BWord& w, Fuel& fuel,
                  bool verify) {
  if (phi(G, w, n) != h_id(n))
    throw pipeline_error("decompose: word has a nontrivial projection");
  BWord cur = to_pure(expand_pure(w), n);
  KDecomp levels;
  for (int lev = 1; lev < n; ++lev) {
    int nloc = n - lev + 1;
    auto [f, rest] = peel(G, nloc, cur);
    FWord fb = to_free_basis(G, nloc, f, fuel);
    if (verify && fb_expand(G, nloc, fb) != f)
      throw pipeline_error("decompose: level re-expansion mismatch");
    levels.push_back(lift_fb(fb, lev - 1));
    cur = reindex_down(rest);
  }
  SurfWord leftover;
  for (const BLetter& x : cur) {
    if (x.k != BKind::A || x.i != 1)
      throw pipeline_error("decompose: residual strand has twists");
    leftover.push_back(x.r * x.e);
  }
  if (!G.is_null(leftover))
    throw pipeline_error("decompose: residual strand loop is not null");
  return levels;
}

}  // namespace vb
