#include "vassiliev/coset_split.hpp"

#include <cstdlib>

namespace vb {

HElem h_id(int n) {
  HElem h;
  h.loops.resize(n);
  h.perm = perm_id(n);
  return h;
}

HElem h_mul(const SurfaceGroup& G, const HElem& h1, const HElem& h2) {
  int n = (int)h1.loops.size();
  HElem out;
  out.loops.resize(n);
  for (int i = 0; i < n; ++i) {
    SurfWord w = h1.loops[i];
    const SurfWord& tail = h2.loops[h1.perm[i] - 1];
    w.insert(w.end(), tail.begin(), tail.end());
    out.loops[i] = G.nf(w);
  }
  out.perm = perm_mul(h1.perm, h2.perm);
  return out;
}

HElem h_inv(const SurfaceGroup& G, const HElem& h) {
  int n = (int)h.loops.size();
  Perm si = perm_inv(h.perm);
  HElem out;
  out.loops.resize(n);
  for (int j = 0; j < n; ++j)
    out.loops[j] = G.nf(fw_inv(h.loops[si[j] - 1]));
  out.perm = si;
  return out;
}

namespace {

HElem phi_letter(const BLetter& l, int n) {
  HElem h = h_id(n);
  switch (l.k) {
    case BKind::A:
      h.loops[l.i - 1] = {l.e * l.r};
      break;
    case BKind::Sigma:
    case BKind::Tau:
      std::swap(h.perm[l.i - 1], h.perm[l.i]);
      break;
    case BKind::Twist:
    case BKind::Block:
      break;
  }
  return h;
}

}  // namespace

HElem phi(const SurfaceGroup& G, const BWord& w, int n) {
  HElem h = h_id(n);
  for (const BLetter& l : w) h = h_mul(G, h, phi_letter(l, n));
  return h;
}

BWord transliterate(const SurfWord& gamma_nf, int strand) {
  BWord out;
  out.reserve(gamma_nf.size());
  for (int x : gamma_nf)
    out.push_back(La(strand, std::abs(x), x > 0 ? 1 : -1));
  return out;
}

BWord section(const HElem& h) {
  BWord w;
  for (int i = 0; i < (int)h.loops.size(); ++i) {
    BWord piece = transliterate(h.loops[i], i + 1);
    w.insert(w.end(), piece.begin(), piece.end());
  }
  BWord pb = perm_braid(h.perm);
  w.insert(w.end(), pb.begin(), pb.end());
  return w;
}

BWord k_part(const SurfaceGroup& G, const BWord& w, int n) {
  BWord out = w;
  BWord si = inv_word(section(phi(G, w, n)));
  out.insert(out.end(), si.begin(), si.end());
  return syn_reduce(out);
}

}  // namespace vb
