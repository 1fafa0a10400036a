#pragma once

#include <compare>
#include <vector>

#include "vassiliev/braid_words.hpp"
#include "vassiliev/surface_group.hpp"

namespace vb {

// An element of pi_1(M)^n x| Sigma_n: one surface loop per strand plus the
// induced permutation. Loops are stored in normal form.
struct HElem {
  std::vector<SurfWord> loops;
  Perm perm;
  friend auto operator<=>(const HElem&, const HElem&) = default;
};

HElem h_id(int n);
HElem h_mul(const SurfaceGroup& G, const HElem& h1, const HElem& h2);
HElem h_inv(const SurfaceGroup& G, const HElem& h);

// The projection killing all pure twists: a[i,r] -> loop w_r on strand i,
// crossings (singular or not) -> the transposition.
HElem phi(const SurfaceGroup& G, const BWord& w, int n);

// Surface word spelled as a-letters on the given strand.
BWord transliterate(const SurfWord& gamma_nf, int strand);

// A chosen set-theoretic lift of HElem into braid words: transliterated
// loops in strand order, then the permutation braid.
BWord section(const HElem& h);

// Pure part of w in the split: w * section(phi(w))^-1.
BWord k_part(const SurfaceGroup& G, const BWord& w, int n);

}  // namespace vb
