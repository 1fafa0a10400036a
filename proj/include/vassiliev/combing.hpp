#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "vassiliev/braid_words.hpp"
#include "vassiliev/coset_split.hpp"
#include "vassiliev/surface_group.hpp"

namespace vb {

// Generator of the combed pure braid: the twist t[i,j] conjugated by the
// loop `label` run along strand i. Letters with the same (i, j, label) and
// opposite signs cancel.
struct FLetter {
  int i = 1;
  int j = 2;
  SurfWord label;
  int e = 1;
  friend auto operator<=>(const FLetter&, const FLetter&) = default;
};

using FWord = std::vector<FLetter>;

// One free-basis word per level 1 .. n-1.
using KDecomp = std::vector<FWord>;

// t[1,l] over the strand-1 alphabet {a[1,*], T[1,m] with m <= n-1}; T[1,n]
// is spelled as the transliterated surface relator.
BWord t_to_basis(const SurfaceGroup& G, int n, int l, int e);

// c * w * c^-1 for a conjugator letter c on strands >= 2 and a strand-1
// word w over the alphabet above. conj_strand1 applies a whole conjugator
// word (leftmost letter outermost).
BWord conj_strand1_letter(const SurfaceGroup& G, int n, const BLetter& c,
                          const BWord& w);
BWord conj_strand1(const SurfaceGroup& G, int n, const BWord& conjugators,
                   const BWord& w);

// Split an a/t word with trivial projection into its strand-1 part (pushed
// to the front) and the remaining word on strands >= 2.
std::pair<BWord, BWord> peel(const SurfaceGroup& G, int n, const BWord& w);

// Shift strands 2..n down to 1..n-1.
BWord reindex_down(const BWord& w);

// Rewrite a strand-1 word over {a[1,*], T[1,*]} into free-basis letters.
// The a-letters trace a loop in the surface group; tree steps move the
// cursor, non-tree steps emit the filling faces as full twist runs.
FWord to_free_basis(const SurfaceGroup& G, int n, const BWord& f, Fuel& fuel);

FWord fb_reduce(const FWord& w);

// Inverse rewriting, used as an exactness oracle for to_free_basis.
BWord fb_expand(const SurfaceGroup& G, int n, const FWord& w);

FWord lift_fb(const FWord& w, int d);

// Comb a braid word with trivial projection: peel strand by strand. With
// verify set, every level is re-expanded and compared against the peeled
// word. Throws pipeline_error if the projection is nontrivial.
KDecomp decompose(const SurfaceGroup& G, int n, const BWord& w, Fuel& fuel,
                  bool verify = false);

}  // namespace vb
