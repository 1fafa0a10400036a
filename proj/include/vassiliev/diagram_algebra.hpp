#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <vector>

#include "vassiliev/combing.hpp"
#include "vassiliev/coset_split.hpp"
#include "vassiliev/surface_group.hpp"

namespace vb {

using Int = boost::multiprecision::cpp_int;

// A chord connecting strands i < j, carrying a surface-group label in
// normal form. Built through make_chord, which flips (j, i, gamma) to
// (i, j, gamma^-1).
struct Chord {
  int i = 1;
  int j = 2;
  SurfWord label;
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

using Monomial = std::vector<Chord>;

// Linear combination of chord monomials, truncated at degree N by every
// operation that could grow it.
using AElem = std::map<Monomial, Int>;

// Group-algebra element over the split group: coefficients indexed by a
// chord monomial and an HElem, ordered by (degree, chords, h).
struct UKey {
  Monomial mono;
  HElem h;
  friend bool operator==(const UKey&, const UKey&) = default;
  friend bool operator<(const UKey& a, const UKey& b) {
    if (a.mono.size() != b.mono.size()) return a.mono.size() < b.mono.size();
    if (a.mono != b.mono) return a.mono < b.mono;
    return a.h < b.h;
  }
};

using UElem = std::map<UKey, Int>;

Chord make_chord(const SurfaceGroup& G, int i, int j, const SurfWord& gamma);

void add_into(AElem& acc, const Monomial& m, const Int& c);

// Rewrite coeff * (product of chords) into the basis of monomials with
// nondecreasing first indices, dropping terms above degree N.
AElem straighten(const SurfaceGroup& G, const Monomial& m, int N,
                 const Int& coeff = 1);

AElem a_one();
AElem a_add(const AElem& x, const AElem& y);
AElem a_scale(const AElem& x, const Int& c);
AElem a_mul(const SurfaceGroup& G, const AElem& x, const AElem& y, int N);

// Action of the split group: relabel endpoints through the inverse
// permutation and conjugate labels by the loops.
Chord h_act_chord(const SurfaceGroup& G, const HElem& h, const Chord& ch);
AElem h_act(const SurfaceGroup& G, const HElem& h, const AElem& x, int N);

UElem u_one(int n);
UElem u_add(const UElem& x, const UElem& y);
UElem u_scale(const UElem& x, const Int& c);
UElem sd_mul(const SurfaceGroup& G, const UElem& x, const UElem& y, int N);

UElem graded_part(const UElem& x, int d);
int lowest_degree(const UElem& x);  // -1 when x == 0

// Magnus expansion: a positive basis letter goes to 1 + t, a negative one
// to the alternating geometric series truncated at N.
AElem magnus_letter(const SurfaceGroup& G, const FLetter& fl, int N);
AElem magnus_v(const SurfaceGroup& G, const FWord& word, int N);
AElem v_of(const SurfaceGroup& G, const KDecomp& levels, int N);

// The invariant of a non-singular braid word, and its multilinear
// extension over resolutions of singular words.
UElem u_of(const SurfaceGroup& G, int n, const BWord& w, int N, Fuel& fuel,
           bool verify = false);
UElem u_linear(const SurfaceGroup& G, int n, const BWord& w, int N, Fuel& fuel,
               bool verify = false);

}  // namespace vb
