#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vassiliev/errors.hpp"
#include "vassiliev/words.hpp"

namespace vb {

// Letters of (singular) surface braid words.
//   A      a[i,r]   strand i pushed around wall r
//   Sigma  s[j]     crossing of strands at positions j, j+1
//   Tau    x[j]     singular crossing (no inverse)
//   Twist  t[i,j]   pure twist generator, i < j
//   Block  T[i,j]   full twist of the block i..j, i < j
enum class BKind : std::uint8_t { A, Sigma, Tau, Twist, Block };

struct BLetter {
  BKind k = BKind::A;
  int i = 0;  // strand / position / lower index
  int j = 0;  // upper index for Twist and Block
  int r = 0;  // wall index for A
  int e = 1;  // exponent sign; always +1 for Tau
  friend auto operator<=>(const BLetter&, const BLetter&) = default;
};

using BWord = std::vector<BLetter>;

inline BLetter La(int i, int r, int e) { return {BKind::A, i, 0, r, e}; }
inline BLetter Ls(int j, int e) { return {BKind::Sigma, j, 0, 0, e}; }
inline BLetter Ltau(int j) { return {BKind::Tau, j, 0, 0, 1}; }
inline BLetter Lt(int i, int j, int e) { return {BKind::Twist, i, j, 0, e}; }
inline BLetter LT(int i, int j, int e) { return {BKind::Block, i, j, 0, e}; }

BLetter inv_letter(const BLetter& l);       // throws on Tau
BWord inv_word(const BWord& w);
BWord syn_reduce(const BWord& w);           // cancel adjacent l l^-1 pairs
int singular_count(const BWord& w);

// Text form: whitespace-separated letters, "^-1" marks an inverse.
std::string format_letter(const BLetter& l);
std::string format_braid_word(const BWord& w);
BWord parse_braid_word(const std::string& text, int n, int g,
                       bool allow_singular = true);

// --- permutations (one-line images, 1-based) ------------------------------

using Perm = std::vector<int>;

Perm perm_id(int n);
Perm perm_of(const BWord& w, int n);
Perm perm_mul(const Perm& p, const Perm& q);  // apply p, then q
Perm perm_inv(const Perm& p);
int perm_len(const Perm& p);
BWord perm_braid(const Perm& p);  // canonical positive word inducing p

// --- Artin action on the free group (disc braids) -------------------------
// sigma_j sends x_j to x_j x_{j+1} x_j^-1 and x_{j+1} to x_j. Used as an
// independent oracle for words without surface letters.

using ArtinImage = std::vector<FreeWord>;  // images of x_1..x_n

ArtinImage artin_image(const BWord& w, int n);
bool artin_eq(const BWord& u, const BWord& v, int n);

// --- sigma-words for the pure generators ----------------------------------
// T[i,j] = (s_i .. s_{j-1})(s_{j-1} .. s_i); t[i,j] = T[i,j] T[i,j-1]^-1.

BWord sigma_word_T(int i, int j);
BWord sigma_word_t(int i, int j);
BWord expand_pure(const BWord& w);  // replace t/T letters by sigma words

// --- conjugation by crossings ---------------------------------------------
// conj_sigma_letter(k, e, l) rewrites s_k^e * l * s_k^-e as a word in a/t
// letters; l must be an A or Twist letter.

BWord conj_sigma_letter(int k, int e, const BLetter& l);
BWord conj_sigma_word(const BWord& sigmas, const BWord& w);

// Rewrite a word over a/sigma letters with trivial permutation as a word
// over a/t letters, by pushing crossings into a permutation-braid state.
BWord to_pure(const BWord& w, int n);

// Each singular letter expands to (positive crossing) - (negative crossing);
// returns all 2^d signed resolutions, first singular letter most significant,
// positive branch first.
std::vector<std::pair<int, BWord>> resolve_singular(const BWord& w);

}  // namespace vb
