#pragma once

#include <compare>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "vassiliev/errors.hpp"
#include "vassiliev/words.hpp"

namespace vb {

// Fundamental group of a closed orientable surface of genus g >= 1,
// presented on generators w_1 .. w_{2g} with the single relator
//   w_1 w_2 ... w_{2g} w_1^-1 w_2^-1 ... w_{2g}^-1.
// A SurfWord spells an element: letter +r means w_r, -r means w_r^-1.
using SurfWord = FreeWord;

SurfWord surf_relator(int g);

// Letter order used for shortlex: w_1 < w_1^-1 < w_2 < w_2^-1 < ...
int letter_rank(int l);
bool shortlex_less(const SurfWord& a, const SurfWord& b);

// Text form: "w1 w2^-1", empty string for the identity.
std::string format_surf_word(const SurfWord& w);
SurfWord parse_surf_word(const std::string& text, int g);

// One disc of a filling. Reads as anchor * R^sign * anchor^-1, with the
// anchor in normal form and sign in {+1, -1}.
struct FaceFactor {
  SurfWord anchor;
  int sign = 1;
  friend auto operator<=>(const FaceFactor&, const FaceFactor&) = default;
};

class SurfaceGroup {
 public:
  explicit SurfaceGroup(int g);

  int genus() const { return g_; }
  const SurfWord& rel() const { return relator_; }

  // Normal form. Genus 1 is w1^a w2^b by letter counts. Higher genus runs
  // Dehn reduction to a geodesic, then closes under half-relator flips and
  // keeps the shortlex-least representative. Results are memoized.
  SurfWord nf(const SurfWord& w) const;

  SurfWord mul(const SurfWord& a, const SurfWord& b) const;
  SurfWord inv(const SurfWord& w) const;
  bool is_null(const SurfWord& w) const;

  // Cayley-graph edge gamma --l--> gamma*l lies on the normal-form tree
  // iff one endpoint's normal form extends the other's by that letter.
  bool is_tree_edge(const SurfWord& gamma_nf, int l) const;

  SurfWord expand_faces(const std::vector<FaceFactor>& faces) const;

  // Express a null word as a product of conjugated relators. The expansion
  // of the returned faces is freely equal to the input. Throws
  // pipeline_error if the word is not null, fuel_exhausted if the search
  // budget runs out.
  std::vector<FaceFactor> fill_null_word(const SurfWord& w, Fuel& fuel) const;

  // Faces closing up the single edge gamma --l--> gamma*l against the
  // normal-form tree. Results are memoized per edge.
  std::vector<FaceFactor> fill_edge_faces(const SurfWord& gamma_nf, int l,
                                          Fuel& fuel) const {
    return fill_edge(gamma_nf, l, fuel);
  }

  void set_nf_budget(long long b) { nf_budget_ = b; }

 private:
  struct Rotation {
    SurfWord rot;   // p^-1 * R^eps * p  where p = R^eps[0..offset)
    int eps;
    SurfWord pref;  // p
  };

  static int match_len(const SurfWord& w, std::size_t p, const SurfWord& rot);

  SurfWord nf_impl(const SurfWord& reduced, long long& budget) const;
  SurfWord geodesic(SurfWord w, long long& budget) const;
  bool dehn_step(SurfWord& w, int thresh) const;

  std::vector<FaceFactor> fill_edge(const SurfWord& gamma_nf, int l,
                                    Fuel& fuel) const;
  std::vector<FaceFactor> fill_edge_torus(const SurfWord& gamma_nf,
                                          int l) const;
  std::vector<FaceFactor> dehn_fill(SurfWord w, Fuel& fuel) const;
  std::vector<FaceFactor> fill_tree_decomp(const SurfWord& w,
                                           Fuel& fuel) const;

  int g_;
  SurfWord relator_;
  std::vector<Rotation> rots_;
  long long nf_budget_ = 5'000'000;

  mutable std::mutex nf_mu_;
  mutable std::map<SurfWord, SurfWord> nf_cache_;
  mutable std::mutex edge_mu_;
  mutable std::map<std::pair<SurfWord, int>, std::vector<FaceFactor>>
      edge_cache_;
};

}  // namespace vb
