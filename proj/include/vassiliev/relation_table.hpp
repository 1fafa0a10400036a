#pragma once

#include <string>
#include <vector>

#include "vassiliev/braid_words.hpp"

namespace vb {

// One defining identity of the surface braid monoid, spelled as a pair of
// words that must get equal invariants.
struct RelationEntry {
  std::string name;
  BWord lhs;
  BWord rhs;
};

// All crossing/loop/twist commutation identities instantiated over the
// admissible indices for n strands at genus g.
std::vector<RelationEntry> relation_table(int n, int g);

// Forget one strand, tracking its position through crossings. Letters
// involving the deleted strand disappear; higher indices shift down.
BWord strand_delete(const BWord& w, int strand);

}  // namespace vb
