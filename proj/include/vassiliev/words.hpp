#pragma once

#include <vector>

namespace vb {

// A word in a free group: letters are nonzero ints, -x is the inverse of x.
using FreeWord = std::vector<int>;

inline FreeWord fw_inv(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

// Cancel adjacent x, -x pairs until none remain.
inline FreeWord fw_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

inline FreeWord fw_concat(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return fw_reduce(out);
}

}  // namespace vb
