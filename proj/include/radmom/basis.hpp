#pragma once

#include <cstddef>
#include <stdexcept>

namespace radmom {

// (l, m) label of one spherical-harmonic basis function.
struct BasisIndex {
  int l = 0;
  int m = 0;

  bool valid() const { return l >= 0 && m >= -l && m <= l; }
  // Bijection onto 0 .. (l_max+1)^2 - 1.
  std::size_t flat() const { return std::size_t(l * (l + 1) + m); }
  static BasisIndex from_flat(std::size_t idx) {
    int l = 0;
    while (std::size_t((l + 1) * (l + 1)) <= idx) ++l;
    return {l, int(idx) - l * (l + 1)};
  }
  bool operator==(const BasisIndex&) const = default;
};

struct BasisTruncation {
  int l_max = 0;

  std::size_t dimension() const { return std::size_t(l_max + 1) * std::size_t(l_max + 1); }
  bool contains(BasisIndex idx) const { return idx.valid() && idx.l <= l_max; }
  bool operator==(const BasisTruncation&) const = default;
};

inline void require_valid(BasisIndex idx) {
  if (!idx.valid()) throw std::invalid_argument("invalid basis index (need |m| <= l, l >= 0)");
}

} // namespace radmom
