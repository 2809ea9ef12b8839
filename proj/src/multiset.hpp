#pragma once

#include <algorithm>
#include <array>
#include <cmath>

namespace specgeo {

using Triple = std::array<double, 3>;

inline Triple sorted(Triple t) {
  std::sort(t.begin(), t.end());
  return t;
}

inline bool all_finite(const Triple& t) {
  return std::isfinite(t[0]) && std::isfinite(t[1]) && std::isfinite(t[2]);
}

inline bool close_rel(double x, double y, double rel) {
  return std::abs(x - y) <= rel * std::max(std::abs(x), std::abs(y));
}

/// Multiset comparison against one shared scale, so exact zeros in an
/// otherwise well-scaled triple compare cleanly.
inline bool multiset_close(const Triple& a, const Triple& b, double rel) {
  const Triple sa = sorted(a);
  const Triple sb = sorted(b);
  double scale = 0.0;
  for (int i = 0; i < 3; ++i) scale = std::max({scale, std::abs(sa[i]), std::abs(sb[i])});
  for (int i = 0; i < 3; ++i) {
    if (std::abs(sa[i] - sb[i]) > rel * scale) return false;
  }
  return true;
}

}  // namespace specgeo
