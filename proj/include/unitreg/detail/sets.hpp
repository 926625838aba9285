#pragma once

#include <algorithm>
#include <vector>

// Small helpers for index sets represented as sorted vectors of int.

namespace unitreg::detail {

inline std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::vector<int> set_intersect(const std::vector<int>& a,
                                      const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline std::vector<int> set_difference(const std::vector<int>& a,
                                       const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline bool set_contains(const std::vector<int>& a, int x) {
  return std::binary_search(a.begin(), a.end(), x);
}

// a <= b as sets.
inline bool set_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// [0,n) \ a.
inline std::vector<int> set_complement(int n, const std::vector<int>& a) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) - a.size());
  std::size_t j = 0;
  for (int i = 0; i < n; ++i) {
    if (j < a.size() && a[j] == i) {
      ++j;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace unitreg::detail
