#pragma once

#include <cstdint>

#include "unitreg/ffmatrix.hpp"
#include "unitreg/lvw.hpp"
#include "unitreg/transformation.hpp"
#include "unitreg/txy.hpp"

namespace unitreg {

// Collapse c(f) = |X \ T_f| and defect d(f) = |X \ Xf|; f is semi-balanced
// when the two agree.
struct BalanceReport {
  std::uint64_t collapse = 0;
  std::uint64_t defect = 0;
  bool semi_balanced = false;
};

BalanceReport balance_transform(const Transformation& f);

// For a linear map on GF(p)^n viewed as a self-map of the p^n vectors:
// |T_f| = |R(f)| = p^rank(f), so collapse = defect = p^n - p^rank(f).
BalanceReport balance_linear(const FFMatrix& f);

// Ceiling on p^n for materializing a linear map as a point map.
inline constexpr std::uint64_t kDefaultMaterializeBound = 64;

// f as an explicit transformation of the p^n vectors, vector
// (v_0,...,v_{n-1}) indexed as sum v_i p^i.
Transformation materialize(const FFMatrix& f,
                           std::uint64_t point_bound = kDefaultMaterializeBound);

// Independent route to balance_linear through the explicit point map.
BalanceReport materialized_balance(const FFMatrix& f,
                                   std::uint64_t point_bound = kDefaultMaterializeBound);

// Per-universe tallies from running the unit-regularity oracle next to the
// semi-balanced predicate over every element.
struct UniverseBalance {
  std::uint64_t total = 0;
  std::uint64_t unit_regular = 0;
  std::uint64_t semi_balanced = 0;
  std::uint64_t ureg_not_balanced = 0;   // must stay 0: ureg(M) ⊆ B(M)
  std::uint64_t balanced_not_ureg = 0;   // > 0 exactly when the inclusion is strict
};

UniverseBalance scan_universe(int n, const std::vector<int>& y,
                              int point_bound = kDefaultPointBound);
UniverseBalance scan_universe(const Subspace& w,
                              std::uint64_t bound = kDefaultMatrixBound);

inline bool ureg_subset_balanced(const UniverseBalance& scan) {
  return scan.ureg_not_balanced == 0;
}

}  // namespace unitreg
