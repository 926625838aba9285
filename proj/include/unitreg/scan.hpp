#pragma once

#include <cstdint>

#include "unitreg/lvw.hpp"
#include "unitreg/txy.hpp"

namespace unitreg {

// Tallies from cross-validating the criterion, the brute-force oracle, the
// constructed witness and the semi-balanced predicate over every element
// of every universe in a configured family.
struct ScanOutcome {
  std::uint64_t universes = 0;
  std::uint64_t total = 0;
  std::uint64_t unit_regular = 0;
  std::uint64_t semi_balanced = 0;
  std::uint64_t disagreements = 0;       // criterion != oracle
  std::uint64_t witness_failures = 0;    // positive decision, invalid witness
  std::uint64_t balance_violations = 0;  // unit-regular but not semi-balanced

  bool ok() const {
    return disagreements == 0 && witness_failures == 0 && balance_violations == 0;
  }
};

// Every pair (Y, f) with 1 <= n <= max_n, Y a nonempty subset of [0,n),
// Yf ⊆ Y.
ScanOutcome scan_transform(int max_n, int point_bound = kDefaultPointBound);

// Every pair (W, f) with 1 <= n <= max_n, W a subspace of GF(p)^n, Wf ⊆ W.
ScanOutcome scan_linear(std::int64_t p, int max_n,
                        std::uint64_t bound = kDefaultMatrixBound);

}  // namespace unitreg
