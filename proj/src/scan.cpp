#include "unitreg/scan.hpp"

#include "unitreg/balance.hpp"

namespace unitreg {

ScanOutcome scan_transform(int max_n, int point_bound) {
  if (max_n > point_bound) {
    throw BoundExceeded("scan bound is n <= " + std::to_string(point_bound));
  }
  ScanOutcome out;
  for (int n = 1; n <= max_n; ++n) {
    for_each_nonempty_subset(n, [&](const std::vector<int>& y) {
      ++out.universes;
      const auto unit_list = units(n, y);
      for_each_invariant_transformation(n, y, [&](const Transformation& f) {
        const InvariantSetPair pair(n, y, f);
        ++out.total;
        const auto decision = check(pair);
        const auto found = oracle_with_units(pair, unit_list);
        const bool balanced = balance_transform(f).semi_balanced;
        out.unit_regular += decision.unit_regular;
        out.semi_balanced += balanced;
        if (decision.unit_regular != found.has_value()) {
          ++out.disagreements;
        }
        if (decision.unit_regular &&
            (!decision.witness || !verify_witness(pair, *decision.witness))) {
          ++out.witness_failures;
        }
        if (decision.unit_regular && !balanced) {
          ++out.balance_violations;
        }
      });
    });
  }
  return out;
}

ScanOutcome scan_linear(std::int64_t p, int max_n, std::uint64_t bound) {
  ScanOutcome out;
  for (int n = 1; n <= max_n; ++n) {
    for_each_subspace(p, n, [&](const Subspace& w) {
      ++out.universes;
      const auto unit_list = units(w, bound);
      for_each_invariant_map(w, [&](const FFMatrix& f) {
        const InvariantSubspacePair pair(w, f);
        ++out.total;
        const auto decision = check(pair);
        const auto found = oracle_with_units(pair, unit_list);
        const bool balanced = balance_linear(f).semi_balanced;
        out.unit_regular += decision.unit_regular;
        out.semi_balanced += balanced;
        if (decision.unit_regular != found.has_value()) {
          ++out.disagreements;
        }
        if (decision.unit_regular &&
            (!decision.witness || !verify_witness(pair, *decision.witness))) {
          ++out.witness_failures;
        }
        if (decision.unit_regular && !balanced) {
          ++out.balance_violations;
        }
      });
    });
  }
  return out;
}

}  // namespace unitreg
