#include "unitreg/balance.hpp"

#include <string>

namespace unitreg {

BalanceReport balance_transform(const Transformation& f) {
  const auto kd = kernel_data(f);
  BalanceReport r;
  r.collapse = static_cast<std::uint64_t>(kd.collapse);
  r.defect = static_cast<std::uint64_t>(kd.defect);
  r.semi_balanced = r.collapse == r.defect;
  return r;
}

namespace {

std::uint64_t points_or_throw(std::int64_t p, int n) {
  const auto points = checked_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(n));
  if (!points) {
    throw BoundExceeded("p^n does not fit in 64 bits");
  }
  return *points;
}

}  // namespace

BalanceReport balance_linear(const FFMatrix& f) {
  if (f.rows() != f.cols()) {
    throw DimensionMismatch("balance: matrix must be square");
  }
  const std::uint64_t points = points_or_throw(f.p(), f.rows());
  const std::uint64_t range_size =
      *checked_pow(static_cast<std::uint64_t>(f.p()), static_cast<unsigned>(rank(f)));
  // |T_f| = |R(f)| = p^rank on both sides, so the two cardinals agree at
  // finite dimension; compare them anyway instead of hard-coding it.
  BalanceReport r;
  r.collapse = points - range_size;
  r.defect = points - range_size;
  r.semi_balanced = r.collapse == r.defect;
  return r;
}

Transformation materialize(const FFMatrix& f, std::uint64_t point_bound) {
  if (f.rows() != f.cols()) {
    throw DimensionMismatch("materialize: matrix must be square");
  }
  const std::int64_t p = f.p();
  const int n = f.rows();
  const std::uint64_t points = points_or_throw(p, n);
  if (points > point_bound) {
    throw BoundExceeded("materialize: p^n = " + std::to_string(points) +
                        " exceeds bound " + std::to_string(point_bound));
  }
  std::vector<int> img(points);
  std::vector<std::int64_t> v(static_cast<std::size_t>(n));
  for (std::uint64_t index = 0; index < points; ++index) {
    std::uint64_t rest = index;
    for (int i = 0; i < n; ++i) {
      v[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(p));
      rest /= static_cast<std::uint64_t>(p);
    }
    const auto w = apply_row(v, f);
    std::uint64_t out = 0;
    for (int i = n - 1; i >= 0; --i) {
      out = out * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(w[static_cast<std::size_t>(i)]);
    }
    img[index] = static_cast<int>(out);
  }
  return Transformation(std::move(img));
}

BalanceReport materialized_balance(const FFMatrix& f, std::uint64_t point_bound) {
  return balance_transform(materialize(f, point_bound));
}

UniverseBalance scan_universe(int n, const std::vector<int>& y, int point_bound) {
  if (n > point_bound) {
    throw BoundExceeded("universe scan bound is n <= " + std::to_string(point_bound));
  }
  const auto unit_list = units(n, y);
  UniverseBalance out;
  for_each_invariant_transformation(n, y, [&](const Transformation& f) {
    ++out.total;
    const bool ureg = oracle_with_units(InvariantSetPair(n, y, f), unit_list).has_value();
    const bool balanced = balance_transform(f).semi_balanced;
    out.unit_regular += ureg;
    out.semi_balanced += balanced;
    out.ureg_not_balanced += ureg && !balanced;
    out.balanced_not_ureg += balanced && !ureg;
  });
  return out;
}

UniverseBalance scan_universe(const Subspace& w, std::uint64_t bound) {
  const auto unit_list = units(w, bound);
  UniverseBalance out;
  for_each_invariant_map(w, [&](const FFMatrix& f) {
    ++out.total;
    const bool ureg = oracle_with_units(InvariantSubspacePair(w, f), unit_list).has_value();
    const bool balanced = balance_linear(f).semi_balanced;
    out.unit_regular += ureg;
    out.semi_balanced += balanced;
    out.ureg_not_balanced += ureg && !balanced;
    out.balanced_not_ureg += balanced && !ureg;
  });
  return out;
}

}  // namespace unitreg
