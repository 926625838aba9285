#include "unitreg/txy.hpp"

#include <algorithm>

#include "unitreg/detail/sets.hpp"

namespace unitreg {

namespace {

std::uint64_t factorial(int k) {
  std::uint64_t out = 1;
  for (int i = 2; i <= k; ++i) {
    out *= static_cast<std::uint64_t>(i);
  }
  return out;
}

void validate_subset(int n, const std::vector<int>& y) {
  if (y.empty()) {
    throw InvarianceViolated("Y must be nonempty");
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] < 0 || y[i] >= n || (i > 0 && y[i] <= y[i - 1])) {
      throw DimensionMismatch("Y must be a sorted subset of [0,n)");
    }
  }
}

}  // namespace

std::uint64_t unit_count(int n, const std::vector<int>& y) {
  validate_subset(n, y);
  const int k = static_cast<int>(y.size());
  return factorial(k) * factorial(n - k);
}

void for_each_unit(int n, const std::vector<int>& y,
                   const std::function<bool(const Transformation&)>& visit) {
  validate_subset(n, y);
  // A permutation stabilizes the finite set Y setwise iff it maps Y onto Y
  // and the complement onto the complement, so position i may only take
  // values from its own side. Backtracking with ascending candidates
  // yields image sequences in lexicographic order.
  std::vector<bool> in_y(static_cast<std::size_t>(n), false);
  for (int p : y) {
    in_y[static_cast<std::size_t>(p)] = true;
  }
  const std::vector<int> complement = detail::set_complement(n, y);
  std::vector<int> img(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  const std::function<bool(int)> place = [&](int pos) -> bool {
    if (pos == n) {
      return visit(Transformation(img));
    }
    const auto& side = in_y[static_cast<std::size_t>(pos)] ? y : complement;
    for (int candidate : side) {
      if (used[static_cast<std::size_t>(candidate)]) {
        continue;
      }
      used[static_cast<std::size_t>(candidate)] = true;
      img[static_cast<std::size_t>(pos)] = candidate;
      const bool keep_going = place(pos + 1);
      used[static_cast<std::size_t>(candidate)] = false;
      if (!keep_going) {
        return false;
      }
    }
    return true;
  };
  place(0);
}

std::vector<Transformation> units(int n, const std::vector<int>& y) {
  std::vector<Transformation> out;
  out.reserve(unit_count(n, y));
  for_each_unit(n, y, [&](const Transformation& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

namespace {

// Shared worker: evaluates the three conditions and optionally builds the
// witness from the pieces already at hand.
TxyDecision decide(const InvariantSetPair& pair, bool build_witness) {
  const int n = pair.n();
  const auto& y = pair.y();
  const auto& f = pair.f();

  const auto kd = kernel_data(f);
  const auto ct = constrained_transversal(pair);

  std::vector<int> y_image;
  y_image.reserve(y.size());
  for (int p : y) {
    y_image.push_back(f(p));
  }
  y_image = detail::sorted_unique(std::move(y_image));

  TxyDecision d;
  d.collapse_set = detail::set_complement(n, ct.t_f);
  d.collapse_set_y = detail::set_difference(y, ct.t_f_y);
  d.defect_set = detail::set_complement(n, kd.range);
  d.defect_set_y = detail::set_difference(y, y_image);

  const auto restricted = kernel_data(restriction(pair));
  d.cond_i = restricted.collapse == restricted.defect;
  d.cond_ii = y_image == detail::set_intersect(y, kd.range);
  const auto extra_collapse = detail::set_difference(d.collapse_set, d.collapse_set_y);
  const auto extra_defect = detail::set_difference(d.defect_set, d.defect_set_y);
  d.cond_iii = extra_collapse.size() == extra_defect.size();
  d.unit_regular = d.cond_i && d.cond_ii && d.cond_iii;

  if (d.unit_regular && build_witness) {
    // Invert f block-by-block on the range: x in Xf goes to the constrained
    // representative of the block whose common image is x.
    std::vector<int> img(static_cast<std::size_t>(n), -1);
    for (int rep : ct.t_f) {
      img[static_cast<std::size_t>(f(rep))] = rep;
    }
    // Order-preserving bijections fill in the rest: Y-side defect onto
    // Y-side collapse, then the remainders onto each other. Under (ii) the
    // Y-side defect set sits inside the defect set, so this covers X.
    for (std::size_t i = 0; i < d.defect_set_y.size(); ++i) {
      img[static_cast<std::size_t>(d.defect_set_y[i])] = d.collapse_set_y[i];
    }
    for (std::size_t i = 0; i < extra_defect.size(); ++i) {
      img[static_cast<std::size_t>(extra_defect[i])] = extra_collapse[i];
    }
    d.witness = Transformation(std::move(img));
  }
  return d;
}

}  // namespace

TxyDecision check(const InvariantSetPair& pair) { return decide(pair, true); }

Transformation witness(const InvariantSetPair& pair) {
  auto d = decide(pair, true);
  if (!d.witness) {
    throw NotUnitRegular("element fails the unit-regularity conditions");
  }
  return *std::move(d.witness);
}

std::optional<Transformation> oracle(const InvariantSetPair& pair, int point_bound) {
  if (pair.n() > point_bound) {
    throw BoundExceeded("unit search bound is n <= " + std::to_string(point_bound));
  }
  std::optional<Transformation> found;
  for_each_unit(pair.n(), pair.y(), [&](const Transformation& g) {
    if (compose(compose(pair.f(), g), pair.f()) == pair.f()) {
      found = g;
      return false;
    }
    return true;
  });
  return found;
}

std::optional<Transformation> oracle_with_units(
    const InvariantSetPair& pair, const std::vector<Transformation>& unit_list) {
  for (const auto& g : unit_list) {
    if (compose(compose(pair.f(), g), pair.f()) == pair.f()) {
      return g;
    }
  }
  return std::nullopt;
}

bool verify_witness(const InvariantSetPair& pair, const Transformation& g) {
  if (g.size() != pair.n() || !is_unit(g)) {
    return false;
  }
  std::vector<int> y_image;
  y_image.reserve(pair.y().size());
  for (int p : pair.y()) {
    y_image.push_back(g(p));
  }
  if (detail::sorted_unique(std::move(y_image)) != pair.y()) {
    return false;
  }
  return compose(compose(pair.f(), g), pair.f()) == pair.f();
}

bool semigroup_unit_regular(int n, const std::vector<int>& y) {
  validate_subset(n, y);
  return y.size() == 1 || static_cast<int>(y.size()) == n;
}

bool exhaustive_unit_regular(int n, const std::vector<int>& y, int point_bound) {
  if (n > point_bound) {
    throw BoundExceeded("unit search bound is n <= " + std::to_string(point_bound));
  }
  const auto unit_list = units(n, y);
  bool all = true;
  for_each_invariant_transformation(n, y, [&](const Transformation& f) {
    if (all && !oracle_with_units(InvariantSetPair(n, y, f), unit_list)) {
      all = false;
    }
  });
  return all;
}

void for_each_nonempty_subset(
    int n, const std::function<void(const std::vector<int>&)>& visit) {
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> y;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        y.push_back(i);
      }
    }
    visit(y);
  }
}

void for_each_invariant_transformation(
    int n, const std::vector<int>& y,
    const std::function<void(const Transformation&)>& visit) {
  validate_subset(n, y);
  // Positions in Y range over Y, the others over all of [0,n); step the
  // rightmost position fastest.
  std::vector<bool> in_y(static_cast<std::size_t>(n), false);
  for (int p : y) {
    in_y[static_cast<std::size_t>(p)] = true;
  }
  const int k = static_cast<int>(y.size());
  std::vector<int> index(static_cast<std::size_t>(n), 0);
  std::vector<int> img(static_cast<std::size_t>(n));
  while (true) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      img[i] = in_y[i] ? y[static_cast<std::size_t>(index[i])] : index[i];
    }
    visit(Transformation(img));
    int pos = n - 1;
    while (pos >= 0) {
      const auto upos = static_cast<std::size_t>(pos);
      if (++index[upos] < (in_y[upos] ? k : n)) {
        break;
      }
      index[upos] = 0;
      --pos;
    }
    if (pos < 0) {
      return;
    }
  }
}

std::uint64_t invariant_transformation_count(int n, const std::vector<int>& y) {
  validate_subset(n, y);
  std::uint64_t out = 1;
  for (int i = 0; i < n; ++i) {
    out *= detail::set_contains(y, i) ? y.size() : static_cast<std::uint64_t>(n);
  }
  return out;
}

}  // namespace unitreg
