#include "unitreg/lvw.hpp"

#include <string>

namespace unitreg {

std::uint64_t unit_candidate_count(std::int64_t p, int n) {
  const auto count = checked_pow(static_cast<std::uint64_t>(p),
                                 static_cast<unsigned>(n) * static_cast<unsigned>(n));
  return count.value_or(UINT64_MAX);
}

void for_each_unit(const Subspace& w, const std::function<bool(const FFMatrix&)>& visit,
                   std::uint64_t bound) {
  const int n = w.ambient();
  const std::uint64_t candidates = unit_candidate_count(w.p(), n);
  if (candidates > bound) {
    throw BoundExceeded("unit enumeration needs " + std::to_string(candidates) +
                        " candidates, bound is " + std::to_string(bound));
  }
  for_each_matrix(w.p(), n, n, [&](const FFMatrix& g) {
    if (!is_invertible(g)) {
      return true;
    }
    if (!(image(w, g) == w)) {
      return true;
    }
    return visit(g);
  });
}

std::vector<FFMatrix> units(const Subspace& w, std::uint64_t bound) {
  std::vector<FFMatrix> out;
  for_each_unit(
      w,
      [&](const FFMatrix& g) {
        out.push_back(g);
        return true;
      },
      bound);
  return out;
}

namespace {

// Witness construction by linear extension. Inputs are the decision's
// intermediate products; all sets of rows are in canonical construction
// order, so the basis-to-basis bijections are order-preserving.
FFMatrix build_witness(const InvariantSubspacePair& pair, const Subspace& range,
                       const Subspace& w_meet_range, const Subspace& transversal) {
  const auto& f = pair.f();
  const auto& w = pair.w();
  const std::int64_t p = pair.p();
  const int n = pair.n();
  const Subspace full = Subspace::full(p, n);

  // Domain-side basis chain: W∩R(f), extended through R(f) and W to V.
  std::vector<std::vector<std::int64_t>> domain_rows;
  for (int i = 0; i < w_meet_range.dim(); ++i) {
    domain_rows.push_back(w_meet_range.basis_row(i));
  }
  const auto to_range = extend_basis(w_meet_range, range);
  const auto to_w = extend_basis(w_meet_range, w);
  const Subspace w_plus_range = sum(w, range);
  const auto to_full_b = extend_basis(w_plus_range, full);

  // Image-side rows: preimages through the transversal for the range part,
  // the kernel of the restriction for the W part, and an extension of
  // W + T_f for the rest.
  std::vector<std::vector<std::int64_t>> image_rows;
  for (int i = 0; i < w_meet_range.dim(); ++i) {
    image_rows.push_back(preimage(f, w_meet_range.basis_row(i), transversal));
  }
  for (const auto& b : to_range) {
    domain_rows.push_back(b);
    image_rows.push_back(preimage(f, b, transversal));
  }

  // N(f|W) embedded back into ambient coordinates.
  const FFMatrix restricted = restriction_matrix(pair);
  const Subspace null_restricted = null_space(restricted);
  std::vector<std::vector<std::int64_t>> kernel_rows;
  for (int i = 0; i < null_restricted.dim(); ++i) {
    kernel_rows.push_back(apply_row(null_restricted.basis_row(i), w.basis()));
  }
  if (to_w.size() != kernel_rows.size()) {
    throw NotUnitRegular("nullity/corank mismatch in the restriction");
  }
  for (std::size_t i = 0; i < to_w.size(); ++i) {
    domain_rows.push_back(to_w[i]);
    image_rows.push_back(kernel_rows[i]);
  }

  const Subspace w_plus_transversal = sum(w, transversal);
  const auto to_full_c = extend_basis(w_plus_transversal, full);
  if (to_full_b.size() != to_full_c.size()) {
    throw NotUnitRegular("codimension mismatch outside W + R(f)");
  }
  for (std::size_t i = 0; i < to_full_b.size(); ++i) {
    domain_rows.push_back(to_full_b[i]);
    image_rows.push_back(to_full_c[i]);
  }

  // g is the linear extension of domain basis -> image basis: solve
  // D g = I row-wise, i.e. g = D^{-1} I.
  const FFMatrix domain = from_rows(p, n, domain_rows);
  const FFMatrix images = from_rows(p, n, image_rows);
  return multiply(inverse(domain), images);
}

LvwDecision decide(const InvariantSubspacePair& pair, bool build) {
  const auto& f = pair.f();
  const auto& w = pair.w();
  const int k = w.dim();

  const Subspace range = row_space(f);
  const Subspace range_restricted = image(w, f);
  const Subspace w_meet_range = intersect(w, range);

  const FFMatrix restricted = restriction_matrix(pair);
  const int nullity_restricted = null_space(restricted).dim();
  const int corank_restricted = k - row_space(restricted).dim();

  const auto transversals = transversal_subspace(pair);
  const Subspace w_plus_transversal = sum(w, transversals.u);
  const Subspace w_plus_range = sum(w, range);

  LvwDecision d;
  d.dim_range_restriction = range_restricted.dim();
  d.dim_w_meet_range = w_meet_range.dim();
  d.dim_null_restriction = nullity_restricted;
  d.dim_w_plus_transversal = w_plus_transversal.dim();
  d.dim_w_plus_range = w_plus_range.dim();
  d.cond_i = range_restricted == w_meet_range;
  d.cond_ii = nullity_restricted == corank_restricted;
  d.cond_iii = codim(w_plus_transversal) == codim(w_plus_range);
  d.unit_regular = d.cond_i && d.cond_ii && d.cond_iii;
  if (d.unit_regular && build) {
    d.witness = build_witness(pair, range, w_meet_range, transversals.u);
  }
  return d;
}

}  // namespace

LvwDecision check(const InvariantSubspacePair& pair) { return decide(pair, true); }

FFMatrix witness(const InvariantSubspacePair& pair) {
  auto d = decide(pair, true);
  if (!d.witness) {
    throw NotUnitRegular("element fails the unit-regularity conditions");
  }
  return *std::move(d.witness);
}

std::optional<FFMatrix> oracle(const InvariantSubspacePair& pair, std::uint64_t bound) {
  std::optional<FFMatrix> found;
  for_each_unit(
      pair.w(),
      [&](const FFMatrix& g) {
        if (multiply(multiply(pair.f(), g), pair.f()) == pair.f()) {
          found = g;
          return false;
        }
        return true;
      },
      bound);
  return found;
}

std::optional<FFMatrix> oracle_with_units(const InvariantSubspacePair& pair,
                                          const std::vector<FFMatrix>& unit_list) {
  for (const auto& g : unit_list) {
    if (multiply(multiply(pair.f(), g), pair.f()) == pair.f()) {
      return g;
    }
  }
  return std::nullopt;
}

bool verify_witness(const InvariantSubspacePair& pair, const FFMatrix& g) {
  if (g.rows() != pair.n() || g.cols() != pair.n() || g.p() != pair.p()) {
    return false;
  }
  if (!is_invertible(g) || !(image(pair.w(), g) == pair.w())) {
    return false;
  }
  return multiply(multiply(pair.f(), g), pair.f()) == pair.f();
}

bool check_lv(const FFMatrix& f) {
  if (f.rows() != f.cols()) {
    throw DimensionMismatch("check_lv: matrix must be square");
  }
  const int nullity = null_space(f).dim();
  const int corank = f.rows() - row_space(f).dim();
  return nullity == corank;
}

bool semigroup_unit_regular(const Subspace& w) {
  return w.dim() == 0 || w.dim() == w.ambient();
}

bool exhaustive_unit_regular(const Subspace& w, std::uint64_t bound) {
  const auto unit_list = units(w, bound);
  bool all = true;
  for_each_invariant_map(w, [&](const FFMatrix& f) {
    if (all && !oracle_with_units(InvariantSubspacePair(w, f), unit_list)) {
      all = false;
    }
  });
  return all;
}

void for_each_subspace(std::int64_t p, int n,
                       const std::function<void(const Subspace&)>& visit) {
  for (int k = 0; k <= n; ++k) {
    // Choose pivot columns, then run an odometer over the free entries:
    // row i may be nonzero only right of its pivot and outside later
    // pivot columns.
    std::vector<int> pivots(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      pivots[static_cast<std::size_t>(i)] = i;
    }
    while (true) {
      std::vector<std::pair<int, int>> free_cells;
      std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
      for (int c : pivots) {
        is_pivot[static_cast<std::size_t>(c)] = true;
      }
      for (int i = 0; i < k; ++i) {
        for (int c = pivots[static_cast<std::size_t>(i)] + 1; c < n; ++c) {
          if (!is_pivot[static_cast<std::size_t>(c)]) {
            free_cells.emplace_back(i, c);
          }
        }
      }
      std::vector<std::int64_t> values(free_cells.size(), 0);
      while (true) {
        FFMatrix basis(p, k, n);
        for (int i = 0; i < k; ++i) {
          basis.set(i, pivots[static_cast<std::size_t>(i)], 1);
        }
        for (std::size_t c = 0; c < free_cells.size(); ++c) {
          basis.set(free_cells[c].first, free_cells[c].second, values[c]);
        }
        visit(Subspace::span(basis));
        std::size_t cell = values.size();
        bool advanced = false;
        while (cell > 0) {
          --cell;
          if (++values[cell] < p) {
            advanced = true;
            break;
          }
          values[cell] = 0;
        }
        if (!advanced) {
          break;
        }
      }
      // Next pivot combination in lexicographic order.
      int move = k - 1;
      while (move >= 0 && pivots[static_cast<std::size_t>(move)] == n - k + move) {
        --move;
      }
      if (move < 0) {
        break;
      }
      ++pivots[static_cast<std::size_t>(move)];
      for (int i = move + 1; i < k; ++i) {
        pivots[static_cast<std::size_t>(i)] = pivots[static_cast<std::size_t>(i - 1)] + 1;
      }
    }
  }
}

void for_each_invariant_map(const Subspace& w,
                            const std::function<void(const FFMatrix&)>& visit) {
  const std::int64_t p = w.p();
  const int n = w.ambient();
  const int k = w.dim();

  // In a basis adapted to W (W's rows first), invariance is exactly a zero
  // top-right block; enumerate those block matrices and conjugate back.
  std::vector<std::vector<std::int64_t>> adapted_rows;
  for (int i = 0; i < k; ++i) {
    adapted_rows.push_back(w.basis_row(i));
  }
  for (const auto& r : extend_basis(w, Subspace::full(p, n))) {
    adapted_rows.push_back(r);
  }
  const FFMatrix change = from_rows(p, n, adapted_rows);
  const FFMatrix change_inv = inverse(change);

  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i >= k || j < k) {
        cells.emplace_back(i, j);
      }
    }
  }
  std::vector<std::int64_t> values(cells.size(), 0);
  while (true) {
    FFMatrix adapted(p, n, n);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      adapted.set(cells[c].first, cells[c].second, values[c]);
    }
    visit(multiply(multiply(change_inv, adapted), change));
    std::size_t cell = values.size();
    bool advanced = false;
    while (cell > 0) {
      --cell;
      if (++values[cell] < p) {
        advanced = true;
        break;
      }
      values[cell] = 0;
    }
    if (!advanced) {
      return;
    }
  }
}

std::uint64_t invariant_map_count(std::int64_t p, int n, int k) {
  const unsigned cells = static_cast<unsigned>(n) * static_cast<unsigned>(n) -
                         static_cast<unsigned>(k) * static_cast<unsigned>(n - k);
  return checked_pow(static_cast<std::uint64_t>(p), cells).value_or(UINT64_MAX);
}

}  // namespace unitreg
