#include "unitreg/subspace.hpp"

namespace unitreg {

Subspace Subspace::zero(std::int64_t p, int ambient) {
  return Subspace(FFMatrix(p, 0, ambient), {});
}

Subspace Subspace::full(std::int64_t p, int ambient) {
  return span(FFMatrix::identity(p, ambient));
}

Subspace Subspace::span(const FFMatrix& rows) {
  auto red = rref(rows);
  const int dim = static_cast<int>(red.pivots.size());
  std::vector<std::int64_t> entries;
  entries.reserve(static_cast<std::size_t>(dim) * static_cast<std::size_t>(rows.cols()));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < rows.cols(); ++j) {
      entries.push_back(red.matrix.at(i, j));
    }
  }
  return Subspace(FFMatrix(rows.p(), dim, rows.cols(), std::move(entries)),
                  std::move(red.pivots));
}

bool Subspace::contains(const std::vector<std::int64_t>& v) const {
  if (v.size() != static_cast<std::size_t>(ambient())) {
    throw DimensionMismatch("contains: vector length does not match ambient");
  }
  // Reduce v against the basis; pivot columns are zero in other rows, so
  // the residual's pivot coordinates vanish one row at a time.
  std::vector<std::int64_t> r = v;
  for (auto& x : r) {
    x = mod_reduce(x, p());
  }
  for (int i = 0; i < dim(); ++i) {
    const std::int64_t c = r[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(i)])];
    if (c == 0) {
      continue;
    }
    for (int j = 0; j < ambient(); ++j) {
      r[static_cast<std::size_t>(j)] =
          mod_reduce(r[static_cast<std::size_t>(j)] - c * basis_.at(i, j), p());
    }
  }
  for (std::int64_t x : r) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.p() != p() || other.ambient() != ambient()) {
    throw DimensionMismatch("contains: mismatched subspaces");
  }
  for (int i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_row(i))) {
      return false;
    }
  }
  return true;
}

std::vector<std::int64_t> Subspace::coordinates(const std::vector<std::int64_t>& v) const {
  if (!contains(v)) {
    throw NoSolution("vector lies outside the subspace");
  }
  std::vector<std::int64_t> c(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) {
    c[static_cast<std::size_t>(i)] =
        mod_reduce(v[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(i)])], p());
  }
  return c;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  return Subspace::span(stack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.p() != b.p() || a.ambient() != b.ambient()) {
    throw DimensionMismatch("intersect: mismatched subspaces");
  }
  // x*A = y*B iff (x|y) annihilates the stacked matrix [A; -B]; each such
  // left-null vector contributes x*A to the intersection.
  FFMatrix neg_b = b.basis();
  for (int i = 0; i < neg_b.rows(); ++i) {
    for (int j = 0; j < neg_b.cols(); ++j) {
      neg_b.set(i, j, -neg_b.at(i, j));
    }
  }
  const FFMatrix stacked = stack(a.basis(), neg_b);
  const Subspace annihilator = null_space(stacked);
  FFMatrix gens(a.p(), annihilator.dim(), a.ambient());
  for (int i = 0; i < annihilator.dim(); ++i) {
    const auto xy = annihilator.basis_row(i);
    const std::vector<std::int64_t> x(xy.begin(), xy.begin() + a.dim());
    const auto w = apply_row(x, a.basis());
    for (int j = 0; j < a.ambient(); ++j) {
      gens.set(i, j, w[static_cast<std::size_t>(j)]);
    }
  }
  return Subspace::span(gens);
}

int codim(const Subspace& u) { return u.ambient() - u.dim(); }

Subspace row_space(const FFMatrix& m) { return Subspace::span(m); }

Subspace null_space(const FFMatrix& m) {
  // v*m = 0 is the column system m^T v^T = 0; free columns of rref(m^T)
  // parameterize the solutions.
  const auto red = rref(transpose(m));
  const int unknowns = m.rows();
  std::vector<bool> is_pivot(static_cast<std::size_t>(unknowns), false);
  for (int c : red.pivots) {
    is_pivot[static_cast<std::size_t>(c)] = true;
  }
  std::vector<std::vector<std::int64_t>> basis;
  for (int free = 0; free < unknowns; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) {
      continue;
    }
    std::vector<std::int64_t> v(static_cast<std::size_t>(unknowns), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
      v[static_cast<std::size_t>(red.pivots[i])] =
          mod_reduce(-red.matrix.at(static_cast<int>(i), free), m.p());
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(from_rows(m.p(), unknowns, basis));
}

Subspace image(const Subspace& u, const FFMatrix& m) {
  if (u.ambient() != m.rows()) {
    throw DimensionMismatch("image: ambient does not match rows");
  }
  return Subspace::span(multiply(u.basis(), m));
}

std::vector<std::vector<std::int64_t>> extend_basis(const Subspace& inner,
                                                    const Subspace& outer) {
  if (!outer.contains(inner)) {
    throw ContainmentViolated("extend_basis: inner is not contained in outer");
  }
  std::vector<std::vector<std::int64_t>> picked;
  FFMatrix current = inner.basis();
  int current_rank = inner.dim();
  for (int i = 0; i < outer.dim() && current_rank < outer.dim(); ++i) {
    const auto candidate = outer.basis_row(i);
    const FFMatrix trial = stack(current, from_rows(outer.p(), outer.ambient(), {candidate}));
    if (rank(trial) == current_rank + 1) {
      picked.push_back(candidate);
      current = trial;
      ++current_rank;
    }
  }
  return picked;
}

}  // namespace unitreg
