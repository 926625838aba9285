#include "unitreg/ffla.hpp"

namespace unitreg {

InvariantSubspacePair::InvariantSubspacePair(Subspace w, FFMatrix f)
    : w_(std::move(w)), f_(std::move(f)) {
  if (f_.rows() != f_.cols()) {
    throw DimensionMismatch("pair: matrix must be square");
  }
  if (w_.p() != f_.p() || w_.ambient() != f_.rows()) {
    throw DimensionMismatch("pair: subspace and matrix live in different spaces");
  }
  for (int i = 0; i < w_.dim(); ++i) {
    if (!w_.contains(apply_row(w_.basis_row(i), f_))) {
      throw InvarianceViolated("Wf is not contained in W (basis row " +
                               std::to_string(i) + " escapes)");
    }
  }
}

FFMatrix restriction_matrix(const InvariantSubspacePair& pair) {
  const auto& w = pair.w();
  const int k = w.dim();
  FFMatrix out(pair.p(), k, k);
  for (int i = 0; i < k; ++i) {
    std::vector<std::int64_t> coords;
    try {
      coords = w.coordinates(apply_row(w.basis_row(i), pair.f()));
    } catch (const NoSolution&) {
      throw InvarianceViolated("restriction: image of basis row leaves W");
    }
    for (int j = 0; j < k; ++j) {
      out.set(i, j, coords[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

std::vector<std::int64_t> preimage(const FFMatrix& m, const std::vector<std::int64_t>& b) {
  return solve_row(m, b);
}

std::vector<std::int64_t> preimage(const FFMatrix& m, const std::vector<std::int64_t>& b,
                                   const Subspace& within) {
  if (within.ambient() != m.rows()) {
    throw DimensionMismatch("preimage: subspace does not match the domain");
  }
  const auto coeffs = solve_row(multiply(within.basis(), m), b);
  return apply_row(coeffs, within.basis());
}

TransversalSubspaces transversal_subspace(const InvariantSubspacePair& pair) {
  const auto& f = pair.f();
  const auto& w = pair.w();

  const Subspace range = row_space(f);
  const Subspace range_restricted = image(w, f);

  // Preimages inside W of a basis of R(f|W); their span meets each kernel
  // class of f|W exactly once.
  std::vector<std::vector<std::int64_t>> generators;
  for (int i = 0; i < range_restricted.dim(); ++i) {
    generators.push_back(preimage(f, range_restricted.basis_row(i), w));
  }
  const Subspace uw = Subspace::span(from_rows(pair.p(), pair.n(), generators));

  // Extend by canonical preimages of the rest of a basis of R(f).
  for (const auto& extra : extend_basis(range_restricted, range)) {
    generators.push_back(preimage(f, extra));
  }
  const Subspace u = Subspace::span(from_rows(pair.p(), pair.n(), generators));
  return {u, uw};
}

bool basis_union_check(const FFMatrix& f, const Subspace& u) {
  if (f.rows() != f.cols()) {
    throw DimensionMismatch("basis_union_check: matrix must be square");
  }
  const Subspace kernel = null_space(f);
  const Subspace range = row_space(f);
  if (u.dim() != range.dim() || intersect(u, kernel).dim() != 0) {
    throw PreconditionViolated("subspace is not a transversal of ker(f)");
  }
  std::vector<std::vector<std::int64_t>> rows;
  for (int i = 0; i < kernel.dim(); ++i) {
    rows.push_back(kernel.basis_row(i));
  }
  for (int i = 0; i < range.dim(); ++i) {
    rows.push_back(preimage(f, range.basis_row(i), u));
  }
  const FFMatrix stacked = from_rows(f.p(), f.rows(), rows);
  return stacked.rows() == f.rows() && rank(stacked) == f.rows();
}

}  // namespace unitreg
