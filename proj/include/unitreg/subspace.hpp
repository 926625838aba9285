#pragma once

#include "unitreg/ffmatrix.hpp"

namespace unitreg {

// Subspace of GF(p)^n stored as its RREF basis (zero rows dropped).
// RREF uniqueness makes equality of subspaces equality of representations.
class Subspace {
 public:
  static Subspace zero(std::int64_t p, int ambient);
  static Subspace full(std::int64_t p, int ambient);
  // Row space of an arbitrary matrix of spanning rows.
  static Subspace span(const FFMatrix& rows);

  std::int64_t p() const { return basis_.p(); }
  int ambient() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  const FFMatrix& basis() const { return basis_; }
  std::vector<std::int64_t> basis_row(int i) const { return basis_.row(i); }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const std::vector<std::int64_t>& v) const;
  bool contains(const Subspace& other) const;

  // Coordinates of v in the RREF basis (read off the pivot columns);
  // throws NoSolution when v lies outside the subspace.
  std::vector<std::int64_t> coordinates(const std::vector<std::int64_t>& v) const;

  bool operator==(const Subspace&) const = default;

 private:
  Subspace(FFMatrix basis, std::vector<int> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  FFMatrix basis_;
  std::vector<int> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

// dim(V/U) = ambient - dim at finite dimension.
int codim(const Subspace& u);

Subspace row_space(const FFMatrix& m);

// {v : v*m = 0}, a subspace of GF(p)^rows(m).
Subspace null_space(const FFMatrix& m);

// Image subspace {u*m : u in U}.
Subspace image(const Subspace& u, const FFMatrix& m);

// Rows of outer's RREF basis that extend inner's basis to a basis of outer,
// picked greedily in row order. Throws ContainmentViolated when inner is
// not contained in outer.
std::vector<std::vector<std::int64_t>> extend_basis(const Subspace& inner,
                                                    const Subspace& outer);

}  // namespace unitreg
