#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "unitreg/errors.hpp"

namespace unitreg {

bool is_prime(std::int64_t p);

// Representative of a mod p in [0, p); accepts negative input.
std::int64_t mod_reduce(std::int64_t a, std::int64_t p);

// Inverse of a nonzero residue, by the extended Euclidean algorithm.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

// Dense row-major matrix over GF(p), p prime. Vectors are rows and maps
// act on the right (v -> v*M), so composing maps left to right multiplies
// matrices in the same order. Entries are kept reduced to [0, p).
class FFMatrix {
 public:
  FFMatrix(std::int64_t p, int rows, int cols);  // zero matrix
  FFMatrix(std::int64_t p, int rows, int cols, std::vector<std::int64_t> entries);
  static FFMatrix identity(std::int64_t p, int n);

  std::int64_t p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t at(int r, int c) const {
    return e_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(c)];
  }
  void set(int r, int c, std::int64_t value);

  std::vector<std::int64_t> row(int r) const;
  const std::vector<std::int64_t>& entries() const { return e_; }

  bool operator==(const FFMatrix&) const = default;

 private:
  std::int64_t p_;
  int rows_;
  int cols_;
  std::vector<std::int64_t> e_;
};

FFMatrix multiply(const FFMatrix& a, const FFMatrix& b);
FFMatrix transpose(const FFMatrix& m);
FFMatrix stack(const FFMatrix& top, const FFMatrix& bottom);
FFMatrix from_rows(std::int64_t p, int cols,
                   const std::vector<std::vector<std::int64_t>>& rows);

// v*M for a row vector v of length rows(m).
std::vector<std::int64_t> apply_row(const std::vector<std::int64_t>& v, const FFMatrix& m);

struct RrefResult {
  FFMatrix matrix;
  std::vector<int> pivots;  // pivot column per pivot row, strictly increasing
};

// Reduced row-echelon form by Gauss-Jordan elimination with the first
// nonzero entry in each column as pivot; fully deterministic.
RrefResult rref(const FFMatrix& m);

int rank(const FFMatrix& m);
bool is_invertible(const FFMatrix& m);

// Two-sided inverse of a square matrix; throws NoSolution when singular.
FFMatrix inverse(const FFMatrix& m);

// Canonical solution x of x*m = b (free variables zero, pivot order of the
// transposed system). Throws NoSolution when the system is inconsistent.
std::vector<std::int64_t> solve_row(const FFMatrix& m, const std::vector<std::int64_t>& b);

// All rows x cols matrices over GF(p) in lexicographic entry order
// (row-major, entry (0,0) most significant). Stops when visit returns false.
void for_each_matrix(std::int64_t p, int rows, int cols,
                     const std::function<bool(const FFMatrix&)>& visit);

// p^e, or nullopt if the value does not fit in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exponent);

}  // namespace unitreg
