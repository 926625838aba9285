#include "unitreg/ffmatrix.hpp"

#include <string>
#include <utility>

namespace unitreg {

bool is_prime(std::int64_t p) {
  if (p < 2) {
    return false;
  }
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

std::int64_t mod_reduce(std::int64_t a, std::int64_t p) {
  const std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  a = mod_reduce(a, p);
  if (a == 0) {
    throw NoSolution("zero has no inverse mod " + std::to_string(p));
  }
  std::int64_t old_r = p, r = a;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_t = std::exchange(t, old_t - q * t);
  }
  return mod_reduce(old_t, p);
}

namespace {

void validate_modulus(std::int64_t p) {
  if (!is_prime(p)) {
    throw DimensionMismatch("modulus " + std::to_string(p) + " is not prime");
  }
  if (p > (std::int64_t{1} << 31)) {
    throw DimensionMismatch("modulus too large");
  }
}

void require_same_field(const FFMatrix& a, const FFMatrix& b, const char* op) {
  if (a.p() != b.p()) {
    throw DimensionMismatch(std::string(op) + ": moduli differ");
  }
}

}  // namespace

FFMatrix::FFMatrix(std::int64_t p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols),
      e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  validate_modulus(p);
  if (rows < 0 || cols < 0) {
    throw DimensionMismatch("negative matrix dimensions");
  }
}

FFMatrix::FFMatrix(std::int64_t p, int rows, int cols, std::vector<std::int64_t> entries)
    : p_(p), rows_(rows), cols_(cols), e_(std::move(entries)) {
  validate_modulus(p);
  if (rows < 0 || cols < 0 ||
      e_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw DimensionMismatch("entry count does not match rows*cols");
  }
  for (auto& v : e_) {
    v = mod_reduce(v, p_);
  }
}

FFMatrix FFMatrix::identity(std::int64_t p, int n) {
  FFMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) {
    m.set(i, i, 1);
  }
  return m;
}

void FFMatrix::set(int r, int c, std::int64_t value) {
  e_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
     static_cast<std::size_t>(c)] = mod_reduce(value, p_);
}

std::vector<std::int64_t> FFMatrix::row(int r) const {
  const auto begin = e_.begin() + static_cast<std::ptrdiff_t>(r) * cols_;
  return std::vector<std::int64_t>(begin, begin + cols_);
}

FFMatrix multiply(const FFMatrix& a, const FFMatrix& b) {
  require_same_field(a, b, "multiply");
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: inner dimensions differ");
  }
  FFMatrix out(a.p(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a.at(i, k);
      if (aik == 0) {
        continue;
      }
      for (int j = 0; j < b.cols(); ++j) {
        out.set(i, j, out.at(i, j) + aik * b.at(k, j));
      }
    }
  }
  return out;
}

FFMatrix transpose(const FFMatrix& m) {
  FFMatrix out(m.p(), m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      out.set(j, i, m.at(i, j));
    }
  }
  return out;
}

FFMatrix stack(const FFMatrix& top, const FFMatrix& bottom) {
  require_same_field(top, bottom, "stack");
  if (top.cols() != bottom.cols()) {
    throw DimensionMismatch("stack: column counts differ");
  }
  std::vector<std::int64_t> entries = top.entries();
  entries.insert(entries.end(), bottom.entries().begin(), bottom.entries().end());
  return FFMatrix(top.p(), top.rows() + bottom.rows(), top.cols(), std::move(entries));
}

FFMatrix from_rows(std::int64_t p, int cols,
                   const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::int64_t> entries;
  entries.reserve(rows.size() * static_cast<std::size_t>(cols));
  for (const auto& r : rows) {
    if (r.size() != static_cast<std::size_t>(cols)) {
      throw DimensionMismatch("from_rows: ragged row");
    }
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return FFMatrix(p, static_cast<int>(rows.size()), cols, std::move(entries));
}

std::vector<std::int64_t> apply_row(const std::vector<std::int64_t>& v, const FFMatrix& m) {
  if (v.size() != static_cast<std::size_t>(m.rows())) {
    throw DimensionMismatch("apply: vector length does not match rows");
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(m.cols()), 0);
  for (int i = 0; i < m.rows(); ++i) {
    const std::int64_t vi = mod_reduce(v[static_cast<std::size_t>(i)], m.p());
    if (vi == 0) {
      continue;
    }
    for (int j = 0; j < m.cols(); ++j) {
      out[static_cast<std::size_t>(j)] =
          mod_reduce(out[static_cast<std::size_t>(j)] + vi * m.at(i, j), m.p());
    }
  }
  return out;
}

RrefResult rref(const FFMatrix& m) {
  RrefResult res{m, {}};
  FFMatrix& a = res.matrix;
  const std::int64_t p = a.p();
  int pivot_row = 0;
  for (int col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    int src = -1;
    for (int r = pivot_row; r < a.rows(); ++r) {
      if (a.at(r, col) != 0) {
        src = r;
        break;
      }
    }
    if (src < 0) {
      continue;
    }
    if (src != pivot_row) {
      for (int j = 0; j < a.cols(); ++j) {
        const std::int64_t tmp = a.at(src, j);
        a.set(src, j, a.at(pivot_row, j));
        a.set(pivot_row, j, tmp);
      }
    }
    const std::int64_t scale = mod_inverse(a.at(pivot_row, col), p);
    for (int j = col; j < a.cols(); ++j) {
      a.set(pivot_row, j, a.at(pivot_row, j) * scale);
    }
    for (int r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a.at(r, col) == 0) {
        continue;
      }
      const std::int64_t factor = a.at(r, col);
      for (int j = col; j < a.cols(); ++j) {
        a.set(r, j, a.at(r, j) - factor * a.at(pivot_row, j));
      }
    }
    res.pivots.push_back(col);
    ++pivot_row;
  }
  return res;
}

int rank(const FFMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

bool is_invertible(const FFMatrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

FFMatrix inverse(const FFMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("inverse: matrix not square");
  }
  const int n = m.rows();
  FFMatrix aug(m.p(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      aug.set(i, j, m.at(i, j));
    }
    aug.set(i, n + i, 1);
  }
  const auto reduced = rref(aug).matrix;
  for (int i = 0; i < n; ++i) {
    if (reduced.at(i, i) != 1) {
      throw NoSolution("matrix is singular");
    }
  }
  FFMatrix out(m.p(), n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.set(i, j, reduced.at(i, n + j));
    }
  }
  return out;
}

std::vector<std::int64_t> solve_row(const FFMatrix& m, const std::vector<std::int64_t>& b) {
  if (b.size() != static_cast<std::size_t>(m.cols())) {
    throw DimensionMismatch("solve_row: rhs length does not match cols");
  }
  // x*m = b is the column system m^T x^T = b^T; append b^T and reduce.
  const int unknowns = m.rows();
  FFMatrix aug(m.p(), m.cols(), unknowns + 1);
  for (int i = 0; i < m.cols(); ++i) {
    for (int j = 0; j < unknowns; ++j) {
      aug.set(i, j, m.at(j, i));
    }
    aug.set(i, unknowns, b[static_cast<std::size_t>(i)]);
  }
  const auto red = rref(aug);
  std::vector<std::int64_t> x(static_cast<std::size_t>(unknowns), 0);
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    const int col = red.pivots[i];
    if (col == unknowns) {
      throw NoSolution("inconsistent linear system");
    }
    x[static_cast<std::size_t>(col)] = red.matrix.at(static_cast<int>(i), unknowns);
  }
  return x;
}

void for_each_matrix(std::int64_t p, int rows, int cols,
                     const std::function<bool(const FFMatrix&)>& visit) {
  validate_modulus(p);
  const std::size_t cells = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  std::vector<std::int64_t> entries(cells, 0);
  while (true) {
    if (!visit(FFMatrix(p, rows, cols, entries))) {
      return;
    }
    std::size_t i = cells;
    while (i > 0) {
      --i;
      if (++entries[i] < p) {
        break;
      }
      entries[i] = 0;
      if (i == 0) {
        return;
      }
    }
    if (cells == 0) {
      return;
    }
  }
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && out > UINT64_MAX / base) {
      return std::nullopt;
    }
    out *= base;
  }
  return out;
}

}  // namespace unitreg
