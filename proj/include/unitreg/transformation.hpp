#pragma once

#include <vector>

#include "unitreg/errors.hpp"

namespace unitreg {

// A total self-map of {0,...,n-1}, stored as its image sequence:
// point i maps to images()[i]. Maps compose left to right, so (fg)
// applies f first and then g.
class Transformation {
 public:
  explicit Transformation(std::vector<int> images);
  static Transformation identity(int n);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  bool operator==(const Transformation&) const = default;

 private:
  std::vector<int> img_;
};

// i(fg) = (if)g for all i. Throws DimensionMismatch on unequal sizes.
Transformation compose(const Transformation& f, const Transformation& g);

// True iff f is a permutation of its domain.
bool is_unit(const Transformation& f);

// Kernel partition of f with the canonical data derived from it.
// Two points share a block iff they have the same image. Blocks are
// ordered by their minimum element; the canonical transversal keeps the
// minimum of each block. collapse = n - |transversal|, defect = n - |range|.
struct KernelData {
  std::vector<std::vector<int>> blocks;
  std::vector<int> transversal;
  std::vector<int> range;
  int collapse = 0;
  int defect = 0;
};

KernelData kernel_data(const Transformation& f);

// (X, Y, f) with X = {0,...,n-1}, Y a nonempty subset and Yf contained
// in Y. Construction validates the invariance and throws
// InvarianceViolated otherwise.
class InvariantSetPair {
 public:
  InvariantSetPair(int n, std::vector<int> y, Transformation f);

  int n() const { return f_.size(); }
  const std::vector<int>& y() const { return y_; }  // sorted, duplicate-free
  const Transformation& f() const { return f_; }

 private:
  std::vector<int> y_;
  Transformation f_;
};

// A transversal of ker(f) whose trace on Y is a transversal of the kernel
// of the restriction to Y: each block contributes min(P ∩ Y) when the
// block P meets Y and min(P) otherwise. Both sets are sorted.
struct ConstrainedTransversal {
  std::vector<int> t_f;
  std::vector<int> t_f_y;  // = Y ∩ t_f
};

ConstrainedTransversal constrained_transversal(const InvariantSetPair& pair);

// f restricted and corestricted to Y, relabeled onto {0,...,|Y|-1} by the
// order-preserving bijection Y -> [0,|Y|).
Transformation restriction(const InvariantSetPair& pair);

}  // namespace unitreg
