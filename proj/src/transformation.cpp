#include "unitreg/transformation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "unitreg/detail/sets.hpp"

namespace unitreg {

Transformation::Transformation(std::vector<int> images) : img_(std::move(images)) {
  if (img_.empty()) {
    throw DimensionMismatch("transformation needs a nonempty domain");
  }
  const int n = size();
  for (int v : img_) {
    if (v < 0 || v >= n) {
      throw DimensionMismatch("image entry " + std::to_string(v) +
                              " outside [0," + std::to_string(n) + ")");
    }
  }
}

Transformation Transformation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Transformation(std::move(img));
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.size() != g.size()) {
    throw DimensionMismatch("compose: domain sizes differ");
  }
  std::vector<int> img(static_cast<std::size_t>(f.size()));
  for (int i = 0; i < f.size(); ++i) {
    img[static_cast<std::size_t>(i)] = g(f(i));
  }
  return Transformation(std::move(img));
}

bool is_unit(const Transformation& f) {
  std::vector<bool> seen(static_cast<std::size_t>(f.size()), false);
  for (int v : f.images()) {
    if (seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

KernelData kernel_data(const Transformation& f) {
  const int n = f.size();
  // Group points by image; scanning in ascending order leaves each block
  // sorted, and keying by image keeps blocks in a deterministic order.
  std::map<int, std::vector<int>> by_image;
  for (int i = 0; i < n; ++i) {
    by_image[f(i)].push_back(i);
  }

  KernelData kd;
  kd.blocks.reserve(by_image.size());
  kd.range.reserve(by_image.size());
  for (auto& [value, block] : by_image) {
    kd.range.push_back(value);
    kd.blocks.push_back(std::move(block));
  }
  std::sort(kd.blocks.begin(), kd.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  kd.transversal.reserve(kd.blocks.size());
  for (const auto& block : kd.blocks) {
    kd.transversal.push_back(block.front());
  }
  kd.collapse = n - static_cast<int>(kd.transversal.size());
  kd.defect = n - static_cast<int>(kd.range.size());
  return kd;
}

InvariantSetPair::InvariantSetPair(int n, std::vector<int> y, Transformation f)
    : y_(detail::sorted_unique(std::move(y))), f_(std::move(f)) {
  if (f_.size() != n) {
    throw DimensionMismatch("pair: n does not match the transformation size");
  }
  if (y_.empty()) {
    throw InvarianceViolated("Y must be nonempty");
  }
  if (y_.front() < 0 || y_.back() >= n) {
    throw DimensionMismatch("Y contains points outside [0,n)");
  }
  for (int p : y_) {
    if (!detail::set_contains(y_, f_(p))) {
      throw InvarianceViolated("Yf is not contained in Y: " + std::to_string(p) +
                               " maps to " + std::to_string(f_(p)));
    }
  }
}

ConstrainedTransversal constrained_transversal(const InvariantSetPair& pair) {
  const auto kd = kernel_data(pair.f());
  ConstrainedTransversal out;
  out.t_f.reserve(kd.blocks.size());
  for (const auto& block : kd.blocks) {
    const auto in_y = detail::set_intersect(block, pair.y());
    out.t_f.push_back(in_y.empty() ? block.front() : in_y.front());
  }
  std::sort(out.t_f.begin(), out.t_f.end());
  out.t_f_y = detail::set_intersect(out.t_f, pair.y());
  return out;
}

Transformation restriction(const InvariantSetPair& pair) {
  const auto& y = pair.y();
  std::vector<int> position(static_cast<std::size_t>(pair.n()), -1);
  for (std::size_t i = 0; i < y.size(); ++i) {
    position[static_cast<std::size_t>(y[i])] = static_cast<int>(i);
  }
  std::vector<int> img(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    img[i] = position[static_cast<std::size_t>(pair.f()(y[i]))];
  }
  return Transformation(std::move(img));
}

}  // namespace unitreg
