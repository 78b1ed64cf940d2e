#include "hsnet/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "hsnet/errors.hpp"
#include "hsnet/kernels.hpp"

namespace hsnet {
namespace {

void check_extents(const Shape& shape) {
  if (shape.empty()) throw ShapeError("tensor shape must have at least one extent");
  for (std::size_t e : shape) {
    if (e == 0) throw ShapeError("tensor extent must be positive, got " + shape_to_string(shape));
  }
}

}  // namespace

std::size_t shape_size(const Shape& shape) noexcept {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>{});
}

std::string shape_to_string(const Shape& shape) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < shape.size(); ++i) os << (i ? "," : "") << shape[i];
  os << ']';
  return os.str();
}

Shape make_shape(std::span<const std::int64_t> extents) {
  Shape shape;
  shape.reserve(extents.size());
  for (std::int64_t e : extents) {
    if (e <= 0) throw ShapeError("tensor extent must be positive, got " + std::to_string(e));
    shape.push_back(static_cast<std::size_t>(e));
  }
  check_extents(shape);
  return shape;
}

Tensor::Tensor(Shape shape, double fill) : shape_(std::move(shape)) {
  check_extents(shape_);
  data_.assign(shape_size(shape_), fill);
}

Tensor::Tensor(Shape shape, std::vector<double> values)
    : shape_(std::move(shape)), data_(std::move(values)) {
  check_extents(shape_);
  if (shape_size(shape_) != data_.size()) {
    throw ShapeError("shape " + shape_to_string(shape_) + " does not match " +
                     std::to_string(data_.size()) + " values");
  }
}

Tensor Tensor::identity(std::size_t n) {
  Tensor t({n, n}, 0.0);
  for (std::size_t i = 0; i < n; ++i) t.at(i, i) = 1.0;
  return t;
}

std::size_t Tensor::dim(std::size_t axis) const {
  if (axis >= shape_.size()) {
    throw ShapeError("axis " + std::to_string(axis) + " out of range for " + shape_to_string(shape_));
  }
  return shape_[axis];
}

Tensor Tensor::reshaped(Shape shape) const& {
  return Tensor(*this).reshaped(std::move(shape));
}

Tensor Tensor::reshaped(Shape shape) && {
  check_extents(shape);
  if (shape_size(shape) != data_.size()) {
    throw ShapeError("cannot reshape " + shape_to_string(shape_) + " to " + shape_to_string(shape));
  }
  return Tensor(std::move(shape), std::move(data_));
}

void Tensor::fill(double value) noexcept { std::fill(data_.begin(), data_.end(), value); }

Tensor matmul(const Tensor& a, const Tensor& b) {
  if (a.rank() != 2 || b.rank() != 2) throw ShapeError("matmul expects rank-2 operands");
  if (a.dim(1) != b.dim(0)) {
    throw ShapeError("matmul inner dimensions differ: " + shape_to_string(a.shape()) + " x " +
                     shape_to_string(b.shape()));
  }
  Tensor out({a.dim(0), b.dim(1)});
  kernels::gemm_nn(a.values(), b.values(), out.values(), a.dim(0), a.dim(1), b.dim(1), false);
  return out;
}

Tensor transpose(const Tensor& a) {
  if (a.rank() != 2) throw ShapeError("transpose expects a rank-2 tensor");
  Tensor out({a.dim(1), a.dim(0)});
  kernels::transpose(a.values(), out.values(), a.dim(0), a.dim(1));
  return out;
}

Tensor seeded_uniform(Rng& rng, const Shape& shape, double lo, double hi) {
  if (!(lo < hi)) {
    throw RangeError("uniform range requires lo < hi, got [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + ")");
  }
  Tensor out(shape);
  for (double& v : out.values()) v = rng.uniform(lo, hi);
  return out;
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
  if (a.shape() != b.shape()) throw ShapeError("max_abs_diff: shapes differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace hsnet
