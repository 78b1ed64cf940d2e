#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hsnet/rng.hpp"

namespace hsnet {

using Shape = std::vector<std::size_t>;

std::size_t shape_size(const Shape& shape) noexcept;
std::string shape_to_string(const Shape& shape);

/// Builds a Shape from signed extents, rejecting zero or negative ones.
Shape make_shape(std::span<const std::int64_t> extents);

/**
 * Dense row-major array of doubles.
 *
 * The shape is fixed at construction and always satisfies
 * product(shape) == size(). Element values are mutable. A default-constructed
 * Tensor is an empty placeholder (rank 0, no elements) used for caches that
 * have not been filled yet.
 */
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape, double fill = 0.0);
  Tensor(Shape shape, std::vector<double> values);
  Tensor(std::initializer_list<std::size_t> shape, double fill = 0.0)
      : Tensor(Shape(shape), fill) {}

  static Tensor identity(std::size_t n);

  [[nodiscard]] const Shape& shape() const noexcept { return shape_; }
  [[nodiscard]] std::size_t rank() const noexcept { return shape_.size(); }
  [[nodiscard]] std::size_t dim(std::size_t axis) const;
  [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
  [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

  [[nodiscard]] std::span<double> values() noexcept { return data_; }
  [[nodiscard]] std::span<const double> values() const noexcept { return data_; }
  [[nodiscard]] double* data() noexcept { return data_.data(); }
  [[nodiscard]] const double* data() const noexcept { return data_.data(); }

  double& operator[](std::size_t i) noexcept { return data_[i]; }
  double operator[](std::size_t i) const noexcept { return data_[i]; }

  /// Rank-2 element access.
  double& at(std::size_t row, std::size_t col) { return data_[row * shape_.at(1) + col]; }
  [[nodiscard]] double at(std::size_t row, std::size_t col) const {
    return data_[row * shape_.at(1) + col];
  }

  /// Copy with a new shape of identical element count.
  [[nodiscard]] Tensor reshaped(Shape shape) const&;
  [[nodiscard]] Tensor reshaped(Shape shape) &&;

  void fill(double value) noexcept;

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  Shape shape_;
  std::vector<double> data_;
};

/// Rank-2 product, [m,k] x [k,n] -> [m,n].
Tensor matmul(const Tensor& a, const Tensor& b);

Tensor transpose(const Tensor& a);

template <typename F>
Tensor elementwise_map(const Tensor& t, F&& f) {
  Tensor out = t;
  for (double& v : out.values()) v = f(v);
  return out;
}

/// I.i.d. uniform draws on [lo, hi); throws RangeError unless lo < hi.
Tensor seeded_uniform(Rng& rng, const Shape& shape, double lo, double hi);

/// Largest absolute difference between two equally shaped tensors.
double max_abs_diff(const Tensor& a, const Tensor& b);

}  // namespace hsnet
