#pragma once

#include <cstddef>
#include <span>

// Raw row-major GEMM kernels behind matmul and the dense/conv layers.
// Each output element is accumulated over the shared dimension in
// increasing index order, so results do not depend on blocking.
// Zero entries of the left operand are skipped (bag-of-words inputs are
// mostly zeros); this never changes a finite result.

namespace hsnet::kernels {

/// c[m,n] (+)= a[m,k] * b[k,n]
void gemm_nn(std::span<const double> a, std::span<const double> b, std::span<double> c,
             std::size_t m, std::size_t k, std::size_t n, bool accumulate);

/// c[k,n] (+)= a[m,k]^T * b[m,n]
void gemm_tn(std::span<const double> a, std::span<const double> b, std::span<double> c,
             std::size_t m, std::size_t k, std::size_t n, bool accumulate);

/// c[m,k] (+)= a[m,n] * b[k,n]^T
void gemm_nt(std::span<const double> a, std::span<const double> b, std::span<double> c,
             std::size_t m, std::size_t n, std::size_t k, bool accumulate);

void transpose(std::span<const double> in, std::span<double> out, std::size_t rows,
               std::size_t cols);

}  // namespace hsnet::kernels
