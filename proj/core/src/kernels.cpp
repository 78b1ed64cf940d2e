#include "hsnet/kernels.hpp"

#include <algorithm>
#include <vector>

namespace hsnet::kernels {
namespace {

constexpr std::size_t kTileRows = 4;
constexpr std::size_t kTileCols = 16;

// Register tile: kTileRows x kTileCols block of c over the full k range.
void tile_full(const double* a, std::size_t lda, const double* b, std::size_t ldb, double* c,
               std::size_t ldc, std::size_t k, bool accumulate) {
  double acc[kTileRows][kTileCols];
  for (std::size_t r = 0; r < kTileRows; ++r) {
    for (std::size_t j = 0; j < kTileCols; ++j) acc[r][j] = accumulate ? c[r * ldc + j] : 0.0;
  }
  for (std::size_t p = 0; p < k; ++p) {
    const double* brow = b + p * ldb;
    for (std::size_t r = 0; r < kTileRows; ++r) {
      const double av = a[r * lda + p];
      for (std::size_t j = 0; j < kTileCols; ++j) acc[r][j] += av * brow[j];
    }
  }
  for (std::size_t r = 0; r < kTileRows; ++r) {
    for (std::size_t j = 0; j < kTileCols; ++j) c[r * ldc + j] = acc[r][j];
  }
}

// Ragged edge tile, same summation order as tile_full.
void tile_edge(const double* a, std::size_t lda, const double* b, std::size_t ldb, double* c,
               std::size_t ldc, std::size_t rows, std::size_t cols, std::size_t k,
               bool accumulate) {
  double acc[kTileRows][kTileCols];
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < cols; ++j) acc[r][j] = accumulate ? c[r * ldc + j] : 0.0;
  }
  for (std::size_t p = 0; p < k; ++p) {
    const double* brow = b + p * ldb;
    for (std::size_t r = 0; r < rows; ++r) {
      const double av = a[r * lda + p];
      for (std::size_t j = 0; j < cols; ++j) acc[r][j] += av * brow[j];
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < cols; ++j) c[r * ldc + j] = acc[r][j];
  }
}

void gemm_dense(const double* a, const double* b, double* c, std::size_t m, std::size_t k,
                std::size_t n, bool accumulate) {
  for (std::size_t i = 0; i < m; i += kTileRows) {
    const std::size_t rows = std::min(kTileRows, m - i);
    for (std::size_t j = 0; j < n; j += kTileCols) {
      const std::size_t cols = std::min(kTileCols, n - j);
      if (rows == kTileRows && cols == kTileCols) {
        tile_full(a + i * k, k, b + j, n, c + i * n + j, n, k, accumulate);
      } else {
        tile_edge(a + i * k, k, b + j, n, c + i * n + j, n, rows, cols, k, accumulate);
      }
    }
  }
}

void gemm_sparse_rows(const double* a, const double* b, double* c, std::size_t m,
                      std::size_t k, std::size_t n, bool accumulate) {
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = c + i * n;
    if (!accumulate) std::fill(crow, crow + n, 0.0);
    const double* arow = a + i * k;
    for (std::size_t p = 0; p < k; ++p) {
      const double av = arow[p];
      if (av == 0.0) continue;
      const double* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

}  // namespace

void gemm_nn(std::span<const double> a, std::span<const double> b, std::span<double> c,
             std::size_t m, std::size_t k, std::size_t n, bool accumulate) {
  if (m == 0 || n == 0) return;
  const std::size_t zeros =
      static_cast<std::size_t>(std::count(a.begin(), a.begin() + m * k, 0.0));
  if (zeros * 2 > m * k) {
    gemm_sparse_rows(a.data(), b.data(), c.data(), m, k, n, accumulate);
  } else {
    gemm_dense(a.data(), b.data(), c.data(), m, k, n, accumulate);
  }
}

void gemm_tn(std::span<const double> a, std::span<const double> b, std::span<double> c,
             std::size_t m, std::size_t k, std::size_t n, bool accumulate) {
  std::vector<double> at(m * k);
  transpose(a, at, m, k);
  gemm_nn(at, b, c, k, m, n, accumulate);
}

void gemm_nt(std::span<const double> a, std::span<const double> b, std::span<double> c,
             std::size_t m, std::size_t n, std::size_t k, bool accumulate) {
  std::vector<double> bt(k * n);
  transpose(b, bt, k, n);
  gemm_nn(a, bt, c, m, n, k, accumulate);
}

void transpose(std::span<const double> in, std::span<double> out, std::size_t rows,
               std::size_t cols) {
  constexpr std::size_t kBlock = 32;
  for (std::size_t i0 = 0; i0 < rows; i0 += kBlock) {
    const std::size_t i1 = std::min(rows, i0 + kBlock);
    for (std::size_t j0 = 0; j0 < cols; j0 += kBlock) {
      const std::size_t j1 = std::min(cols, j0 + kBlock);
      for (std::size_t i = i0; i < i1; ++i) {
        for (std::size_t j = j0; j < j1; ++j) out[j * rows + i] = in[i * cols + j];
      }
    }
  }
}

}  // namespace hsnet::kernels
