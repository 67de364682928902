#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "equidouble/cyclotomic.hpp"

namespace equidouble {

/// Dense row-major matrix over cyclotomic numbers. Products skip zero
/// entries, which keeps the mostly-monomial matrices of module maps cheap.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries);

  static ExactMatrix identity(std::size_t n);
  /// Column vector.
  static ExactMatrix column(std::vector<Cyclotomic> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Cyclotomic& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Cyclotomic>& entries() const { return entries_; }

  bool is_zero() const;
  Cyclotomic trace() const;
  ExactMatrix transposed() const;
  ExactMatrix scaled(const Cyclotomic& s) const;

  ExactMatrix& operator+=(const ExactMatrix& rhs);
  ExactMatrix& operator-=(const ExactMatrix& rhs);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cyclotomic> entries_;
};

/// Kronecker product a (x) b; row index of the result is ra * b.rows() + rb.
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

/// Block-diagonal direct sum.
ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);

struct RankDetKernel {
  std::size_t rank = 0;
  std::optional<Cyclotomic> det;  // square matrices only
  std::vector<ExactMatrix> kernel_basis;  // column vectors
};

/// Rank and kernel by Gauss-Jordan elimination; determinant (square input) by
/// fraction-free Bareiss elimination.
RankDetKernel mat_rank_det_kernel(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);
/// Throws DimensionError for non-square input.
Cyclotomic det(const ExactMatrix& m);
std::vector<ExactMatrix> kernel_basis(const ExactMatrix& m);

/// Solves a * x = b exactly (b may have several columns). Throws
/// ArithmeticError when the system is inconsistent; picks the solution with
/// free variables set to zero when it is underdetermined.
ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b);

/// Throws ArithmeticError for singular input.
ExactMatrix inverse(const ExactMatrix& m);

}  // namespace equidouble
