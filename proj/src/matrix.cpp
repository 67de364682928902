#include "equidouble/matrix.hpp"

#include <utility>

#include "equidouble/errors.hpp"

namespace equidouble {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw DimensionError("entry count does not match rows*cols");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::column(std::vector<Cyclotomic> entries) {
  std::size_t n = entries.size();
  return ExactMatrix(n, 1, std::move(entries));
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Cyclotomic ExactMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix");
  Cyclotomic t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

ExactMatrix ExactMatrix::scaled(const Cyclotomic& s) const {
  ExactMatrix r = *this;
  for (auto& e : r.entries_) {
    if (!e.is_zero()) e *= s;
  }
  return r;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  ExactMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Cyclotomic& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Cyclotomic& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        r(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Cyclotomic& x = a(ar, ac);
      if (x.is_zero()) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          const Cyclotomic& y = b(br, bc);
          if (y.is_zero()) continue;
          r(ar * b.rows() + br, ac * b.cols() + bc) = x * y;
        }
      }
    }
  }
  return r;
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return r;
}

namespace {

struct Echelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form.
Echelon rref(ExactMatrix m) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    }
    Cyclotomic inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Cyclotomic f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
      }
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

Cyclotomic bareiss_det(ExactMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return Cyclotomic(1);
  Cyclotomic prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k).is_zero()) ++piv;
      if (piv == n) return Cyclotomic();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
      negate = !negate;
    }
    Cyclotomic prev_inv = prev.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Cyclotomic v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = v.is_zero() ? v : v * prev_inv;
      }
    }
    prev = m(k, k);
  }
  Cyclotomic d = m(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace

RankDetKernel mat_rank_det_kernel(const ExactMatrix& m) {
  RankDetKernel out;
  Echelon e = rref(m);
  out.rank = e.pivot_cols.size();
  if (m.is_square()) out.det = bareiss_det(m);

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Cyclotomic> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      const Cyclotomic& x = e.reduced(r, free);
      if (!x.is_zero()) v[e.pivot_cols[r]] = -x;
    }
    out.kernel_basis.push_back(ExactMatrix::column(std::move(v)));
  }
  return out;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).pivot_cols.size(); }

Cyclotomic det(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  return bareiss_det(m);
}

std::vector<ExactMatrix> kernel_basis(const ExactMatrix& m) { return mat_rank_det_kernel(m).kernel_basis; }

ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve: row count mismatch");
  ExactMatrix aug(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = b(r, c);
  }
  Echelon e = rref(std::move(aug));
  ExactMatrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (e.pivot_cols[r] >= a.cols()) throw ArithmeticError("inconsistent linear system");
    for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivot_cols[r], c) = e.reduced(r, a.cols() + c);
  }
  return x;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  ExactMatrix aug(m.rows(), 2 * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols() + r) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.pivot_cols.size() < m.rows() || e.pivot_cols.back() >= m.cols()) {
    throw ArithmeticError("singular matrix has no inverse");
  }
  ExactMatrix inv(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) inv(r, c) = e.reduced(r, m.cols() + c);
  }
  return inv;
}

}  // namespace equidouble
