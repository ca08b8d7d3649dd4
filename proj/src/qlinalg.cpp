#include "swf/qlinalg.hpp"

#include <omp.h>

#include <algorithm>
#include <utility>

#include "swf/error.hpp"

namespace swf::qlinalg {

Rat rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Int factorial(long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(std::max(0L, n)));
  return out;
}

std::string to_string(const Rat& q) { return q.get_str(); }

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  if (rows.empty()) return {};
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw DomainError("from_rows: ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QVector QMatrix::apply(std::span<const Rat> v) const {
  if (v.size() != cols_) throw DomainError("apply: dimension mismatch");
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& q) { return sgn(q) == 0; });
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product: dimension mismatch");
  QMatrix c(a.rows_, b.cols_);
#pragma omp parallel for schedule(dynamic) if (a.rows_ * b.cols_ > 4096)
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(const QMatrix& m) {
  RrefResult res{m, {}, 0};
  QMatrix& a = res.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const bool big = rows * cols > 2048;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Rat inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(a(r, j)) != 0) a(r, j) *= inv;
#pragma omp parallel for schedule(dynamic, 8) if (big)
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rat f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

RrefResult rref_serial(const QMatrix& m) {
  RrefResult res{m, {}, 0};
  QMatrix& a = res.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rat piv = a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) /= piv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Rat f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const QMatrix& m) { return rref(m).rank; }

std::vector<QVector> kernel_basis(const QMatrix& m) {
  const RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivot_cols[i]] = -rr.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix invert(const QMatrix& m) {
  if (m.rows() != m.cols()) throw SingularMatrix("invert: matrix is not square");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RrefResult rr = rref(aug);
  if (rr.rank < n || (n > 0 && rr.pivot_cols[n - 1] != n - 1))
    throw SingularMatrix("invert: rank " + std::to_string(rr.rank) + " < " + std::to_string(n));
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
  return inv;
}

std::optional<QVector> solve(const QMatrix& m, std::span<const Rat> b) {
  if (b.size() != m.rows()) throw DomainError("solve: rhs dimension mismatch");
  const std::size_t n = m.cols();
  QMatrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const RrefResult rr = rref(aug);
  if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == n) return std::nullopt;
  QVector x(n);
  for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivot_cols[i]] = rr.reduced(i, n);
  return x;
}

}  // namespace swf::qlinalg
