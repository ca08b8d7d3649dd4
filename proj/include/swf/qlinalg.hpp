#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace swf::qlinalg {

/// Exact rational, always canonical (lowest terms, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;
using QVector = std::vector<Rat>;

Rat rat(long num, long den = 1);
Int binom(long n, long k);  // 0 outside 0 <= k <= n
Int factorial(long n);
std::string to_string(const Rat& q);

/// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rat> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rat> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  QMatrix transpose() const;
  QVector apply(std::span<const Rat> v) const;  // this * v
  bool is_zero() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct RrefResult {
  QMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Reduced row-echelon form. Row elimination runs as an OpenMP loop over
/// rows; the result is identical to rref_serial for every schedule.
RrefResult rref(const QMatrix& m);
/// Single-threaded reference implementation of rref.
RrefResult rref_serial(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Canonical null-space basis: one vector per free column (increasing),
/// with that free variable set to 1 and the other free variables 0.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Throws SingularMatrix when m is not square of full rank.
QMatrix invert(const QMatrix& m);

/// Particular solution with all free variables zero, or nullopt when the
/// system is inconsistent.
std::optional<QVector> solve(const QMatrix& m, std::span<const Rat> b);

}  // namespace swf::qlinalg
