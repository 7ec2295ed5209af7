#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "qpi/pm1.hpp"

namespace qpi {

using Rational = mpq_class;

/* Dense exact-rational matrix; mpq_class keeps entries in lowest terms. */
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {}

  static RationalMatrix identity(int k);
  static RationalMatrix from_pm1(const Pm1Matrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalMatrix multiply(const RationalMatrix& other) const;
  int rank() const;

  friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

/* Exact rank plus the lexicographically first maximal independent row set
 * (greedy top-down selection). */
std::pair<int, std::vector<int>> rank_with_first_independent_rows(const RationalMatrix& m);
std::pair<int, std::vector<int>> rank_rows(const Pm1Matrix& m);

/* Inverse of a nonsingular square matrix (Gauss-Jordan). */
RationalMatrix inverse(const RationalMatrix& m);

/* Q with Q*R = U, where R has full row rank and the rows of U lie in the row
 * span of R: Q = U R^T (R R^T)^{-1}. Throws if some row of U is not in the span. */
RationalMatrix solve_right(const RationalMatrix& R, const RationalMatrix& U);

}  // namespace qpi
