#include "qpi/rational.hpp"

#include <stdexcept>

namespace qpi {

RationalMatrix RationalMatrix::identity(int k) {
  RationalMatrix m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_pm1(const Pm1Matrix& p) {
  RationalMatrix m(p.rows, p.cols);
  for (int r = 0; r < p.rows; ++r)
    for (int c = 0; c < p.cols; ++c) m.at(r, c) = p.at(r, c).value();
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("multiply: shape mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rational& v = at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < other.cols_; ++c) out.at(r, c) += v * other.at(k, c);
    }
  return out;
}

int RationalMatrix::rank() const { return rank_with_first_independent_rows(*this).first; }

std::pair<int, std::vector<int>> rank_with_first_independent_rows(const RationalMatrix& m) {
  /* Maintain a reduced basis; a row is kept iff it does not vanish after
   * reduction, which is exactly the greedy top-down independent set. */
  std::vector<std::vector<Rational>> basis;   // reduced rows, each with a pivot column
  std::vector<int> pivot_col;
  std::vector<int> kept;
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<Rational> row(static_cast<size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c) row[static_cast<size_t>(c)] = m.at(r, c);
    for (size_t b = 0; b < basis.size(); ++b) {
      const Rational& lead = row[static_cast<size_t>(pivot_col[b])];
      if (lead == 0) continue;
      Rational f = lead;  // basis rows are normalized to pivot 1
      for (int c = 0; c < m.cols(); ++c) row[static_cast<size_t>(c)] -= f * basis[b][static_cast<size_t>(c)];
    }
    int p = -1;
    for (int c = 0; c < m.cols(); ++c)
      if (row[static_cast<size_t>(c)] != 0) {
        p = c;
        break;
      }
    if (p < 0) continue;
    Rational inv = row[static_cast<size_t>(p)];
    for (int c = 0; c < m.cols(); ++c) row[static_cast<size_t>(c)] /= inv;
    basis.push_back(std::move(row));
    pivot_col.push_back(p);
    kept.push_back(r);
  }
  return {static_cast<int>(kept.size()), kept};
}

std::pair<int, std::vector<int>> rank_rows(const Pm1Matrix& m) {
  return rank_with_first_independent_rows(RationalMatrix::from_pm1(m));
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const int n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::invalid_argument("inverse: singular matrix");
    if (piv != col)
      for (int c = 0; c < n; ++c) {
        std::swap(a.at(piv, c), a.at(col, c));
        std::swap(inv.at(piv, c), inv.at(col, c));
      }
    Rational d = a.at(col, col);
    for (int c = 0; c < n; ++c) {
      a.at(col, c) /= d;
      inv.at(col, c) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rational f = a.at(r, col);
      if (f == 0) continue;
      for (int c = 0; c < n; ++c) {
        a.at(r, c) -= f * a.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

RationalMatrix solve_right(const RationalMatrix& R, const RationalMatrix& U) {
  if (R.cols() != U.cols()) throw std::invalid_argument("solve_right: shape mismatch");
  RationalMatrix Rt = R.transpose();
  RationalMatrix gram = R.multiply(Rt);
  RationalMatrix Q = U.multiply(Rt).multiply(inverse(gram));
  if (!(Q.multiply(R) == U)) throw std::invalid_argument("solve_right: row not in span of R");
  return Q;
}

}  // namespace qpi
