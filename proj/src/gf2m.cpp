#include "qpi/gf2m.hpp"

#include <stdexcept>

namespace qpi {

namespace {
/* Smallest irreducible polynomial per degree 1..16; bit k = coeff of x^k. */
constexpr uint32_t kIrreducible[17] = {
    0,      0x2,    0x7,    0xb,    0x13,   0x25,   0x43,    0x83,   0x11b,
    0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003,  0x1002b,
};
}  // namespace

Gf2mElem::Gf2mElem(int degree, uint32_t b) : m(degree), bits(b) {
  if (degree < 1 || degree > 16) throw std::invalid_argument("Gf2mElem: degree out of range");
  if (b >> degree) throw std::invalid_argument("Gf2mElem: bits exceed degree");
}

Gf2mElem Gf2mElem::from_entries(const Pm1Vec& entries) {
  uint32_t b = 0;
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].bit()) b |= 1u << i;
  return Gf2mElem(static_cast<int>(entries.size()), b);
}

Pm1Vec Gf2mElem::entries() const {
  Pm1Vec out(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) out[static_cast<size_t>(i)] = entry(i);
  return out;
}

uint32_t irreducible_poly(int m) {
  if (m < 1 || m > 16) throw std::invalid_argument("irreducible_poly: degree out of range");
  return kIrreducible[m];
}

Gf2mElem f2m_add(const Gf2mElem& u, const Gf2mElem& v) {
  if (u.m != v.m) throw std::invalid_argument("f2m_add: degree mismatch");
  return Gf2mElem(u.m, u.bits ^ v.bits);
}

Gf2mElem f2m_mul(const Gf2mElem& u, const Gf2mElem& v) {
  if (u.m != v.m) throw std::invalid_argument("f2m_mul: degree mismatch");
  const int m = u.m;
  uint64_t prod = 0;
  uint64_t a = u.bits;
  for (int k = 0; k < m; ++k)
    if ((v.bits >> k) & 1u) prod ^= a << k;
  const uint64_t poly = irreducible_poly(m);
  for (int k = 2 * m - 2; k >= m; --k)
    if ((prod >> k) & 1u) prod ^= poly << (k - m);
  return Gf2mElem(m, static_cast<uint32_t>(prod));
}

Gf2mElem f2m_inverse(const Gf2mElem& u) {
  if (u.is_zero()) throw std::invalid_argument("f2m_inverse: zero element");
  /* u^(2^m - 2) by square-and-multiply. */
  Gf2mElem result = Gf2mElem::one(u.m);
  Gf2mElem base = u;
  uint64_t e = (uint64_t(1) << u.m) - 2;
  while (e) {
    if (e & 1) result = f2m_mul(result, base);
    base = f2m_mul(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<Gf2mElem> apply_matrix(const Gf2mMatrix& M, const std::vector<Gf2mElem>& w) {
  if (static_cast<int>(w.size()) != M.cols) throw std::invalid_argument("apply: length mismatch");
  std::vector<Gf2mElem> out(static_cast<size_t>(M.rows), Gf2mElem::zero(M.m));
  for (int r = 0; r < M.rows; ++r) {
    Gf2mElem acc = Gf2mElem::zero(M.m);
    for (int c = 0; c < M.cols; ++c) {
      const Gf2mElem& e = M.at(r, c);
      if (e.is_zero()) continue;
      acc = f2m_add(acc, f2m_mul(e, w[static_cast<size_t>(c)]));
    }
    out[static_cast<size_t>(r)] = acc;
  }
  return out;
}

std::vector<Gf2mElem> solve_affine(const Gf2mMatrix& M, const std::vector<Gf2mElem>& b) {
  if (static_cast<int>(b.size()) != M.rows) throw std::invalid_argument("solve_affine: length mismatch");
  const int m = M.m;
  Gf2mMatrix A = M;
  std::vector<Gf2mElem> rhs = b;
  std::vector<int> pivot_row_of_col(static_cast<size_t>(M.cols), -1);
  std::vector<bool> row_used(static_cast<size_t>(M.rows), false);
  for (int col = 0; col < M.cols; ++col) {
    int piv = -1;
    for (int r = 0; r < M.rows; ++r)
      if (!row_used[static_cast<size_t>(r)] && !A.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    row_used[static_cast<size_t>(piv)] = true;
    pivot_row_of_col[static_cast<size_t>(col)] = piv;
    Gf2mElem inv = f2m_inverse(A.at(piv, col));
    for (int c = col; c < M.cols; ++c) A.at(piv, c) = f2m_mul(inv, A.at(piv, c));
    rhs[static_cast<size_t>(piv)] = f2m_mul(inv, rhs[static_cast<size_t>(piv)]);
    for (int r = 0; r < M.rows; ++r) {
      if (r == piv) continue;
      Gf2mElem f = A.at(r, col);
      if (f.is_zero()) continue;
      for (int c = col; c < M.cols; ++c) A.at(r, c) = f2m_add(A.at(r, c), f2m_mul(f, A.at(piv, c)));
      rhs[static_cast<size_t>(r)] = f2m_add(rhs[static_cast<size_t>(r)], f2m_mul(f, rhs[static_cast<size_t>(piv)]));
    }
  }
  for (int r = 0; r < M.rows; ++r)
    if (!row_used[static_cast<size_t>(r)] && !rhs[static_cast<size_t>(r)].is_zero())
      throw std::invalid_argument("solve_affine: inconsistent system");
  /* Free variables take field zero, so y_col is just the reduced rhs. */
  std::vector<Gf2mElem> y(static_cast<size_t>(M.cols), Gf2mElem::zero(m));
  for (int col = 0; col < M.cols; ++col) {
    int piv = pivot_row_of_col[static_cast<size_t>(col)];
    if (piv >= 0) y[static_cast<size_t>(col)] = rhs[static_cast<size_t>(piv)];
  }
  return y;
}

}  // namespace qpi
