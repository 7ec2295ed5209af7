#pragma once

#include <cstdint>
#include <vector>

#include "qpi/pm1.hpp"

namespace qpi {

/* Element of F_{2^m} in polynomial basis. Bit k of `bits` is the coefficient
 * of x^k; a set bit encodes the entry -1 (+1 <-> 0, -1 <-> 1). Entry i of the
 * {+1,-1}-vector image is the coefficient of x^i. */
struct Gf2mElem {
  int m = 1;
  uint32_t bits = 0;

  Gf2mElem() = default;
  Gf2mElem(int degree, uint32_t b);

  static Gf2mElem zero(int m) { return Gf2mElem(m, 0); }
  static Gf2mElem one(int m) { return Gf2mElem(m, 1); }
  static Gf2mElem from_entries(const Pm1Vec& entries);

  Pm1 entry(int i) const { return Pm1::from_bit((bits >> i) & 1u); }
  Pm1Vec entries() const;
  bool is_zero() const { return bits == 0; }

  friend bool operator==(const Gf2mElem& a, const Gf2mElem& b) { return a.m == b.m && a.bits == b.bits; }
  friend bool operator!=(const Gf2mElem& a, const Gf2mElem& b) { return !(a == b); }
};

/* Lexicographically smallest irreducible polynomial of degree m over F_2,
 * encoded with bit k = coefficient of x^k (bit m always set). */
uint32_t irreducible_poly(int m);

Gf2mElem f2m_add(const Gf2mElem& u, const Gf2mElem& v);
Gf2mElem f2m_mul(const Gf2mElem& u, const Gf2mElem& v);
Gf2mElem f2m_inverse(const Gf2mElem& u);

/* Matrix over F_{2^m}, row-major. */
struct Gf2mMatrix {
  int rows = 0;
  int cols = 0;
  int m = 1;
  std::vector<Gf2mElem> a;

  Gf2mMatrix() = default;
  Gf2mMatrix(int r, int c, int degree)
      : rows(r), cols(c), m(degree), a(static_cast<size_t>(r) * c, Gf2mElem::zero(degree)) {}

  Gf2mElem& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Gf2mElem& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

/* M (.) w^T. */
std::vector<Gf2mElem> apply_matrix(const Gf2mMatrix& M, const std::vector<Gf2mElem>& w);

/* Deterministic solver B: Gaussian elimination with left-to-right pivot
 * columns, first usable row as pivot, free variables set to field zero (+1).
 * Throws on an inconsistent system. */
std::vector<Gf2mElem> solve_affine(const Gf2mMatrix& M, const std::vector<Gf2mElem>& b);

}  // namespace qpi
