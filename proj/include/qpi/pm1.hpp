#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qpi {

/* {+1,-1} representation of F_2: +1 is the field zero, -1 is the field one,
 * and field addition coincides with real multiplication. */
struct Pm1 {
  int8_t v = +1;

  constexpr Pm1() = default;
  constexpr explicit Pm1(int value) : v(static_cast<int8_t>(value)) {
    if (value != 1 && value != -1) throw std::invalid_argument("Pm1: value must be +1 or -1");
  }

  static constexpr Pm1 zero() { return Pm1(+1); }
  static constexpr Pm1 one() { return Pm1(-1); }
  static constexpr Pm1 from_bit(bool b) { return b ? one() : zero(); }

  constexpr int value() const { return v; }
  constexpr bool bit() const { return v < 0; }  // +1 <-> 0, -1 <-> 1

  friend constexpr bool operator==(Pm1 a, Pm1 b) { return a.v == b.v; }
  friend constexpr bool operator!=(Pm1 a, Pm1 b) { return a.v != b.v; }
};

constexpr Pm1 f2_add(Pm1 a, Pm1 b) { return Pm1(a.v * b.v); }

using Pm1Vec = std::vector<Pm1>;

/* Characteristic vector of S within [0, n): entry j is -1 iff j is in S. */
inline Pm1Vec char_vector(const std::vector<int>& S, int n) {
  Pm1Vec out(static_cast<size_t>(n), Pm1::zero());
  for (int j : S) {
    if (j < 0 || j >= n) throw std::out_of_range("char_vector: index out of range");
    out[static_cast<size_t>(j)] = Pm1::one();
  }
  return out;
}

inline Pm1Vec f2_add(const Pm1Vec& a, const Pm1Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("f2_add: length mismatch");
  Pm1Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = f2_add(a[i], b[i]);
  return out;
}

inline double dot(const Pm1Vec& a, const std::vector<double>& x) {
  if (a.size() != x.size()) throw std::invalid_argument("dot: length mismatch");
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i].value() * x[i];
  return s;
}

/* Dense row-major matrix of +1/-1 entries. */
struct Pm1Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Pm1> a;

  Pm1Matrix() = default;
  Pm1Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Pm1::zero()) {}

  Pm1& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Pm1& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  Pm1Vec row(int r) const {
    Pm1Vec out(static_cast<size_t>(cols));
    for (int c = 0; c < cols; ++c) out[static_cast<size_t>(c)] = at(r, c);
    return out;
  }

  friend bool operator==(const Pm1Matrix& x, const Pm1Matrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

}  // namespace qpi
