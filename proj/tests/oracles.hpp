#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is deliberately naive (Laplace minors, schoolbook
// polynomial arithmetic, explicit enumeration): correctness over speed,
// and no code shared with the implementations under test.

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "qpi/gf2m.hpp"
#include "qpi/pm1.hpp"
#include "qpi/rational.hpp"

namespace oracle {

using qpi::Rational;
using Mat = std::vector<std::vector<Rational>>;

/* Determinant by Laplace expansion along the first row. */
inline Rational det_laplace(const Mat& a) {
  size_t k = a.size();
  if (k == 0) return 1;
  if (k == 1) return a[0][0];
  Rational acc = 0;
  for (size_t j = 0; j < k; ++j) {
    Mat minor(k - 1, std::vector<Rational>(k - 1));
    for (size_t r = 1; r < k; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < k; ++c)
        if (c != j) minor[r - 1][cc++] = a[r][c];
    }
    Rational term = a[0][j] * det_laplace(minor);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

/* Rank = size of the largest nonsingular square minor. Exponential; keep
 * matrices at 6x6 or smaller. */
inline int rank_by_minors(const Mat& a) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int k = std::min(rows, cols); k >= 1; --k) {
    std::vector<int> rs(k), cs(k);
    // enumerate k-subsets of rows and columns via bitmasks
    for (uint32_t rm = 0; rm < (1u << rows); ++rm) {
      if (__builtin_popcount(rm) != k) continue;
      for (uint32_t cm = 0; cm < (1u << cols); ++cm) {
        if (__builtin_popcount(cm) != k) continue;
        Mat sub(k, std::vector<Rational>(k));
        int ri = 0;
        for (int r = 0; r < rows; ++r) {
          if (!(rm >> r & 1)) continue;
          int ci = 0;
          for (int c = 0; c < cols; ++c)
            if (cm >> c & 1) sub[ri][ci++] = a[r][c];
          ++ri;
        }
        if (det_laplace(sub) != 0) return k;
      }
    }
  }
  return 0;
}

/* ---- F_2[x] on bitmask polynomials (bit k = coefficient of x^k) ---- */

inline int poly_degree(uint64_t p) {
  int d = -1;
  while (p) { ++d; p >>= 1; }
  return d;
}

inline uint64_t poly_mod(uint64_t a, uint64_t mod) {
  int dm = poly_degree(mod);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= mod << (d - dm);
  return a;
}

inline uint64_t poly_mul_mod(uint64_t a, uint64_t b, uint64_t mod) {
  uint64_t acc = 0;
  for (int i = 0; i <= poly_degree(b); ++i)
    if (b >> i & 1) acc ^= a << i;
  return poly_mod(acc, mod);
}

/* Irreducible over F_2 iff no divisor of degree 1..deg/2. */
inline bool poly_irreducible(uint64_t p) {
  int d = poly_degree(p);
  if (d <= 0) return false;
  for (int k = 1; 2 * k <= d; ++k)
    for (uint64_t q = 1ull << k; q < (2ull << k); ++q)
      if (poly_mod(p, q) == 0) return false;
  return true;
}

/* ---- set partitions ---- */

/* All restricted growth strings of partitions of [0,n) into exactly t
 * blocks, in lexicographic order. */
inline void enumerate_rgs(int n, int t, std::vector<std::vector<int>>& out) {
  std::vector<int> a(n, 0);
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      if (mx + 1 == t) out.push_back(a);
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      a[i] = v;
      self(self, i + 1, std::max(mx, v));
    }
  };
  if (n > 0) rec(rec, 1, 0);  // a[0] is fixed to 0
  else if (t == 0) out.push_back({});
}

/* ---- direct inner products ---- */

inline double inner(const qpi::Pm1Vec& w, const std::vector<double>& x) {
  double s = 0;
  for (size_t j = 0; j < w.size(); ++j) s += w[j].value() * x[j];
  return s;
}

inline double inner(const std::vector<Rational>& w, const std::vector<double>& x) {
  double s = 0;
  for (size_t j = 0; j < w.size(); ++j) s += w[j].get_d() * x[j];
  return s;
}

inline std::complex<double> inner(const std::vector<std::complex<double>>& w,
                                  const std::vector<std::complex<double>>& x) {
  std::complex<double> s = 0;
  for (size_t j = 0; j < w.size(); ++j) s += w[j] * x[j];
  return s;
}

inline bool close_rel(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * (1.0 + std::abs(b));
}

/* Recursive Sylvester doubling, independent of the popcount formula. */
inline std::vector<std::vector<int>> sylvester_recursive(int m) {
  std::vector<std::vector<int>> h = {{1}};
  for (int k = 0; k < m; ++k) {
    int s = 1 << k;
    std::vector<std::vector<int>> g(2 * s, std::vector<int>(2 * s));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        g[i][j] = h[i][j];
        g[i][j + s] = h[i][j];
        g[i + s][j] = h[i][j];
        g[i + s][j + s] = -h[i][j];
      }
    h = std::move(g);
  }
  return h;
}

/* Decide whether every element of A equals l0 + sum_i eps_i*l_i for SOME
 * assignment of distinct sign patterns, with exactly `theta` generators:
 * brute force over all injective pattern assignments, solving each exact
 * linear system. Feasible for |A| <= 4 (and small 5-sets). */
inline bool representable_with(const std::vector<Rational>& A, int theta) {
  int k = static_cast<int>(A.size());
  int npat = 1 << theta;
  if (npat < k) return false;
  std::vector<int> pat(k, -1);
  std::vector<bool> used(npat, false);

  // Solve the linear system for lambda given a full pattern assignment:
  // rows: 1, (-1)^{bit i of pat}, unknowns lambda_0..lambda_theta.
  auto solvable = [&]() {
    int unknowns = theta + 1;
    Mat m(k, std::vector<Rational>(unknowns + 1));
    for (int r = 0; r < k; ++r) {
      m[r][0] = 1;
      for (int i = 0; i < theta; ++i) m[r][1 + i] = (pat[r] >> i & 1) ? -1 : 1;
      m[r][unknowns] = A[r];
    }
    // Gaussian elimination; consistent iff no row reduces to (0..0 | c!=0).
    int row = 0;
    for (int col = 0; col < unknowns && row < k; ++col) {
      int pivot = -1;
      for (int r = row; r < k; ++r)
        if (m[r][col] != 0) { pivot = r; break; }
      if (pivot < 0) continue;
      std::swap(m[row], m[pivot]);
      for (int r = 0; r < k; ++r) {
        if (r == row || m[r][col] == 0) continue;
        Rational f = m[r][col] / m[row][col];
        for (int c = col; c <= unknowns; ++c) m[r][c] -= f * m[row][c];
      }
      ++row;
    }
    for (int r = 0; r < k; ++r) {
      bool zero = true;
      for (int c = 0; c < unknowns; ++c) zero = zero && m[r][c] == 0;
      if (zero && m[r][unknowns] != 0) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int idx) -> bool {
    if (idx == k) return solvable();
    for (int p = 0; p < npat; ++p) {
      if (used[p]) continue;
      used[p] = true;
      pat[idx] = p;
      if (self(self, idx + 1)) { used[p] = false; return true; }
      used[p] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

/* Brute-force coefficient complexity (smallest feasible theta). */
inline int complexity_brute(const std::vector<Rational>& A) {
  for (int theta = 1; theta < static_cast<int>(A.size()); ++theta)
    if (representable_with(A, theta)) return theta;
  return static_cast<int>(A.size()) - 1;
}

}  // namespace oracle
