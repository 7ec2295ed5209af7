#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qpi/gf2m.hpp"
#include "qpi/partition.hpp"
#include "qpi/pm1.hpp"
#include "qpi/rational.hpp"

using namespace qpi;

namespace {

RationalMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      Rational v(num(rng), den(rng));
      v.canonicalize();  // mpq_class(num, den) stores the pair verbatim
      m.at(r, c) = v;
    }
  return m;
}

oracle::Mat to_oracle(const RationalMatrix& m) {
  oracle::Mat a(m.rows(), std::vector<Rational>(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c);
  return a;
}

Gf2mElem elem(int m, uint32_t bits) {
  Gf2mElem e = Gf2mElem::zero(m);
  e.bits = bits;
  return e;
}

}  // namespace

TEST_CASE("pm1 encoding and field addition") {
  CHECK(Pm1::zero().value() == 1);
  CHECK(Pm1::one().value() == -1);
  CHECK(Pm1::from_bit(false).bit() == false);
  CHECK(Pm1::from_bit(true).bit() == true);
  CHECK(f2_add(Pm1(1), Pm1(1)).value() == 1);
  CHECK(f2_add(Pm1(1), Pm1(-1)).value() == -1);
  CHECK(f2_add(Pm1(-1), Pm1(-1)).value() == 1);
  CHECK_THROWS_AS(Pm1(0), std::invalid_argument);

  Pm1Vec c = char_vector({1, 3}, 4);
  CHECK(c[0].value() == 1);
  CHECK(c[1].value() == -1);
  CHECK(c[2].value() == 1);
  CHECK(c[3].value() == -1);
  CHECK(dot(c, {1.0, 2.0, 3.0, 4.0}) == doctest::Approx(1 - 2 + 3 - 4));
}

TEST_CASE("rational rank matches the minor-expansion oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 5);
    int cols = 1 + static_cast<int>(rng() % 5);
    RationalMatrix m = random_matrix(rows, cols, rng);
    CHECK(m.rank() == oracle::rank_by_minors(to_oracle(m)));
  }
  // plus deliberately rank-deficient matrices: duplicate / scaled rows
  for (int trial = 0; trial < 20; ++trial) {
    RationalMatrix m = random_matrix(4, 4, rng);
    for (int c = 0; c < 4; ++c) m.at(3, c) = m.at(1, c) * Rational(3, 2);
    CHECK(m.rank() == oracle::rank_by_minors(to_oracle(m)));
  }
}

TEST_CASE("first-independent-rows selection is greedy and maximal") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 2 + static_cast<int>(rng() % 4);
    int cols = 1 + static_cast<int>(rng() % 3);
    RationalMatrix m = random_matrix(rows, cols, rng);
    auto [rank, picked] = rank_with_first_independent_rows(m);
    CHECK(rank == m.rank());
    CHECK(static_cast<int>(picked.size()) == rank);
    // greedy: row r is picked iff it enlarges the span of earlier picked rows
    std::vector<int> sofar;
    for (int r = 0; r < rows; ++r) {
      RationalMatrix sub(static_cast<int>(sofar.size()) + 1, cols);
      for (size_t i = 0; i < sofar.size(); ++i)
        for (int c = 0; c < cols; ++c) sub.at(static_cast<int>(i), c) = m.at(sofar[i], c);
      for (int c = 0; c < cols; ++c) sub.at(static_cast<int>(sofar.size()), c) = m.at(r, c);
      bool enlarges = sub.rank() > static_cast<int>(sofar.size());
      bool picked_r = std::find(picked.begin(), picked.end(), r) != picked.end();
      CHECK(picked_r == enlarges);
      if (enlarges) sofar.push_back(r);
    }
  }
}

TEST_CASE("inverse and solve_right are exact") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    int k = 1 + static_cast<int>(rng() % 4);
    RationalMatrix m = random_matrix(k, k, rng);
    if (m.rank() < k) continue;
    CHECK(m.multiply(inverse(m)) == RationalMatrix::identity(k));
  }
  for (int trial = 0; trial < 30; ++trial) {
    // U = Q R by construction, R full row rank
    int r = 1 + static_cast<int>(rng() % 3);
    int cols = r + static_cast<int>(rng() % 3);
    RationalMatrix R = random_matrix(r, cols, rng);
    if (R.rank() < r) continue;
    RationalMatrix Q = random_matrix(2 + static_cast<int>(rng() % 3), r, rng);
    RationalMatrix U = Q.multiply(R);
    CHECK(solve_right(R, U).multiply(R) == U);
  }
  // inconsistent system throws
  RationalMatrix R(1, 2), U(1, 2);
  R.at(0, 0) = 1;
  R.at(0, 1) = 0;
  U.at(0, 0) = 0;
  U.at(0, 1) = 1;  // (0,1) is not a multiple of (1,0)
  CHECK_THROWS_AS(solve_right(R, U), std::logic_error);
}

TEST_CASE("irreducible polynomial table is correct and minimal") {
  for (int m = 1; m <= 16; ++m) {
    uint32_t p = irreducible_poly(m);
    CHECK(oracle::poly_degree(p) == m);
    CHECK(oracle::poly_irreducible(p));
    // lexicographically smallest: nothing below it of degree m is irreducible
    for (uint32_t q = 1u << m; q < p; ++q) CHECK_FALSE(oracle::poly_irreducible(q));
  }
}

TEST_CASE("field multiplication matches schoolbook polynomial arithmetic") {
  for (int m = 1; m <= 6; ++m) {
    uint32_t mod = irreducible_poly(m);
    for (uint32_t a = 0; a < (1u << m); ++a)
      for (uint32_t b = 0; b < (1u << m); ++b) {
        Gf2mElem prod = f2m_mul(elem(m, a), elem(m, b));
        CHECK(prod.bits == oracle::poly_mul_mod(a, b, mod));
      }
  }
  std::mt19937_64 rng(14);
  for (int m : {8, 11, 16}) {
    uint32_t mod = irreducible_poly(m);
    for (int trial = 0; trial < 200; ++trial) {
      uint32_t a = static_cast<uint32_t>(rng()) & ((1u << m) - 1);
      uint32_t b = static_cast<uint32_t>(rng()) & ((1u << m) - 1);
      CHECK(f2m_mul(elem(m, a), elem(m, b)).bits == oracle::poly_mul_mod(a, b, mod));
    }
  }
}

TEST_CASE("field axioms and inverses") {
  for (int m = 1; m <= 5; ++m) {
    Gf2mElem one = Gf2mElem::one(m);
    for (uint32_t a = 0; a < (1u << m); ++a) {
      CHECK(f2m_add(elem(m, a), elem(m, a)).is_zero());
      CHECK(f2m_mul(elem(m, a), one) == elem(m, a));
      if (a != 0) CHECK(f2m_mul(elem(m, a), f2m_inverse(elem(m, a))) == one);
      for (uint32_t b = 0; b < (1u << m); ++b) {
        CHECK(f2m_add(elem(m, a), elem(m, b)).bits == (a ^ b));
        CHECK(f2m_mul(elem(m, a), elem(m, b)) == f2m_mul(elem(m, b), elem(m, a)));
        // distributivity spot check
        Gf2mElem c = elem(m, (a * 2654435761u + b) & ((1u << m) - 1));
        CHECK(f2m_mul(c, f2m_add(elem(m, a), elem(m, b))) ==
              f2m_add(f2m_mul(c, elem(m, a)), f2m_mul(c, elem(m, b))));
      }
    }
  }
  CHECK_THROWS_AS(f2m_inverse(Gf2mElem::zero(3)), std::invalid_argument);
}

TEST_CASE("entry view: bit k of the element is sign entry k") {
  Gf2mElem e = elem(4, 0b1001);
  CHECK(e.entry(0).value() == -1);
  CHECK(e.entry(1).value() == 1);
  CHECK(e.entry(2).value() == 1);
  CHECK(e.entry(3).value() == -1);
  CHECK(Gf2mElem::from_entries(e.entries()) == e);
}

TEST_CASE("solve_affine solves and is deterministic with zero free variables") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 1 + static_cast<int>(rng() % 3);
    int cols = 2 + static_cast<int>(rng() % 4);
    int rows = 1 + static_cast<int>(rng() % cols);
    Gf2mMatrix M(rows, cols, m);
    for (auto& e : M.a) e = elem(m, static_cast<uint32_t>(rng()) & ((1u << m) - 1));
    std::vector<Gf2mElem> w(cols);
    for (auto& e : w) e = elem(m, static_cast<uint32_t>(rng()) & ((1u << m) - 1));
    std::vector<Gf2mElem> b = apply_matrix(M, w);
    std::vector<Gf2mElem> u = solve_affine(M, b);
    CHECK(apply_matrix(M, u) == b);
    CHECK(solve_affine(M, b) == u);  // deterministic
  }
  // inconsistent: 0 * u = 1
  Gf2mMatrix Z(1, 1, 2);
  CHECK_THROWS_AS(solve_affine(Z, {Gf2mElem::one(2)}), std::logic_error);
}

TEST_CASE("partition construction, canonical form, validation") {
  Partition p = Partition::from_blocks(5, {{3, 0}, {1, 4}, {2}});
  CHECK(p.t() == 3);
  CHECK(p.blocks == std::vector<std::vector<int>>({{0, 3}, {1, 4}, {2}}));
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), std::invalid_argument);        // missing 2
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {1, 2}}), std::invalid_argument);  // overlap
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1, 2}, {}}), std::invalid_argument);   // empty block

  Partition c = Partition::contiguous(7, 3);
  CHECK(c.blocks == std::vector<std::vector<int>>({{0, 1, 2}, {3, 4}, {5, 6}}));
  CHECK_THROWS_AS(Partition::contiguous(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(Partition::contiguous(3, 0), std::invalid_argument);
}

TEST_CASE("rgs ranking is the lexicographic index; unrank inverts") {
  for (int n = 1; n <= 7; ++n) {
    for (int t = 1; t <= n; ++t) {
      std::vector<std::vector<int>> all;
      oracle::enumerate_rgs(n, t, all);
      CHECK(stirling2(n, t) == mpz_class(static_cast<unsigned long>(all.size())));
      for (size_t i = 0; i < all.size(); ++i) {
        Partition p = Partition::from_rgs(all[i]);
        CHECK(p.rgs() == all[i]);
        CHECK(partition_rank(p) == mpz_class(static_cast<unsigned long>(i)));
        CHECK(partition_unrank(mpz_class(static_cast<unsigned long>(i)), n, t) == p);
      }
    }
  }
  CHECK(stirling2(9, 5) == 6951);
  CHECK(partition_rank_bits(9, 5) == 13);
  CHECK(partition_rank_bits(2, 1) == 0);  // S(2,1) = 1: nothing to send
}

TEST_CASE("parity check annihilates exactly the block-constant vectors") {
  for (int n = 2; n <= 6; ++n)
    for (int t = 1; t <= n; ++t) {
      Partition p = Partition::contiguous(n, t);
      Gf2mMatrix M = parity_check(p, 1);
      CHECK(M.rows == n - t);
      CHECK(M.cols == n);
      int kernel = 0;
      for (uint32_t wbits = 0; wbits < (1u << n); ++wbits) {
        std::vector<Gf2mElem> w(n);
        for (int j = 0; j < n; ++j) w[j] = elem(1, (wbits >> j) & 1u);
        auto s = apply_matrix(M, w);
        bool zero = true;
        for (auto& e : s) zero = zero && e.is_zero();
        bool block_constant = true;
        for (const auto& blk : p.blocks)
          for (int j : blk) block_constant = block_constant && w[j] == w[blk[0]];
        CHECK(zero == block_constant);
        kernel += zero;
      }
      CHECK(kernel == (1 << t));
    }
}
