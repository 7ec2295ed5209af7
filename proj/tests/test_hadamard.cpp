#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qpi/hadamard.hpp"

using namespace qpi;

TEST_CASE("entry formula matches the recursive doubling construction") {
  for (int m = 0; m <= 6; ++m) {
    auto h = oracle::sylvester_recursive(m);
    int k = 1 << m;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) CHECK(hadamard_entry(i, j, m).value() == h[i][j]);
  }
}

TEST_CASE("materialized matrix agrees with the entry formula") {
  for (int m = 0; m <= 8; ++m) {
    Pm1Matrix H = sylvester(m);
    int k = 1 << m;
    REQUIRE(H.rows == k);
    REQUIRE(H.cols == k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) CHECK(H.at(i, j) == hadamard_entry(i, j, m));
  }
  CHECK_THROWS_AS(sylvester(13), std::invalid_argument);
}

TEST_CASE("orthogonality: H H^T = 2^m I, exhaustive m <= 6") {
  for (int m = 0; m <= 6; ++m) {
    int k = 1 << m;
    Pm1Matrix H = sylvester(m);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        long dot = 0;
        for (int c = 0; c < k; ++c) dot += H.at(i, c).value() * H.at(j, c).value();
        CHECK(dot == (i == j ? k : 0));
      }
  }
}

TEST_CASE("row closure: row_i * row_j = row_{i xor j}, exhaustive m <= 6") {
  for (int m = 0; m <= 6; ++m) {
    int k = 1 << m;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        for (int c = 0; c < k; ++c)
          CHECK(hadamard_entry(i, c, m).value() * hadamard_entry(j, c, m).value() ==
                hadamard_entry(i ^ j, c, m).value());
  }
}

TEST_CASE("anchor columns: recursive structure and full sign coverage") {
  CHECK(independent_columns(1) == std::vector<int>({1}));
  CHECK(independent_columns(2) == std::vector<int>({2, 3}));
  CHECK(independent_columns(3) == std::vector<int>({4, 6, 7}));

  for (int m = 1; m <= 6; ++m) {
    std::vector<int> L = independent_columns(m);
    REQUIRE(static_cast<int>(L.size()) == m);
    for (int c : L) CHECK(c != 0);  // the all-ones column carries no information
    // the 2^m rows restricted to columns L enumerate {+-1}^m exactly once
    std::set<std::vector<int>> seen;
    for (int r = 0; r < (1 << m); ++r) {
      std::vector<int> sig;
      for (int c : L) sig.push_back(hadamard_entry(r, c, m).value());
      seen.insert(sig);
    }
    CHECK(static_cast<int>(seen.size()) == (1 << m));
  }
}

TEST_CASE("row lookup inverts the anchor restriction") {
  for (int m = 1; m <= 6; ++m) {
    std::vector<int> L = independent_columns(m);
    for (int r = 0; r < (1 << m); ++r) {
      Pm1Vec vals;
      for (int c : L) vals.push_back(hadamard_entry(r, c, m));
      CHECK(row_from_subvector(vals, m) == r);
    }
  }
}
