#pragma once

#include <vector>

#include "qpi/finite_set.hpp"
#include "qpi/partition.hpp"
#include "qpi/pm1.hpp"

namespace qpi {

/* Hadamard-dictionary protocol for alphabets A with |A| = 2^m.
 *
 * vec(A) = H_{2^m} lambda^T, so each weight entry w_j = a_k corresponds to
 * H-row k and the stacked rows W (0-based; row 0 all-ones, column j =
 * (H row k_j)^T) satisfy w = sum_i lambda_i W_i. The server publishes, for
 * each anchor row i in independent_columns(m) and each block, the row's
 * block tail masked by its block head (m(n-t) bits); the user expands to the
 * full masked matrix by Hadamard row lookup per column, answers with block
 * projections of every row with lambda_i != 0 plus the all-ones projection
 * (gamma_A * t + 1 reals), and the server unmasks with its stored heads. */
struct HardProtocol {
  FiniteSet A;
  int m = 0;
  CoefficientVector coeff;        // canonical Hadamard coefficients of A
  std::vector<int> anchors;       // independent_columns(m), 0-based rows of W
  std::vector<int> answer_rows;   // rows with lambda != 0, ascending (excl. row 0)
  Partition part;

  HardProtocol(FiniteSet a, Partition p);

  int n() const { return part.n; }
  int t() const { return part.t(); }

  /* 2^m x n decomposition matrix; throws if some w_j is not in A. */
  Pm1Matrix decompose(const std::vector<Rational>& w) const;

  /* Masked block tails, in anchors-ascending then blocks-ascending order;
   * tails[i*t + j] has |S_j| - 1 entries. */
  std::vector<std::vector<Pm1>> publish(const Pm1Matrix& W) const;

  /* Full masked matrix: row 0 all-ones, every column an H-row, block heads +1
   * on all anchor rows. */
  Pm1Matrix user_expand(const std::vector<std::vector<Pm1>>& tails) const;

  /* Projections (row i asc over answer_rows, block j asc), then the all-ones
   * inner product; gamma_A * t + 1 values. */
  std::vector<double> answer(const Pm1Matrix& What, const std::vector<double>& x) const;

  /* Keys: block heads W[i][S_{j,1}] of the true decomposition. */
  Pm1Matrix keys(const Pm1Matrix& W) const;  // (2^m) x t

  /* sum_i lambda_i sum_j key_{i,j} a_{i,j} + lambda_0 * (all-ones answer). */
  double decode(const Pm1Matrix& W, const std::vector<double>& answers) const;
};

}  // namespace qpi
