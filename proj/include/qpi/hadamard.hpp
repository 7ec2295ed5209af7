#pragma once

#include <vector>

#include "qpi/pm1.hpp"

namespace qpi {

/* Sylvester Hadamard matrix H_{2^m}, 0-indexed: H[i][j] = (-1)^popcount(i & j).
 * Symmetric, first row/column all +1, H H^T = 2^m I. */
Pm1 hadamard_entry(int i, int j, int m);

/* Materialized H_{2^m} as rows; m <= 12. */
Pm1Matrix sylvester(int m);

/* Column set L (0-based, size m) whose 2^m x m submatrix enumerates {+-1}^m:
 * L(1) = {1}; L(k+1) = {2^k} union {2^k + j : j in L(k)}. Column 0 never
 * appears. */
std::vector<int> independent_columns(int m);

/* Index of the unique H_{2^m} row matching `vals` on independent_columns(m). */
int row_from_subvector(const Pm1Vec& vals, int m);

}  // namespace qpi
