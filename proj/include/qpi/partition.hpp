#pragma once

#include <gmpxx.h>

#include <vector>

#include "qpi/gf2m.hpp"

namespace qpi {

/* Set partition of [0, n) into non-empty blocks; each block sorted, blocks
 * ordered by smallest element (restricted-growth-string normal form). */
struct Partition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  int t() const { return static_cast<int>(blocks.size()); }

  /* Canonicalizes and validates: disjoint non-empty blocks covering [0, n). */
  static Partition from_blocks(int n, std::vector<std::vector<int>> blocks);

  /* Contiguous near-equal blocks: the first n mod t blocks get one extra
   * element, so block 0 is {0..ceil(n/t)-1}. */
  static Partition contiguous(int n, int t);

  std::vector<int> rgs() const;
  static Partition from_rgs(const std::vector<int>& a);

  friend bool operator==(const Partition& x, const Partition& y) { return x.n == y.n && x.blocks == y.blocks; }
};

/* Stirling numbers of the second kind, exact. */
mpz_class stirling2(int n, int t);

/* Lexicographic rank of the partition's restricted growth string among all
 * partitions of [n] into exactly t blocks; bijective with [0, S(n,t)). */
mpz_class partition_rank(const Partition& p);
Partition partition_unrank(const mpz_class& r, int n, int t);

/* ceil(log2(S(n,t))): bit width of the rank encoding. */
int partition_rank_bits(int n, int t);

/* Parity-check matrix for V_S = Span{char vectors of blocks} over F_{2^m}:
 * one row per consecutive pair inside each block asserting equality, entries
 * only field zero/one, shape (n-t) x n, rank n-t. */
Gf2mMatrix parity_check(const Partition& p, int m);

}  // namespace qpi
