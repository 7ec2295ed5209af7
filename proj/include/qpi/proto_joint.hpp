#pragma once

#include <vector>

#include "qpi/finite_set.hpp"
#include "qpi/gf2m.hpp"
#include "qpi/partition.hpp"
#include "qpi/pm1.hpp"
#include "qpi/rational.hpp"

namespace qpi {

/* Partition of F_{2^m} into q cosets of F_1 = Span_{F_2}{char vectors of the
 * base blocks}, where the base blocks split [0, m) into p = m - log2(q)
 * contiguous near-equal parts. Coset representatives are chosen greedily:
 * the unused element whose bit pattern is numerically smallest. */
struct FieldPartition {
  int m = 1;
  int q = 1;
  std::vector<std::vector<int>> base_blocks;   // partition of [0, m)
  std::vector<Gf2mElem> shifts;                // shifts[0] = 0; coset j = shifts[j] + F_1
  std::vector<std::vector<Gf2mElem>> cosets;   // q lists of 2^m/q elements each
};

FieldPartition field_partition(int m, int q);

/* 1-based index of the coset containing e. */
int classify_element(const Gf2mElem& e, const FieldPartition& fp);

/* True iff every block of `part` maps into a single coset of `fp` under w. */
bool is_good_partition(const Partition& part, const std::vector<Gf2mElem>& w,
                       const FieldPartition& fp);

/* Deterministic good partition with exactly t blocks: start from the nonempty
 * coset preimages, then repeatedly split the largest block (ties: smallest
 * minimum) by moving its largest index into a new singleton. Throws if more
 * than t preimages are nonempty. */
Partition good_partition(const std::vector<Gf2mElem>& w, int t, const FieldPartition& fp);

/* +-1 image: column j is the image of w_j, row i collects coefficient i. */
Pm1Matrix field_image(const std::vector<Gf2mElem>& w, int m);

struct JointConfig {
  int n = 0;
  int m = 1;
  int t = 0;
  int q = 1;  // power of two, q <= min(t, 2^{m-1})
};

/* Joint retrieval of the m rows of the +-1 image of w in F_{2^m}^n.
 *
 * Server publishes the partition rank (ceil(log2 S(n,t)) bits) and the
 * syndrome M (.) w^T (m(n-t) bits); the user solves for the canonical shift
 * u, forms the per-block images U_i, and answers with R_i (x|_{S_i})^T for
 * the lexicographically first maximal independent row set R_i of U_i; the
 * server recombines via diag(l_i) Q_i with Q_i R_i = U_i exactly. */
struct JointProtocol {
  JointConfig cfg;
  FieldPartition fp;
  Partition part;
  Gf2mMatrix M;

  JointProtocol(JointConfig c, Partition p);

  /* Convenience: partition picked by good_partition for this w. */
  static JointProtocol for_weights(JointConfig c, const std::vector<Gf2mElem>& w);

  std::vector<Gf2mElem> syndrome(const std::vector<Gf2mElem>& w) const;
  std::vector<Gf2mElem> shift(const std::vector<Gf2mElem>& syn) const;  // u = B(M, syn)
  std::vector<Gf2mElem> keys(const std::vector<Gf2mElem>& w,
                             const std::vector<Gf2mElem>& u) const;  // l_i = u|head (+) w|head

  /* U_i: m x |S_i| image of u restricted to block i. */
  Pm1Matrix block_image(const std::vector<Gf2mElem>& u, int block) const;

  struct Answer {
    std::vector<std::vector<int>> row_sets;    // R_i as row indices into U_i
    std::vector<std::vector<double>> values;   // R_i (x|_{S_i})^T
  };
  Answer answer(const std::vector<Gf2mElem>& syn, const std::vector<double>& x) const;

  /* W x^T, length m. */
  std::vector<double> decode(const std::vector<Gf2mElem>& w, const std::vector<Gf2mElem>& syn,
                             const Answer& ans) const;

  /* Exact identity diag(l_i) Q_i R_i = W|_{S_i} for every block. */
  bool exact_block_identity(const std::vector<Gf2mElem>& w, const std::vector<Gf2mElem>& syn) const;
};

/* Perfect-set wrapper: w over a perfect alphabet A (|A| = 2^m, C(A) = m,
 * sum(A) = 0) decomposes as w = sum_i lambda_i w^{(i)} with +-1 rows w^{(i)};
 * the rows are retrieved jointly and recombined with the public lambda. */
struct PerfectCodec {
  FiniteSet A;
  int m = 0;
  std::vector<Rational> lambda;          // lambda_1..lambda_m
  std::vector<uint32_t> sign_patterns;   // per element of A, bit i -> row i+1 entry -1

  explicit PerfectCodec(FiniteSet a);

  Pm1Matrix encode(const std::vector<Rational>& w) const;        // m x n sign rows
  std::vector<Gf2mElem> encode_field(const std::vector<Rational>& w) const;
  double combine(const std::vector<double>& signals) const;      // sum lambda_i signal_i
};

}  // namespace qpi
