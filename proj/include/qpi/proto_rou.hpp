#pragma once

#include <complex>
#include <vector>

#include "qpi/partition.hpp"

namespace qpi {

/* Retrieval for weights over the p-th roots of unity, with complex-valued
 * data. Weights live as exponents (integers mod p); floats appear only when
 * a root meets the data. The published symbol for entry j of block i is
 * (w_j - w_head) mod p, i.e. the entry masked by head^{p-1}; masked heads are
 * always exponent 0 and stay off the wire. The server decodes with the factor
 * w_head itself — the inverse of the mask — so sum_i w_head_i * a_i = wx^T
 * for every p. */
struct RouProtocol {
  int p = 1;
  Partition part;

  RouProtocol(int order, Partition blocks);

  int n() const { return part.n; }
  int t() const { return part.t(); }
  int bits_per_symbol() const;               // ceil(log2 p)
  int d_bits() const;                        // (n - t) * bits_per_symbol
  double d_info() const;                     // (n - t) * log2 p

  /* exp(2*pi*i*k/p); exact literals for p | 4, library cos/sin otherwise. */
  static std::complex<double> root(int p, int k);

  std::vector<int> publish(const std::vector<int>& w) const;  // n - t masked exponents
  std::vector<std::complex<double>> answer(const std::vector<int>& publication,
                                           const std::vector<std::complex<double>>& x) const;
  std::complex<double> decode(const std::vector<int>& w,
                              const std::vector<std::complex<double>>& answers) const;
};

/* {0,+1,-1} weights via third roots of unity: 0 -> 1, +1 -> omega,
 * -1 -> conj(omega) with omega = -1/2 + (sqrt(3)/2)i, so that
 * (2/sqrt(3)) * Im(image) recovers the entry. Data stays real; the user sends
 * the real and imaginary parts of t complex projections (2t reals). */
struct TernaryCodec {
  static int encode_entry(int v);            // exponent mod 3
  static std::vector<int> encode(const std::vector<int>& w);
  static double decode(std::complex<double> aggregate);  // (2/sqrt(3)) * Im
};

}  // namespace qpi
