#pragma once

#include <vector>

#include "qpi/gf2m.hpp"
#include "qpi/partition.hpp"
#include "qpi/pm1.hpp"

namespace qpi {

/* Single-signal (+-1 weights) retrieval protocols.
 *
 * Server holds w in {+-1}^n, user holds x in R^n; the server publishes a few
 * bits about w, the user sends back one inner product per block, and the
 * server recombines them with its per-block keys into wx^T.
 *
 * Variants:
 *   coset              — publish the parity-check syndrome M (.) w^T (n-t bits)
 *   random_key_basic   — publish per-block key-masked copies of w (n bits)
 *   random_key_improved— publish per-block tails head*w (n-t bits, no keys)
 */
enum class Pm1Variant { coset, random_key_basic, random_key_improved };

struct Pm1Protocol {
  Pm1Variant variant;
  Partition part;
  Gf2mMatrix M;  // parity check of the partition over F_2 (coset variant)

  Pm1Protocol(Pm1Variant v, Partition p);

  int n() const { return part.n; }
  int t() const { return part.t(); }
  int d_bits() const;        // published bit count
  int randomness_bits() const;  // t for the basic variant, else 0

  /* Server step: published bits in wire order. `keys` supplies the t masking
   * signs for the basic variant and is ignored otherwise. */
  std::vector<Pm1> publish(const Pm1Vec& w, const std::vector<Pm1>& keys = {}) const;

  /* User step: rebuild the full-length block representative u with
   * w|_{S_i} = l_i * u|_{S_i} for the (unknown to the user) keys l_i. */
  Pm1Vec representative(const std::vector<Pm1>& publication) const;

  /* User step: the t block inner products (u|_{S_i})(x|_{S_i})^T. */
  std::vector<double> answer(const std::vector<Pm1>& publication,
                             const std::vector<double>& x) const;

  /* Server step: l_i = w_{S_{i,1}} (+) u_{S_{i,1}}, one per block. */
  std::vector<Pm1> keys(const Pm1Vec& w, const std::vector<Pm1>& publication) const;

  /* Server step: sum_i l_i a_i = wx^T. */
  double decode(const Pm1Vec& w, const std::vector<Pm1>& publication,
                const std::vector<double>& answers) const;
};

}  // namespace qpi
