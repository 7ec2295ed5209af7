#pragma once

#include <complex>
#include <random>
#include <vector>

#include "qpi/finite_set.hpp"
#include "qpi/partition.hpp"
#include "qpi/proto_joint.hpp"
#include "qpi/proto_pm1.hpp"
#include "qpi/report.hpp"
#include "qpi/transcript.hpp"

namespace qpi {

/* One simulated session: the transcript plus the privacy accounting that is
 * not on the wire. Every runner checks decoded-vs-direct agreement at 1e-9
 * relative and throws if the protocol miscomputed. */
struct RunResult {
  Transcript tr;
  Partition partition;
  int ell_sent = 0;   // projections transmitted
  int ell_rank = 0;   // exact rank of the projection system
  int ell_worst = 0;  // analytic worst-case count
  double d_info = 0;  // information-theoretic publication cost
  double alphabet_bits = 0;
  double mi_formula = 0;  // analytic I(W;Q) for this configuration
};

/* Seed-deterministic generators. */
std::vector<double> gaussian_vector(int n, std::mt19937_64& rng);
std::vector<std::complex<double>> gaussian_cvector(int n, std::mt19937_64& rng);
Pm1Vec random_pm1_vector(int n, std::mt19937_64& rng);
std::vector<Gf2mElem> random_field_vector(int n, int m, std::mt19937_64& rng);
std::vector<Rational> random_alphabet_vector(const FiniteSet& A, int n, std::mt19937_64& rng);
std::vector<int> random_exponents(int n, int p, std::mt19937_64& rng);
std::vector<int> random_ternary(int n, std::mt19937_64& rng);
/* Distinct rationals with small numerators/denominators (wire-encodable). */
FiniteSet random_rational_set(int size, std::mt19937_64& rng);

/* Runners with explicit inputs (rng only where the protocol itself is
 * randomized). xs = one data vector per user sharing the same publication. */
RunResult run_pm1(Pm1Variant v, const Partition& part, const Pm1Vec& w,
                  const std::vector<std::vector<double>>& xs, std::mt19937_64& rng);
RunResult run_joint(const JointConfig& cfg, const std::vector<Gf2mElem>& w,
                    const std::vector<std::vector<double>>& xs);
RunResult run_perfect(const JointConfig& cfg, const FiniteSet& A, const std::vector<Rational>& w,
                      const std::vector<std::vector<double>>& xs);
RunResult run_hard(const FiniteSet& A, const Partition& part, const std::vector<Rational>& w,
                   const std::vector<std::vector<double>>& xs);
RunResult run_rou(int p, const Partition& part, const std::vector<int>& w_exponents,
                  const std::vector<std::vector<std::complex<double>>>& xs);
RunResult run_zpm1(const Partition& part, const std::vector<int>& w_ternary,
                   const std::vector<std::vector<double>>& xs);

/* Random-instance conveniences (contiguous partition; good partition for the
 * joint family). */
RunResult run_pm1_random(Pm1Variant v, int n, int t, int users, std::mt19937_64& rng);
RunResult run_joint_random(int n, int m, int t, int q, int users, std::mt19937_64& rng);
RunResult run_perfect_random(const FiniteSet& A, int n, int t, int q, int users,
                             std::mt19937_64& rng);
RunResult run_hard_random(const FiniteSet& A, int n, int t, int users, std::mt19937_64& rng);
RunResult run_rou_random(int p, int n, int t, int users, std::mt19937_64& rng);
RunResult run_zpm1_random(int n, int t, int users, std::mt19937_64& rng);

/* Exhaustive I(W;Q) in bits from exact counts, enumerating every weight
 * vector (and protocol randomness) uniformly. The partition is the public
 * contiguous one — the query is then a fixed function of w and the syndrome
 * preimages are exact cosets. Throws BudgetExceeded when
 * |alphabet|^n * |randomness| > 2^24. */
double mutual_information(ProtocolId id, int n, int t, int m = 0, int q = 0, int p = 0);

double binary_entropy(double x);

/* PrivacyReport with the standard checks:
 *   tradeoff_worst:  I + ell_worst*log|A| >= n*log|A|
 *   tradeoff_rank:   I + ell_rank*log|A|  >= n*log|A|
 *   cost_bound:      d_bits >= I
 *   cost_entropy_bound (joint family): d_bits <= (n-t)log2 t + nH(t/n) + m(n-t) + 1
 * measure_mi = true runs the exhaustive oracle; otherwise the analytic
 * formula value is used and flagged as such. */
PrivacyReport analyze(const RunResult& r, bool measure_mi);

}  // namespace qpi
