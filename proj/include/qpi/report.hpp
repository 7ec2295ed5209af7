#pragma once

#include <string>
#include <vector>

namespace qpi {

/* One verified inequality: margin = lhs - rhs, satisfied when margin is not
 * materially negative, attained when it is zero within tolerance. */
struct CheckRecord {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  double margin = 0;
  bool satisfied = false;
  bool attained = false;
};

struct PrivacyReport {
  std::string protocol;
  int n = 0, t = 0, m = 0, q = 0, p = 0;
  int d_bits = 0;
  double d_info = 0;
  int ell_sent = 0;
  int ell_rank = 0;
  int ell_worst = 0;
  double mi_bits = 0;
  bool mi_measured = false;  // exhaustive enumeration vs analytic formula
  double entropy_h = 0;      // H(t/n)
  double alphabet_bits = 0;  // log2 of the per-entry alphabet size
  std::vector<CheckRecord> checks;
};

/* Round to 12 significant digits; applied to every float before emission so
 * json and csv carry identical numeric values. */
double round12(double v);

std::string emit_json(const std::vector<PrivacyReport>& reports);
std::string emit_csv(const std::vector<PrivacyReport>& reports);

}  // namespace qpi
