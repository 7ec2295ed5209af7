#include "qpi/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace qpi {

double round12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

namespace {

nlohmann::ordered_json report_json(const PrivacyReport& r) {
  nlohmann::ordered_json j;
  j["protocol"] = r.protocol;
  j["n"] = r.n;
  j["t"] = r.t;
  j["m"] = r.m;
  j["q"] = r.q;
  j["p"] = r.p;
  j["d_bits"] = r.d_bits;
  j["d_info"] = round12(r.d_info);
  j["ell_sent"] = r.ell_sent;
  j["ell_rank"] = r.ell_rank;
  j["ell_worst"] = r.ell_worst;
  j["mi_bits"] = round12(r.mi_bits);
  j["mi_source"] = r.mi_measured ? "measured" : "formula";
  j["entropy_h"] = round12(r.entropy_h);
  j["alphabet_bits"] = round12(r.alphabet_bits);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckRecord& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["lhs"] = round12(c.lhs);
    cj["rhs"] = round12(c.rhs);
    cj["margin"] = round12(c.margin);
    cj["satisfied"] = c.satisfied;
    cj["attained"] = c.attained;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

std::string format12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string emit_json(const std::vector<PrivacyReport>& reports) {
  nlohmann::ordered_json root;
  root["reports"] = nlohmann::ordered_json::array();
  for (const PrivacyReport& r : reports) root["reports"].push_back(report_json(r));
  return root.dump(2) + "\n";
}

std::string emit_csv(const std::vector<PrivacyReport>& reports) {
  std::ostringstream out;
  out << "protocol,n,t,m,q,p,d_bits,d_info,ell_sent,ell_rank,ell_worst,mi_bits,mi_source,"
         "entropy_h,alphabet_bits,check,lhs,rhs,margin,satisfied,attained\n";
  for (const PrivacyReport& r : reports) {
    std::string prefix;
    {
      std::ostringstream p;
      p << r.protocol << ',' << r.n << ',' << r.t << ',' << r.m << ',' << r.q << ',' << r.p << ','
        << r.d_bits << ',' << format12(round12(r.d_info)) << ',' << r.ell_sent << ','
        << r.ell_rank << ',' << r.ell_worst << ',' << format12(round12(r.mi_bits)) << ','
        << (r.mi_measured ? "measured" : "formula") << ',' << format12(round12(r.entropy_h))
        << ',' << format12(round12(r.alphabet_bits));
      prefix = p.str();
    }
    if (r.checks.empty()) {
      out << prefix << ",,,,,,\n";
      continue;
    }
    for (const CheckRecord& c : r.checks) {
      out << prefix << ',' << c.name << ',' << format12(round12(c.lhs)) << ','
          << format12(round12(c.rhs)) << ',' << format12(round12(c.margin)) << ','
          << (c.satisfied ? "true" : "false") << ',' << (c.attained ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

}  // namespace qpi
