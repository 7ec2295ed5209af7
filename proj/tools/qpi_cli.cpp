// Command-line driver for the private-retrieval protocol library: runs
// protocol sessions with randomized data, prints privacy/cost reports
// (json or csv), writes binary transcripts, classifies finite alphabets,
// sweeps the privacy frontier over t, and replays the built-in
// known-answer examples.
//
// Exit codes: 0 ok, 1 check failed, 2 bad arguments, 3 budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qpi/error.hpp"
#include "qpi/finite_set.hpp"
#include "qpi/gf2m.hpp"
#include "qpi/harness.hpp"
#include "qpi/partition.hpp"
#include "qpi/proto_hard.hpp"
#include "qpi/proto_joint.hpp"
#include "qpi/proto_pm1.hpp"
#include "qpi/proto_rou.hpp"
#include "qpi/report.hpp"
#include "qpi/transcript.hpp"

namespace {

using namespace qpi;

Rational parse_rational(const std::string& token) {
  std::string s;
  for (char c : token)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational token");
  Rational v;
  try {
    v = Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + token + "'");
  }
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator in '" + token + "'");
  v.canonicalize();
  return v;
}

FiniteSet parse_set(const std::string& csv) {
  std::vector<Rational> vals;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) vals.push_back(parse_rational(token));
  if (vals.empty()) throw std::invalid_argument("--set must list at least one value");
  return FiniteSet::from_values(std::move(vals));
}

/* Largest power of two <= min(t, 2^{m-1}); the least publication cost the
 * joint construction allows at this t. */
int default_q(int t, int m) {
  int cap = std::min(t, 1 << (m - 1));
  int q = 1;
  while (2 * q <= cap) q *= 2;
  return q;
}

enum class MiMode { automatic, measure, formula };

MiMode parse_mi_mode(const std::string& s) {
  if (s == "auto") return MiMode::automatic;
  if (s == "measure") return MiMode::measure;
  if (s == "formula") return MiMode::formula;
  throw std::invalid_argument("--mi must be auto, measure, or formula");
}

PrivacyReport analyze_mode(const RunResult& r, MiMode mode) {
  switch (mode) {
    case MiMode::measure:
      return analyze(r, true);
    case MiMode::formula:
      return analyze(r, false);
    case MiMode::automatic:
    default:
      try {
        return analyze(r, true);
      } catch (const BudgetExceeded&) {
        return analyze(r, false);
      }
  }
}

/* Shared flags for the protocol-run subcommands. */
struct RunOpts {
  int n = 8;
  int t = 2;
  int m = 2;
  int q = 0;  // 0 = pick default_q
  int p = 4;
  std::string set_csv;
  int trials = 10;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string transcript_path;
  std::string mi = "auto";
  bool basic = false;
};

void add_common(CLI::App* sub, RunOpts& o, bool with_trials = true) {
  sub->add_option("--seed", o.seed, "RNG seed");
  if (with_trials) sub->add_option("--trials", o.trials, "users sharing one published query")->check(CLI::PositiveNumber);
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--transcript", o.transcript_path, "write the binary transcript here");
  sub->add_option("--mi", o.mi, "mutual-information source: auto, measure, formula")
      ->check(CLI::IsMember({"auto", "measure", "formula"}));
}

int emit_reports(const std::vector<PrivacyReport>& reports, const std::string& format) {
  std::cout << (format == "csv" ? emit_csv(reports) : emit_json(reports));
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      if (!c.satisfied) return 1;
  return 0;
}

int finish_run(const RunResult& r, const RunOpts& o) {
  PrivacyReport rep = analyze_mode(r, parse_mi_mode(o.mi));
  if (!o.transcript_path.empty()) write_file(o.transcript_path, r.tr.serialize());
  return emit_reports({rep}, o.format);
}

int cmd_pm1(const RunOpts& o, Pm1Variant v) {
  std::mt19937_64 rng(o.seed);
  return finish_run(run_pm1_random(v, o.n, o.t, o.trials, rng), o);
}

int cmd_joint(const RunOpts& o) {
  std::mt19937_64 rng(o.seed);
  int q = o.q > 0 ? o.q : default_q(o.t, o.m);
  return finish_run(run_joint_random(o.n, o.m, o.t, q, o.trials, rng), o);
}

int cmd_perfect(const RunOpts& o) {
  std::mt19937_64 rng(o.seed);
  FiniteSet A = parse_set(o.set_csv.empty() ? "-3,-1,1,3" : o.set_csv);
  if (!A.size_is_power_of_two()) throw std::invalid_argument("perfect alphabet size must be a power of two");
  int q = o.q > 0 ? o.q : default_q(o.t, A.log2_size());
  return finish_run(run_perfect_random(A, o.n, o.t, q, o.trials, rng), o);
}

int cmd_hard(const RunOpts& o) {
  std::mt19937_64 rng(o.seed);
  FiniteSet A = parse_set(o.set_csv.empty() ? "-2,0,1,2" : o.set_csv);
  return finish_run(run_hard_random(A, o.n, o.t, o.trials, rng), o);
}

int cmd_rou(const RunOpts& o) {
  std::mt19937_64 rng(o.seed);
  return finish_run(run_rou_random(o.p, o.n, o.t, o.trials, rng), o);
}

int cmd_zpm1(const RunOpts& o) {
  std::mt19937_64 rng(o.seed);
  return finish_run(run_zpm1_random(o.n, o.t, o.trials, rng), o);
}

std::string rat_str(const Rational& v) { return v.get_str(); }

nlohmann::ordered_json rat_list(const std::vector<Rational>& vs) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& v : vs) a.push_back(rat_str(v));
  return a;
}

const char* class_name(SetClass c) {
  switch (c) {
    case SetClass::perfect: return "perfect";
    case SetClass::hard: return "hard";
    default: return "neither";
  }
}

int cmd_complexity(const RunOpts& o) {
  if (o.set_csv.empty()) throw std::invalid_argument("complexity requires --set");
  FiniteSet A = parse_set(o.set_csv);
  Classification cls = classify_set(A);

  if (o.format == "csv") {
    std::ostringstream out;
    out << "set,size,complexity,class,gamma,lambda0,lambdas,perfect_lambda\n";
    auto joined = [](const std::vector<Rational>& vs, size_t from) {
      std::string s;
      for (size_t i = from; i < vs.size(); ++i) {
        if (i > from) s += '|';
        s += vs[i].get_str();
      }
      return s;
    };
    out << joined(A.elements, 0) << ',' << A.size() << ',' << cls.certificate.theta << ','
        << class_name(cls.cls) << ',' << cls.coefficients.gamma << ','
        << rat_str(cls.certificate.lambdas.at(0)) << ',' << joined(cls.certificate.lambdas, 1)
        << ',' << joined(cls.perfect_lambda, 0) << '\n';
    std::cout << out.str();
    return 0;
  }

  nlohmann::ordered_json j;
  j["set"] = rat_list(A.elements);
  j["size"] = A.size();
  j["complexity"] = cls.certificate.theta;
  j["class"] = class_name(cls.cls);
  nlohmann::ordered_json cert;
  cert["lambda0"] = rat_str(cls.certificate.lambdas.at(0));
  cert["lambdas"] = rat_list({cls.certificate.lambdas.begin() + 1, cls.certificate.lambdas.end()});
  nlohmann::ordered_json pats = nlohmann::ordered_json::array();
  for (uint32_t p : cls.certificate.sign_patterns) pats.push_back(p);
  cert["sign_patterns"] = pats;
  j["certificate"] = cert;
  if (A.size_is_power_of_two()) {
    nlohmann::ordered_json had;
    had["lambda"] = rat_list(cls.coefficients.lambda);
    had["gamma"] = cls.coefficients.gamma;
    j["hadamard"] = had;
  }
  j["perfect_lambda"] = rat_list(cls.perfect_lambda);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_privacy_scan(const RunOpts& o, const std::string& protocol) {
  std::mt19937_64 rng(o.seed);
  MiMode mode = parse_mi_mode(o.mi);
  std::vector<PrivacyReport> reports;
  for (int t = 1; t <= o.n; ++t) {
    if (protocol == "pm1-coset") {
      reports.push_back(analyze_mode(run_pm1_random(Pm1Variant::coset, o.n, t, o.trials, rng), mode));
    } else if (protocol == "pm1-randkey") {
      reports.push_back(
          analyze_mode(run_pm1_random(Pm1Variant::random_key_improved, o.n, t, o.trials, rng), mode));
    } else if (protocol == "pm1-randkey-basic") {
      reports.push_back(
          analyze_mode(run_pm1_random(Pm1Variant::random_key_basic, o.n, t, o.trials, rng), mode));
    } else if (protocol == "joint") {
      int q = o.q > 0 ? o.q : default_q(t, o.m);
      if (q > std::min(t, 1 << (o.m - 1))) continue;  // explicit q invalid at this t
      reports.push_back(analyze_mode(run_joint_random(o.n, o.m, t, q, o.trials, rng), mode));
    } else if (protocol == "perfect") {
      FiniteSet A = parse_set(o.set_csv.empty() ? "-3,-1,1,3" : o.set_csv);
      int q = o.q > 0 ? o.q : default_q(t, A.log2_size());
      if (q > std::min(t, 1 << (A.log2_size() - 1))) continue;
      reports.push_back(analyze_mode(run_perfect_random(A, o.n, t, q, o.trials, rng), mode));
    } else if (protocol == "hard") {
      FiniteSet A = parse_set(o.set_csv.empty() ? "-2,0,1,2" : o.set_csv);
      reports.push_back(analyze_mode(run_hard_random(A, o.n, t, o.trials, rng), mode));
    } else if (protocol == "rou") {
      reports.push_back(analyze_mode(run_rou_random(o.p, o.n, t, o.trials, rng), mode));
    } else if (protocol == "zpm1") {
      reports.push_back(analyze_mode(run_zpm1_random(o.n, t, o.trials, rng), mode));
    } else {
      throw std::invalid_argument("unknown --protocol '" + protocol + "'");
    }
  }
  if (reports.empty()) throw std::invalid_argument("no valid t in [1, n] for the given parameters");
  return emit_reports(reports, o.format);
}

/* ------------------------------------------------------------------ */
/* Known-answer replay                                                  */
/* ------------------------------------------------------------------ */

struct Verifier {
  int failures = 0;

  void check(const std::string& label, bool ok, const std::string& detail = "") {
    if (ok) {
      std::cout << "ok        " << label << "\n";
    } else {
      ++failures;
      std::cout << "MISMATCH  " << label << (detail.empty() ? "" : " — " + detail) << "\n";
    }
  }
};

bool close1e9(double a, double b) { return std::abs(a - b) <= 1e-9 * (1.0 + std::abs(b)); }

std::vector<Gf2mElem> elems_from_bits(const std::vector<unsigned>& bits, int m) {
  std::vector<Gf2mElem> out;
  for (unsigned b : bits) {
    Gf2mElem e = Gf2mElem::zero(m);
    e.bits = b;
    out.push_back(e);
  }
  return out;
}

void verify_pm1(Verifier& v) {
  {
    Pm1Protocol pr(Pm1Variant::coset, Partition::from_blocks(3, {{0, 1}, {2}}));
    Pm1Vec w = {Pm1(-1), Pm1(-1), Pm1(1)};
    auto pub = pr.publish(w);
    v.check("pm1/coset n=3 syndrome = (+1)", pub.size() == 1 && pub[0].value() == 1);
  }
  {
    Pm1Protocol pr(Pm1Variant::coset, Partition::contiguous(2, 1));
    Pm1Vec w = {Pm1(-1), Pm1(1)};
    auto pub = pr.publish(w);
    auto u = pr.representative(pub);
    auto keys = pr.keys(w, pub);
    auto ans = pr.answer(pub, {2.0, 3.0});
    double dec = pr.decode(w, pub, ans);
    v.check("pm1/coset n=2 query = (-1)", pub.size() == 1 && pub[0].value() == -1);
    v.check("pm1/coset n=2 shift u = [-1,+1]",
            u.size() == 2 && u[0].value() == -1 && u[1].value() == 1);
    v.check("pm1/coset n=2 key = +1", keys.size() == 1 && keys[0].value() == 1);
    v.check("pm1/coset n=2 answer = 1.0", ans.size() == 1 && close1e9(ans[0], 1.0));
    v.check("pm1/coset n=2 decode = 1.0", close1e9(dec, 1.0));
  }
  {
    Pm1Protocol pr(Pm1Variant::random_key_improved, Partition::from_blocks(3, {{0, 1}, {2}}));
    Pm1Vec w = {Pm1(-1), Pm1(1), Pm1(-1)};
    auto pub = pr.publish(w);
    auto ans = pr.answer(pub, {1.0, 2.0, 4.0});
    auto keys = pr.keys(w, pub);
    double dec = pr.decode(w, pub, ans);
    v.check("pm1/improved n=3 publishes [-1]", pub.size() == 1 && pub[0].value() == -1);
    v.check("pm1/improved n=3 answers = (-1, 4)",
            ans.size() == 2 && close1e9(ans[0], -1.0) && close1e9(ans[1], 4.0));
    v.check("pm1/improved n=3 keys = (-1, -1)",
            keys.size() == 2 && keys[0].value() == -1 && keys[1].value() == -1);
    v.check("pm1/improved n=3 decode = -3", close1e9(dec, -3.0));
  }
  {
    Pm1Protocol pr(Pm1Variant::random_key_improved, Partition::contiguous(4, 1));
    Pm1Vec w = {Pm1(1), Pm1(1), Pm1(1), Pm1(1)};
    auto pub = pr.publish(w);
    bool ones = pub.size() == 3;
    for (auto b : pub) ones = ones && b.value() == 1;
    v.check("pm1/improved all-ones w publishes [1,1,1]", ones);
  }
  {
    Pm1Protocol pr(Pm1Variant::random_key_improved, Partition::contiguous(7, 3));
    v.check("pm1/improved n=7 t=3 publication cost (4, 4)", pr.d_bits() == 4);
  }
}

void verify_joint(Verifier& v) {
  FieldPartition fp = field_partition(4, 4);
  auto sorted_bits = [](const std::vector<Gf2mElem>& es) {
    std::vector<unsigned> b;
    for (const auto& e : es) b.push_back(static_cast<unsigned>(e.bits));
    std::sort(b.begin(), b.end());
    return b;
  };
  v.check("field/m=4 q=4 coset F1 = {0,3,12,15}",
          sorted_bits(fp.cosets[0]) == std::vector<unsigned>({0, 3, 12, 15}));
  v.check("field/m=4 q=4 coset F2 = {1,2,13,14}",
          sorted_bits(fp.cosets[1]) == std::vector<unsigned>({1, 2, 13, 14}));
  v.check("field/m=4 q=4 coset F3 = {4,7,8,11}",
          sorted_bits(fp.cosets[2]) == std::vector<unsigned>({4, 7, 8, 11}));
  v.check("field/m=4 q=4 coset F4 = {5,6,9,10}",
          sorted_bits(fp.cosets[3]) == std::vector<unsigned>({5, 6, 9, 10}));
  {
    Gf2mElem e = Gf2mElem::zero(4);
    e.bits = 9;  // entries (-1, +1, +1, -1)
    v.check("field/classify [-1,+1,+1,-1] -> F4", classify_element(e, fp) == 4);
  }

  // Nine-entry worked example over F_16.
  std::vector<Gf2mElem> w = elems_from_bits({3, 0, 9, 8, 10, 5, 1, 13, 12}, 4);
  v.check("joint/n=9 entries 3,5,6 share coset F4",
          classify_element(w[2], fp) == 4 && classify_element(w[4], fp) == 4 &&
              classify_element(w[5], fp) == 4);
  Partition good = good_partition(w, 5, fp);
  Partition expected = Partition::from_blocks(9, {{0, 1}, {2, 4, 5}, {3}, {6, 7}, {8}});
  v.check("joint/n=9 deterministic good partition = {1,2},{3,5,6},{4},{7,8},{9}", good == expected);
  v.check("joint/n=9 deterministic partition is good", is_good_partition(good, w, fp));
  // The originally stated block {4,7} mixes two cosets (entry 4 sits in F3,
  // entry 7 in F2); the validity predicate must reject it. Documented erratum.
  Partition claimed = Partition::from_blocks(9, {{0, 8}, {1}, {2, 4, 5}, {3, 6}, {7}});
  v.check("joint/n=9 stated partition with block {4,7} is rejected (erratum)",
          !is_good_partition(claimed, w, fp));

  v.check("joint/n=9 S(9,5) = 6951", stirling2(9, 5) == 6951);
  v.check("joint/n=9 partition rank width = 13 bits", partition_rank_bits(9, 5) == 13);

  {
    JointConfig cfg{9, 4, 5, 4};
    std::vector<double> x = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    RunResult r = run_joint(cfg, w, {x});
    v.check("joint/n=9 publication d = 16 + 13 = 29 bits", r.tr.d_bits() == 29);
    Pm1Matrix W = field_image(w, 4);
    bool match = r.tr.users.size() == 1 && r.tr.users[0].decoded.re.size() == 4;
    for (int i = 0; match && i < 4; ++i) {
      double direct = 0;
      for (int j = 0; j < 9; ++j) direct += W.at(i, j).value() * x[j];
      match = close1e9(r.tr.users[0].decoded.re[i], direct);
    }
    v.check("joint/n=9 decode = Wx^T", match);
  }

  // Two-entry hand trace over F_4.
  {
    JointConfig cfg{2, 2, 1, 1};
    JointProtocol jp(cfg, Partition::contiguous(2, 1));
    std::vector<Gf2mElem> w2 = elems_from_bits({0, 3}, 2);
    auto syn = jp.syndrome(w2);
    v.check("joint/m=2 syndrome = [-1,-1]", syn.size() == 1 && syn[0].bits == 3);
    auto u = jp.shift(syn);
    v.check("joint/m=2 shift u = ([-1,-1],[+1,+1])",
            u.size() == 2 && u[0].bits == 3 && u[1].bits == 0);
    auto keys = jp.keys(w2, u);
    v.check("joint/m=2 key = [-1,-1]", keys.size() == 1 && keys[0].bits == 3);
    auto ans = jp.answer(syn, {1.0, 2.0});
    v.check("joint/m=2 answer = {1.0}",
            ans.values.size() == 1 && ans.values[0].size() == 1 && close1e9(ans.values[0][0], 1.0));
    auto dec = jp.decode(w2, syn, ans);
    v.check("joint/m=2 decode = [-1,-1]",
            dec.size() == 2 && close1e9(dec[0], -1.0) && close1e9(dec[1], -1.0));
  }
}

void verify_sets(Verifier& v) {
  {
    FiniteSet A = parse_set("-3,-1,1,3");
    Classification c = classify_set(A);
    v.check("sets/C({-3,-1,1,3}) = 2", c.certificate.theta == 2);
    v.check("sets/{-3,-1,1,3} classified perfect", c.cls == SetClass::perfect);
  }
  {
    FiniteSet A = parse_set("-2,0,1,2");
    Classification c = classify_set(A);
    v.check("sets/C({-2,0,1,2}) = 3", c.certificate.theta == 3);
    v.check("sets/{-2,0,1,2} classified hard", c.cls == SetClass::hard);
    CoefficientVector cv = coefficient_vector(A);
    v.check("sets/{-2,0,1,2} Hadamard lambda = (1/4, -3/4, -5/4, -1/4)",
            cv.lambda == std::vector<Rational>({Rational(1, 4), Rational(-3, 4), Rational(-5, 4),
                                                 Rational(-1, 4)}) &&
                cv.gamma == 3);
    Dictionary d = hadamard_dictionary(A);
    bool exact = true;
    for (int i = 0; i < 4; ++i) {
      Rational s = 0;
      for (int j = 0; j < 4; ++j) s += Rational(d.matrix.at(i, j).value()) * d.coefficients[j];
      exact = exact && s == A.elements[i];
    }
    v.check("sets/H lambda^T = vec(A) exact", exact);
  }
}

void verify_hard(Verifier& v) {
  FiniteSet A = parse_set("1,2,3,4,5,6,7,8");
  HardProtocol hp(A, Partition::contiguous(4, 1));
  std::vector<Rational> w = {2, 3, 4, 5};  // sorted elements #2..#5
  Pm1Matrix W = hp.decompose(w);
  auto row_is = [&](const Pm1Matrix& M, int r, std::vector<int> want) {
    if (M.cols != static_cast<int>(want.size())) return false;
    for (int j = 0; j < M.cols; ++j)
      if (M.at(r, j).value() != want[j]) return false;
    return true;
  };
  v.check("hard/H8 row 4 = [1,1,1,-1]", row_is(W, 4, {1, 1, 1, -1}));
  v.check("hard/H8 row 6 = [1,-1,-1,-1]", row_is(W, 6, {1, -1, -1, -1}));
  v.check("hard/H8 row 7 = [-1,-1,1,-1]", row_is(W, 7, {-1, -1, 1, -1}));

  auto tails = hp.publish(W);
  auto tail_is = [&](int i, std::vector<int> want) {
    if (tails[i].size() != want.size()) return false;
    for (size_t j = 0; j < want.size(); ++j)
      if (tails[i][j].value() != want[j]) return false;
    return true;
  };
  v.check("hard/H8 publishes [1,1,-1]", tails.size() == 3 && tail_is(0, {1, 1, -1}));
  v.check("hard/H8 publishes [-1,-1,-1]", tail_is(1, {-1, -1, -1}));
  v.check("hard/H8 publishes [1,-1,1]", tail_is(2, {1, -1, 1}));

  Pm1Matrix What = hp.user_expand(tails);
  v.check("hard/H8 expanded row 5 = [1,-1,1,1]", row_is(What, 5, {1, -1, 1, 1}));
  bool negated = true;
  for (int j = 0; j < 4; ++j) negated = negated && W.at(5, j).value() == -What.at(5, j).value();
  v.check("hard/H8 masked row 5 = -(true row 5)", negated);
  std::vector<double> x = {1.0, 0.5, -2.0, 3.0};
  double wx5 = 0, wh5 = 0;
  for (int j = 0; j < 4; ++j) {
    wx5 += W.at(5, j).value() * x[j];
    wh5 += What.at(5, j).value() * x[j];
  }
  v.check("hard/H8 w5.x = -(expanded row 5).x", close1e9(wx5, -wh5));

  auto ans = hp.answer(What, x);
  double dec = hp.decode(W, ans);
  double direct = 0;
  for (int j = 0; j < 4; ++j) direct += w[j].get_d() * x[j];
  v.check("hard/H8 decode = wx^T", close1e9(dec, direct));
}

void verify_rou(Verifier& v) {
  {
    RouProtocol rp(4, Partition::contiguous(2, 1));
    std::vector<int> w = {1, 2};  // (i, -1)
    auto pub = rp.publish(w);
    v.check("rou/p=4 publishes exponent [1] (= i)", pub == std::vector<int>({1}));
    auto ans = rp.answer(pub, {{1.0, 0.0}, {2.0, 0.0}});
    v.check("rou/p=4 answer = 1 + 2i",
            ans.size() == 1 && close1e9(ans[0].real(), 1.0) && close1e9(ans[0].imag(), 2.0));
    auto dec = rp.decode(w, ans);
    v.check("rou/p=4 decode = -2 + i", close1e9(dec.real(), -2.0) && close1e9(dec.imag(), 1.0));
  }
  {
    RouProtocol rp(3, Partition::contiguous(4, 2));
    v.check("rou/p=3 n=4 t=2 costs (4 bits, 2*log2(3))",
            rp.d_bits() == 4 && std::abs(rp.d_info() - 2 * std::log2(3.0)) <= 1e-12);
  }
  {
    RouProtocol rp(3, Partition::contiguous(3, 1));
    std::vector<int> w = TernaryCodec::encode({0, 1, -1});
    v.check("zpm1/encode(0,1,-1) = exponents (0,1,2)", w == std::vector<int>({0, 1, 2}));
    auto pub = rp.publish(w);
    std::vector<std::complex<double>> x = {{5.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}};
    auto ans = rp.answer(pub, x);
    v.check("zpm1/answer = 3.5 - (sqrt(3)/2) i",
            ans.size() == 1 && close1e9(ans[0].real(), 3.5) &&
                close1e9(ans[0].imag(), -std::sqrt(3.0) / 2.0));
    double dec = TernaryCodec::decode(rp.decode(w, ans));
    v.check("zpm1/decode = -1", close1e9(dec, -1.0));
  }
}

void verify_mi(Verifier& v) {
  v.check("mi/pm1-coset n=3 t=2 -> 1.0",
          mutual_information(ProtocolId::pm1_coset, 3, 2) == 1.0);
  v.check("mi/joint m=2 n=2 t=1 -> 2.0",
          mutual_information(ProtocolId::joint, 2, 1, 2, 1) == 2.0);
}

int cmd_verify() {
  Verifier v;
  verify_pm1(v);
  verify_joint(v);
  verify_sets(v);
  verify_hard(v);
  verify_rou(v);
  verify_mi(v);
  if (v.failures) {
    std::cout << v.failures << " mismatch(es)\n";
    return 1;
  }
  std::cout << "all examples match\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Private inner-product retrieval: protocol simulator and privacy accountant"};
  app.require_subcommand(1);

  RunOpts o;
  std::function<int()> action;
  std::string scan_protocol;

  auto* coset = app.add_subcommand("pm1-coset", "syndrome protocol for {+1,-1} weights");
  coset->add_option("--n", o.n, "vector length")->check(CLI::PositiveNumber);
  coset->add_option("--t", o.t, "block count")->check(CLI::PositiveNumber);
  add_common(coset, o);
  coset->callback([&] { action = [&] { return cmd_pm1(o, Pm1Variant::coset); }; });

  auto* randkey = app.add_subcommand("pm1-randkey", "random-key protocol for {+1,-1} weights");
  randkey->add_option("--n", o.n, "vector length")->check(CLI::PositiveNumber);
  randkey->add_option("--t", o.t, "block count")->check(CLI::PositiveNumber);
  randkey->add_flag("--basic", o.basic, "publish full-length masked copies (n bits) instead of tails");
  add_common(randkey, o);
  randkey->callback([&] {
    action = [&] {
      return cmd_pm1(o, o.basic ? Pm1Variant::random_key_basic : Pm1Variant::random_key_improved);
    };
  });

  auto* joint = app.add_subcommand("joint", "joint retrieval of m sign rows over GF(2^m)");
  joint->add_option("--n", o.n, "vector length")->check(CLI::PositiveNumber);
  joint->add_option("--t", o.t, "block count")->check(CLI::PositiveNumber);
  joint->add_option("--m", o.m, "field degree")->check(CLI::Range(1, 16));
  joint->add_option("--q", o.q, "coset count (power of two; default: largest valid)");
  add_common(joint, o);
  joint->callback([&] { action = [&] { return cmd_joint(o); }; });

  auto* perfect = app.add_subcommand("perfect", "weights over a perfect alphabet via joint retrieval");
  perfect->add_option("--n", o.n, "vector length")->check(CLI::PositiveNumber);
  perfect->add_option("--t", o.t, "block count")->check(CLI::PositiveNumber);
  perfect->add_option("--q", o.q, "coset count (power of two; default: largest valid)");
  perfect->add_option("--set", o.set_csv, "alphabet (csv rationals; default -3,-1,1,3)");
  add_common(perfect, o);
  perfect->callback([&] { action = [&] { return cmd_perfect(o); }; });

  auto* hard = app.add_subcommand("hard", "Hadamard-dictionary protocol for power-of-two alphabets");
  hard->add_option("--n", o.n, "vector length")->check(CLI::PositiveNumber);
  hard->add_option("--t", o.t, "block count")->check(CLI::PositiveNumber);
  hard->add_option("--set", o.set_csv, "alphabet (csv rationals; default -2,0,1,2)");
  add_common(hard, o);
  hard->callback([&] { action = [&] { return cmd_hard(o); }; });

  auto* rou = app.add_subcommand("rou", "weights over p-th roots of unity, complex data");
  rou->add_option("--n", o.n, "vector length")->check(CLI::PositiveNumber);
  rou->add_option("--t", o.t, "block count")->check(CLI::PositiveNumber);
  rou->add_option("--p", o.p, "root order")->check(CLI::Range(1, 65536));
  add_common(rou, o);
  rou->callback([&] { action = [&] { return cmd_rou(o); }; });

  auto* zpm1 = app.add_subcommand("zpm1", "{0,+1,-1} weights via third roots of unity");
  zpm1->add_option("--n", o.n, "vector length")->check(CLI::PositiveNumber);
  zpm1->add_option("--t", o.t, "block count")->check(CLI::PositiveNumber);
  add_common(zpm1, o);
  zpm1->callback([&] { action = [&] { return cmd_zpm1(o); }; });

  auto* cx = app.add_subcommand("complexity", "coefficient complexity and classification of an alphabet");
  cx->add_option("--set", o.set_csv, "alphabet (csv rationals)")->required();
  cx->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  cx->callback([&] { action = [&] { return cmd_complexity(o); }; });

  auto* scan = app.add_subcommand("privacy-scan", "sweep t = 1..n and report the (I, ell, d) frontier");
  scan->add_option("--protocol", scan_protocol, "protocol to sweep")
      ->required()
      ->check(CLI::IsMember({"pm1-coset", "pm1-randkey", "pm1-randkey-basic", "joint", "perfect",
                             "hard", "rou", "zpm1"}));
  scan->add_option("--n", o.n, "vector length")->check(CLI::PositiveNumber);
  scan->add_option("--m", o.m, "field degree (joint)")->check(CLI::Range(1, 16));
  scan->add_option("--q", o.q, "coset count (joint/perfect; default per t)");
  scan->add_option("--p", o.p, "root order (rou)")->check(CLI::Range(1, 65536));
  scan->add_option("--set", o.set_csv, "alphabet (perfect/hard)");
  add_common(scan, o);
  scan->callback([&] { action = [&] { return cmd_privacy_scan(o, scan_protocol); }; });

  auto* verify = app.add_subcommand("verify-examples", "replay the built-in known-answer examples");
  verify->callback([&] { action = [&] { return cmd_verify(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const qpi::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
