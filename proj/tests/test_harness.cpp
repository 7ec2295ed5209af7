#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qpi/error.hpp"
#include "qpi/harness.hpp"
#include "qpi/report.hpp"
#include "qpi/transcript.hpp"

using namespace qpi;

namespace {

const CheckRecord& find_check(const PrivacyReport& rep, const std::string& name) {
  for (const CheckRecord& c : rep.checks)
    if (c.name == name) return c;
  throw std::logic_error("missing check: " + name);
}

FiniteSet hard4() { return FiniteSet::from_values({-2, 0, 1, 2}); }
FiniteSet perfect4() { return FiniteSet::from_values({-3, -1, 1, 3}); }

}  // namespace

TEST_CASE("seeded generators reproduce their output exactly") {
  std::mt19937_64 a(99), b(99);
  CHECK(gaussian_vector(8, a) == gaussian_vector(8, b));
  CHECK(gaussian_cvector(8, a) == gaussian_cvector(8, b));
  CHECK(random_pm1_vector(16, a) == random_pm1_vector(16, b));
  auto fa = random_field_vector(6, 4, a), fb = random_field_vector(6, 4, b);
  REQUIRE(fa.size() == fb.size());
  for (size_t i = 0; i < fa.size(); ++i) CHECK(fa[i].bits == fb[i].bits);
  FiniteSet sa = random_rational_set(8, a), sb = random_rational_set(8, b);
  CHECK(sa.elements == sb.elements);
  CHECK(random_alphabet_vector(sa, 5, a) == random_alphabet_vector(sb, 5, b));
  CHECK(random_exponents(10, 8, a) == random_exponents(10, 8, b));
  CHECK(random_ternary(10, a) == random_ternary(10, b));
}

TEST_CASE("measured I(W;Q) equals n - t for every sign-protocol variant") {
  for (int n = 1; n <= 5; ++n) {
    for (int t = 1; t <= n; ++t) {
      CHECK(mutual_information(ProtocolId::pm1_coset, n, t) == static_cast<double>(n - t));
      CHECK(mutual_information(ProtocolId::pm1_improved, n, t) == static_cast<double>(n - t));
      if (n <= 4)
        CHECK(mutual_information(ProtocolId::pm1_random_key, n, t) == static_cast<double>(n - t));
    }
  }
}

TEST_CASE("measured I(W;Q) equals m(n - t) for the field and dictionary protocols") {
  for (int m : {2, 3}) {
    for (int n = 1; n <= 3; ++n) {
      for (int t = 1; t <= n; ++t) {
        CHECK(mutual_information(ProtocolId::joint, n, t, m, 1) ==
              static_cast<double>(m * (n - t)));
        CHECK(mutual_information(ProtocolId::hard, n, t, m) == static_cast<double>(m * (n - t)));
      }
    }
  }
  // the perfect wrapper publishes exactly the joint protocol's query
  CHECK(mutual_information(ProtocolId::perfect, 3, 1, 2, 1) == 4.0);
  CHECK(mutual_information(ProtocolId::joint, 4, 2, 2, 2) == 4.0);
}

TEST_CASE("measured I(W;Q) equals (n - t) log2 p for the root-of-unity protocols") {
  for (int n = 1; n <= 4; ++n) {
    for (int t = 1; t <= n; ++t) {
      for (int p : {2, 4, 8})
        CHECK(mutual_information(ProtocolId::rou, n, t, 0, 0, p) ==
              (n - t) * std::log2(static_cast<double>(p)));
      double three = mutual_information(ProtocolId::rou, n, t, 0, 0, 3);
      CHECK(std::abs(three - (n - t) * std::log2(3.0)) <= 1e-12);
      CHECK(mutual_information(ProtocolId::zpm1, n, t) == three);
    }
  }
}

TEST_CASE("enumeration budget and parameter validation") {
  CHECK_THROWS_AS(mutual_information(ProtocolId::pm1_coset, 25, 2), BudgetExceeded);
  CHECK_THROWS_AS(mutual_information(ProtocolId::pm1_random_key, 20, 10), BudgetExceeded);
  CHECK_THROWS_AS(mutual_information(ProtocolId::joint, 8, 2, 4, 4), BudgetExceeded);
  CHECK_THROWS_AS(mutual_information(ProtocolId::hard, 13, 2, 2), BudgetExceeded);
  CHECK_THROWS_AS(mutual_information(ProtocolId::rou, 9, 2, 0, 0, 8), BudgetExceeded);
  CHECK_THROWS_AS(mutual_information(ProtocolId::joint, 3, 1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(mutual_information(ProtocolId::rou, 3, 1), std::invalid_argument);
}

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(std::abs(binary_entropy(0.25) - 0.8112781244591328) <= 1e-15);
  CHECK(std::abs(binary_entropy(0.75) - binary_entropy(0.25)) <= 1e-15);
  CHECK_THROWS_AS(binary_entropy(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(binary_entropy(1.1), std::invalid_argument);
}

TEST_CASE("analyze: sign protocol attains the tradeoff and the cost bound") {
  std::mt19937_64 rng(301);
  RunResult r = run_pm1_random(Pm1Variant::coset, 6, 2, 1, rng);
  PrivacyReport rep = analyze(r, true);
  CHECK(rep.mi_measured);
  CHECK(rep.mi_bits == 4.0);
  for (const char* name : {"tradeoff_worst", "tradeoff_rank", "cost_bound"}) {
    const CheckRecord& c = find_check(rep, name);
    CHECK(c.satisfied);
    CHECK(c.attained);
  }
  PrivacyReport formula = analyze(r, false);
  CHECK(!formula.mi_measured);
  CHECK(formula.mi_bits == rep.mi_bits);
}

TEST_CASE("analyze: root-of-unity protocol attains, ternary protocol is strict") {
  std::mt19937_64 rng(302);
  PrivacyReport rou = analyze(run_rou_random(4, 6, 2, 1, rng), true);
  CHECK(rou.mi_bits == 8.0);
  CHECK(find_check(rou, "tradeoff_worst").attained);
  CHECK(find_check(rou, "cost_bound").attained);

  PrivacyReport z = analyze(run_zpm1_random(5, 2, 1, rng), true);
  const CheckRecord& tz = find_check(z, "tradeoff_worst");
  CHECK(tz.satisfied);
  CHECK(!tz.attained);
  CHECK(tz.margin > 1.0);  // (n + t) log2(3) vs n log2(3) at t = 2
  CHECK(find_check(z, "cost_bound").satisfied);
}

TEST_CASE("analyze: joint protocol attains exactly when q = 2^(m-1)") {
  std::mt19937_64 rng(303);
  PrivacyReport best = analyze(run_joint_random(6, 3, 4, 4, 1, rng), true);
  CHECK(best.mi_bits == 6.0);
  CHECK(find_check(best, "tradeoff_worst").attained);
  CHECK(find_check(best, "cost_entropy_bound").satisfied);

  PrivacyReport loose = analyze(run_joint_random(6, 3, 4, 1, 1, rng), true);
  const CheckRecord& tw = find_check(loose, "tradeoff_worst");
  CHECK(tw.satisfied);
  CHECK(!tw.attained);
  CHECK(find_check(loose, "cost_entropy_bound").satisfied);
}

TEST_CASE("analyze: dictionary protocol is strictly above the tradeoff line") {
  std::mt19937_64 rng(304);
  PrivacyReport rep = analyze(run_hard_random(hard4(), 4, 2, 1, rng), false);
  CHECK(rep.mi_bits == 4.0);  // m(n - t)
  CHECK(rep.ell_worst == 7);  // gamma*t + 1 with gamma = 3
  const CheckRecord& tw = find_check(rep, "tradeoff_worst");
  CHECK(tw.satisfied);
  CHECK(!tw.attained);
  CHECK(tw.margin > 1.0);
}

TEST_CASE("transcript: frozen wire image") {
  Transcript tr;
  tr.protocol = ProtocolId::pm1_coset;
  tr.n = 2;
  tr.t = 1;
  tr.m = 1;
  tr.set = {Rational(-1), Rational(1)};
  tr.query_bits = {1};
  Transcript::UserSection u;
  u.answers.re = {1.0};
  u.decoded.re = {1.0};
  u.direct.re = {1.0};
  tr.users.push_back(u);

  const std::vector<uint8_t> want = {
      'Q', 'P', 'I', '1',                              // magic
      0x01,                                            // protocol id
      0x02, 0x00, 0x01, 0x00, 0x01, 0x00,              // n, t, m
      0x00, 0x00, 0x00, 0x00,                          // q, p
      0x02, 0x00,                                      // set size
      0xff, 0xff, 0x01, 0x00,                          // -1/1
      0x01, 0x00, 0x01, 0x00,                          // +1/1
      0x01, 0x00,                                      // one user
      0x01, 0x00, 0x00, 0x00, 0x80,                    // 1 query bit, MSB-first
      0x01, 0x00, 0x00, 0x00, 0x00,                    // answers: 1 real value
      0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0xf0, 0x3f,  // 1.0
      0x01, 0x00, 0x00, 0x00, 0x00,                    // decoded
      0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0xf0, 0x3f,
      0x01, 0x00, 0x00, 0x00, 0x00,                    // direct
      0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0xf0, 0x3f,
  };
  std::vector<uint8_t> got = tr.serialize();
  CHECK(got == want);

  // payload = everything after magic/id/params/set/user-count
  std::vector<uint8_t> payload = tr.payload_bytes();
  CHECK(std::vector<uint8_t>(got.begin() + 27, got.end()) == payload);

  Transcript back = Transcript::parse(got);
  CHECK(back.protocol == ProtocolId::pm1_coset);
  CHECK(back.n == 2);
  CHECK(back.t == 1);
  CHECK(back.m == 1);
  CHECK(back.q == 0);
  CHECK(back.p == 0);
  CHECK(back.set == tr.set);
  CHECK(back.query_bits == tr.query_bits);
  REQUIRE(back.users.size() == 1);
  CHECK(back.users[0].answers.re == u.answers.re);
  CHECK(!back.users[0].answers.complex_values);
  CHECK(back.serialize() == got);
}

TEST_CASE("transcript: parse rejects malformed input") {
  Transcript tr;
  tr.protocol = ProtocolId::rou;
  tr.n = 2;
  tr.t = 1;
  tr.p = 4;
  tr.set = {Rational(1, 2)};
  tr.query_bits = {1, 0, 1};
  Transcript::UserSection u;
  u.answers.complex_values = u.decoded.complex_values = u.direct.complex_values = true;
  u.answers.re = {0.5};
  u.answers.im = {-2.0};
  u.decoded.re = {1.5};
  u.decoded.im = {0.0};
  u.direct.re = {1.5};
  u.direct.im = {0.0};
  tr.users.push_back(u);
  std::vector<uint8_t> ok = tr.serialize();
  Transcript round = Transcript::parse(ok);
  CHECK(round.serialize() == ok);
  CHECK(round.users[0].answers.im == u.answers.im);

  auto bad = ok;
  bad[3] = '2';
  CHECK_THROWS_AS(Transcript::parse(bad), std::invalid_argument);  // magic
  bad = ok;
  bad[4] = 99;
  CHECK_THROWS_AS(Transcript::parse(bad), std::invalid_argument);  // protocol id
  bad = ok;
  bad.pop_back();
  CHECK_THROWS_AS(Transcript::parse(bad), std::invalid_argument);  // truncated
  bad = ok;
  bad.push_back(0);
  CHECK_THROWS_AS(Transcript::parse(bad), std::invalid_argument);  // trailing bytes
  bad = ok;
  bad[19] = bad[20] = 0;  // set element denominator -> 0
  CHECK_THROWS_AS(Transcript::parse(bad), std::invalid_argument);
  CHECK_THROWS_AS(Transcript::parse({}), std::invalid_argument);

  Transcript wide = tr;
  wide.n = 70000;
  CHECK_THROWS_AS(wide.serialize(), std::invalid_argument);
  Transcript coarse = tr;
  coarse.set = {Rational(40000)};
  CHECK_THROWS_AS(coarse.serialize(), std::invalid_argument);
}

TEST_CASE("transcript: every protocol family round-trips") {
  std::mt19937_64 rng(305);
  std::vector<RunResult> runs;
  runs.push_back(run_pm1_random(Pm1Variant::coset, 7, 3, 2, rng));
  runs.push_back(run_pm1_random(Pm1Variant::random_key_basic, 7, 3, 2, rng));
  runs.push_back(run_pm1_random(Pm1Variant::random_key_improved, 7, 3, 2, rng));
  runs.push_back(run_joint_random(5, 3, 3, 2, 2, rng));
  runs.push_back(run_perfect_random(perfect4(), 5, 3, 2, 2, rng));
  runs.push_back(run_hard_random(hard4(), 5, 2, 2, rng));
  runs.push_back(run_rou_random(8, 6, 2, 2, rng));
  runs.push_back(run_zpm1_random(6, 2, 2, rng));
  for (const RunResult& r : runs) {
    std::vector<uint8_t> bytes = r.tr.serialize();
    CHECK(Transcript::parse(bytes).serialize() == bytes);
  }
}

TEST_CASE("reports: json and csv carry identical rounded values") {
  std::mt19937_64 rng(306);
  std::vector<PrivacyReport> reps;
  reps.push_back(analyze(run_pm1_random(Pm1Variant::coset, 6, 2, 1, rng), false));
  reps.push_back(analyze(run_zpm1_random(5, 2, 1, rng), false));
  std::string js = emit_json(reps);
  std::string cs = emit_csv(reps);
  CHECK(emit_json(reps) == js);  // emission is deterministic
  CHECK(emit_csv(reps) == cs);

  nlohmann::json root = nlohmann::json::parse(js);
  REQUIRE(root["reports"].size() == reps.size());
  std::vector<std::string> lines;
  {
    size_t start = 0;
    while (start < cs.size()) {
      size_t end = cs.find('\n', start);
      lines.push_back(cs.substr(start, end - start));
      start = end + 1;
    }
  }
  size_t expected_rows = 1;
  for (const auto& r : reps) expected_rows += std::max<size_t>(1, r.checks.size());
  CHECK(lines.size() == expected_rows);
  CHECK(lines[0].rfind("protocol,n,t,", 0) == 0);

  size_t row = 1;
  for (size_t i = 0; i < reps.size(); ++i) {
    const auto& j = root["reports"][i];
    CHECK(j["protocol"] == reps[i].protocol);
    CHECK(j["mi_bits"].get<double>() == round12(reps[i].mi_bits));
    CHECK(j["d_info"].get<double>() == round12(reps[i].d_info));
    CHECK(j["checks"].size() == reps[i].checks.size());
    for (size_t k = 0; k < reps[i].checks.size(); ++k, ++row) {
      const auto& cj = j["checks"][k];
      CHECK(cj["margin"].get<double>() == round12(reps[i].checks[k].margin));
      // the csv row for this check carries the same rounded margin text
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.12g", round12(reps[i].checks[k].margin));
      CHECK(lines[row].find(std::string(",") + buf + ",") != std::string::npos);
    }
  }
}

TEST_CASE("round12 is idempotent and keeps 12 significant digits") {
  std::mt19937_64 rng(307);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 200; ++i) {
    double v = u(rng);
    CHECK(round12(round12(v)) == round12(v));
    CHECK(std::abs(round12(v) - v) <= 1e-11 * (1.0 + std::abs(v)));
  }
  CHECK(round12(1.0 / 3.0) == 0.333333333333);
  CHECK(round12(0.0) == 0.0);
  CHECK(round12(-2.5) == -2.5);
}

TEST_CASE("identical seeds give bit-identical transcripts and reports") {
  for (int rep = 0; rep < 2; ++rep) {
    std::mt19937_64 a(777), b(777);
    auto ra = run_joint_random(6, 3, 4, 4, 2, a);
    auto rb = run_joint_random(6, 3, 4, 4, 2, b);
    CHECK(ra.tr.serialize() == rb.tr.serialize());
    CHECK(emit_json({analyze(ra, false)}) == emit_json({analyze(rb, false)}));

    auto ha = run_hard_random(hard4(), 5, 2, 2, a);
    auto hb = run_hard_random(hard4(), 5, 2, 2, b);
    CHECK(ha.tr.serialize() == hb.tr.serialize());

    auto za = run_zpm1_random(6, 3, 2, a);
    auto zb = run_zpm1_random(6, 3, 2, b);
    CHECK(za.tr.serialize() == zb.tr.serialize());
    CHECK(emit_csv({analyze(za, true)}) == emit_csv({analyze(zb, true)}));
  }
}
