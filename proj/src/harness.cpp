#include "qpi/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

#include "qpi/error.hpp"
#include "qpi/hadamard.hpp"
#include "qpi/proto_hard.hpp"
#include "qpi/proto_rou.hpp"

namespace qpi {

namespace {

constexpr double kTol = 1e-9;

void check_close(double got, double want, const char* step) {
  if (!(std::abs(got - want) <= kTol * (1.0 + std::abs(want)))) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s: decode %.17g != direct %.17g", step, got, want);
    throw std::logic_error(buf);
  }
}

void check_close(std::complex<double> got, std::complex<double> want, const char* step) {
  if (!(std::abs(got - want) <= kTol * (1.0 + std::abs(want))))
    throw std::logic_error(std::string(step) + ": complex decode mismatch");
}

std::vector<uint8_t> pm1_bits(const std::vector<Pm1>& v) {
  std::vector<uint8_t> out;
  out.reserve(v.size());
  for (Pm1 b : v) out.push_back(b.bit() ? 1 : 0);
  return out;
}

/* Rank of exact-rational projection rows. */
int projection_rank(const RationalMatrix& rows) { return rows.rank(); }

double direct_real(const std::vector<double>& coeff, const std::vector<double>& x) {
  double s = 0;
  for (size_t j = 0; j < coeff.size(); ++j) s += coeff[j] * x[j];
  return s;
}

}  // namespace

std::vector<double> gaussian_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> out(n);
  for (double& v : out) v = g(rng);
  return out;
}

std::vector<std::complex<double>> gaussian_cvector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<std::complex<double>> out(n);
  for (auto& v : out) {
    double re = g(rng), im = g(rng);
    v = {re, im};
  }
  return out;
}

Pm1Vec random_pm1_vector(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> b(0, 1);
  Pm1Vec out(n);
  for (Pm1& v : out) v = Pm1::from_bit(b(rng));
  return out;
}

std::vector<Gf2mElem> random_field_vector(int n, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> b(0, (1u << m) - 1);
  std::vector<Gf2mElem> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(Gf2mElem(m, b(rng)));
  return out;
}

std::vector<Rational> random_alphabet_vector(const FiniteSet& A, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(0, A.size() - 1);
  std::vector<Rational> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(A.elements[k(rng)]);
  return out;
}

std::vector<int> random_exponents(int n, int p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(0, p - 1);
  std::vector<int> out(n);
  for (int& v : out) v = k(rng);
  return out;
}

std::vector<int> random_ternary(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(-1, 1);
  std::vector<int> out(n);
  for (int& v : out) v = k(rng);
  return out;
}

FiniteSet random_rational_set(int size, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-24, 24);
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<Rational> vals;
  while (static_cast<int>(vals.size()) < size) {
    Rational v(num(rng), den(rng));
    v.canonicalize();
    if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
  }
  return FiniteSet::from_values(std::move(vals));
}

RunResult run_pm1(Pm1Variant v, const Partition& part, const Pm1Vec& w,
                  const std::vector<std::vector<double>>& xs, std::mt19937_64& rng) {
  Pm1Protocol proto(v, part);
  std::vector<Pm1> keys;
  if (v == Pm1Variant::random_key_basic) {
    std::uniform_int_distribution<int> b(0, 1);
    for (int i = 0; i < proto.t(); ++i) keys.push_back(Pm1::from_bit(b(rng)));
  }
  std::vector<Pm1> pub = proto.publish(w, keys);

  RunResult r;
  r.partition = part;
  r.tr.protocol = v == Pm1Variant::coset          ? ProtocolId::pm1_coset
                  : v == Pm1Variant::random_key_basic ? ProtocolId::pm1_random_key
                                                      : ProtocolId::pm1_improved;
  r.tr.n = part.n;
  r.tr.t = part.t();
  r.tr.m = 1;
  r.tr.set = {Rational(-1), Rational(1)};
  r.tr.query_bits = pm1_bits(pub);

  Pm1Vec u = proto.representative(pub);
  RationalMatrix proj(proto.t(), proto.n());
  for (int b = 0; b < proto.t(); ++b)
    for (int j : part.blocks[b]) proj.at(b, j) = Rational(u[j].value());
  r.ell_sent = proto.t();
  r.ell_rank = projection_rank(proj);
  r.ell_worst = proto.t();
  r.d_info = proto.d_bits();
  r.alphabet_bits = 1.0;
  r.mi_formula = proto.n() - proto.t();

  std::vector<double> w_real(w.size());
  for (size_t j = 0; j < w.size(); ++j) w_real[j] = w[j].value();
  for (const auto& x : xs) {
    std::vector<double> a = proto.answer(pub, x);
    double dec = proto.decode(w, pub, a);
    double dir = direct_real(w_real, x);
    check_close(dec, dir, "pm1 decode");
    Transcript::UserSection s;
    s.answers.re = a;
    s.decoded.re = {dec};
    s.direct.re = {dir};
    r.tr.users.push_back(std::move(s));
  }
  return r;
}

namespace {

/* Shared by the joint and perfect runners: everything from the encoded field
 * vector onward. */
RunResult run_joint_core(const JointConfig& cfg, const std::vector<Gf2mElem>& w,
                         const std::vector<std::vector<double>>& xs) {
  JointProtocol proto = JointProtocol::for_weights(cfg, w);
  std::vector<Gf2mElem> syn = proto.syndrome(w);

  RunResult r;
  r.partition = proto.part;
  r.tr.protocol = ProtocolId::joint;
  r.tr.n = cfg.n;
  r.tr.t = cfg.t;
  r.tr.m = cfg.m;
  r.tr.q = cfg.q;

  int rank_width = partition_rank_bits(cfg.n, cfg.t);
  mpz_class rank = partition_rank(proto.part);
  for (int k = rank_width - 1; k >= 0; --k)
    r.tr.query_bits.push_back(mpz_tstbit(rank.get_mpz_t(), k) ? 1 : 0);
  for (const Gf2mElem& e : syn)
    for (int k = 0; k < cfg.m; ++k) r.tr.query_bits.push_back((e.bits >> k) & 1u);

  std::vector<Gf2mElem> u = proto.shift(syn);
  if (!proto.exact_block_identity(w, syn)) throw std::logic_error("joint block identity failed");

  Pm1Matrix W = field_image(w, cfg.m);
  for (const auto& x : xs) {
    JointProtocol::Answer ans = proto.answer(syn, x);
    std::vector<double> dec = proto.decode(w, syn, ans);
    Transcript::UserSection s;
    for (const auto& block_vals : ans.values)
      s.answers.re.insert(s.answers.re.end(), block_vals.begin(), block_vals.end());
    for (int i = 0; i < cfg.m; ++i) {
      double dir = 0;
      for (int j = 0; j < cfg.n; ++j) dir += W.at(i, j).value() * x[j];
      check_close(dec[i], dir, "joint decode");
      s.decoded.re.push_back(dec[i]);
      s.direct.re.push_back(dir);
    }
    r.tr.users.push_back(std::move(s));
  }

  // Projection accounting from the (user-side) answer structure.
  JointProtocol::Answer shape = proto.answer(syn, std::vector<double>(cfg.n, 0.0));
  int sent = 0;
  for (const auto& rows : shape.row_sets) sent += static_cast<int>(rows.size());
  RationalMatrix proj(sent, cfg.n);
  int row = 0;
  for (int b = 0; b < proto.part.t(); ++b) {
    Pm1Matrix U = proto.block_image(u, b);
    for (int ur : shape.row_sets[b]) {
      for (size_t c = 0; c < proto.part.blocks[b].size(); ++c)
        proj.at(row, proto.part.blocks[b][c]) = Rational(U.at(ur, static_cast<int>(c)).value());
      ++row;
    }
  }
  int logq = 0;
  while ((1 << logq) < cfg.q) ++logq;
  r.ell_sent = sent;
  r.ell_rank = projection_rank(proj);
  r.ell_worst = cfg.t * (cfg.m - logq);
  r.d_info = static_cast<double>(cfg.m) * (cfg.n - cfg.t) +
             std::log2(stirling2(cfg.n, cfg.t).get_d());
  r.alphabet_bits = cfg.m;
  r.mi_formula = static_cast<double>(cfg.m) * (cfg.n - cfg.t);
  return r;
}

}  // namespace

RunResult run_joint(const JointConfig& cfg, const std::vector<Gf2mElem>& w,
                    const std::vector<std::vector<double>>& xs) {
  return run_joint_core(cfg, w, xs);
}

RunResult run_perfect(const JointConfig& cfg, const FiniteSet& A, const std::vector<Rational>& w,
                      const std::vector<std::vector<double>>& xs) {
  PerfectCodec codec(A);
  if (codec.m != cfg.m) throw std::invalid_argument("config m must equal log2 |A|");
  std::vector<Gf2mElem> wf = codec.encode_field(w);
  RunResult r = run_joint_core(cfg, wf, xs);
  r.tr.protocol = ProtocolId::perfect;
  r.tr.set = A.elements;

  std::vector<double> w_real(w.size());
  for (size_t j = 0; j < w.size(); ++j) w_real[j] = w[j].get_d();
  for (size_t ui = 0; ui < xs.size(); ++ui) {
    Transcript::UserSection& s = r.tr.users[ui];
    double dec = codec.combine(s.decoded.re);
    double dir = direct_real(w_real, xs[ui]);
    check_close(dec, dir, "perfect decode");
    s.decoded.re = {dec};
    s.direct.re = {dir};
  }
  return r;
}

RunResult run_hard(const FiniteSet& A, const Partition& part, const std::vector<Rational>& w,
                   const std::vector<std::vector<double>>& xs) {
  HardProtocol proto(A, part);
  Pm1Matrix W = proto.decompose(w);
  std::vector<std::vector<Pm1>> tails = proto.publish(W);
  Pm1Matrix What = proto.user_expand(tails);

  RunResult r;
  r.partition = part;
  r.tr.protocol = ProtocolId::hard;
  r.tr.n = part.n;
  r.tr.t = part.t();
  r.tr.m = proto.m;
  r.tr.set = A.elements;
  for (const auto& tail : tails)
    for (Pm1 b : tail) r.tr.query_bits.push_back(b.bit() ? 1 : 0);

  std::vector<double> w_real(w.size());
  for (size_t j = 0; j < w.size(); ++j) w_real[j] = w[j].get_d();
  for (const auto& x : xs) {
    std::vector<double> a = proto.answer(What, x);
    double dec = proto.decode(W, a);
    double dir = direct_real(w_real, x);
    check_close(dec, dir, "hard decode");
    Transcript::UserSection s;
    s.answers.re = a;
    s.decoded.re = {dec};
    s.direct.re = {dir};
    r.tr.users.push_back(std::move(s));
  }

  int sent = static_cast<int>(proto.answer_rows.size()) * part.t() + 1;
  RationalMatrix proj(sent, part.n);
  int row = 0;
  for (int i : proto.answer_rows) {
    for (int b = 0; b < part.t(); ++b) {
      for (int j : part.blocks[b]) proj.at(row, j) = Rational(What.at(i, j).value());
      ++row;
    }
  }
  for (int j = 0; j < part.n; ++j) proj.at(row, j) = 1;
  r.ell_sent = sent;
  r.ell_rank = projection_rank(proj);
  r.ell_worst = proto.coeff.gamma * part.t() + 1;
  r.d_info = static_cast<double>(proto.m) * (part.n - part.t());
  r.alphabet_bits = proto.m;
  r.mi_formula = r.d_info;
  return r;
}

RunResult run_rou(int p, const Partition& part, const std::vector<int>& w_exponents,
                  const std::vector<std::vector<std::complex<double>>>& xs) {
  RouProtocol proto(p, part);
  std::vector<int> pub = proto.publish(w_exponents);

  RunResult r;
  r.partition = part;
  r.tr.protocol = ProtocolId::rou;
  r.tr.n = part.n;
  r.tr.t = part.t();
  r.tr.p = p;
  int bps = proto.bits_per_symbol();
  for (int sym : pub)
    for (int k = bps - 1; k >= 0; --k) r.tr.query_bits.push_back((sym >> k) & 1);

  for (const auto& x : xs) {
    std::vector<std::complex<double>> a = proto.answer(pub, x);
    std::complex<double> dec = proto.decode(w_exponents, a);
    std::complex<double> dir{0.0, 0.0};
    for (int j = 0; j < part.n; ++j) dir += RouProtocol::root(p, w_exponents[j]) * x[j];
    check_close(dec, dir, "rou decode");
    Transcript::UserSection s;
    s.answers.complex_values = s.decoded.complex_values = s.direct.complex_values = true;
    for (const auto& v : a) {
      s.answers.re.push_back(v.real());
      s.answers.im.push_back(v.imag());
    }
    s.decoded.re = {dec.real()};
    s.decoded.im = {dec.imag()};
    s.direct.re = {dir.real()};
    s.direct.im = {dir.imag()};
    r.tr.users.push_back(std::move(s));
  }

  /* Complex projections have pairwise disjoint supports and an exact unit
   * coefficient at each block head, so their rank over C is exactly t. */
  r.ell_sent = part.t();
  r.ell_rank = part.t();
  r.ell_worst = part.t();
  r.d_info = proto.d_info();
  r.alphabet_bits = std::log2(static_cast<double>(p));
  r.mi_formula = proto.d_info();
  return r;
}

RunResult run_zpm1(const Partition& part, const std::vector<int>& w_ternary,
                   const std::vector<std::vector<double>>& xs) {
  std::vector<int> exps = TernaryCodec::encode(w_ternary);
  RouProtocol proto(3, part);
  std::vector<int> pub = proto.publish(exps);

  RunResult r;
  r.partition = part;
  r.tr.protocol = ProtocolId::zpm1;
  r.tr.n = part.n;
  r.tr.t = part.t();
  r.tr.p = 3;
  r.tr.set = {Rational(-1), Rational(0), Rational(1)};
  for (int sym : pub)
    for (int k = 1; k >= 0; --k) r.tr.query_bits.push_back((sym >> k) & 1);

  std::vector<double> w_real(w_ternary.begin(), w_ternary.end());
  for (const auto& x : xs) {
    std::vector<std::complex<double>> xc(x.begin(), x.end());
    std::vector<std::complex<double>> a = proto.answer(pub, xc);
    double dec = TernaryCodec::decode(proto.decode(exps, a));
    double dir = direct_real(w_real, x);
    check_close(dec, dir, "zpm1 decode");
    Transcript::UserSection s;
    s.answers.complex_values = true;
    for (const auto& v : a) {
      s.answers.re.push_back(v.real());
      s.answers.im.push_back(v.imag());
    }
    s.decoded.re = {dec};
    s.direct.re = {dir};
    r.tr.users.push_back(std::move(s));
  }

  /* Per block the user reveals Re and Im of one complex projection of the
   * real data. Entries are exactly {1, -1/2} (Re) and {0, +-sqrt(3)/2} (Im);
   * the Im rows are scaled by 2/sqrt(3), which preserves rank and keeps the
   * arithmetic rational. */
  RationalMatrix proj(2 * part.t(), part.n);
  size_t pos = 0;
  for (int b = 0; b < part.t(); ++b) {
    const auto& blk = part.blocks[b];
    proj.at(2 * b, blk[0]) = 1;
    for (size_t c = 1; c < blk.size(); ++c) {
      int sym = pub[pos++];
      proj.at(2 * b, blk[c]) = sym == 0 ? Rational(1) : Rational(-1, 2);
      proj.at(2 * b + 1, blk[c]) = sym == 0 ? Rational(0) : (sym == 1 ? Rational(1) : Rational(-1));
    }
  }
  r.ell_sent = 2 * part.t();
  r.ell_rank = projection_rank(proj);
  r.ell_worst = 2 * part.t();
  r.d_info = proto.d_info();
  r.alphabet_bits = std::log2(3.0);
  r.mi_formula = proto.d_info();
  return r;
}

RunResult run_pm1_random(Pm1Variant v, int n, int t, int users, std::mt19937_64& rng) {
  Partition part = Partition::contiguous(n, t);
  Pm1Vec w = random_pm1_vector(n, rng);
  std::vector<std::vector<double>> xs;
  for (int u = 0; u < users; ++u) xs.push_back(gaussian_vector(n, rng));
  return run_pm1(v, part, w, xs, rng);
}

RunResult run_joint_random(int n, int m, int t, int q, int users, std::mt19937_64& rng) {
  // At most q <= t coset preimages are nonempty, so any w admits a good partition.
  JointConfig cfg{n, m, t, q};
  std::vector<Gf2mElem> w = random_field_vector(n, m, rng);
  std::vector<std::vector<double>> xs;
  for (int u = 0; u < users; ++u) xs.push_back(gaussian_vector(n, rng));
  return run_joint(cfg, w, xs);
}

RunResult run_perfect_random(const FiniteSet& A, int n, int t, int q, int users,
                             std::mt19937_64& rng) {
  JointConfig cfg{n, A.log2_size(), t, q};
  std::vector<Rational> w = random_alphabet_vector(A, n, rng);
  std::vector<std::vector<double>> xs;
  for (int u = 0; u < users; ++u) xs.push_back(gaussian_vector(n, rng));
  return run_perfect(cfg, A, w, xs);
}

RunResult run_hard_random(const FiniteSet& A, int n, int t, int users, std::mt19937_64& rng) {
  Partition part = Partition::contiguous(n, t);
  std::vector<Rational> w = random_alphabet_vector(A, n, rng);
  std::vector<std::vector<double>> xs;
  for (int u = 0; u < users; ++u) xs.push_back(gaussian_vector(n, rng));
  return run_hard(A, part, w, xs);
}

RunResult run_rou_random(int p, int n, int t, int users, std::mt19937_64& rng) {
  Partition part = Partition::contiguous(n, t);
  std::vector<int> w = random_exponents(n, p, rng);
  std::vector<std::vector<std::complex<double>>> xs;
  for (int u = 0; u < users; ++u) xs.push_back(gaussian_cvector(n, rng));
  return run_rou(p, part, w, xs);
}

RunResult run_zpm1_random(int n, int t, int users, std::mt19937_64& rng) {
  Partition part = Partition::contiguous(n, t);
  std::vector<int> w = random_ternary(n, rng);
  std::vector<std::vector<double>> xs;
  for (int u = 0; u < users; ++u) xs.push_back(gaussian_vector(n, rng));
  return run_zpm1(part, w, xs);
}

namespace {

double entropy_from_counts(const std::unordered_map<uint64_t, long long>& counts, double total) {
  double h = 0;
  for (const auto& [key, c] : counts) {
    (void)key;
    double pr = c / total;
    h -= pr * std::log2(pr);
  }
  return h;
}

uint64_t pack_pm1_key(const std::vector<Pm1>& bits) {
  uint64_t k = 0;
  for (Pm1 b : bits) k = (k << 1) | (b.bit() ? 1u : 0u);
  return k;
}

void budget_check(double alphabet, int n, double randomness) {
  if (n * std::log2(alphabet) + std::log2(randomness) > 24.0 + 1e-9)
    throw BudgetExceeded("mutual information enumeration exceeds 2^24 states");
}

}  // namespace

double mutual_information(ProtocolId id, int n, int t, int m, int q, int p) {
  Partition part = Partition::contiguous(n, t);
  std::unordered_map<uint64_t, long long> q_counts;
  double h_q_given_w = 0;  // averaged over w

  switch (id) {
    case ProtocolId::pm1_coset:
    case ProtocolId::pm1_improved: {
      budget_check(2, n, 1);
      Pm1Protocol proto(
          id == ProtocolId::pm1_coset ? Pm1Variant::coset : Pm1Variant::random_key_improved, part);
      for (uint64_t wb = 0; wb < (1ull << n); ++wb) {
        Pm1Vec w(n);
        for (int j = 0; j < n; ++j) w[j] = Pm1::from_bit((wb >> j) & 1u);
        ++q_counts[pack_pm1_key(proto.publish(w))];
      }
      h_q_given_w = 0;  // deterministic query
      return entropy_from_counts(q_counts, std::pow(2.0, n)) - h_q_given_w;
    }
    case ProtocolId::pm1_random_key: {
      budget_check(2, n, std::pow(2.0, t));
      Pm1Protocol proto(Pm1Variant::random_key_basic, part);
      double h_cond = 0;
      for (uint64_t wb = 0; wb < (1ull << n); ++wb) {
        Pm1Vec w(n);
        for (int j = 0; j < n; ++j) w[j] = Pm1::from_bit((wb >> j) & 1u);
        std::unordered_map<uint64_t, long long> local;
        for (uint64_t kb = 0; kb < (1ull << t); ++kb) {
          std::vector<Pm1> keys(t);
          for (int i = 0; i < t; ++i) keys[i] = Pm1::from_bit((kb >> i) & 1u);
          uint64_t key = pack_pm1_key(proto.publish(w, keys));
          ++local[key];
          ++q_counts[key];
        }
        h_cond += entropy_from_counts(local, std::pow(2.0, t));
      }
      h_q_given_w = h_cond / std::pow(2.0, n);
      return entropy_from_counts(q_counts, std::pow(2.0, n + t)) - h_q_given_w;
    }
    case ProtocolId::joint:
    case ProtocolId::perfect: {
      // The perfect wrapper's publication is the joint protocol's publication
      // of the encoded vector, and encoding is a per-entry bijection onto
      // F_{2^m}; the distributions of Q coincide.
      if (m < 1) throw std::invalid_argument("joint MI needs m");
      budget_check(std::pow(2.0, m), n, 1);
      Gf2mMatrix M = parity_check(part, m);
      for (uint64_t wb = 0; wb < (1ull << (m * n)); ++wb) {
        std::vector<Gf2mElem> w;
        w.reserve(n);
        for (int j = 0; j < n; ++j)
          w.push_back(Gf2mElem(m, static_cast<uint32_t>((wb >> (m * j)) & ((1u << m) - 1))));
        std::vector<Gf2mElem> syn = apply_matrix(M, w);
        uint64_t key = 0;
        for (const Gf2mElem& e : syn) key = (key << m) | e.bits;
        ++q_counts[key];
      }
      return entropy_from_counts(q_counts, std::pow(2.0, m * n));
    }
    case ProtocolId::hard: {
      if (m < 1) throw std::invalid_argument("hard MI needs m");
      budget_check(std::pow(2.0, m), n, 1);
      std::vector<int> anchors = independent_columns(m);
      uint64_t total = 1;
      for (int j = 0; j < n; ++j) total <<= m;
      for (uint64_t wb = 0; wb < total; ++wb) {
        // w as alphabet indices; the published tails depend only on these.
        std::vector<int> idx(n);
        for (int j = 0; j < n; ++j) idx[j] = static_cast<int>((wb >> (m * j)) & ((1u << m) - 1));
        uint64_t key = 0;
        for (int i : anchors) {
          for (const auto& blk : part.blocks) {
            Pm1 head = hadamard_entry(i, idx[blk[0]], m);
            for (size_t c = 1; c < blk.size(); ++c) {
              Pm1 bit = f2_add(head, hadamard_entry(i, idx[blk[c]], m));
              key = (key << 1) | (bit.bit() ? 1u : 0u);
            }
          }
        }
        ++q_counts[key];
      }
      return entropy_from_counts(q_counts, std::pow(2.0, m * n));
    }
    case ProtocolId::rou:
    case ProtocolId::zpm1: {
      int order = id == ProtocolId::zpm1 ? 3 : p;
      if (order < 1) throw std::invalid_argument("rou MI needs p");
      budget_check(order, n, 1);
      RouProtocol proto(order, part);
      uint64_t total = 1;
      for (int j = 0; j < n; ++j) total *= static_cast<uint64_t>(order);
      for (uint64_t wb = 0; wb < total; ++wb) {
        std::vector<int> w(n);
        uint64_t v = wb;
        for (int j = 0; j < n; ++j) {
          w[j] = static_cast<int>(v % order);
          v /= order;
        }
        std::vector<int> pub = proto.publish(w);
        uint64_t key = 0;
        for (int sym : pub) key = key * order + static_cast<uint64_t>(sym);
        ++q_counts[key];
      }
      return entropy_from_counts(q_counts, std::pow(static_cast<double>(order), n));
    }
  }
  throw std::invalid_argument("unknown protocol id");
}

double binary_entropy(double x) {
  if (x < 0 || x > 1) throw std::invalid_argument("entropy argument outside [0,1]");
  if (x == 0 || x == 1) return 0;
  return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

PrivacyReport analyze(const RunResult& r, bool measure_mi) {
  PrivacyReport rep;
  rep.protocol = protocol_name(r.tr.protocol);
  rep.n = r.tr.n;
  rep.t = r.tr.t;
  rep.m = r.tr.m;
  rep.q = r.tr.q;
  rep.p = r.tr.p;
  rep.d_bits = r.tr.d_bits();
  rep.d_info = r.d_info;
  rep.ell_sent = r.ell_sent;
  rep.ell_rank = r.ell_rank;
  rep.ell_worst = r.ell_worst;
  rep.mi_measured = measure_mi;
  rep.mi_bits = measure_mi ? mutual_information(r.tr.protocol, r.tr.n, r.tr.t, r.tr.m, r.tr.q, r.tr.p)
                           : r.mi_formula;
  rep.entropy_h = binary_entropy(static_cast<double>(rep.t) / rep.n);
  rep.alphabet_bits = r.alphabet_bits;

  auto add_check = [&rep](const std::string& name, double lhs, double rhs) {
    CheckRecord c;
    c.name = name;
    c.lhs = lhs;
    c.rhs = rhs;
    c.margin = lhs - rhs;
    c.satisfied = c.margin >= -kTol;
    c.attained = std::abs(c.margin) <= kTol;
    rep.checks.push_back(c);
  };
  double la = rep.alphabet_bits;
  add_check("tradeoff_worst", rep.mi_bits + rep.ell_worst * la, rep.n * la);
  add_check("tradeoff_rank", rep.mi_bits + rep.ell_rank * la, rep.n * la);
  add_check("cost_bound", rep.d_bits, rep.mi_bits);
  if (r.tr.protocol == ProtocolId::joint || r.tr.protocol == ProtocolId::perfect) {
    double nt = rep.n - rep.t;
    double bound = nt * (rep.t > 0 ? std::log2(static_cast<double>(rep.t)) : 0.0) +
                   rep.n * rep.entropy_h + rep.m * nt + 1.0;
    add_check("cost_entropy_bound", bound, rep.d_bits);
  }
  return rep;
}

}  // namespace qpi
