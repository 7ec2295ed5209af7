#include "qpi/proto_joint.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace qpi {

FieldPartition field_partition(int m, int q) {
  if (m < 1 || m > 16) throw std::invalid_argument("field partition needs 1 <= m <= 16");
  if (q < 1 || (q & (q - 1)) != 0 || q > (1 << (m - 1)))
    throw std::invalid_argument("q must be a power of two with q <= 2^(m-1)");
  int logq = 0;
  while ((1 << logq) < q) ++logq;
  int p = m - logq;

  FieldPartition fp;
  fp.m = m;
  fp.q = q;
  Partition base = Partition::contiguous(m, p);
  fp.base_blocks = base.blocks;

  // F_1: all F_2-combinations of the base-block characteristic vectors.
  std::vector<uint32_t> block_bits;
  for (const auto& blk : fp.base_blocks) {
    uint32_t b = 0;
    for (int i : blk) b |= 1u << i;
    block_bits.push_back(b);
  }
  std::vector<Gf2mElem> f1;
  for (uint32_t msk = 0; msk < (1u << p); ++msk) {
    uint32_t bits = 0;
    for (int i = 0; i < p; ++i)
      if (msk & (1u << i)) bits ^= block_bits[i];
    f1.push_back(Gf2mElem(m, bits));
  }
  std::sort(f1.begin(), f1.end(), [](const Gf2mElem& a, const Gf2mElem& b) { return a.bits < b.bits; });

  std::vector<char> used(size_t{1} << m, 0);
  fp.shifts.assign(1, Gf2mElem::zero(m));
  fp.cosets.assign(1, f1);
  for (const Gf2mElem& e : f1) used[e.bits] = 1;
  for (int j = 1; j < q; ++j) {
    uint32_t s = 0;
    while (used[s]) ++s;  // numerically smallest unused bit pattern
    Gf2mElem shift(m, s);
    std::vector<Gf2mElem> coset;
    for (const Gf2mElem& e : f1) {
      Gf2mElem c = f2m_add(shift, e);
      used[c.bits] = 1;
      coset.push_back(c);
    }
    std::sort(coset.begin(), coset.end(),
              [](const Gf2mElem& a, const Gf2mElem& b) { return a.bits < b.bits; });
    fp.shifts.push_back(shift);
    fp.cosets.push_back(std::move(coset));
  }
  return fp;
}

int classify_element(const Gf2mElem& e, const FieldPartition& fp) {
  if (e.m != fp.m) throw std::invalid_argument("degree mismatch");
  // e is in shift + F_1 iff e + shift is constant on every base block.
  for (int j = 0; j < fp.q; ++j) {
    uint32_t r = e.bits ^ fp.shifts[j].bits;
    bool ok = true;
    for (const auto& blk : fp.base_blocks) {
      bool first = (r >> blk[0]) & 1u;
      for (int i : blk)
        if (((r >> i) & 1u) != static_cast<uint32_t>(first)) { ok = false; break; }
      if (!ok) break;
    }
    if (ok) return j + 1;
  }
  throw std::logic_error("cosets do not cover the field");
}

bool is_good_partition(const Partition& part, const std::vector<Gf2mElem>& w,
                       const FieldPartition& fp) {
  if (part.n != static_cast<int>(w.size())) throw std::invalid_argument("length mismatch");
  for (const auto& blk : part.blocks) {
    int cls = classify_element(w[blk[0]], fp);
    for (int j : blk)
      if (classify_element(w[j], fp) != cls) return false;
  }
  return true;
}

Partition good_partition(const std::vector<Gf2mElem>& w, int t, const FieldPartition& fp) {
  int n = static_cast<int>(w.size());
  if (t < 1 || t > n) throw std::invalid_argument("t out of range");
  std::map<int, std::vector<int>> by_class;
  for (int j = 0; j < n; ++j) by_class[classify_element(w[j], fp)].push_back(j);
  if (static_cast<int>(by_class.size()) > t)
    throw std::invalid_argument("more nonempty coset preimages than blocks");

  std::vector<std::vector<int>> blocks;
  for (auto& [cls, idx] : by_class) blocks.push_back(std::move(idx));
  while (static_cast<int>(blocks.size()) < t) {
    int pick = 0;
    for (int i = 1; i < static_cast<int>(blocks.size()); ++i) {
      if (blocks[i].size() > blocks[pick].size() ||
          (blocks[i].size() == blocks[pick].size() && blocks[i][0] < blocks[pick][0]))
        pick = i;
    }
    if (blocks[pick].size() < 2) throw std::logic_error("cannot split singleton");
    blocks.push_back({blocks[pick].back()});
    blocks[pick].pop_back();
  }
  return Partition::from_blocks(n, std::move(blocks));
}

Pm1Matrix field_image(const std::vector<Gf2mElem>& w, int m) {
  Pm1Matrix W(m, static_cast<int>(w.size()));
  for (size_t j = 0; j < w.size(); ++j) {
    if (w[j].m != m) throw std::invalid_argument("degree mismatch");
    for (int i = 0; i < m; ++i) W.at(i, static_cast<int>(j)) = w[j].entry(i);
  }
  return W;
}

JointProtocol::JointProtocol(JointConfig c, Partition p)
    : cfg(c), fp(field_partition(c.m, c.q)), part(std::move(p)), M(parity_check(part, c.m)) {
  if (part.n != cfg.n || part.t() != cfg.t) throw std::invalid_argument("partition shape mismatch");
  if (cfg.q > cfg.t) throw std::invalid_argument("q must satisfy q <= t");
}

JointProtocol JointProtocol::for_weights(JointConfig c, const std::vector<Gf2mElem>& w) {
  FieldPartition fp = field_partition(c.m, c.q);
  return JointProtocol(c, good_partition(w, c.t, fp));
}

std::vector<Gf2mElem> JointProtocol::syndrome(const std::vector<Gf2mElem>& w) const {
  if (static_cast<int>(w.size()) != cfg.n) throw std::invalid_argument("w length mismatch");
  return apply_matrix(M, w);
}

std::vector<Gf2mElem> JointProtocol::shift(const std::vector<Gf2mElem>& syn) const {
  return solve_affine(M, syn);
}

std::vector<Gf2mElem> JointProtocol::keys(const std::vector<Gf2mElem>& w,
                                          const std::vector<Gf2mElem>& u) const {
  std::vector<Gf2mElem> out;
  out.reserve(part.blocks.size());
  for (const auto& blk : part.blocks) {
    Gf2mElem l = f2m_add(u[blk[0]], w[blk[0]]);
    for (int j : blk)
      if (f2m_add(u[j], w[j]) != l) throw std::logic_error("block shift invariant violated");
    out.push_back(l);
  }
  return out;
}

Pm1Matrix JointProtocol::block_image(const std::vector<Gf2mElem>& u, int block) const {
  const auto& blk = part.blocks[block];
  Pm1Matrix U(cfg.m, static_cast<int>(blk.size()));
  for (size_t c = 0; c < blk.size(); ++c)
    for (int r = 0; r < cfg.m; ++r) U.at(r, static_cast<int>(c)) = u[blk[c]].entry(r);
  return U;
}

JointProtocol::Answer JointProtocol::answer(const std::vector<Gf2mElem>& syn,
                                            const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != cfg.n) throw std::invalid_argument("x length mismatch");
  std::vector<Gf2mElem> u = shift(syn);
  Answer ans;
  int logq = 0;
  while ((1 << logq) < cfg.q) ++logq;
  for (int b = 0; b < part.t(); ++b) {
    Pm1Matrix U = block_image(u, b);
    auto [r, rows] = rank_rows(U);
    if (r > cfg.m - logq) throw std::logic_error("block rank exceeds m - log2 q");
    std::vector<double> vals;
    for (int row : rows) {
      double s = 0;
      for (size_t c = 0; c < part.blocks[b].size(); ++c)
        s += U.at(row, static_cast<int>(c)).value() * x[part.blocks[b][c]];
      vals.push_back(s);
    }
    ans.row_sets.push_back(std::move(rows));
    ans.values.push_back(std::move(vals));
  }
  return ans;
}

std::vector<double> JointProtocol::decode(const std::vector<Gf2mElem>& w,
                                          const std::vector<Gf2mElem>& syn,
                                          const Answer& ans) const {
  std::vector<Gf2mElem> u = shift(syn);
  std::vector<Gf2mElem> l = keys(w, u);
  std::vector<double> out(cfg.m, 0.0);
  for (int b = 0; b < part.t(); ++b) {
    Pm1Matrix Ui = block_image(u, b);
    RationalMatrix U = RationalMatrix::from_pm1(Ui);
    RationalMatrix R(static_cast<int>(ans.row_sets[b].size()), U.cols());
    for (size_t i = 0; i < ans.row_sets[b].size(); ++i)
      for (int c = 0; c < U.cols(); ++c) R.at(static_cast<int>(i), c) = U.at(ans.row_sets[b][i], c);
    RationalMatrix Q = solve_right(R, U);  // Q R = U exactly
    for (int i = 0; i < cfg.m; ++i) {
      double s = 0;
      for (int j = 0; j < Q.cols(); ++j) s += Q.at(i, j).get_d() * ans.values[b][j];
      out[i] += l[b].entry(i).value() * s;
    }
  }
  return out;
}

bool JointProtocol::exact_block_identity(const std::vector<Gf2mElem>& w,
                                         const std::vector<Gf2mElem>& syn) const {
  std::vector<Gf2mElem> u = shift(syn);
  std::vector<Gf2mElem> l = keys(w, u);
  for (int b = 0; b < part.t(); ++b) {
    Pm1Matrix Ui = block_image(u, b);
    RationalMatrix U = RationalMatrix::from_pm1(Ui);
    auto [r, rows] = rank_rows(Ui);
    (void)r;
    RationalMatrix R(static_cast<int>(rows.size()), U.cols());
    for (size_t i = 0; i < rows.size(); ++i)
      for (int c = 0; c < U.cols(); ++c) R.at(static_cast<int>(i), c) = U.at(rows[i], c);
    RationalMatrix Q = solve_right(R, U);
    RationalMatrix W_blk = Q.multiply(R);  // = U
    for (int i = 0; i < cfg.m; ++i)
      for (size_t c = 0; c < part.blocks[b].size(); ++c) {
        Rational expect(w[part.blocks[b][c]].entry(i).value());
        Rational got = Rational(l[b].entry(i).value()) * W_blk.at(i, static_cast<int>(c));
        if (got != expect) return false;
      }
  }
  return true;
}

PerfectCodec::PerfectCodec(FiniteSet a) : A(std::move(a)) {
  Classification cls = classify_set(A);
  if (cls.cls != SetClass::perfect) throw std::invalid_argument("alphabet is not perfect");
  m = A.log2_size();
  lambda = cls.perfect_lambda;
  sign_patterns = cls.certificate.sign_patterns;
}

Pm1Matrix PerfectCodec::encode(const std::vector<Rational>& w) const {
  Pm1Matrix W(m, static_cast<int>(w.size()));
  for (size_t j = 0; j < w.size(); ++j) {
    auto it = std::find(A.elements.begin(), A.elements.end(), w[j]);
    if (it == A.elements.end()) throw std::invalid_argument("weight entry not in alphabet");
    uint32_t pat = sign_patterns[it - A.elements.begin()];
    for (int i = 0; i < m; ++i)
      W.at(i, static_cast<int>(j)) = (pat & (1u << i)) ? Pm1(-1) : Pm1(+1);
  }
  return W;
}

std::vector<Gf2mElem> PerfectCodec::encode_field(const std::vector<Rational>& w) const {
  Pm1Matrix W = encode(w);
  std::vector<Gf2mElem> out;
  out.reserve(w.size());
  for (int j = 0; j < W.cols; ++j) {
    Pm1Vec col(m);
    for (int i = 0; i < m; ++i) col[i] = W.at(i, j);
    out.push_back(Gf2mElem::from_entries(col));
  }
  return out;
}

double PerfectCodec::combine(const std::vector<double>& signals) const {
  if (static_cast<int>(signals.size()) != m) throw std::invalid_argument("signal count mismatch");
  double s = 0;
  for (int i = 0; i < m; ++i) s += lambda[i].get_d() * signals[i];
  return s;
}

}  // namespace qpi
