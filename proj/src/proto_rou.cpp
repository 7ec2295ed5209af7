#include "qpi/proto_rou.hpp"

#include <cmath>
#include <stdexcept>

namespace qpi {

RouProtocol::RouProtocol(int order, Partition blocks) : p(order), part(std::move(blocks)) {
  if (p < 1 || p > (1 << 16)) throw std::invalid_argument("order must be in [1, 2^16]");
}

int RouProtocol::bits_per_symbol() const {
  int b = 0;
  while ((1 << b) < p) ++b;
  return b;
}

int RouProtocol::d_bits() const { return (n() - t()) * bits_per_symbol(); }

double RouProtocol::d_info() const { return (n() - t()) * std::log2(static_cast<double>(p)); }

std::complex<double> RouProtocol::root(int p, int k) {
  k %= p;
  if (k < 0) k += p;
  // 4k/p integral: axis roots, exact.
  if ((4 * k) % p == 0) {
    switch ((4 * k) / p) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  double a = 2.0 * M_PI * k / p;
  return {std::cos(a), std::sin(a)};
}

std::vector<int> RouProtocol::publish(const std::vector<int>& w) const {
  if (static_cast<int>(w.size()) != n()) throw std::invalid_argument("w length mismatch");
  for (int e : w)
    if (e < 0 || e >= p) throw std::invalid_argument("exponent out of range");
  std::vector<int> out;
  out.reserve(n() - t());
  for (const auto& blk : part.blocks) {
    int head = w[blk[0]];
    for (size_t c = 1; c < blk.size(); ++c) out.push_back(((w[blk[c]] - head) % p + p) % p);
  }
  return out;
}

std::vector<std::complex<double>> RouProtocol::answer(
    const std::vector<int>& publication, const std::vector<std::complex<double>>& x) const {
  if (static_cast<int>(x.size()) != n()) throw std::invalid_argument("x length mismatch");
  if (static_cast<int>(publication.size()) != n() - t())
    throw std::invalid_argument("publication length mismatch");
  std::vector<std::complex<double>> out;
  out.reserve(t());
  size_t pos = 0;
  for (const auto& blk : part.blocks) {
    std::complex<double> s = x[blk[0]];  // masked head is exponent 0
    for (size_t c = 1; c < blk.size(); ++c) s += root(p, publication[pos++]) * x[blk[c]];
    out.push_back(s);
  }
  return out;
}

std::complex<double> RouProtocol::decode(const std::vector<int>& w,
                                         const std::vector<std::complex<double>>& answers) const {
  if (answers.size() != part.blocks.size()) throw std::invalid_argument("answer count mismatch");
  std::complex<double> s{0.0, 0.0};
  for (size_t b = 0; b < part.blocks.size(); ++b) s += root(p, w[part.blocks[b][0]]) * answers[b];
  return s;
}

int TernaryCodec::encode_entry(int v) {
  switch (v) {
    case 0: return 0;
    case 1: return 1;
    case -1: return 2;
  }
  throw std::invalid_argument("ternary entry must be 0, +1 or -1");
}

std::vector<int> TernaryCodec::encode(const std::vector<int>& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int v : w) out.push_back(encode_entry(v));
  return out;
}

double TernaryCodec::decode(std::complex<double> aggregate) {
  return 2.0 / std::sqrt(3.0) * aggregate.imag();
}

}  // namespace qpi
