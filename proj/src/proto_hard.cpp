#include "qpi/proto_hard.hpp"

#include <algorithm>
#include <stdexcept>

#include "qpi/hadamard.hpp"

namespace qpi {

HardProtocol::HardProtocol(FiniteSet a, Partition p) : A(std::move(a)), part(std::move(p)) {
  if (!A.size_is_power_of_two()) throw std::invalid_argument("alphabet size must be 2^m");
  m = A.log2_size();
  coeff = coefficient_vector(A);
  anchors = independent_columns(m);
  for (int i = 1; i < A.size(); ++i)
    if (coeff.lambda[i] != 0) answer_rows.push_back(i);
}

Pm1Matrix HardProtocol::decompose(const std::vector<Rational>& w) const {
  if (static_cast<int>(w.size()) != n()) throw std::invalid_argument("w length mismatch");
  Pm1Matrix W(A.size(), n());
  for (int j = 0; j < n(); ++j) {
    auto it = std::find(A.elements.begin(), A.elements.end(), w[j]);
    if (it == A.elements.end()) throw std::invalid_argument("weight entry not in alphabet");
    int k = static_cast<int>(it - A.elements.begin());
    for (int i = 0; i < A.size(); ++i) W.at(i, j) = hadamard_entry(i, k, m);
  }
  return W;
}

std::vector<std::vector<Pm1>> HardProtocol::publish(const Pm1Matrix& W) const {
  std::vector<std::vector<Pm1>> tails;
  tails.reserve(static_cast<size_t>(m) * t());
  for (int i : anchors) {
    for (const auto& blk : part.blocks) {
      Pm1 head = W.at(i, blk[0]);
      std::vector<Pm1> tail;
      tail.reserve(blk.size() - 1);
      for (size_t c = 1; c < blk.size(); ++c) tail.push_back(f2_add(head, W.at(i, blk[c])));
      tails.push_back(std::move(tail));
    }
  }
  return tails;
}

Pm1Matrix HardProtocol::user_expand(const std::vector<std::vector<Pm1>>& tails) const {
  if (tails.size() != static_cast<size_t>(m) * t())
    throw std::invalid_argument("tail section shape mismatch");
  // Reassemble the anchor rows (head +1 per block), then look up each column.
  Pm1Matrix anchor_rows(m, n());
  for (int ai = 0; ai < m; ++ai) {
    for (int b = 0; b < t(); ++b) {
      const auto& blk = part.blocks[b];
      const auto& tail = tails[static_cast<size_t>(ai) * t() + b];
      if (tail.size() + 1 != blk.size()) throw std::invalid_argument("tail length mismatch");
      anchor_rows.at(ai, blk[0]) = Pm1(+1);
      for (size_t c = 1; c < blk.size(); ++c) anchor_rows.at(ai, blk[c]) = tail[c - 1];
    }
  }
  Pm1Matrix What(A.size(), n());
  for (int j = 0; j < n(); ++j) {
    Pm1Vec vals(m);
    for (int ai = 0; ai < m; ++ai) vals[ai] = anchor_rows.at(ai, j);
    int r = row_from_subvector(vals, m);
    for (int i = 0; i < A.size(); ++i) What.at(i, j) = hadamard_entry(r, i, m);
  }
  return What;
}

std::vector<double> HardProtocol::answer(const Pm1Matrix& What, const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != n()) throw std::invalid_argument("x length mismatch");
  std::vector<double> out;
  out.reserve(answer_rows.size() * t() + 1);
  for (int i : answer_rows) {
    for (const auto& blk : part.blocks) {
      double s = 0;
      for (int j : blk) s += What.at(i, j).value() * x[j];
      out.push_back(s);
    }
  }
  double ones = 0;
  for (int j = 0; j < n(); ++j) ones += x[j];
  out.push_back(ones);
  return out;
}

Pm1Matrix HardProtocol::keys(const Pm1Matrix& W) const {
  Pm1Matrix K(A.size(), t());
  for (int i = 0; i < A.size(); ++i)
    for (int b = 0; b < t(); ++b) K.at(i, b) = W.at(i, part.blocks[b][0]);
  return K;
}

double HardProtocol::decode(const Pm1Matrix& W, const std::vector<double>& answers) const {
  if (answers.size() != answer_rows.size() * t() + 1)
    throw std::invalid_argument("answer count mismatch");
  Pm1Matrix K = keys(W);
  double total = 0;
  size_t pos = 0;
  for (int i : answer_rows) {
    double row_sum = 0;
    for (int b = 0; b < t(); ++b) row_sum += K.at(i, b).value() * answers[pos++];
    total += coeff.lambda[i].get_d() * row_sum;
  }
  total += coeff.lambda[0].get_d() * answers[pos];
  return total;
}

}  // namespace qpi
