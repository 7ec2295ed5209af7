#include "qpi/hadamard.hpp"

#include <bit>
#include <stdexcept>

namespace qpi {

Pm1 hadamard_entry(int i, int j, int m) {
  const int size = 1 << m;
  if (i < 0 || i >= size || j < 0 || j >= size) throw std::out_of_range("hadamard_entry: index out of range");
  return Pm1::from_bit(std::popcount(static_cast<unsigned>(i) & static_cast<unsigned>(j)) & 1);
}

Pm1Matrix sylvester(int m) {
  if (m < 0 || m > 12) throw std::invalid_argument("sylvester: m out of range");
  const int size = 1 << m;
  Pm1Matrix h(size, size);
  h.at(0, 0) = Pm1::zero();
  /* Doubling recursion: H_{2k} = [[H_k, H_k], [H_k, -H_k]]. */
  for (int half = 1; half < size; half <<= 1)
    for (int r = 0; r < half; ++r)
      for (int c = 0; c < half; ++c) {
        Pm1 v = h.at(r, c);
        h.at(r, c + half) = v;
        h.at(r + half, c) = v;
        h.at(r + half, c + half) = Pm1(-v.value());
      }
  return h;
}

std::vector<int> independent_columns(int m) {
  if (m < 1) throw std::invalid_argument("independent_columns: m must be positive");
  std::vector<int> L = {1};
  for (int k = 1; k < m; ++k) {
    std::vector<int> next = {1 << k};
    for (int j : L) next.push_back((1 << k) + j);
    L = std::move(next);
  }
  return L;
}

int row_from_subvector(const Pm1Vec& vals, int m) {
  if (static_cast<int>(vals.size()) != m) throw std::invalid_argument("row_from_subvector: size mismatch");
  std::vector<int> L = independent_columns(m);
  const int size = 1 << m;
  for (int r = 0; r < size; ++r) {
    bool match = true;
    for (int k = 0; k < m; ++k)
      if (hadamard_entry(r, L[static_cast<size_t>(k)], m) != vals[static_cast<size_t>(k)]) {
        match = false;
        break;
      }
    if (match) return r;
  }
  throw std::logic_error("row_from_subvector: no matching row");
}

}  // namespace qpi
