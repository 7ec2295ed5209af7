#include "qpi/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qpi {

Partition Partition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("Partition: empty block");
    std::sort(b.begin(), b.end());
    for (int j : b) {
      if (j < 0 || j >= n) throw std::invalid_argument("Partition: index out of range");
      if (seen[static_cast<size_t>(j)]) throw std::invalid_argument("Partition: duplicate index");
      seen[static_cast<size_t>(j)] = true;
    }
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("Partition: blocks do not cover the ground set");
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
  Partition p;
  p.n = n;
  p.blocks = std::move(blocks);
  return p;
}

Partition Partition::contiguous(int n, int t) {
  if (t < 1 || t > n) throw std::invalid_argument("Partition: invalid t");
  std::vector<std::vector<int>> blocks;
  int base = n / t, extra = n % t, next = 0;
  for (int i = 0; i < t; ++i) {
    int size = base + (i < extra ? 1 : 0);
    std::vector<int> b(static_cast<size_t>(size));
    for (int k = 0; k < size; ++k) b[static_cast<size_t>(k)] = next++;
    blocks.push_back(std::move(b));
  }
  return from_blocks(n, std::move(blocks));
}

std::vector<int> Partition::rgs() const {
  std::vector<int> a(static_cast<size_t>(n), 0);
  for (size_t i = 0; i < blocks.size(); ++i)
    for (int j : blocks[i]) a[static_cast<size_t>(j)] = static_cast<int>(i);
  return a;
}

Partition Partition::from_rgs(const std::vector<int>& a) {
  int t = 0;
  for (int v : a) t = std::max(t, v + 1);
  std::vector<std::vector<int>> blocks(static_cast<size_t>(t));
  for (size_t j = 0; j < a.size(); ++j) blocks[static_cast<size_t>(a[j])].push_back(static_cast<int>(j));
  return from_blocks(static_cast<int>(a.size()), std::move(blocks));
}

mpz_class stirling2(int n, int t) {
  if (t < 0 || t > n) return 0;
  if (n == 0) return t == 0 ? 1 : 0;
  std::vector<mpz_class> row(static_cast<size_t>(t) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, t); j >= 1; --j) row[static_cast<size_t>(j)] = j * row[static_cast<size_t>(j)] + row[static_cast<size_t>(j) - 1];
    row[0] = 0;
  }
  return row[static_cast<size_t>(t)];
}

namespace {
/* completions[i][j] = number of ways to extend an RGS prefix of length i with
 * current max symbol j to a full string of length n with max exactly t-1. */
std::vector<std::vector<mpz_class>> rgs_completions(int n, int t) {
  std::vector<std::vector<mpz_class>> f(static_cast<size_t>(n) + 1, std::vector<mpz_class>(static_cast<size_t>(t) + 1, 0));
  for (int j = 0; j <= t; ++j) f[static_cast<size_t>(n)][static_cast<size_t>(j)] = (j == t - 1) ? 1 : 0;
  for (int i = n - 1; i >= 1; --i)
    for (int j = 0; j < t; ++j) {
      mpz_class v = (j + 1) * f[static_cast<size_t>(i) + 1][static_cast<size_t>(j)];
      if (j + 1 <= t - 1) v += f[static_cast<size_t>(i) + 1][static_cast<size_t>(j) + 1];
      f[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    }
  return f;
}
}  // namespace

mpz_class partition_rank(const Partition& p) {
  const int n = p.n;
  const int t = p.t();
  auto f = rgs_completions(n, t);
  std::vector<int> a = p.rgs();
  mpz_class rank = 0;
  int mx = 0;  // max symbol over a[0..i-1]; a[0] is always 0
  for (int i = 1; i < n; ++i) {
    int choices_below = std::min(a[static_cast<size_t>(i)], mx + 1);
    /* symbols 0..choices_below-1 are all valid smaller choices here */
    for (int s = 0; s < choices_below; ++s) {
      int new_mx = std::max(mx, s);
      rank += f[static_cast<size_t>(i) + 1][static_cast<size_t>(new_mx)];
    }
    mx = std::max(mx, a[static_cast<size_t>(i)]);
  }
  return rank;
}

Partition partition_unrank(const mpz_class& r, int n, int t) {
  if (t < 1 || t > n) throw std::invalid_argument("partition_unrank: invalid t");
  if (r < 0 || r >= stirling2(n, t)) throw std::out_of_range("partition_unrank: rank out of range");
  auto f = rgs_completions(n, t);
  std::vector<int> a(static_cast<size_t>(n), 0);
  mpz_class rem = r;
  int mx = 0;
  for (int i = 1; i < n; ++i) {
    int chosen = -1;
    for (int s = 0; s <= std::min(mx + 1, t - 1); ++s) {
      int new_mx = std::max(mx, s);
      const mpz_class& cnt = f[static_cast<size_t>(i) + 1][static_cast<size_t>(new_mx)];
      if (rem < cnt) {
        chosen = s;
        break;
      }
      rem -= cnt;
    }
    if (chosen < 0) throw std::logic_error("partition_unrank: exhausted symbols");
    a[static_cast<size_t>(i)] = chosen;
    mx = std::max(mx, chosen);
  }
  return Partition::from_rgs(a);
}

int partition_rank_bits(int n, int t) {
  mpz_class s = stirling2(n, t);
  if (s <= 1) return 0;
  mpz_class v = s - 1;
  return static_cast<int>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

Gf2mMatrix parity_check(const Partition& p, int m) {
  const int n = p.n;
  const int t = p.t();
  Gf2mMatrix M(n - t, n, m);
  int r = 0;
  for (const auto& b : p.blocks)
    for (size_t k = 0; k + 1 < b.size(); ++k) {
      M.at(r, b[k]) = Gf2mElem::one(m);
      M.at(r, b[k + 1]) = Gf2mElem::one(m);
      ++r;
    }
  return M;
}

}  // namespace qpi
