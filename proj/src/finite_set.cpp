#include "qpi/finite_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "qpi/error.hpp"
#include "qpi/hadamard.hpp"

namespace qpi {

FiniteSet FiniteSet::from_values(std::vector<Rational> values) {
  if (values.empty()) throw std::invalid_argument("finite set must be nonempty");
  std::sort(values.begin(), values.end());
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i] == values[i - 1]) throw std::invalid_argument("finite set has repeated element");
  FiniteSet a;
  a.elements = std::move(values);
  return a;
}

Rational FiniteSet::sum() const {
  Rational s = 0;
  for (const Rational& e : elements) s += e;
  return s;
}

bool FiniteSet::size_is_power_of_two() const {
  int k = size();
  return k >= 1 && (k & (k - 1)) == 0;
}

int FiniteSet::log2_size() const {
  if (!size_is_power_of_two()) throw std::invalid_argument("set size is not a power of two");
  int m = 0;
  while ((1 << m) < size()) ++m;
  return m;
}

CoefficientVector coefficient_vector(const FiniteSet& A) {
  if (!A.size_is_power_of_two())
    throw std::invalid_argument("coefficient vector needs |A| = 2^m");
  int m = A.log2_size();
  int k = A.size();
  CoefficientVector out;
  out.lambda.assign(k, Rational(0));
  for (int j = 0; j < k; ++j) {
    Rational s = 0;
    for (int i = 0; i < k; ++i) {
      if (hadamard_entry(i, j, m).bit())
        s -= A.elements[i];
      else
        s += A.elements[i];
    }
    out.lambda[j] = s / k;
  }
  out.gamma = 0;
  for (int j = 1; j < k; ++j)
    if (out.lambda[j] != 0) ++out.gamma;
  return out;
}

namespace {

/* Certificate search for a fixed width theta.
 *
 * Normalize so the smallest element carries the all-(+1) pattern.  Element k
 * then needs a distinct nonempty coordinate subset D_k with
 *   sum_{i in D_k} mu_i = delta_k := (a_0 - a_k) / 2,
 * after which lambda_i = mu_i and lambda_0 = a_0 - sum_i mu_i.  Subsets are
 * assigned depth-first in element order; the linear system over mu is
 * eliminated incrementally so inconsistent branches die early.  Coordinates
 * that are still interchangeable (same membership in every subset chosen so
 * far) form classes, and only the lexicographic representative of each
 * count-per-class profile is tried.  Once the system reaches full rank, mu is
 * fixed and the remaining elements reduce to exact subset-sum lookups. */
struct CertSearch {
  int theta;
  const std::vector<Rational>& delta;  // delta[k], k >= 1; delta[0] = 0 unused
  int n_elem;

  struct Row {
    std::vector<Rational> c;  // length theta, c[pivot] == 1, zeros before pivot
    Rational rhs;
    int pivot;
  };
  std::vector<Row> rows;
  std::vector<std::vector<int>> classes;
  std::vector<char> used;           // by mask
  std::vector<uint32_t> chosen;     // mask per element 1..k-1
  std::vector<Rational> mu;         // filled on success

  CertSearch(int theta_, const std::vector<Rational>& delta_, int n_elem_)
      : theta(theta_), delta(delta_), n_elem(n_elem_) {
    classes.push_back({});
    for (int i = 0; i < theta; ++i) classes[0].push_back(i);
    used.assign(size_t{1} << theta, 0);
    used[0] = 1;  // all-(+1) pattern belongs to the smallest element
  }

  // Reduce (coeffs, rhs) by current rows. Returns: 0 inconsistent, 1
  // dependent-consistent, 2 new pivot appended.
  int add_row(std::vector<Rational> c, Rational rhs) {
    for (const Row& r : rows) {
      if (c[r.pivot] != 0) {
        Rational f = c[r.pivot];
        for (int j = r.pivot; j < theta; ++j) c[j] -= f * r.c[j];
        rhs -= f * r.rhs;
      }
    }
    int p = -1;
    for (int j = 0; j < theta; ++j)
      if (c[j] != 0) { p = j; break; }
    if (p < 0) return rhs == 0 ? 1 : 0;
    Rational inv = c[p];
    for (int j = p; j < theta; ++j) c[j] /= inv;
    rhs /= inv;
    rows.push_back(Row{std::move(c), std::move(rhs), p});
    return 2;
  }

  // Solve with free coordinates set to 0 (rows are echelon, pivots distinct).
  std::vector<Rational> solve() const {
    std::vector<const Row*> by_pivot(theta, nullptr);
    for (const Row& r : rows) by_pivot[r.pivot] = &r;
    std::vector<Rational> x(theta, Rational(0));
    for (int p = theta - 1; p >= 0; --p) {
      if (!by_pivot[p]) continue;
      Rational v = by_pivot[p]->rhs;
      for (int j = p + 1; j < theta; ++j)
        if (by_pivot[p]->c[j] != 0) v -= by_pivot[p]->c[j] * x[j];
      x[p] = v;
    }
    return x;
  }

  // With mu fixed, match every remaining element to an unused subset by sum.
  // Distinct targets means candidate pools are disjoint, so greedy is exact.
  bool complete(int next_k) {
    std::vector<Rational> x = solve();
    size_t nmask = size_t{1} << theta;
    std::vector<Rational> sums(nmask, Rational(0));
    for (size_t msk = 1; msk < nmask; ++msk) {
      unsigned low = static_cast<unsigned>(msk & (~msk + 1));
      int bit = 0;
      while ((1u << bit) != low) ++bit;
      sums[msk] = sums[msk ^ low] + x[bit];
    }
    std::vector<uint32_t> taken;
    for (int k = next_k; k < n_elem; ++k) {
      bool found = false;
      for (size_t msk = 1; msk < nmask; ++msk) {
        if (!used[msk] && sums[msk] == delta[k]) {
          used[msk] = 1;
          taken.push_back(static_cast<uint32_t>(msk));
          chosen.push_back(static_cast<uint32_t>(msk));
          found = true;
          break;
        }
      }
      if (!found) {
        for (uint32_t msk : taken) used[msk] = 0;
        chosen.resize(chosen.size() - taken.size());
        return false;
      }
    }
    mu = std::move(x);
    return true;
  }

  bool dfs(int k) {
    if (k == n_elem) {
      mu = solve();
      return true;
    }
    if (static_cast<int>(rows.size()) == theta) return complete(k);

    int nclasses = static_cast<int>(classes.size());
    std::vector<int> cnt(nclasses, 0);
    // Odometer over count profiles, lexicographic, skipping the zero profile.
    for (;;) {
      int pos = nclasses - 1;
      while (pos >= 0 && cnt[pos] == static_cast<int>(classes[pos].size())) {
        cnt[pos] = 0;
        --pos;
      }
      if (pos < 0) return false;
      ++cnt[pos];

      uint32_t mask = 0;
      for (int j = 0; j < nclasses; ++j)
        for (int i = 0; i < cnt[j]; ++i) mask |= 1u << classes[j][i];
      if (used[mask]) continue;

      std::vector<Rational> c(theta, Rational(0));
      for (int j = 0; j < theta; ++j)
        if (mask & (1u << j)) c[j] = 1;
      size_t rows_before = rows.size();
      int st = add_row(std::move(c), delta[k]);
      if (st == 0) continue;

      used[mask] = 1;
      chosen.push_back(mask);
      auto saved_classes = classes;
      std::vector<std::vector<int>> refined;
      for (int j = 0; j < nclasses; ++j) {
        if (cnt[j] > 0)
          refined.emplace_back(classes[j].begin(), classes[j].begin() + cnt[j]);
        if (cnt[j] < static_cast<int>(classes[j].size()))
          refined.emplace_back(classes[j].begin() + cnt[j], classes[j].end());
      }
      classes = std::move(refined);

      if (dfs(k + 1)) return true;

      classes = std::move(saved_classes);
      chosen.pop_back();
      used[mask] = 0;
      rows.resize(rows_before);
    }
  }
};

}  // namespace

ComplexityCertificate coefficient_complexity(const FiniteSet& A) {
  int k = A.size();
  if (k < 2) throw std::invalid_argument("coefficient complexity needs |A| >= 2");
  if (k > 8) throw BudgetExceeded("coefficient complexity search capped at |A| <= 8");

  std::vector<Rational> delta(k, Rational(0));
  for (int i = 1; i < k; ++i) delta[i] = (A.elements[0] - A.elements[i]) / 2;

  int theta0 = 0;
  while ((1 << theta0) < k) ++theta0;

  for (int theta = std::max(theta0, 1); theta <= k - 1; ++theta) {
    CertSearch s(theta, delta, k);
    if (!s.dfs(1)) continue;

    ComplexityCertificate cert;
    cert.theta = theta;
    Rational lam0 = A.elements[0];
    for (const Rational& v : s.mu) lam0 -= v;
    cert.lambdas.push_back(lam0);
    for (const Rational& v : s.mu) cert.lambdas.push_back(v);
    cert.sign_patterns.assign(k, 0);
    for (int i = 1; i < k; ++i) cert.sign_patterns[i] = s.chosen[i - 1];

    for (int i = 0; i < k; ++i) {  // invariant: certificate reproduces A
      Rational v = cert.lambdas[0];
      for (int j = 0; j < theta; ++j)
        v += (cert.sign_patterns[i] & (1u << j)) ? -cert.lambdas[j + 1] : cert.lambdas[j + 1];
      if (v != A.elements[i]) throw std::logic_error("certificate check failed");
    }
    return cert;
  }
  throw std::logic_error("complexity search found no certificate at theta = |A|-1");
}

Classification classify_set(const FiniteSet& A) {
  Classification out;
  out.certificate = coefficient_complexity(A);
  if (A.size_is_power_of_two()) out.coefficients = coefficient_vector(A);

  bool perfect = A.size_is_power_of_two() && out.certificate.theta == A.log2_size() &&
                 A.sum() == 0;
  bool hard = out.certificate.theta == A.size() - 1;
  if (perfect) {
    out.cls = SetClass::perfect;
    if (out.certificate.lambdas[0] != 0)
      throw std::logic_error("perfect set certificate must have lambda_0 = 0");
    out.perfect_lambda.assign(out.certificate.lambdas.begin() + 1,
                              out.certificate.lambdas.end());
  } else if (hard) {
    out.cls = SetClass::hard;
  } else {
    out.cls = SetClass::neither;
  }
  return out;
}

Dictionary hadamard_dictionary(const FiniteSet& A) {
  CoefficientVector cv = coefficient_vector(A);
  int m = A.log2_size();
  Dictionary d;
  d.matrix = sylvester(m);
  d.coefficients = cv.lambda;
  return d;
}

Dictionary certificate_dictionary(const FiniteSet& A, const ComplexityCertificate& cert) {
  Dictionary d;
  d.matrix = Pm1Matrix(A.size(), cert.theta + 1);
  for (int i = 0; i < A.size(); ++i) {
    d.matrix.at(i, 0) = Pm1(+1);
    for (int j = 0; j < cert.theta; ++j)
      d.matrix.at(i, j + 1) = (cert.sign_patterns[i] & (1u << j)) ? Pm1(-1) : Pm1(+1);
  }
  d.coefficients = cert.lambdas;
  return d;
}

}  // namespace qpi
