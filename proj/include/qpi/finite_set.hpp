#pragma once

#include <cstdint>
#include <vector>

#include "qpi/rational.hpp"

namespace qpi {

/* Finite alphabet A of exact rationals, kept strictly increasing. */
struct FiniteSet {
  std::vector<Rational> elements;

  static FiniteSet from_values(std::vector<Rational> values);

  int size() const { return static_cast<int>(elements.size()); }
  Rational sum() const;
  bool size_is_power_of_two() const;
  int log2_size() const;  // valid only when size is a power of two
};

/* Canonical Hadamard coefficients: lambda = (1/2^m) vec(A)^T H_{2^m}, so that
 * H lambda^T = vec(A); gamma = |{i >= 1 : lambda_i != 0}|. */
struct CoefficientVector {
  std::vector<Rational> lambda;
  int gamma = 0;
};
CoefficientVector coefficient_vector(const FiniteSet& A);

/* Witness for C(A) = theta: every element a equals
 * lambdas[0] + sum_i eps_i * lambdas[i+1], where bit i of its sign pattern
 * set means eps_i = -1. No certificate exists for theta - 1. */
struct ComplexityCertificate {
  int theta = 0;
  std::vector<Rational> lambdas;        // lambda_0 .. lambda_theta
  std::vector<uint32_t> sign_patterns;  // one per element, in sorted element order
};

/* Exhaustive search (with symmetry pruning) for the coefficient complexity;
 * budget 2 <= |A| <= 8. */
ComplexityCertificate coefficient_complexity(const FiniteSet& A);

enum class SetClass { perfect, hard, neither };

struct Classification {
  SetClass cls = SetClass::neither;
  ComplexityCertificate certificate;
  CoefficientVector coefficients;
  std::vector<Rational> perfect_lambda;  // lambda_1..lambda_m when perfect, else empty
};

/* perfect iff C(A) = log|A| and sum(A) = 0; hard iff C(A) = |A| - 1. */
Classification classify_set(const FiniteSet& A);

/* |A| x (k+1) matrix of signs with an all-(+1) column and coefficients such
 * that matrix * coefficients = vec(A). */
struct Dictionary {
  Pm1Matrix matrix;
  std::vector<Rational> coefficients;
};

/* D_A = H_{2^m} with the canonical Hadamard coefficients. */
Dictionary hadamard_dictionary(const FiniteSet& A);

/* |A| x (theta+1) dictionary read off a complexity certificate. */
Dictionary certificate_dictionary(const FiniteSet& A, const ComplexityCertificate& cert);

}  // namespace qpi
