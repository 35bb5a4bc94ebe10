#pragma once

// Multiplicative functions, cyclotomic polynomials, and the modified
// cyclotomic rational functions Psi_n(x) = prod_{d | n} (1 - x^d)^mu(d).
//
// Factorization is trial division; arguments are meant to stay below 10^6.

#include <cstdint>
#include <utility>
#include <vector>

#include "qprod/polynomial.hpp"

namespace qprod {

struct PrimePower {
  long prime;
  int exponent;
  bool operator==(const PrimePower&) const = default;
};

/// Ascending prime factorization. Throws std::invalid_argument for n < 1.
std::vector<PrimePower> factorize(long n);
/// Ascending list of positive divisors.
std::vector<long> divisors(long n);

int mobius(long n);
long totient(long n);
long radical(long n);

/// Value of an arithmetic function that may be a logarithm.
struct ArithValue {
  enum class Kind { integer, sign, prime_power_log };
  Kind kind = Kind::integer;
  long value = 0;  ///< integer / sign payload
  long prime = 0;  ///< prime_power_log only
  int exponent = 0;

  static ArithValue integer(long v) { return {Kind::integer, v, 0, 0}; }
  static ArithValue sign(int s) { return {Kind::sign, s, 0, 0}; }
  static ArithValue prime_power_log(long p, int a) { return {Kind::prime_power_log, 0, p, a}; }
  bool operator==(const ArithValue&) const = default;
};

/// log p when n = p^a (returned symbolically), integer 0 otherwise.
ArithValue von_mangoldt(long n);

/// n-th cyclotomic polynomial by exact division of x^n - 1.
IntPolynomial cyclotomic(long n);

/// Numerator (mu(d) = +1 factors) and denominator (mu(d) = -1 factors) of
/// Psi_n before any cancellation.
std::pair<IntPolynomial, IntPolynomial> psi_factors(long n);
/// Psi_n as a normalized rational function.
RationalPolyFraction psi_by_definition(long n);

struct PsiReduced {
  IntPolynomial base;
  int exponent;  ///< +1 or -1
  RationalPolyFraction as_fraction() const;
};

/// (Phi_{rad n}, mu(rad n)) for n >= 2. For n = 1 returns (1 - x, +1):
/// Psi_1 = 1 - x = -Phi_1, a sign exception to the cyclotomic form.
PsiReduced psi_reduced(long n);

/// Jacobi symbol (n / m) for odd m >= 1. Throws std::invalid_argument
/// otherwise.
int jacobi_symbol(long n, long m);

bool is_prime(long n);

}  // namespace qprod
