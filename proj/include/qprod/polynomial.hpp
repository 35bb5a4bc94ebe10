#pragma once

// Exact integer-coefficient polynomials and normalized quotients of them.

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace qprod {

/// Polynomial with mpz coefficients, lowest degree first. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is
/// nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coefficients);
  explicit IntPolynomial(std::vector<mpz_class> coefficients);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial monomial(const mpz_class& c, std::size_t degree);
  /// 1 - x^d
  static IntPolynomial one_minus_power(std::size_t d);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  mpz_class coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }
  const mpz_class& leading() const;

  /// gcd of the coefficients, non-negative.
  mpz_class content() const;
  /// p(x^k)
  IntPolynomial substitute_power(std::size_t k) const;
  mpz_class evaluate(const mpz_class& x) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const mpz_class& rhs);
  IntPolynomial operator-() const;

  /// "1 - x + x^2" style, ascending powers; "0" for the zero polynomial.
  std::string to_string() const;

  bool operator==(const IntPolynomial& rhs) const = default;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b);
IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

struct PolyDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Division over Z; throws std::domain_error if some quotient coefficient is
/// not an integer (i.e. the leading coefficient of `b` does not divide).
PolyDivision divide(const IntPolynomial& a, const IntPolynomial& b);
/// a / b asserting a zero remainder; throws std::domain_error otherwise.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);
/// Divides every coefficient by `c`, which must divide each exactly.
IntPolynomial exact_divide(const IntPolynomial& a, const mpz_class& c);
/// Primitive part with positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);
/// Greatest common divisor in Z[x], primitive with positive leading
/// coefficient (primitive pseudo-remainder sequence).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// numerator / denominator, kept coprime with a positive leading
/// coefficient in the denominator and no common integer content.
class RationalPolyFraction {
 public:
  RationalPolyFraction() : num_(), den_({1}) {}
  explicit RationalPolyFraction(IntPolynomial numerator);
  /// Normalizes; throws std::invalid_argument for a zero denominator.
  RationalPolyFraction(IntPolynomial numerator, IntPolynomial denominator);

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0 && den_.leading() == 1; }

  RationalPolyFraction inverse() const;
  RationalPolyFraction pow(long exponent) const;
  RationalPolyFraction substitute_power(std::size_t k) const;

  std::string to_string() const;

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

RationalPolyFraction operator*(const RationalPolyFraction& a, const RationalPolyFraction& b);
RationalPolyFraction operator/(const RationalPolyFraction& a, const RationalPolyFraction& b);
/// Cross-multiplied equality, independent of normalization.
bool operator==(const RationalPolyFraction& a, const RationalPolyFraction& b);

}  // namespace qprod
