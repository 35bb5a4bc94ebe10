#pragma once

// Working-precision real and complex numbers backed by MPFR.
//
// Every value carries its own binary precision. Binary operations produce a
// result at the larger of the two operand precisions; there is no global
// precision state. NaN and infinite results are rejected at creation.

#include <mpfr.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace qprod {

/// Target decimal digits plus guard digits carried through every truncation
/// and rounding decision.
struct Precision {
  int digits = 50;
  int guard = 10;

  int working_digits() const { return digits + guard; }
  /// MPFR precision in bits for the working digits, with a small margin.
  mpfr_prec_t bits() const;
  /// Throws std::invalid_argument unless digits >= 10 and guard >= 0.
  void validate() const;

  bool operator==(const Precision&) const = default;
};

/// Raised when a computation produces NaN or an infinity.
class NumericError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class HPReal {
 public:
  explicit HPReal(mpfr_prec_t bits);
  HPReal(long value, mpfr_prec_t bits);
  HPReal(const HPReal& other);
  HPReal(HPReal&& other) noexcept;
  HPReal& operator=(const HPReal& other);
  HPReal& operator=(HPReal&& other) noexcept;
  ~HPReal();

  static HPReal from_double(double value, mpfr_prec_t bits);
  /// Exact ratio num/den rounded once.
  static HPReal ratio(long num, long den, mpfr_prec_t bits);
  /// Decimal literal such as "-1.25e-3". Throws std::invalid_argument.
  static HPReal parse(std::string_view text, mpfr_prec_t bits);
  static HPReal pi(mpfr_prec_t bits);

  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  HPReal& operator+=(const HPReal& rhs);
  HPReal& operator-=(const HPReal& rhs);
  HPReal& operator*=(const HPReal& rhs);
  HPReal& operator/=(const HPReal& rhs);
  HPReal& operator+=(long rhs);
  HPReal& operator-=(long rhs);
  HPReal& operator*=(long rhs);
  HPReal& operator/=(long rhs);
  HPReal operator-() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  /// Base-10 logarithm of |x| as a double; -inf for zero.
  double log10_abs() const;

  /// Scientific notation with `digits` significant digits, e.g. "1.2500e-3".
  std::string to_string(int digits) const;

  /// Throws NumericError on NaN or infinity.
  void check() const;

 private:
  mpfr_t v_;
};

HPReal operator+(const HPReal& a, const HPReal& b);
HPReal operator-(const HPReal& a, const HPReal& b);
HPReal operator*(const HPReal& a, const HPReal& b);
HPReal operator/(const HPReal& a, const HPReal& b);
HPReal operator+(const HPReal& a, long b);
HPReal operator-(const HPReal& a, long b);
HPReal operator*(const HPReal& a, long b);
HPReal operator/(const HPReal& a, long b);
HPReal operator+(long a, const HPReal& b);
HPReal operator-(long a, const HPReal& b);
HPReal operator*(long a, const HPReal& b);
HPReal operator/(long a, const HPReal& b);

std::strong_ordering operator<=>(const HPReal& a, const HPReal& b);
bool operator==(const HPReal& a, const HPReal& b);
std::strong_ordering operator<=>(const HPReal& a, long b);
bool operator==(const HPReal& a, long b);

HPReal abs(const HPReal& x);
HPReal sqrt(const HPReal& x);
HPReal exp(const HPReal& x);
HPReal log(const HPReal& x);
HPReal log1p(const HPReal& x);
HPReal expm1(const HPReal& x);
HPReal pow(const HPReal& base, const HPReal& exponent);
HPReal sin(const HPReal& x);
HPReal cos(const HPReal& x);
HPReal atan2(const HPReal& y, const HPReal& x);
HPReal hypot(const HPReal& x, const HPReal& y);
HPReal floor(const HPReal& x);
/// 10^(-k) at the given precision.
HPReal pow10_neg(int k, mpfr_prec_t bits);
/// Round to `bits` precision.
HPReal with_bits(const HPReal& x, mpfr_prec_t bits);

class HPComplex {
 public:
  explicit HPComplex(mpfr_prec_t bits) : re_(bits), im_(bits) {}
  explicit HPComplex(HPReal re) : re_(std::move(re)), im_(re_.bits()) {}
  HPComplex(HPReal re, HPReal im) : re_(std::move(re)), im_(std::move(im)) {}
  HPComplex(long re, mpfr_prec_t bits) : re_(re, bits), im_(bits) {}

  /// Accepts "a", "a+bi", "a-bi", "bi", "i", "-i" with decimal a and b.
  static HPComplex parse(std::string_view text, mpfr_prec_t bits);

  const HPReal& real() const { return re_; }
  const HPReal& imag() const { return im_; }
  HPReal& real() { return re_; }
  HPReal& imag() { return im_; }
  mpfr_prec_t bits() const { return re_.bits() > im_.bits() ? re_.bits() : im_.bits(); }

  HPComplex& operator+=(const HPComplex& rhs);
  HPComplex& operator-=(const HPComplex& rhs);
  HPComplex& operator*=(const HPComplex& rhs);
  HPComplex& operator/=(const HPComplex& rhs);
  HPComplex& operator*=(const HPReal& rhs);
  HPComplex& operator/=(const HPReal& rhs);
  HPComplex& operator*=(long rhs);
  HPComplex& operator/=(long rhs);
  HPComplex operator-() const { return HPComplex(-re_, -im_); }

  bool is_real() const { return im_.is_zero(); }

  /// "re" when the imaginary part is exactly zero, otherwise "re+imi".
  std::string to_string(int digits) const;

 private:
  HPReal re_;
  HPReal im_;
};

/// Real and imaginary literals of "a", "a+bi", "bi", "-i", ...; an absent
/// part is returned as "0".
struct ComplexLiteral {
  std::string real;
  std::string imag;
};
ComplexLiteral split_complex_literal(std::string_view text);

HPComplex operator+(const HPComplex& a, const HPComplex& b);
HPComplex operator-(const HPComplex& a, const HPComplex& b);
HPComplex operator*(const HPComplex& a, const HPComplex& b);
HPComplex operator/(const HPComplex& a, const HPComplex& b);
HPComplex operator*(const HPComplex& a, const HPReal& b);
HPComplex operator/(const HPComplex& a, const HPReal& b);
HPComplex operator+(const HPComplex& a, long b);
HPComplex operator-(long a, const HPComplex& b);
HPComplex operator*(const HPComplex& a, long b);
HPComplex operator/(const HPComplex& a, long b);
HPComplex operator/(long a, const HPComplex& b);
bool operator==(const HPComplex& a, const HPComplex& b);

HPReal abs(const HPComplex& z);
HPReal arg(const HPComplex& z);
HPComplex conj(const HPComplex& z);
HPComplex exp(const HPComplex& z);
/// Principal branch.
HPComplex log(const HPComplex& z);
/// base^exponent = exp(exponent * log(base)) for real base > 0.
HPComplex pow(const HPReal& base, const HPComplex& exponent);
HPComplex with_bits(const HPComplex& z, mpfr_prec_t bits);

}  // namespace qprod
