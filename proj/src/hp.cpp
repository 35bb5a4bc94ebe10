#include "qprod/hp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <limits>
#include <memory>

namespace qprod {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

mpfr_prec_t max_bits(const HPReal& a, const HPReal& b) { return std::max(a.bits(), b.bits()); }

bool parse_long(std::string_view s, long& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  long v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    if (v > (std::numeric_limits<long>::max() - 9) / 10) return false;
    v = v * 10 + (s[i] - '0');
  }
  out = neg ? -v : v;
  return true;
}

bool is_decimal(std::string_view s) {
  // [+-]digits[.digits][e[+-]digits], at least one mantissa digit.
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t mantissa = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++mantissa;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++mantissa;
  }
  if (mantissa == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t e = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++e;
    if (e == 0) return false;
  }
  return i == s.size();
}

}  // namespace

mpfr_prec_t Precision::bits() const {
  return static_cast<mpfr_prec_t>(std::ceil(working_digits() * 3.321928094887362)) + 16;
}

void Precision::validate() const {
  if (digits < 10) throw std::invalid_argument("precision: digits must be at least 10");
  if (guard < 0) throw std::invalid_argument("precision: guard must be non-negative");
}

// ---------------------------------------------------------------------------
// HPReal

HPReal::HPReal(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

HPReal::HPReal(long value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value, kRnd);
}

HPReal::HPReal(const HPReal& other) {
  mpfr_init2(v_, other.bits());
  mpfr_set(v_, other.v_, kRnd);
}

HPReal::HPReal(HPReal&& other) noexcept {
  // Steal the limb storage; the moved-from object is left without limbs and
  // is only ever destroyed or assigned to.
  std::memcpy(v_, other.v_, sizeof(mpfr_t));
  other.v_->_mpfr_d = nullptr;
}

HPReal& HPReal::operator=(const HPReal& other) {
  if (this == &other) return *this;
  if (v_->_mpfr_d == nullptr) {
    mpfr_init2(v_, other.bits());
  } else if (bits() != other.bits()) {
    mpfr_set_prec(v_, other.bits());
  }
  mpfr_set(v_, other.v_, kRnd);
  return *this;
}

HPReal& HPReal::operator=(HPReal&& other) noexcept {
  if (this == &other) return *this;
  if (v_->_mpfr_d != nullptr) mpfr_clear(v_);
  std::memcpy(v_, other.v_, sizeof(mpfr_t));
  other.v_->_mpfr_d = nullptr;
  return *this;
}

HPReal::~HPReal() {
  if (v_->_mpfr_d != nullptr) mpfr_clear(v_);
}

HPReal HPReal::from_double(double value, mpfr_prec_t bits) {
  HPReal r(bits);
  mpfr_set_d(r.v_, value, kRnd);
  r.check();
  return r;
}

HPReal HPReal::ratio(long num, long den, mpfr_prec_t bits) {
  if (den == 0) throw std::invalid_argument("ratio with zero denominator");
  HPReal r(num, bits + 64);
  mpfr_div_si(r.v_, r.v_, den, kRnd);
  return with_bits(r, bits);
}

HPReal HPReal::pi(mpfr_prec_t bits) {
  HPReal r(bits);
  mpfr_const_pi(r.v_, kRnd);
  return r;
}

HPReal HPReal::parse(std::string_view text, mpfr_prec_t bits) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw std::invalid_argument("empty number");

  // e^-pi, e^-2pi, ... : exp(-k*pi)
  if (s.rfind("e^-", 0) == 0 && s.size() >= 5 && s.substr(s.size() - 2) == "pi") {
    std::string_view mid = std::string_view(s).substr(3, s.size() - 5);
    long k = 1;
    if (!mid.empty() && (!parse_long(mid, k) || k <= 0)) {
      throw std::invalid_argument("malformed exponential literal: " + s);
    }
    HPReal x = pi(bits + 16) * (-k);
    return with_bits(exp(x), bits);
  }

  // integer ratio "a/b"
  if (auto slash = s.find('/'); slash != std::string::npos) {
    long num = 0;
    long den = 0;
    if (!parse_long(std::string_view(s).substr(0, slash), num) ||
        !parse_long(std::string_view(s).substr(slash + 1), den) || den == 0) {
      throw std::invalid_argument("malformed ratio: " + s);
    }
    return ratio(num, den, bits);
  }

  if (!is_decimal(s)) throw std::invalid_argument("malformed number: " + s);
  HPReal r(bits);
  if (mpfr_set_str(r.v_, s.c_str(), 10, kRnd) != 0 && !mpfr_number_p(r.v_)) {
    throw std::invalid_argument("malformed number: " + s);
  }
  r.check();
  return r;
}

void HPReal::check() const {
  if (mpfr_nan_p(v_)) throw NumericError("NaN produced");
  if (mpfr_inf_p(v_)) throw NumericError("infinity produced");
}

#define QPROD_ASSIGN_OP(op, fn, fn_si)                     \
  HPReal& HPReal::operator op(const HPReal& rhs) {         \
    if (rhs.bits() > bits()) mpfr_prec_round(v_, rhs.bits(), kRnd); \
    fn(v_, v_, rhs.v_, kRnd);                              \
    check();                                               \
    return *this;                                          \
  }                                                        \
  HPReal& HPReal::operator op(long rhs) {                  \
    fn_si(v_, v_, rhs, kRnd);                              \
    check();                                               \
    return *this;                                          \
  }

QPROD_ASSIGN_OP(+=, mpfr_add, mpfr_add_si)
QPROD_ASSIGN_OP(-=, mpfr_sub, mpfr_sub_si)
QPROD_ASSIGN_OP(*=, mpfr_mul, mpfr_mul_si)
QPROD_ASSIGN_OP(/=, mpfr_div, mpfr_div_si)

#undef QPROD_ASSIGN_OP

HPReal HPReal::operator-() const {
  HPReal r(bits());
  mpfr_neg(r.v_, v_, kRnd);
  return r;
}

double HPReal::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, kRnd);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

std::string HPReal::to_string(int digits) const {
  check();
  if (digits < 1) digits = 1;
  if (is_zero()) return "0";
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), v_, kRnd);
  std::unique_ptr<char, void (*)(char*)> holder(raw, mpfr_free_str);
  std::string m(raw);
  std::string out;
  if (!m.empty() && m[0] == '-') {
    out.push_back('-');
    m.erase(0, 1);
  }
  out.push_back(m[0]);
  if (m.size() > 1) {
    out.push_back('.');
    out.append(m, 1, std::string::npos);
  }
  out.push_back('e');
  out += std::to_string(static_cast<long>(e) - 1);
  return out;
}

#define QPROD_BINARY_OP(op, fn, fn_si, fn_si_rev)                 \
  HPReal operator op(const HPReal& a, const HPReal& b) {          \
    HPReal r(max_bits(a, b));                                     \
    fn(r.get(), a.get(), b.get(), kRnd);                          \
    r.check();                                                    \
    return r;                                                     \
  }                                                               \
  HPReal operator op(const HPReal& a, long b) {                   \
    HPReal r(a.bits());                                           \
    fn_si(r.get(), a.get(), b, kRnd);                             \
    r.check();                                                    \
    return r;                                                     \
  }                                                               \
  HPReal operator op(long a, const HPReal& b) {                   \
    HPReal r(b.bits());                                           \
    fn_si_rev(r.get(), a, b.get(), kRnd);                         \
    r.check();                                                    \
    return r;                                                     \
  }

namespace {
int add_si_rev(mpfr_ptr r, long a, mpfr_srcptr b, mpfr_rnd_t rnd) { return mpfr_add_si(r, b, a, rnd); }
int mul_si_rev(mpfr_ptr r, long a, mpfr_srcptr b, mpfr_rnd_t rnd) { return mpfr_mul_si(r, b, a, rnd); }
}  // namespace

QPROD_BINARY_OP(+, mpfr_add, mpfr_add_si, add_si_rev)
QPROD_BINARY_OP(-, mpfr_sub, mpfr_sub_si, mpfr_si_sub)
QPROD_BINARY_OP(*, mpfr_mul, mpfr_mul_si, mul_si_rev)
QPROD_BINARY_OP(/, mpfr_div, mpfr_div_si, mpfr_si_div)

#undef QPROD_BINARY_OP

std::strong_ordering operator<=>(const HPReal& a, const HPReal& b) {
  int c = mpfr_cmp(a.get(), b.get());
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

std::strong_ordering operator<=>(const HPReal& a, long b) {
  int c = mpfr_cmp_si(a.get(), b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

bool operator==(const HPReal& a, long b) { return mpfr_cmp_si(a.get(), b) == 0; }

#define QPROD_UNARY_FN(name, fn)    \
  HPReal name(const HPReal& x) {    \
    HPReal r(x.bits());             \
    fn(r.get(), x.get(), kRnd);     \
    r.check();                      \
    return r;                       \
  }

QPROD_UNARY_FN(abs, mpfr_abs)
QPROD_UNARY_FN(sqrt, mpfr_sqrt)
QPROD_UNARY_FN(exp, mpfr_exp)
QPROD_UNARY_FN(log, mpfr_log)
QPROD_UNARY_FN(log1p, mpfr_log1p)
QPROD_UNARY_FN(expm1, mpfr_expm1)
QPROD_UNARY_FN(sin, mpfr_sin)
QPROD_UNARY_FN(cos, mpfr_cos)

#undef QPROD_UNARY_FN

HPReal floor(const HPReal& x) {
  HPReal r(x.bits());
  mpfr_floor(r.get(), x.get());
  return r;
}

HPReal pow(const HPReal& base, const HPReal& exponent) {
  HPReal r(max_bits(base, exponent));
  mpfr_pow(r.get(), base.get(), exponent.get(), kRnd);
  r.check();
  return r;
}

HPReal atan2(const HPReal& y, const HPReal& x) {
  HPReal r(max_bits(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  r.check();
  return r;
}

HPReal hypot(const HPReal& x, const HPReal& y) {
  HPReal r(max_bits(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), kRnd);
  r.check();
  return r;
}

HPReal pow10_neg(int k, mpfr_prec_t bits) {
  HPReal r(10, bits);
  mpfr_pow_si(r.get(), r.get(), -static_cast<long>(k), kRnd);
  return r;
}

HPReal with_bits(const HPReal& x, mpfr_prec_t bits) {
  HPReal r(bits);
  mpfr_set(r.get(), x.get(), kRnd);
  return r;
}

// ---------------------------------------------------------------------------
// HPComplex

ComplexLiteral split_complex_literal(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw std::invalid_argument("empty number");
  if (s.back() != 'i' || s.ends_with("pi")) return {s, "0"};

  std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not the leading sign and not part of an
  // exponent ("1e-3").
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E' && body[i - 1] != '^') {
      split = i;
      break;
    }
  }
  auto imag_of = [](std::string coeff) -> std::string {
    if (coeff.empty() || coeff == "+") return "1";
    if (coeff == "-") return "-1";
    if (coeff[0] == '+') coeff.erase(0, 1);
    return coeff;
  };
  if (split == std::string::npos) return {"0", imag_of(body)};
  return {body.substr(0, split), imag_of(body.substr(split))};
}

HPComplex HPComplex::parse(std::string_view text, mpfr_prec_t bits) {
  ComplexLiteral lit = split_complex_literal(text);
  return HPComplex(HPReal::parse(lit.real, bits), HPReal::parse(lit.imag, bits));
}

HPComplex& HPComplex::operator+=(const HPComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

HPComplex& HPComplex::operator-=(const HPComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

HPComplex& HPComplex::operator*=(const HPComplex& rhs) {
  if (rhs.im_.is_zero()) {
    re_ *= rhs.re_;
    im_ *= rhs.re_;
    return *this;
  }
  HPReal re = re_ * rhs.re_;
  re -= im_ * rhs.im_;
  im_ *= rhs.re_;
  im_ += re_ * rhs.im_;
  re_ = std::move(re);
  return *this;
}

HPComplex& HPComplex::operator/=(const HPComplex& rhs) {
  if (rhs.re_.is_zero() && rhs.im_.is_zero()) throw NumericError("complex division by zero");
  if (rhs.im_.is_zero()) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  HPReal den = rhs.re_ * rhs.re_;
  den += rhs.im_ * rhs.im_;
  HPReal re = re_ * rhs.re_;
  re += im_ * rhs.im_;
  HPReal im = im_ * rhs.re_;
  im -= re_ * rhs.im_;
  re /= den;
  im /= den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

HPComplex& HPComplex::operator*=(const HPReal& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

HPComplex& HPComplex::operator/=(const HPReal& rhs) {
  if (rhs.is_zero()) throw NumericError("complex division by zero");
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

HPComplex& HPComplex::operator*=(long rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

HPComplex& HPComplex::operator/=(long rhs) {
  if (rhs == 0) throw NumericError("complex division by zero");
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

std::string HPComplex::to_string(int digits) const {
  if (im_.is_zero()) return re_.to_string(digits);
  std::string im = im_.to_string(digits);
  if (im[0] != '-') im.insert(im.begin(), '+');
  return re_.to_string(digits) + im + "i";
}

HPComplex operator+(const HPComplex& a, const HPComplex& b) {
  HPComplex r = a;
  r += b;
  return r;
}
HPComplex operator-(const HPComplex& a, const HPComplex& b) {
  HPComplex r = a;
  r -= b;
  return r;
}
HPComplex operator*(const HPComplex& a, const HPComplex& b) {
  HPComplex r = a;
  r *= b;
  return r;
}
HPComplex operator/(const HPComplex& a, const HPComplex& b) {
  HPComplex r = a;
  r /= b;
  return r;
}
HPComplex operator*(const HPComplex& a, const HPReal& b) {
  HPComplex r = a;
  r *= b;
  return r;
}
HPComplex operator/(const HPComplex& a, const HPReal& b) {
  HPComplex r = a;
  r /= b;
  return r;
}
HPComplex operator+(const HPComplex& a, long b) { return HPComplex(a.real() + b, a.imag()); }
HPComplex operator-(long a, const HPComplex& b) { return HPComplex(a - b.real(), -b.imag()); }
HPComplex operator*(const HPComplex& a, long b) {
  HPComplex r = a;
  r *= b;
  return r;
}
HPComplex operator/(const HPComplex& a, long b) {
  HPComplex r = a;
  r /= b;
  return r;
}
HPComplex operator/(long a, const HPComplex& b) { return HPComplex(a, b.bits()) / b; }

bool operator==(const HPComplex& a, const HPComplex& b) { return a.real() == b.real() && a.imag() == b.imag(); }

HPReal abs(const HPComplex& z) { return hypot(z.real(), z.imag()); }
HPReal arg(const HPComplex& z) { return atan2(z.imag(), z.real()); }
HPComplex conj(const HPComplex& z) { return HPComplex(z.real(), -z.imag()); }

HPComplex exp(const HPComplex& z) {
  HPReal m = exp(z.real());
  if (z.imag().is_zero()) return HPComplex(std::move(m), HPReal(z.bits()));
  HPReal c(z.bits());
  HPReal s(z.bits());
  mpfr_sin_cos(s.get(), c.get(), z.imag().get(), kRnd);
  return HPComplex(m * c, m * s);
}

HPComplex log(const HPComplex& z) {
  if (z.imag().is_zero() && z.real().sign() > 0) return HPComplex(log(z.real()), HPReal(z.bits()));
  if (z.real().is_zero() && z.imag().is_zero()) throw NumericError("log of zero");
  return HPComplex(log(abs(z)), arg(z));
}

HPComplex pow(const HPReal& base, const HPComplex& exponent) {
  if (base.sign() <= 0) throw std::invalid_argument("pow: base must be positive");
  return exp(exponent * log(base));
}

HPComplex with_bits(const HPComplex& z, mpfr_prec_t bits) {
  return HPComplex(with_bits(z.real(), bits), with_bits(z.imag(), bits));
}

}  // namespace qprod
