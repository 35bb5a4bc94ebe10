#include "qprod/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace qprod {

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_minus_power(std::size_t d) {
  if (d == 0) return IntPolynomial();
  std::vector<mpz_class> v(d + 1);
  v[0] = 1;
  v[d] = -1;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::substitute_power(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("substitute_power: k must be positive");
  if (coeffs_.empty()) return {};
  std::vector<mpz_class> v((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return IntPolynomial(std::move(v));
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r = a;
  r *= b;
  return r;
}

PolyDivision divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<mpz_class> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const mpz_class& lead = bc.back();
  if (rem.size() < bc.size()) return {IntPolynomial(), a};
  std::vector<mpz_class> quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lead.get_mpz_t())) {
      throw std::domain_error("polynomial division leaves a non-integral quotient");
    }
    mpz_class t = rem[k] / lead;
    quot[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[k - db + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  PolyDivision d = divide(a, b);
  if (!d.remainder.is_zero()) throw std::domain_error("exact polynomial division has a nonzero remainder");
  return std::move(d.quotient);
}

IntPolynomial exact_divide(const IntPolynomial& a, const mpz_class& c) {
  if (c == 0) throw std::invalid_argument("division by zero");
  std::vector<mpz_class> v = a.coefficients();
  for (auto& x : v) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) throw std::domain_error("inexact content division");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  mpz_class c = p.content();
  if (p.leading() < 0) c = -c;
  return exact_divide(p, c);
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed over Z.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const mpz_class& lead = bc.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    mpz_class t = rem[k];
    if (t == 0) continue;
    for (auto& c : rem) c *= lead;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[k - db + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
  }
  return IntPolynomial(std::move(rem));
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  mpz_class content_gcd;
  mpz_class ca = a.content();
  mpz_class cb = b.content();
  mpz_gcd(content_gcd.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

  IntPolynomial r0 = primitive_part(a);
  IntPolynomial r1 = primitive_part(b);
  if (r0.degree() < r1.degree()) std::swap(r0, r1);
  while (!r1.is_zero()) {
    IntPolynomial r2 = primitive_part(pseudo_remainder(r0, r1));
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  r0 *= content_gcd;
  return r0;
}

// ---------------------------------------------------------------------------

RationalPolyFraction::RationalPolyFraction(IntPolynomial numerator) : num_(std::move(numerator)), den_({1}) {}

RationalPolyFraction::RationalPolyFraction(IntPolynomial numerator, IntPolynomial denominator) {
  if (denominator.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  if (numerator.is_zero()) {
    num_ = IntPolynomial();
    den_ = IntPolynomial({1});
    return;
  }
  IntPolynomial g = gcd(numerator, denominator);
  // The gcd carries the integer content gcd too, so one division clears both.
  num_ = exact_divide(numerator, g);
  den_ = exact_divide(denominator, g);
  mpz_class c;
  mpz_class cn = num_.content();
  mpz_class cd = den_.content();
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    num_ = exact_divide(num_, c);
    den_ = exact_divide(den_, c);
  }
}

RationalPolyFraction RationalPolyFraction::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of the zero rational function");
  return RationalPolyFraction(den_, num_);
}

RationalPolyFraction RationalPolyFraction::pow(long exponent) const {
  RationalPolyFraction base = exponent < 0 ? inverse() : *this;
  IntPolynomial n({1});
  IntPolynomial d({1});
  for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
    n *= base.num_;
    d *= base.den_;
  }
  return RationalPolyFraction(std::move(n), std::move(d));
}

RationalPolyFraction RationalPolyFraction::substitute_power(std::size_t k) const {
  return RationalPolyFraction(num_.substitute_power(k), den_.substitute_power(k));
}

std::string RationalPolyFraction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RationalPolyFraction operator*(const RationalPolyFraction& a, const RationalPolyFraction& b) {
  return RationalPolyFraction(a.numerator() * b.numerator(), a.denominator() * b.denominator());
}

RationalPolyFraction operator/(const RationalPolyFraction& a, const RationalPolyFraction& b) {
  if (b.numerator().is_zero()) throw std::domain_error("division by the zero rational function");
  return RationalPolyFraction(a.numerator() * b.denominator(), a.denominator() * b.numerator());
}

bool operator==(const RationalPolyFraction& a, const RationalPolyFraction& b) {
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

}  // namespace qprod
