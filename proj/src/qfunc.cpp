#include "qprod/qfunc.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

namespace qprod {

namespace {

constexpr double kLog10Two = 0.30102999566398120;

HPComplex one_minus(const HPComplex& u) { return 1 - u; }

bool is_nonpositive_integer(const HPComplex& x) {
  return x.imag().is_zero() && x.real().is_integer() && x.real().sign() <= 0;
}

}  // namespace

QParam::QParam(HPReal q) : q_(std::move(q)) {
  if (q_.sign() <= 0 || q_ >= 1L) throw std::invalid_argument("q must satisfy 0 < q < 1");
}

QParam QParam::power(long k) const {
  if (k < 1) throw std::invalid_argument("QParam::power: exponent must be positive");
  HPReal r = q_;
  mpfr_pow_si(r.get(), q_.get(), k, MPFR_RNDN);
  return QParam(std::move(r));
}

long geometric_cutoff(const HPReal& scale, const HPReal& q, int working_digits) {
  if (scale.is_zero()) return 0;
  const double ls = scale.log10_abs();
  const double lq = q.log10_abs();  // negative
  const double l1q = (1L - q).log10_abs();
  const double tail = (working_digits + kLog10Two + ls - l1q) / -lq;
  const double half = (ls + kLog10Two) / -lq;
  const double n = std::max({0.0, tail, half});
  if (n > 1e12) throw std::domain_error("product truncation point is unreasonably large");
  return static_cast<long>(std::ceil(n)) + 1;
}

HPComplex qpochhammer(const HPComplex& a, const QParam& q, long n, const Precision& prec) {
  if (n < 0) throw std::invalid_argument("qpochhammer: length must be non-negative");
  const mpfr_prec_t bits = prec.bits();
  HPComplex acc(1, bits);
  HPComplex term = with_bits(a, bits);
  for (long k = 0; k < n; ++k) {
    acc *= one_minus(term);
    term *= q.value();
  }
  return acc;
}

HPComplex qpochhammer(const HPComplex& a, const QParam& q, const Precision& prec, double refine) {
  const long n = geometric_cutoff(abs(a), q.value(), prec.working_digits());
  const long terms = static_cast<long>(std::ceil(static_cast<double>(n) * refine));
  const mpfr_prec_t bits = prec.bits();
  if (a.is_real()) {
    HPReal acc(1, bits);
    HPReal term = with_bits(a.real(), bits);
    for (long k = 0; k < terms; ++k) {
      acc *= 1L - term;
      term *= q.value();
    }
    return HPComplex(std::move(acc));
  }
  return qpochhammer(a, q, terms, prec);
}

HPComplex qgamma(const HPComplex& x, const QParam& q, const Precision& prec, double refine) {
  const mpfr_prec_t bits = prec.bits();
  const HPReal eps = pow10_neg(prec.working_digits(), bits);
  const HPReal log_q = log(with_bits(q.value(), bits));
  const HPComplex qx = exp(with_bits(x, bits) * log_q);

  // (q^x; q)_inf with a pole check on every factor.
  const long n = geometric_cutoff(abs(qx), q.value(), prec.working_digits());
  const long terms = static_cast<long>(std::ceil(static_cast<double>(n) * refine));
  HPComplex den(1, bits);
  HPComplex term = qx;
  for (long k = 0; k < terms; ++k) {
    HPComplex f = one_minus(term);
    if (abs(f) < eps) throw SingularArgument("q-gamma pole at x = " + x.to_string(12));
    den *= f;
    term *= q.value();
  }

  HPComplex num = qpochhammer(HPComplex(q.value()), q, prec, refine);
  HPComplex prefactor = pow(1L - with_bits(q.value(), bits), 1 - with_bits(x, bits));
  return prefactor * num / den;
}

// ---------------------------------------------------------------------------

mpq_class bernoulli_even(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli_even: index must be non-negative");
  static std::mutex mutex;
  static std::vector<mpq_class> b{mpq_class(1)};  // B_0, B_1, B_2, ...
  std::lock_guard lock(mutex);
  const std::size_t need = static_cast<std::size_t>(2 * k);
  while (b.size() <= need) {
    const std::size_t m = b.size();
    mpq_class sum = 0;
    mpz_class binom = 1;  // C(m+1, j)
    for (std::size_t j = 0; j < m; ++j) {
      sum += binom * b[j];
      binom = binom * static_cast<unsigned long>(m + 1 - j) / static_cast<unsigned long>(j + 1);
    }
    mpq_class bm = -sum / static_cast<unsigned long>(m + 1);
    bm.canonicalize();
    b.push_back(bm);
  }
  return b[need];
}

namespace {

HPReal to_hp(const mpq_class& q, mpfr_prec_t bits) {
  HPReal r(bits);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

// log Gamma(z) for Re z large, Stirling series with the remainder bound
// |R_K| <= |B_{2K+2}| / ((2K+2)(2K+1)|z|^{2K+1}) * sec^{2K+2}(arg(z)/2).
HPComplex log_gamma_stirling(const HPComplex& z, int working_digits, mpfr_prec_t bits) {
  const HPReal eps = pow10_neg(working_digits + 2, bits);
  const HPReal pi = HPReal::pi(bits);
  HPComplex result = (z - HPComplex(HPReal::ratio(1, 2, bits))) * log(z);
  result -= z;
  result += HPComplex(log(pi * 2L) / 2L);

  const HPReal mod = abs(z);
  const HPReal sec_half = 1L / cos(arg(z) / 2L);
  const HPComplex inv_z = 1L / z;
  const HPComplex inv_z2 = inv_z * inv_z;
  HPComplex power = inv_z;  // z^{-(2k-1)}
  HPReal mod_power = 1L / mod;
  HPReal sec_power = sec_half * sec_half;
  for (int k = 1; k < 2000; ++k) {
    const HPReal coeff = to_hp(bernoulli_even(k), bits) / static_cast<long>(2 * k * (2 * k - 1));
    result += power * coeff;
    power *= inv_z2;
    mod_power /= mod;
    mod_power /= mod;
    sec_power *= sec_half;
    sec_power *= sec_half;
    const HPReal bound = abs(to_hp(bernoulli_even(k + 1), bits)) * mod_power * sec_power /
                         static_cast<long>((2 * k + 2) * (2 * k + 1));
    if (bound < eps) return result;
  }
  throw std::domain_error("Stirling series did not reach the requested accuracy");
}

}  // namespace

HPComplex gamma_classical(const HPComplex& x, const Precision& prec) {
  if (is_nonpositive_integer(x)) throw SingularArgument("gamma pole at x = " + x.to_string(12));
  const mpfr_prec_t bits = prec.bits() + 32;
  const int wd = prec.working_digits();
  // Shift so Re z >= R; the smallest Stirling term is about exp(-2 pi |z|).
  const double r = std::max(12.0, std::ceil(0.4 * wd) + 4.0);
  const double re = x.real().to_double();
  const long shift = re >= r ? 0 : static_cast<long>(std::ceil(r - re));

  HPComplex xs = with_bits(x, bits);
  HPComplex den(1, bits);
  for (long j = 0; j < shift; ++j) den *= xs + j;
  HPComplex z = xs + shift;
  HPComplex g = exp(log_gamma_stirling(z, wd, bits)) / den;
  return with_bits(g, prec.bits());
}

HPReal gamma_classical(const HPReal& x, const Precision& prec) {
  return gamma_classical(HPComplex(x), prec).real();
}

HPReal jackson_value(JacksonId id, const Precision& prec) {
  const mpfr_prec_t bits = prec.bits() + 32;
  Precision inner = prec;
  inner.guard += 10;
  const HPReal pi = HPReal::pi(bits);
  const HPReal g = with_bits(gamma_classical(HPReal::ratio(1, 4, bits), inner), bits);
  const HPReal two(2, bits);
  const HPReal sqrt_1_sqrt2 = sqrt(1L + sqrt(two));
  auto e_pi = [&](long num, long den) { return exp(pi * num / den); };
  auto two_pow = [&](long num, long den) { return pow(two, HPReal::ratio(num, den, bits)); };
  auto pi_pow = [&](long num, long den) { return pow(pi, HPReal::ratio(num, den, bits)); };

  HPReal v(bits);
  switch (id) {
    case JacksonId::qtr_4pi:
      v = e_pi(-29, 8) * (e_pi(4, 1) - 1L) * g * g / (two_pow(23, 8) * pi_pow(3, 2));
      break;
    case JacksonId::half_4pi:
      v = e_pi(-7, 4) * sqrt(e_pi(4, 1) - 1L) * g / (two_pow(7, 4) * pi_pow(3, 4));
      break;
    case JacksonId::half_8pi:
      v = e_pi(-7, 2) * sqrt(e_pi(8, 1) - 1L) * g / (two_pow(9, 4) * pi_pow(3, 4) * sqrt_1_sqrt2);
      break;
    case JacksonId::qtr_8pi:
      v = e_pi(-29, 4) * (e_pi(8, 1) - 1L) * g * g / (16L * pi_pow(3, 2) * sqrt_1_sqrt2);
      break;
  }
  return with_bits(v, prec.bits());
}

HPReal numeric_value(const ArithValue& v, mpfr_prec_t bits) {
  if (v.kind == ArithValue::Kind::prime_power_log) return log(HPReal(v.prime, bits));
  return HPReal(v.value, bits);
}

}  // namespace qprod
