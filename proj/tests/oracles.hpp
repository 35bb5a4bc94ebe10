#pragma once

// Reference computations written directly against MPFR/GMP, sharing no code
// with the library's evaluators.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qprod/hp.hpp"
#include "qprod/numtheory.hpp"

namespace oracle {

using qprod::HPComplex;
using qprod::HPReal;

// floor(-log10(|a - b| / max(|a|, |b|))), 1000 when equal
inline int digits_between(const HPComplex& a, const HPComplex& b) {
  const HPReal d = qprod::abs(a - b);
  if (d.is_zero()) return 1000;
  HPReal m = qprod::abs(a);
  HPReal mb = qprod::abs(b);
  if (mb > m) m = mb;
  return static_cast<int>(std::floor(-(d / m).log10_abs()));
}

inline int digits_between(const HPReal& a, const HPReal& b) { return digits_between(HPComplex(a), HPComplex(b)); }

// Gamma(1/4) = sqrt(2 varpi sqrt(2 pi)), varpi = pi / AGM(1, sqrt 2)
inline HPReal gamma_quarter_agm(mpfr_prec_t bits) {
  mpfr_t pi, s2, agm, t;
  mpfr_inits2(bits + 32, pi, s2, agm, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_sqrt_ui(s2, 2, MPFR_RNDN);
  mpfr_set_ui(t, 1, MPFR_RNDN);
  mpfr_agm(agm, t, s2, MPFR_RNDN);
  mpfr_div(agm, pi, agm, MPFR_RNDN);  // varpi
  mpfr_mul_ui(t, pi, 2, MPFR_RNDN);
  mpfr_sqrt(t, t, MPFR_RNDN);
  mpfr_mul(t, t, agm, MPFR_RNDN);
  mpfr_mul_ui(t, t, 2, MPFR_RNDN);
  mpfr_sqrt(t, t, MPFR_RNDN);
  HPReal out(bits);
  mpfr_set(out.get(), t, MPFR_RNDN);
  mpfr_clears(pi, s2, agm, t, static_cast<mpfr_ptr>(nullptr));
  return out;
}

// (q;q)_inf by the pentagonal number theorem. The alternating sum cancels
// down to roughly exp(-pi^2 / (6 (1 - q))), so the working precision grows
// with that.
inline HPReal euler_function(const HPReal& q, mpfr_prec_t bits) {
  mpfr_t sum, term, lq;
  const double loss = 3.0 / (1.0 - q.to_double());
  mpfr_inits2(bits + 32 + static_cast<mpfr_prec_t>(loss), sum, term, lq, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(sum, 1, MPFR_RNDN);
  mpfr_log(lq, q.get(), MPFR_RNDN);
  const double cut = -static_cast<double>(bits + 40) * std::log(2.0) / std::log(q.to_double());
  for (long k = 1;; ++k) {
    const long e1 = k * (3 * k - 1) / 2;
    if (static_cast<double>(e1) > cut) break;
    for (long e : {e1, e1 + k}) {
      mpfr_mul_si(term, lq, e, MPFR_RNDN);
      mpfr_exp(term, term, MPFR_RNDN);
      if (k % 2) {
        mpfr_sub(sum, sum, term, MPFR_RNDN);
      } else {
        mpfr_add(sum, sum, term, MPFR_RNDN);
      }
    }
  }
  HPReal out(bits);
  mpfr_set(out.get(), sum, MPFR_RNDN);
  mpfr_clears(sum, term, lq, static_cast<mpfr_ptr>(nullptr));
  return out;
}

// Gamma_q(n) = prod_{j=1}^{n-1} (1 - q^j) / (1 - q) for integer n >= 1
inline HPReal qfactorial(const HPReal& q, long n, mpfr_prec_t bits) {
  mpfr_t acc, qj, t;
  mpfr_inits2(bits + 32, acc, qj, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(acc, 1, MPFR_RNDN);
  mpfr_set(qj, q.get(), MPFR_RNDN);
  for (long j = 1; j < n; ++j) {
    mpfr_ui_sub(t, 1, qj, MPFR_RNDN);
    mpfr_mul(acc, acc, t, MPFR_RNDN);
    mpfr_ui_sub(t, 1, q.get(), MPFR_RNDN);
    mpfr_div(acc, acc, t, MPFR_RNDN);
    mpfr_mul(qj, qj, q.get(), MPFR_RNDN);
  }
  HPReal out(bits);
  mpfr_set(out.get(), acc, MPFR_RNDN);
  mpfr_clears(acc, qj, t, static_cast<mpfr_ptr>(nullptr));
  return out;
}

inline long totient_by_gcd(long n) {
  long c = 0;
  for (long k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

inline int mobius_by_trial(long n) {
  int s = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    s = -s;
  }
  return n > 1 ? -s : s;
}

}  // namespace oracle
