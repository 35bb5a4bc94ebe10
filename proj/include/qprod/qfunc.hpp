#pragma once

// q-Pochhammer symbols, the q-gamma function, the classical gamma function,
// and closed forms for q-gamma at q = e^{-4 pi}, e^{-8 pi}.
//
// Truncation rule for infinite products of factors (1 - u_n) with geometric
// |u_n|: stop at the first N such that every remaining factor has
// |u_n| <= 1/2 and 2 * sum_{n >= N} |u_n| < 10^-(digits + guard). Since
// |log(1 - u)| <= 2|u| for |u| <= 1/2, the neglected tail changes the product
// by a relative amount below one guard-digit unit.

#include <stdexcept>

#include "qprod/hp.hpp"
#include "qprod/numtheory.hpp"

namespace qprod {

/// Argument at (or within working precision of) a pole.
class SingularArgument : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Real nome 0 < q < 1.
class QParam {
 public:
  explicit QParam(HPReal q);
  const HPReal& value() const { return q_; }
  /// q^k
  QParam power(long k) const;

 private:
  HPReal q_;
};

/// Smallest N with 2 * scale * q^N / (1 - q) < 10^-working_digits and
/// scale * q^N <= 1/2. `scale` is a bound on |u_0| for u_n = u_0 q^n.
long geometric_cutoff(const HPReal& scale, const HPReal& q, int working_digits);

/// (a; q)_n for finite n >= 0. Throws std::invalid_argument for n < 0.
HPComplex qpochhammer(const HPComplex& a, const QParam& q, long n, const Precision& prec);
/// (a; q)_infinity. `refine` multiplies the truncation point.
HPComplex qpochhammer(const HPComplex& a, const QParam& q, const Precision& prec, double refine = 1.0);

/// Gamma_q(x) = (1-q)^{1-x} (q;q)_inf / (q^x;q)_inf, with q^x = exp(x log q).
/// Throws SingularArgument when some |1 - q^{n+x}| < 10^-(digits+guard).
HPComplex qgamma(const HPComplex& x, const QParam& q, const Precision& prec, double refine = 1.0);

/// Gamma(x) by the Stirling series after shifting Re x upward. Throws
/// SingularArgument at non-positive integers.
HPComplex gamma_classical(const HPComplex& x, const Precision& prec);
HPReal gamma_classical(const HPReal& x, const Precision& prec);

/// B_{2k} as an exact rational, k >= 0.
mpq_class bernoulli_even(int k);

enum class JacksonId { qtr_4pi, half_4pi, half_8pi, qtr_8pi };

/// Closed forms:
///   qtr_4pi  : Gamma_q(1/4) Gamma_q(3/4), q = e^{-4 pi}
///   half_4pi : Gamma_q(1/2),              q = e^{-4 pi}
///   half_8pi : Gamma_q(1/2),              q = e^{-8 pi}
///   qtr_8pi  : Gamma_q(1/4) Gamma_q(3/4), q = e^{-8 pi}
HPReal jackson_value(JacksonId id, const Precision& prec);

/// Numeric value of a von Mangoldt result: log p or the integer payload.
HPReal numeric_value(const ArithValue& v, mpfr_prec_t bits);

}  // namespace qprod
