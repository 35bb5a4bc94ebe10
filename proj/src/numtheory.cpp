#include "qprod/numtheory.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace qprod {

namespace {

void require_positive(long n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": argument must be a positive integer");
}

}  // namespace

std::vector<PrimePower> factorize(long n) {
  require_positive(n, "factorize");
  std::vector<PrimePower> out;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<long> divisors(long n) {
  require_positive(n, "divisors");
  std::vector<long> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    long pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(long n) {
  require_positive(n, "mobius");
  int s = 1;
  for (const auto& f : factorize(n)) {
    if (f.exponent > 1) return 0;
    s = -s;
  }
  return s;
}

long totient(long n) {
  require_positive(n, "totient");
  long r = n;
  for (const auto& f : factorize(n)) r = r / f.prime * (f.prime - 1);
  return r;
}

long radical(long n) {
  require_positive(n, "radical");
  long r = 1;
  for (const auto& f : factorize(n)) r *= f.prime;
  return r;
}

ArithValue von_mangoldt(long n) {
  require_positive(n, "von_mangoldt");
  auto f = factorize(n);
  if (f.size() == 1) return ArithValue::prime_power_log(f[0].prime, f[0].exponent);
  return ArithValue::integer(0);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

IntPolynomial cyclotomic(long n) {
  require_positive(n, "cyclotomic");
  // Bottom-up over the divisors; each Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e.
  std::map<long, IntPolynomial> phi;
  for (long d : divisors(n)) {
    IntPolynomial acc = -IntPolynomial::one_minus_power(static_cast<std::size_t>(d));
    for (long e : divisors(d)) {
      if (e == d) break;
      acc = exact_divide(acc, phi.at(e));
    }
    phi.emplace(d, std::move(acc));
  }
  return phi.at(n);
}

std::pair<IntPolynomial, IntPolynomial> psi_factors(long n) {
  require_positive(n, "psi");
  IntPolynomial num({1});
  IntPolynomial den({1});
  for (long d : divisors(n)) {
    int m = mobius(d);
    if (m == 1) num *= IntPolynomial::one_minus_power(static_cast<std::size_t>(d));
    if (m == -1) den *= IntPolynomial::one_minus_power(static_cast<std::size_t>(d));
  }
  return {std::move(num), std::move(den)};
}

RationalPolyFraction psi_by_definition(long n) {
  auto [num, den] = psi_factors(n);
  return RationalPolyFraction(std::move(num), std::move(den));
}

RationalPolyFraction PsiReduced::as_fraction() const {
  RationalPolyFraction f(base);
  return exponent >= 0 ? f : f.inverse();
}

PsiReduced psi_reduced(long n) {
  require_positive(n, "psi_reduced");
  if (n == 1) return {IntPolynomial::one_minus_power(1), 1};
  long r = radical(n);
  return {cyclotomic(r), mobius(r)};
}

int jacobi_symbol(long n, long m) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("jacobi_symbol: modulus must be an odd positive integer");
  long a = n % m;
  if (a < 0) a += m;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long r = m % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) t = -t;
    a %= m;
  }
  return m == 1 ? t : 0;
}

}  // namespace qprod
