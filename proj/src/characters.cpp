#include "qprod/characters.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "qprod/numtheory.hpp"

namespace qprod {

namespace {

long mod_pow(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = static_cast<long>((static_cast<__int128>(r) * b) % m);
    b = static_cast<long>((static_cast<__int128>(b) * b) % m);
    e >>= 1;
  }
  return r;
}

long multiplicative_order(long a, long m) {
  long x = a % m;
  long k = 1;
  while (x != 1 % m) {
    x = x * a % m;
    ++k;
  }
  return k;
}

// Smallest primitive root modulo an odd prime power p^e.
long primitive_root(long p, long pe) {
  long phi = pe / p * (p - 1);
  auto factors = factorize(phi);
  for (long g = 2; g < pe; ++g) {
    if (std::gcd(g, p) != 1) continue;
    bool ok = true;
    for (const auto& f : factors) {
      if (mod_pow(g, phi / f.prime, pe) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

// x == r (mod m) and x == 1 (mod k/m), with gcd(m, k/m) = 1.
long crt_lift(long r, long m, long k) {
  long other = k / m;
  for (long x = r % m; x < k; x += m) {
    if (x % other == 1 % other) return x;
  }
  throw std::logic_error("CRT lift failed");
}

}  // namespace

RootOfUnity::RootOfUnity(long numerator, long order) {
  if (order < 1) throw std::invalid_argument("root of unity order must be positive");
  long n = numerator % order;
  if (n < 0) n += order;
  long g = std::gcd(n, order);
  if (g == 0) g = order;
  num_ = n / g;
  ord_ = order / g;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& rhs) const {
  long l = std::lcm(ord_, rhs.ord_);
  return RootOfUnity(num_ * (l / ord_) + rhs.num_ * (l / rhs.ord_), l);
}

HPComplex RootOfUnity::to_complex(mpfr_prec_t bits) const {
  if (num_ == 0) return HPComplex(1, bits);
  if (ord_ == 2) return HPComplex(-1, bits);
  if (ord_ == 4) return HPComplex(HPReal(bits), HPReal(num_ == 1 ? 1 : -1, bits));
  HPReal angle = HPReal::pi(bits + 16) * (2 * num_);
  angle /= ord_;
  return HPComplex(with_bits(cos(angle), bits), with_bits(sin(angle), bits));
}

std::vector<CyclicFactor> unit_group(long k) {
  if (k < 1) throw std::invalid_argument("unit_group: modulus must be positive");
  std::vector<CyclicFactor> out;
  for (const auto& [p, e] : factorize(k)) {
    long pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    if (p == 2) {
      if (e == 1) continue;
      out.push_back({crt_lift(pe - 1, pe, k), 2});
      if (e >= 3) out.push_back({crt_lift(5, pe, k), pe / 4});
    } else {
      out.push_back({crt_lift(primitive_root(p, pe), pe, k), pe / p * (p - 1)});
    }
  }
  return out;
}

DirichletCharacter::DirichletCharacter(long modulus, std::vector<long> exponents)
    : modulus_(modulus), exponents_(std::move(exponents)) {
  if (modulus_ < 1) throw std::invalid_argument("character modulus must be positive");
  group_ = unit_group(modulus_);
  if (exponents_.size() != group_.size()) {
    throw std::invalid_argument("character mod " + std::to_string(modulus_) + " needs " +
                                std::to_string(group_.size()) + " exponents");
  }
  long exponent_lcm = 1;
  for (std::size_t i = 0; i < group_.size(); ++i) {
    if (exponents_[i] < 0 || exponents_[i] >= group_[i].order) {
      throw std::invalid_argument("character exponent out of range");
    }
    exponent_lcm = std::lcm(exponent_lcm, group_[i].order);
  }

  // Walk every product of generator powers; this visits each unit exactly
  // once and gives its discrete logarithms for free.
  table_.assign(static_cast<std::size_t>(modulus_), std::nullopt);
  std::vector<long> logs(group_.size(), 0);
  long residue = 1 % modulus_;
  while (true) {
    long numerator = 0;
    for (std::size_t i = 0; i < group_.size(); ++i) {
      numerator += exponents_[i] * logs[i] * (exponent_lcm / group_[i].order);
    }
    table_[static_cast<std::size_t>(residue)] = RootOfUnity(numerator, exponent_lcm);

    std::size_t i = 0;
    for (; i < group_.size(); ++i) {
      residue = residue * group_[i].generator % modulus_;
      if (++logs[i] < group_[i].order) break;
      logs[i] = 0;  // generator power wrapped back to 1
    }
    if (i == group_.size()) break;
  }
  if (modulus_ == 1) table_[0] = RootOfUnity();

  order_ = 1;
  for (const auto& v : table_) {
    if (v) order_ = std::lcm(order_, v->order());
  }
}

std::optional<RootOfUnity> DirichletCharacter::value(long n) const {
  long r = n % modulus_;
  if (r < 0) r += modulus_;
  return table_[static_cast<std::size_t>(r)];
}

bool DirichletCharacter::is_principal() const {
  for (long e : exponents_) {
    if (e != 0) return false;
  }
  return true;
}

std::vector<DirichletCharacter> enumerate_characters(long k) {
  if (k < 1) throw std::invalid_argument("enumerate_characters: modulus must be positive");
  auto group = unit_group(k);
  std::vector<DirichletCharacter> out;
  std::vector<long> e(group.size(), 0);
  while (true) {
    out.emplace_back(k, e);
    // Odometer with the last exponent varying fastest gives lexicographic order.
    std::size_t i = group.size();
    while (i > 0) {
      --i;
      if (++e[i] < group[i].order) break;
      e[i] = 0;
      if (i == 0) return out;
    }
    if (group.empty()) return out;
  }
}

std::optional<RootOfUnity> evaluate(const DirichletCharacter& chi, long n) { return chi.value(n); }

HPComplex evaluate_numeric(const DirichletCharacter& chi, long n, mpfr_prec_t bits) {
  auto v = chi.value(n);
  return v ? v->to_complex(bits) : HPComplex(bits);
}

Conductor conductor(const DirichletCharacter& chi) {
  const long k = chi.modulus();
  for (long f : divisors(k)) {
    bool trivial = true;
    for (long a = 1 + f; a <= k && trivial; a += f) {
      if (std::gcd(a, k) != 1) continue;
      trivial = chi.value(a)->is_one();
    }
    if (trivial) return {f, f == k};
  }
  return {k, true};
}

DirichletCharacter primitive_inducing(const DirichletCharacter& chi) {
  const long f = conductor(chi).value;
  const long k = chi.modulus();
  for (auto& candidate : enumerate_characters(f)) {
    bool match = true;
    for (long n = 1; n <= k && match; ++n) {
      if (std::gcd(n, k) != 1) continue;
      match = candidate.value(n) == chi.value(n);
    }
    if (match) return candidate;
  }
  throw std::logic_error("no inducing character found");
}

DirichletCharacter legendre_character(long p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("legendre_character: p must be an odd prime");
  }
  return DirichletCharacter(p, {(p - 1) / 2});
}

}  // namespace qprod
