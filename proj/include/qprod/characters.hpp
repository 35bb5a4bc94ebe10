#pragma once

// Dirichlet characters mod k.
//
// The unit group (Z/kZ)^* is decomposed over the prime powers of k: odd
// p^e is cyclic with a primitive root, 4 is generated by -1, and 2^e (e >= 3)
// by {-1, 5}. Generators are lifted to Z/kZ through the CRT. A character is
// an exponent vector a with chi(g_i) = exp(2 pi i a_i / ord(g_i)); its full
// value table is built once at construction.

#include <optional>
#include <span>
#include <vector>

#include "qprod/hp.hpp"

namespace qprod {

/// exp(2 pi i numerator / order), stored in lowest terms.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(long numerator, long order);

  long numerator() const { return num_; }
  long order() const { return ord_; }
  bool is_one() const { return num_ == 0; }

  RootOfUnity operator*(const RootOfUnity& rhs) const;
  RootOfUnity conj() const { return RootOfUnity(ord_ - num_, ord_); }
  bool operator==(const RootOfUnity&) const = default;

  /// Unit-modulus complex value; exact for orders 1, 2 and 4.
  HPComplex to_complex(mpfr_prec_t bits) const;

 private:
  long num_ = 0;
  long ord_ = 1;
};

struct CyclicFactor {
  long generator;  ///< residue mod k
  long order;
  bool operator==(const CyclicFactor&) const = default;
};

/// Generators of (Z/kZ)^*, one per cyclic factor. Empty for k <= 2.
std::vector<CyclicFactor> unit_group(long k);

class DirichletCharacter {
 public:
  /// Throws std::invalid_argument if k < 1, the exponent count does not
  /// match the group structure, or an exponent is out of range.
  DirichletCharacter(long modulus, std::vector<long> exponents);

  long modulus() const { return modulus_; }
  std::span<const CyclicFactor> group_structure() const { return group_; }
  std::span<const long> exponents() const { return exponents_; }

  /// nullopt encodes the value 0 (gcd(n, k) > 1).
  std::optional<RootOfUnity> value(long n) const;
  bool is_principal() const;
  /// Real-valued (order 1 or 2).
  bool is_real() const { return order_ <= 2; }
  long order() const { return order_; }

  bool operator==(const DirichletCharacter& rhs) const {
    return modulus_ == rhs.modulus_ && exponents_ == rhs.exponents_;
  }

 private:
  long modulus_;
  std::vector<CyclicFactor> group_;
  std::vector<long> exponents_;
  std::vector<std::optional<RootOfUnity>> table_;
  long order_ = 1;
};

/// All phi(k) characters, lexicographic in their exponent vectors; the
/// principal character comes first.
std::vector<DirichletCharacter> enumerate_characters(long k);

std::optional<RootOfUnity> evaluate(const DirichletCharacter& chi, long n);

/// Numeric chi(n) at the given precision (zero when gcd(n, k) > 1).
HPComplex evaluate_numeric(const DirichletCharacter& chi, long n, mpfr_prec_t bits);

struct Conductor {
  long value;
  bool primitive;
};

Conductor conductor(const DirichletCharacter& chi);

/// The primitive character mod conductor(chi) that induces chi.
DirichletCharacter primitive_inducing(const DirichletCharacter& chi);

/// Quadratic character mod an odd prime p.
DirichletCharacter legendre_character(long p);

}  // namespace qprod
