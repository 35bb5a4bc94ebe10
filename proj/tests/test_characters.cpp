#include <doctest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "qprod/characters.hpp"
#include "qprod/numtheory.hpp"

using namespace qprod;

namespace {

RootOfUnity R(long num, long ord) { return RootOfUnity(num, ord); }

std::vector<std::optional<RootOfUnity>> table(const DirichletCharacter& chi) {
  std::vector<std::optional<RootOfUnity>> t;
  for (long n = 0; n < chi.modulus(); ++n) t.push_back(chi.value(n));
  return t;
}

}  // namespace

TEST_CASE("roots of unity are kept reduced") {
  CHECK(R(2, 4) == R(1, 2));
  CHECK(R(-1, 4) == R(3, 4));
  CHECK(R(4, 4).is_one());
  CHECK(R(1, 3) * R(2, 3) == R(0, 1));
  CHECK(R(1, 6).conj() == R(5, 6));
  const mpfr_prec_t bits = Precision{}.bits();
  CHECK(R(1, 4).to_complex(bits).imag() == 1L);
  CHECK(R(1, 4).to_complex(bits).real().is_zero());
  CHECK(oracle::digits_between(abs(R(2, 7).to_complex(bits)), HPReal(1, bits)) >= 60);
}

TEST_CASE("mod 4") {
  auto chars = enumerate_characters(4);
  REQUIRE(chars.size() == 2);
  CHECK(chars[0].is_principal());
  const auto& chi = chars[1];
  CHECK(chi.value(1) == R(0, 1));
  CHECK(chi.value(3) == R(1, 2));
  for (const auto& c : chars) CHECK_FALSE(c.value(2).has_value());
  CHECK(conductor(chi).value == 4);
  CHECK(conductor(chi).primitive);
  CHECK(conductor(chars[0]).value == 1);
  CHECK_FALSE(conductor(chars[0]).primitive);
}

TEST_CASE("small moduli") {
  auto one = enumerate_characters(1);
  REQUIRE(one.size() == 1);
  for (long n = -3; n < 5; ++n) CHECK(one[0].value(n) == R(0, 1));

  auto five = enumerate_characters(5);
  std::multiset<long> orders;
  for (const auto& c : five) orders.insert(c.order());
  CHECK(orders == std::multiset<long>{1, 2, 4, 4});
  for (const auto& c : five) {
    if (c.order() != 4) continue;
    auto v = c.value(2);
    REQUIRE(v);
    CHECK(v->order() == 4);
  }
  CHECK_THROWS_AS(enumerate_characters(0), std::invalid_argument);
}

TEST_CASE("imprimitive character mod 8") {
  bool found = false;
  for (const auto& chi : enumerate_characters(8)) {
    if (chi.value(3) == R(1, 2) && chi.value(5) == R(0, 1) && chi.value(7) == R(1, 2)) {
      found = true;
      CHECK(conductor(chi).value == 4);
      CHECK_FALSE(conductor(chi).primitive);
      CHECK(primitive_inducing(chi) == enumerate_characters(4)[1]);
    }
  }
  CHECK(found);
}

TEST_CASE("structure for 2^e") {
  CHECK(unit_group(16) == std::vector<CyclicFactor>{{15, 2}, {5, 4}});
  CHECK(unit_group(4) == std::vector<CyclicFactor>{{3, 2}});
  CHECK(unit_group(2).empty());
}

TEST_CASE("character axioms for k <= 24") {
  for (long k = 1; k <= 24; ++k) {
    auto chars = enumerate_characters(k);
    CAPTURE(k);
    CHECK(static_cast<long>(chars.size()) == totient(k));
    std::set<std::string> tables;
    for (const auto& chi : chars) {
      std::string key;
      for (const auto& v : table(chi)) key += v ? std::to_string(v->numerator()) + "/" + std::to_string(v->order()) + "," : "0,";
      tables.insert(key);

      CHECK(chi.value(1) == R(0, 1));
      for (long m = 1; m <= k; ++m) {
        CHECK(chi.value(m).has_value() == (std::gcd(m, k) == 1));
        CHECK(chi.value(m) == chi.value(m + k));
        CHECK(chi.value(m) == chi.value(m - 3 * k));
        for (long n = 1; n <= k; ++n) {
          auto a = chi.value(m);
          auto b = chi.value(n);
          auto ab = chi.value(m * n);
          if (a && b) {
            CHECK(ab == *a * *b);
          } else {
            CHECK_FALSE(ab.has_value());
          }
        }
      }

      const Conductor c = conductor(chi);
      CHECK(k % c.value == 0);
      CHECK(c.primitive == (c.value == k));
      const DirichletCharacter induced = primitive_inducing(chi);
      CHECK(induced.modulus() == c.value);
      CHECK(conductor(induced).primitive);
      for (long n = 1; n <= k; ++n) {
        if (std::gcd(n, k) == 1) CHECK(induced.value(n) == chi.value(n));
      }
      // smallest such f: no proper divisor of the conductor works
      for (long f : divisors(c.value)) {
        if (f == c.value) continue;
        bool periodic = true;
        for (long a = 1; a <= k && periodic; ++a) {
          if (std::gcd(a, k) == 1 && a % f == 1 % f && !chi.value(a)->is_one()) periodic = false;
        }
        CHECK_FALSE(periodic);
      }
    }
    CHECK(tables.size() == chars.size());
  }
}

TEST_CASE("orthogonality") {
  const Precision P{50, 10};
  const mpfr_prec_t bits = P.bits();
  const HPReal eps = pow10_neg(P.digits - 2, bits);
  for (long k = 2; k <= 24; ++k) {
    auto chars = enumerate_characters(k);
    for (const auto& chi : chars) {
      HPComplex s(bits);
      for (long j = 1; j <= k; ++j) s += evaluate_numeric(chi, j, bits);
      CAPTURE(k);
      if (chi.is_principal()) {
        CHECK(oracle::digits_between(s, HPComplex(totient(k), bits)) >= 55);
      } else {
        CHECK(abs(s) <= eps);
        if (chi.is_real()) {
          long exact = 0;
          for (long j = 1; j <= k; ++j) {
            auto v = chi.value(j);
            if (v) exact += v->is_one() ? 1 : -1;
          }
          CHECK(exact == 0);
        }
      }
    }
    // column relation: sum over characters is phi(k) at 1 and 0 elsewhere
    for (long a = 1; a <= k; ++a) {
      if (std::gcd(a, k) != 1) continue;
      HPComplex s(bits);
      for (const auto& chi : chars) s += evaluate_numeric(chi, a, bits);
      if (a == 1 % k || a == 1) {
        CHECK(oracle::digits_between(s, HPComplex(totient(k), bits)) >= 55);
      } else {
        CHECK(abs(s) <= eps);
      }
    }
  }
}

TEST_CASE("legendre characters") {
  auto seven = legendre_character(7);
  CHECK(seven.value(2) == R(0, 1));
  CHECK(seven.value(3) == R(1, 2));
  CHECK_FALSE(seven.value(14).has_value());
  CHECK(legendre_character(3).value(2) == R(1, 2));
  CHECK_THROWS_AS(legendre_character(9), std::invalid_argument);
  CHECK_THROWS_AS(legendre_character(2), std::invalid_argument);

  for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 101L}) {
    std::set<long> squares;
    for (long x = 1; x < p; ++x) squares.insert(x * x % p);
    const auto chi = legendre_character(p);
    CHECK(conductor(chi).primitive);
    CHECK_FALSE(chi.is_principal());
    for (long n = 1; n < p; ++n) {
      CHECK(chi.value(n)->is_one() == squares.contains(n));
      CHECK((chi.value(n)->is_one() ? 1 : -1) == jacobi_symbol(n, p));
    }
  }
}
