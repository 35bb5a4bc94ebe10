#include "qprod/products.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qprod/numtheory.hpp"

namespace qprod {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 17> kNames{{
    {IdentityId::thm1, "THM1"},
    {IdentityId::cor2, "COR2"},
    {IdentityId::thm3_full, "THM3_FULL"},
    {IdentityId::thm3_coprime, "THM3_COPRIME"},
    {IdentityId::thm4, "THM4"},
    {IdentityId::thm5, "THM5"},
    {IdentityId::cor6, "COR6"},
    {IdentityId::prototype, "PROTOTYPE"},
    {IdentityId::ex1a, "EX1A"},
    {IdentityId::ex1b, "EX1B"},
    {IdentityId::ex2a, "EX2A"},
    {IdentityId::ex2a_corrected, "EX2A_CORRECTED"},
    {IdentityId::ex2b, "EX2B"},
    {IdentityId::jackson1, "JACKSON1"},
    {IdentityId::jackson2, "JACKSON2"},
    {IdentityId::jackson3, "JACKSON3"},
    {IdentityId::jackson4, "JACKSON4"},
}};

bool is_example(IdentityId id) {
  return id == IdentityId::ex1a || id == IdentityId::ex1b || id == IdentityId::ex2a ||
         id == IdentityId::ex2a_corrected || id == IdentityId::ex2b;
}


bool needs_character(IdentityId id) {
  return id == IdentityId::thm4 || id == IdentityId::thm5 || id == IdentityId::cor6;
}

long cutoff_with_refine(long n, double refine) { return static_cast<long>(std::ceil(static_cast<double>(n) * refine)); }

mpq_class parse_exact(const std::string& literal) {
  std::string s = literal;
  if (s.find('/') != std::string::npos) {
    mpq_class r(s, 10);
    r.canonicalize();
    return r;
  }
  // [+-]digits[.digits][e[+-]digits]
  std::size_t epos = s.find_first_of("eE");
  long exponent = 0;
  if (epos != std::string::npos) {
    exponent = std::stol(s.substr(epos + 1));
    s.resize(epos);
  }
  std::string digits;
  bool negative = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (i == 0 && (c == '+' || c == '-')) {
      negative = c == '-';
    } else if (c == '.') {
      exponent -= static_cast<long>(s.size() - i - 1);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
    } else {
      throw std::invalid_argument("not an exact rational literal: " + literal);
    }
  }
  if (digits.empty()) throw std::invalid_argument("not an exact rational literal: " + literal);
  mpz_class mantissa(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  mpq_class r = exponent < 0 ? mpq_class(mantissa, scale) : mpq_class(mantissa * scale);
  r.canonicalize();
  return negative ? mpq_class(-r) : r;
}

struct ExactComplex {
  mpq_class re;
  mpq_class im;
};

ExactComplex exact_complex(const std::string& literal) {
  ComplexLiteral lit = split_complex_literal(literal);
  return {parse_exact(lit.real), parse_exact(lit.imag)};
}

std::vector<HPComplex> parse_list(const std::vector<std::string>& items, mpfr_prec_t bits) {
  std::vector<HPComplex> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(HPComplex::parse(s, bits));
  return out;
}

QParam spec_q(const IdentitySpec& spec, mpfr_prec_t bits) {
  switch (spec.id) {
    case IdentityId::ex1a:
    case IdentityId::ex1b:
      return QParam(HPReal::parse("e^-pi", bits));
    case IdentityId::ex2a:
    case IdentityId::ex2a_corrected:
    case IdentityId::ex2b:
      return QParam(HPReal::parse("e^-2pi", bits));
    default:
      if (spec.q.empty()) throw std::invalid_argument(std::string(to_string(spec.id)) + " requires q");
      return QParam(HPReal::parse(spec.q, bits));
  }
}

HPComplex spec_z(const IdentitySpec& spec, mpfr_prec_t bits) {
  switch (spec.id) {
    case IdentityId::ex1a:
    case IdentityId::ex2a:
    case IdentityId::ex2a_corrected:
      return HPComplex(1, bits);
    case IdentityId::ex1b:
    case IdentityId::ex2b:
      return HPComplex(-1, bits);
    default:
      if (spec.z.empty()) throw std::invalid_argument(std::string(to_string(spec.id)) + " requires z");
      return HPComplex::parse(spec.z, bits);
  }
}

DirichletCharacter spec_chi(const IdentitySpec& spec) {
  if (is_example(spec.id)) return DirichletCharacter(4, {1});
  if (!spec.chi) throw std::invalid_argument(std::string(to_string(spec.id)) + " requires a character");
  return *spec.chi;
}

// chi(j) * scale for j = 0..k-1, with the optional left-side perturbation.
std::vector<HPComplex> character_values(const DirichletCharacter& chi, mpfr_prec_t bits,
                                        const std::optional<IdentitySpec::CharacterShift>& shift) {
  std::vector<HPComplex> v;
  v.reserve(static_cast<std::size_t>(chi.modulus()));
  for (long j = 0; j < chi.modulus(); ++j) v.push_back(evaluate_numeric(chi, j, bits));
  if (shift) {
    long r = shift->residue % chi.modulus();
    if (r < 0) r += chi.modulus();
    v[static_cast<std::size_t>(r)] += HPComplex::parse(shift->amount, bits);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Left sides

// prod_{n>=0} prod_j (1 - q^{n+alpha_j}) / (1 - q^{n+beta_j})
Evaluation thm1_lhs(const IdentitySpec& spec) {
  const mpfr_prec_t bits = spec.prec.bits();
  const QParam q = spec_q(spec, bits);
  const HPReal log_q = log(q.value());
  const HPReal eps = pow10_neg(spec.prec.working_digits(), bits);
  std::vector<HPComplex> qa;
  std::vector<HPComplex> qb;
  HPReal scale(bits);
  for (const auto& a : parse_list(spec.alphas, bits)) {
    qa.push_back(exp(a * log_q));
    scale += abs(qa.back());
  }
  for (const auto& b : parse_list(spec.betas, bits)) {
    qb.push_back(exp(b * log_q));
    scale += abs(qb.back());
  }
  const long terms = cutoff_with_refine(geometric_cutoff(scale, q.value(), spec.prec.working_digits()), spec.refine);
  HPComplex num(1, bits);
  HPComplex den(1, bits);
  for (long n = 0; n < terms; ++n) {
    for (auto& t : qa) {
      num *= 1 - t;
      t *= q.value();
    }
    for (auto& t : qb) {
      HPComplex f = 1 - t;
      if (abs(f) < eps) throw SingularArgument("THM1: vanishing denominator factor");
      den *= f;
      t *= q.value();
    }
  }
  return {num / den, std::nullopt, terms};
}

// prod_{n=0}^{N-1} prod_j (n + alpha_j) / (n + beta_j)
Evaluation cor2_lhs(const IdentitySpec& spec) {
  const mpfr_prec_t bits = spec.prec.bits();
  const long terms = spec.terms > 0 ? spec.terms : kDefaultCor2Terms;
  const auto alphas = parse_list(spec.alphas, bits);
  const auto betas = parse_list(spec.betas, bits);
  const bool real = std::all_of(alphas.begin(), alphas.end(), [](const auto& a) { return a.is_real(); }) &&
                    std::all_of(betas.begin(), betas.end(), [](const auto& b) { return b.is_real(); });
  HPComplex value(bits);
  if (real) {
    HPReal num(1, bits);
    HPReal den(1, bits);
    for (long n = 0; n < terms; ++n) {
      for (const auto& a : alphas) num *= a.real() + n;
      for (const auto& b : betas) den *= b.real() + n;
      // keep exponents bounded
      if ((n & 255) == 255) {
        num /= den;
        den = HPReal(1, bits);
      }
    }
    value = HPComplex(num / den);
  } else {
    HPComplex num(1, bits);
    HPComplex den(1, bits);
    for (long n = 0; n < terms; ++n) {
      for (const auto& a : alphas) num *= a + n;
      for (const auto& b : betas) den *= b + n;
      if ((n & 255) == 255) {
        num /= den;
        den = HPComplex(1, bits);
      }
    }
    value = num / den;
  }

  // log of the neglected tail: sum_{n>=N} sum_j log((1+a_j/n)/(1+b_j/n))
  //   = -S2 sum 1/(2n^2) + S3 sum 1/(3n^3) - ...,  S_m = sum a^m - sum b^m.
  HPComplex s2(bits);
  HPComplex s3(bits);
  HPReal s4(bits);
  for (const auto& a : alphas) {
    s2 += a * a;
    s3 += a * a * a;
    s4 += abs(a * a * a * a);
  }
  for (const auto& b : betas) {
    s2 -= b * b;
    s3 -= b * b * b;
    s4 += abs(b * b * b * b);
  }
  const HPReal m(terms - 1, bits);
  HPReal estimate = abs(s2) / (m * 2L) + abs(s3) / (m * m * 6L) + s4 / (m * m * m * 12L);
  return {std::move(value), std::move(estimate), terms};
}

// prod_{n >= 2} (1 - q^{n - chi(n) z}) / (1 - q^n)
Evaluation character_q_lhs(const IdentitySpec& spec) {
  const mpfr_prec_t bits = spec.prec.bits();
  const QParam q = spec_q(spec, bits);
  const HPComplex z = spec_z(spec, bits);
  const DirichletCharacter chi = spec_chi(spec);
  const long k = chi.modulus();
  const HPReal log_q = log(q.value());
  auto values = character_values(chi, bits, spec.lhs_chi_shift);

  // w_j = q^{-chi(j) z}
  std::vector<HPComplex> w;
  HPReal scale(1, bits);
  HPReal wmax(bits);
  for (const auto& c : values) {
    w.push_back(exp(-(c * z) * log_q));
    HPReal a = abs(w.back());
    if (a > wmax) wmax = a;
  }
  scale += wmax;
  const long cutoff = cutoff_with_refine(geometric_cutoff(scale, q.value(), spec.prec.working_digits()), spec.refine);
  const long last = std::max(cutoff, 2L);

  HPComplex num(1, bits);
  HPReal den(1, bits);
  HPReal qn = q.value() * q.value();
  for (long n = 2; n <= last; ++n) {
    num *= 1 - w[static_cast<std::size_t>(n % k)] * qn;
    den *= 1L - qn;
    qn *= q.value();
  }
  return {num / den, std::nullopt, last - 1};
}

// prod_{n=2}^{Mk} (1 - chi(n) z / n)
Evaluation thm4_lhs(const IdentitySpec& spec) {
  const mpfr_prec_t bits = spec.prec.bits();
  const HPComplex z = spec_z(spec, bits);
  const DirichletCharacter chi = spec_chi(spec);
  const long k = chi.modulus();
  if (spec.blocks < 1) throw std::invalid_argument("THM4 needs at least one block");
  auto values = character_values(chi, bits, spec.lhs_chi_shift);
  std::vector<HPComplex> c;
  bool real = true;
  for (const auto& v : values) {
    c.push_back(v * z);
    real = real && c.back().is_real();
  }
  const long last = spec.blocks * k;

  HPComplex value(bits);
  if (real) {
    HPReal acc(1, bits);
    HPReal t(bits);
    for (long n = 2; n <= last; ++n) {
      const HPReal& cj = c[static_cast<std::size_t>(n % k)].real();
      if (cj.is_zero()) continue;
      mpfr_div_si(t.get(), cj.get(), n, MPFR_RNDN);
      mpfr_si_sub(t.get(), 1, t.get(), MPFR_RNDN);
      mpfr_mul(acc.get(), acc.get(), t.get(), MPFR_RNDN);
    }
    value = HPComplex(std::move(acc));
  } else {
    HPComplex acc(1, bits);
    for (long n = 2; n <= last; ++n) {
      const HPComplex& cj = c[static_cast<std::size_t>(n % k)];
      acc *= 1 - cj / n;
    }
    value = std::move(acc);
  }

  // Tail over complete blocks m >= M:
  //   log(full / partial) ~ (z S1 - z^2 T2 / 2) / (k^2 M),
  //   S1 = sum_j j chi(j), T2 = sum_j chi(j)^2.
  HPComplex s1(bits);
  HPComplex t2(bits);
  for (long j = 1; j <= k; ++j) {
    const HPComplex& v = values[static_cast<std::size_t>(j % k)];
    s1 += v * j;
    t2 += v * v;
  }
  HPComplex lead = z * s1 - z * z * t2 / 2L;
  HPReal estimate = abs(lead) / (HPReal(k * k, bits) * spec.blocks);
  return {std::move(value), std::move(estimate), last - 1};
}

// prod_{k=1}^{N} (1 - (-1)^k / (2k + 1))
Evaluation prototype_lhs(const IdentitySpec& spec) {
  const mpfr_prec_t bits = spec.prec.bits();
  const long terms = spec.terms > 0 ? spec.terms : kDefaultPrototypeTerms;
  HPReal acc(1, bits);
  HPReal t(bits);
  for (long k = 1; k <= terms; ++k) {
    // (2k+1 -/+ 1) / (2k+1)
    const long top = k % 2 == 0 ? 2 * k : 2 * k + 2;
    mpfr_mul_si(acc.get(), acc.get(), top, MPFR_RNDN);
    mpfr_div_si(acc.get(), acc.get(), 2 * k + 1, MPFR_RNDN);
  }
  // Pairs (2m-1, 2m) contribute 1 + 1/(16 m^2 - 1) and
  // sum_{m > M} 1/(16 m^2 - 1) <= 1/(16 M); an odd N leaves one extra factor
  // 1 - 1/(2N + 3) in front of the pairs.
  const long pairs_done = terms / 2;
  HPReal estimate = HPReal(1, bits) / (HPReal(16, bits) * pairs_done);
  if (terms % 2 == 1) estimate += HPReal::ratio(1, 2 * terms + 3, bits);
  return {HPComplex(std::move(acc)), std::move(estimate), terms};
}

Evaluation qgamma_product_lhs(const IdentitySpec& spec) {
  const mpfr_prec_t bits = spec.prec.bits();
  auto qg = [&](long num, long den, const QParam& q) {
    return qgamma(HPComplex(HPReal::ratio(num, den, bits)), q, spec.prec, spec.refine);
  };
  switch (spec.id) {
    case IdentityId::thm3_full:
    case IdentityId::thm3_coprime: {
      const QParam q = spec_q(spec, bits);
      HPComplex acc(1, bits);
      for (long k = 1; k <= spec.n; ++k) {
        if (spec.id == IdentityId::thm3_coprime && std::gcd(k, spec.n) != 1) continue;
        acc *= qg(k, spec.n, q);
      }
      return {std::move(acc), std::nullopt, spec.n};
    }
    default:
      break;
  }
  const QParam q4(HPReal::parse("e^-4pi", bits));
  const QParam q8(HPReal::parse("e^-8pi", bits));
  switch (spec.id) {
    case IdentityId::jackson1:
      return {qg(1, 4, q4) * qg(3, 4, q4), std::nullopt, 2};
    case IdentityId::jackson2:
      return {qg(1, 2, q4), std::nullopt, 1};
    case IdentityId::jackson3:
      return {qg(1, 2, q8), std::nullopt, 1};
    case IdentityId::jackson4:
      return {qg(1, 4, q8) * qg(3, 4, q8), std::nullopt, 2};
    default:
      throw std::logic_error("not a q-gamma product identity");
  }
}

// ---------------------------------------------------------------------------
// Right sides

Evaluation thm1_rhs(const IdentitySpec& spec) {
  const mpfr_prec_t bits = spec.prec.bits();
  const QParam q = spec_q(spec, bits);
  HPComplex acc(1, bits);
  for (const auto& b : parse_list(spec.betas, bits)) acc *= qgamma(b, q, spec.prec, spec.refine);
  for (const auto& a : parse_list(spec.alphas, bits)) acc /= qgamma(a, q, spec.prec, spec.refine);
  return {std::move(acc), std::nullopt, 0};
}

Evaluation cor2_rhs(const IdentitySpec& spec) {
  const mpfr_prec_t bits = spec.prec.bits();
  HPComplex acc(1, bits);
  for (const auto& b : parse_list(spec.betas, bits)) acc *= gamma_classical(b, spec.prec);
  for (const auto& a : parse_list(spec.alphas, bits)) acc /= gamma_classical(a, spec.prec);
  return {std::move(acc), std::nullopt, 0};
}

Evaluation thm3_rhs(const IdentitySpec& spec) {
  const mpfr_prec_t bits = spec.prec.bits();
  const QParam q = spec_q(spec, bits);
  const long n = spec.n;
  const HPReal one_minus_q = 1L - q.value();
  const HPComplex euler = qpochhammer(HPComplex(q.value()), q, spec.prec, spec.refine);
  const HPReal root = exp(log(q.value()) / n);  // q^{1/n}

  if (spec.id == IdentityId::thm3_full) {
    HPComplex value(pow(one_minus_q, HPReal::ratio(n - 1, 2, bits)));
    for (long i = 0; i < n; ++i) value *= euler;
    value /= qpochhammer(HPComplex(root), QParam(root), spec.prec, spec.refine);
    return {std::move(value), std::nullopt, 0};
  }
  const long phi = totient(n);
  HPComplex value(pow(one_minus_q, HPReal::ratio(phi, 2, bits)));
  for (long i = 0; i < phi; ++i) value *= euler;
  value /= cyclotomic_tail_product(n, root, spec.prec, spec.refine);
  return {std::move(value), std::nullopt, 0};
}

Evaluation thm4_rhs(const IdentitySpec& spec) {
  const mpfr_prec_t bits = spec.prec.bits();
  const HPComplex z = spec_z(spec, bits);
  const DirichletCharacter chi = spec_chi(spec);
  const long k = chi.modulus();
  if (z.is_real() && z.real() == 1L) throw SingularArgument("THM4 is singular at z = 1");
  const HPReal two_pi = HPReal::pi(bits) * 2L;
  HPComplex value(pow(two_pi, HPReal::ratio(totient(k), 2, bits)));
  value /= 1 - z;
  value /= HPComplex(exp(numeric_value(von_mangoldt(k), bits) / 2L));
  for (long j = 1; j < k; ++j) {
    if (std::gcd(j, k) != 1) continue;
    HPComplex arg = (HPComplex(j, bits) - evaluate_numeric(chi, j, bits) * z) / k;
    value /= gamma_classical(arg, spec.prec);
  }
  return {std::move(value), std::nullopt, 0};
}

HPComplex one_minus_q_pow(const HPReal& q, const HPComplex& exponent) { return 1 - pow(q, exponent); }

Evaluation thm5_rhs(const IdentitySpec& spec) {
  const mpfr_prec_t bits = spec.prec.bits();
  const QParam q = spec_q(spec, bits);
  const HPComplex z = spec_z(spec, bits);
  const DirichletCharacter chi = spec_chi(spec);
  const long k = chi.modulus();
  const QParam qk = q.power(k);
  HPComplex value(1L - q.value());
  value /= one_minus_q_pow(q.value(), 1 - z);
  for (long j = 1; j <= k; ++j) {
    HPComplex shifted = (HPComplex(j, bits) - evaluate_numeric(chi, j, bits) * z) / k;
    value *= qgamma(HPComplex(HPReal::ratio(j, k, bits)), qk, spec.prec, spec.refine);
    value /= qgamma(shifted, qk, spec.prec, spec.refine);
  }
  return {std::move(value), std::nullopt, 0};
}

Evaluation cor6_rhs(const IdentitySpec& spec) {
  const mpfr_prec_t bits = spec.prec.bits();
  const QParam q = spec_q(spec, bits);
  const HPComplex z = spec_z(spec, bits);
  const DirichletCharacter chi = spec_chi(spec);
  const long k = chi.modulus();
  const long phi = totient(k);
  const QParam qk = q.power(k);

  HPComplex value(1L - q.value());
  value *= pow(1L - qk.value(), HPReal::ratio(phi, 2, bits));
  value /= one_minus_q_pow(q.value(), 1 - z);
  const HPComplex euler = qpochhammer(HPComplex(qk.value()), qk, spec.prec, spec.refine);
  for (long i = 0; i < phi; ++i) value *= euler;
  value /= cyclotomic_tail_product(k, q.value(), spec.prec, spec.refine);
  for (long j = 1; j <= k; ++j) {
    if (std::gcd(j, k) != 1) continue;
    HPComplex shifted = (HPComplex(j, bits) - evaluate_numeric(chi, j, bits) * z) / k;
    value /= qgamma(shifted, qk, spec.prec, spec.refine);
  }
  return {std::move(value), std::nullopt, 0};
}

Evaluation closed_form_rhs(const IdentitySpec& spec) {
  const mpfr_prec_t bits = spec.prec.bits() + 32;
  Precision inner = spec.prec;
  inner.guard += 10;
  const HPReal pi = HPReal::pi(bits);
  const HPReal two(2, bits);
  auto e_pi = [&](long num, long den) { return exp(pi * num / den); };
  auto gamma_quarter_sq = [&] {
    HPReal g = with_bits(gamma_classical(HPReal::ratio(1, 4, bits), inner), bits);
    return g * g;
  };
  const HPReal pi_3_2 = pow(pi, HPReal::ratio(3, 2, bits));

  HPReal v(bits);
  switch (spec.id) {
    case IdentityId::prototype:
      v = pi * sqrt(two) / 4L;
      break;
    case IdentityId::ex1a:
      v = e_pi(3, 8) * (1L - e_pi(-1, 1)) * gamma_quarter_sq() / (pow(two, HPReal::ratio(23, 8, bits)) * pi_3_2);
      break;
    case IdentityId::ex1b:
      v = pow(two, HPReal::ratio(5, 8, bits)) * e_pi(-1, 8) / (1L + e_pi(-1, 1));
      break;
    case IdentityId::ex2a:
      v = e_pi(3, 4) * (1L - e_pi(-2, 1)) * gamma_quarter_sq() / (16L * pi_3_2);
      break;
    case IdentityId::ex2a_corrected:
      v = e_pi(3, 4) * (1L - e_pi(-2, 1)) * gamma_quarter_sq() / (16L * pi_3_2 * sqrt(1L + sqrt(two)));
      break;
    case IdentityId::ex2b:
      v = sqrt(2L + 2L * sqrt(two)) * e_pi(-1, 4) / (1L + e_pi(-2, 1));
      break;
    case IdentityId::jackson1:
      v = jackson_value(JacksonId::qtr_4pi, inner);
      break;
    case IdentityId::jackson2:
      v = jackson_value(JacksonId::half_4pi, inner);
      break;
    case IdentityId::jackson3:
      v = jackson_value(JacksonId::half_8pi, inner);
      break;
    case IdentityId::jackson4:
      v = jackson_value(JacksonId::qtr_8pi, inner);
      break;
    default:
      throw std::logic_error("no closed form for this identity");
  }
  return {HPComplex(with_bits(v, spec.prec.bits())), std::nullopt, 0};
}

}  // namespace

std::string_view to_string(IdentityId id) {
  for (const auto& [k, name] : kNames) {
    if (k == id) return name;
  }
  return "UNKNOWN";
}

std::optional<IdentityId> identity_from_string(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n.size() != name.size()) continue;
    bool eq = true;
    for (std::size_t i = 0; i < n.size() && eq; ++i) {
      eq = std::toupper(static_cast<unsigned char>(name[i])) == n[i];
    }
    if (eq) return k;
  }
  return std::nullopt;
}

std::vector<IdentityId> all_identities() {
  std::vector<IdentityId> out;
  for (const auto& [k, n] : kNames) out.push_back(k);
  return out;
}

bool alpha_beta_sums_match(const IdentitySpec& spec) {
  mpq_class re = 0;
  mpq_class im = 0;
  for (const auto& a : spec.alphas) {
    auto c = exact_complex(a);
    re += c.re;
    im += c.im;
  }
  for (const auto& b : spec.betas) {
    auto c = exact_complex(b);
    re -= c.re;
    im -= c.im;
  }
  return re == 0 && im == 0;
}

void validate(const IdentitySpec& spec) {
  spec.prec.validate();
  if (spec.refine < 1.0) throw std::invalid_argument("refine must be at least 1");
  const std::string name(to_string(spec.id));
  const mpfr_prec_t bits = spec.prec.bits();
  switch (spec.id) {
    case IdentityId::thm1:
    case IdentityId::cor2: {
      if (spec.alphas.empty() || spec.alphas.size() != spec.betas.size()) {
        throw std::invalid_argument(name + " requires equal-length, non-empty alpha and beta lists");
      }
      for (const auto& list : {parse_list(spec.alphas, bits), parse_list(spec.betas, bits)}) {
        for (const auto& v : list) {
          if (v.real().is_zero() && v.imag().is_zero()) throw std::invalid_argument(name + " parameters must be nonzero");
          if (spec.id == IdentityId::cor2 && v.is_real() && v.real().is_integer() && v.real().sign() < 0) {
            throw std::invalid_argument("COR2 parameters must not be negative integers");
          }
        }
      }
      if (spec.id == IdentityId::thm1) spec_q(spec, bits);
      if (spec.id == IdentityId::cor2 && !alpha_beta_sums_match(spec)) {
        throw std::invalid_argument("COR2 diverges unless sum(alpha) == sum(beta)");
      }
      if (spec.terms < 0) throw std::invalid_argument("terms must be positive");
      break;
    }
    case IdentityId::thm3_full:
      if (spec.n < 1) throw std::invalid_argument("THM3_FULL requires n >= 1");
      spec_q(spec, bits);
      break;
    case IdentityId::thm3_coprime:
      if (spec.n < 2) throw std::invalid_argument("THM3_COPRIME requires n >= 2");
      spec_q(spec, bits);
      break;
    case IdentityId::thm4:
    case IdentityId::thm5:
    case IdentityId::cor6: {
      const DirichletCharacter chi = spec_chi(spec);
      if (chi.modulus() < 2 || chi.is_principal()) {
        throw std::invalid_argument(name + " requires a non-principal character with modulus > 1");
      }
      spec_z(spec, bits);
      if (spec.id != IdentityId::thm4) spec_q(spec, bits);
      if (spec.id == IdentityId::thm4 && spec.blocks < 1) throw std::invalid_argument("THM4 needs blocks >= 1");
      break;
    }
    case IdentityId::prototype:
      if (spec.terms < 0) throw std::invalid_argument("terms must be positive");
      break;
    default:
      break;
  }
  if (spec.lhs_chi_shift && !needs_character(spec.id) && !is_example(spec.id)) {
    throw std::invalid_argument("a character shift only applies to character identities");
  }
}

Evaluation eval_lhs(const IdentitySpec& spec) {
  validate(spec);
  switch (spec.id) {
    case IdentityId::thm1:
      return thm1_lhs(spec);
    case IdentityId::cor2:
      return cor2_lhs(spec);
    case IdentityId::thm4:
      return thm4_lhs(spec);
    case IdentityId::thm5:
    case IdentityId::cor6:
    case IdentityId::ex1a:
    case IdentityId::ex1b:
    case IdentityId::ex2a:
    case IdentityId::ex2a_corrected:
    case IdentityId::ex2b:
      return character_q_lhs(spec);
    case IdentityId::prototype:
      return prototype_lhs(spec);
    case IdentityId::thm3_full:
    case IdentityId::thm3_coprime:
    case IdentityId::jackson1:
    case IdentityId::jackson2:
    case IdentityId::jackson3:
    case IdentityId::jackson4:
      return qgamma_product_lhs(spec);
  }
  throw std::logic_error("unhandled identity");
}

Evaluation eval_rhs(const IdentitySpec& spec) {
  validate(spec);
  switch (spec.id) {
    case IdentityId::thm1:
      return thm1_rhs(spec);
    case IdentityId::cor2:
      return cor2_rhs(spec);
    case IdentityId::thm3_full:
    case IdentityId::thm3_coprime:
      return thm3_rhs(spec);
    case IdentityId::thm4:
      return thm4_rhs(spec);
    case IdentityId::thm5:
      return thm5_rhs(spec);
    case IdentityId::cor6:
      return cor6_rhs(spec);
    default:
      return closed_form_rhs(spec);
  }
}

HPReal cyclotomic_tail_product(long m, const HPReal& r, const Precision& prec, double refine) {
  if (m < 2) throw std::invalid_argument("cyclotomic_tail_product requires m >= 2");
  if (r.sign() <= 0 || r >= 1L) throw std::invalid_argument("cyclotomic_tail_product requires 0 < r < 1");
  const mpfr_prec_t bits = prec.bits();
  const long rad = radical(m);
  const int mu = mobius(rad);
  const IntPolynomial phi = cyclotomic(rad);

  std::vector<HPReal> coeffs;
  HPReal spread(bits);  // sum_{i >= 1} |c_i| bounds |Phi(x) - 1| / x on [0, 1)
  for (std::size_t i = 0; i < phi.coefficients().size(); ++i) {
    HPReal c(bits);
    mpfr_set_z(c.get(), phi.coefficients()[i].get_mpz_t(), MPFR_RNDN);
    if (i > 0) spread += abs(c);
    coeffs.push_back(std::move(c));
  }

  const HPReal rb = with_bits(r, bits);
  const long terms = cutoff_with_refine(geometric_cutoff(spread * rb, rb, prec.working_digits()), refine);
  HPReal acc(1, bits);
  HPReal x = rb;
  for (long j = 1; j <= terms; ++j) {
    HPReal v = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
      v *= x;
      v += coeffs[i];
    }
    acc *= v;
    x *= rb;
  }
  return mu > 0 ? acc : 1L / acc;
}

}  // namespace qprod
