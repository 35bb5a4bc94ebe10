#pragma once

// Independent evaluators for the two sides of each infinite-product identity.
//
// Left sides are direct truncated products over n; right sides are built from
// q-gamma / gamma values and closed forms. The two routes share only the
// working-precision arithmetic.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qprod/characters.hpp"
#include "qprod/hp.hpp"
#include "qprod/qfunc.hpp"

namespace qprod {

enum class IdentityId {
  thm1,
  cor2,
  thm3_full,
  thm3_coprime,
  thm4,
  thm5,
  cor6,
  prototype,
  ex1a,
  ex1b,
  ex2a,
  ex2a_corrected,
  ex2b,
  jackson1,
  jackson2,
  jackson3,
  jackson4,
};

/// Upper-case name, e.g. "THM3_COPRIME".
std::string_view to_string(IdentityId id);
/// Case-insensitive inverse of to_string.
std::optional<IdentityId> identity_from_string(std::string_view name);
std::vector<IdentityId> all_identities();

/// Numeric parameters are kept as the literal strings they were given in
/// ("0.3", "1/4", "0.25+0.25i", "e^-pi") and converted at evaluation
/// precision, so changing the precision never changes the parameters.
struct IdentitySpec {
  IdentityId id = IdentityId::thm1;
  std::vector<std::string> alphas;
  std::vector<std::string> betas;
  long n = 0;
  std::optional<DirichletCharacter> chi;
  std::string q;
  std::string z;
  Precision prec;
  long blocks = 1'000'000;  ///< THM4: complete residue blocks of length k
  long terms = 0;           ///< COR2 / PROTOTYPE factor count; 0 selects the default
  double refine = 1.0;      ///< multiplies every geometric truncation point

  /// Negative control: added to chi(residue) on the left side only.
  struct CharacterShift {
    long residue;
    std::string amount;
  };
  std::optional<CharacterShift> lhs_chi_shift;
};

inline constexpr long kDefaultCor2Terms = 100'000;
inline constexpr long kDefaultPrototypeTerms = 1'000'000;

struct Evaluation {
  HPComplex value;
  /// Relative truncation-error estimate for the slowly convergent products
  /// (COR2, THM4, PROTOTYPE); absent when the tail is below the guard digits.
  std::optional<HPReal> error_estimate;
  long terms = 0;
};

/// Throws std::invalid_argument when the spec violates its identity's
/// parameter requirements.
void validate(const IdentitySpec& spec);

/// Whether sum(alphas) == sum(betas) exactly, as decimal/ratio literals.
/// Throws std::invalid_argument for literals that are not exact rationals.
bool alpha_beta_sums_match(const IdentitySpec& spec);

Evaluation eval_lhs(const IdentitySpec& spec);
Evaluation eval_rhs(const IdentitySpec& spec);

/// prod_{j >= 1} Phi_{rad m}(r^j)^{mu(rad m)} for m >= 2, 0 < r < 1.
HPReal cyclotomic_tail_product(long m, const HPReal& r, const Precision& prec, double refine = 1.0);

}  // namespace qprod
