#pragma once

// Identity registry runner and comparison engine.

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "qprod/products.hpp"

namespace qprod {

struct VerificationReport {
  std::string identity;
  nlohmann::json params = nlohmann::json::object();
  std::string lhs;
  std::string rhs;
  std::string abs_diff;
  std::string rel_diff;
  int digits_agreed = 0;
  int tolerance_digits = 0;
  bool pass = false;
  /// Both sides below 10^-digits in modulus; passed but flagged.
  bool vacuous = false;
  std::optional<std::string> error;
  /// Relative truncation-error estimate of the left side, when it has one.
  std::optional<std::string> error_estimate;
  std::int64_t elapsed_ms = 0;
};

/// Tolerance (in agreed digits) matching each evaluator's error character:
/// 40 for the q-series identities, 42 for THM1, 4 for COR2, 5 for THM4, 6 for
/// PROTOTYPE.
int default_tolerance(IdentityId id);

/// digits_agreed = floor(-log10(|lhs - rhs| / max(|lhs|, |rhs|))), capped at
/// the working digit count, which is also used when the sides coincide.
VerificationReport compare(const HPComplex& lhs, const HPComplex& rhs, int tolerance_digits, const Precision& prec);

/// Evaluates both sides of `spec`. Evaluator errors become a failed report
/// carrying the message in `error`; a THM1 spec whose alpha and beta sums
/// differ is always reported as failed.
VerificationReport run_identity(const IdentitySpec& spec, int tolerance_digits);

struct SuiteItem {
  IdentitySpec spec;
  int tolerance = 40;
};

struct SuiteConfig {
  std::vector<SuiteItem> items;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// The full verification grid (every identity at its default tolerance).
SuiteConfig default_suite_config();

/// Reads {"threads", "items": [{"spec", "tolerance"}], "grids": [...]}. A
/// grid is {"id", "q": [...], "z": [...], "n": [...], "moduli": [...],
/// "digits", "guard", "blocks", "terms", "tolerance"}; "moduli" expands to
/// every non-principal character of each modulus.
SuiteConfig suite_config_from_json(const nlohmann::json& j);

/// One report per item, sorted by (identity, params) independently of the
/// execution order. Individual failures never abort the run.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

/// Deterministic randomized THM1 parameter sets: lists of length 1..4 with
/// real parts in [0.2, 3] and imaginary parts in [-0.5, 0.5]; the last beta
/// is solved for so that the sums agree exactly.
std::vector<IdentitySpec> random_thm1_specs(std::size_t count, std::uint64_t seed, const std::string& q,
                                            const Precision& prec);

/// Randomized real COR2 parameter sets with exactly matching sums.
std::vector<IdentitySpec> random_cor2_specs(std::size_t count, std::uint64_t seed, const Precision& prec);

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

SuiteSummary summarize(const std::vector<VerificationReport>& reports);

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);
/// {"reports": [...], "summary": {"total", "passed", "failed"}}
nlohmann::json suite_to_json(const std::vector<VerificationReport>& reports);
/// Header plus one row per report, same columns as the JSON report.
std::string to_csv(const std::vector<VerificationReport>& reports);

}  // namespace qprod
