#include "qprod/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "qprod/serialize.hpp"

namespace qprod {

using nlohmann::json;

int default_tolerance(IdentityId id) {
  switch (id) {
    case IdentityId::thm1:
      return 42;
    case IdentityId::cor2:
      return 4;
    case IdentityId::thm4:
      return 5;
    case IdentityId::prototype:
      return 6;
    default:
      return 40;
  }
}

VerificationReport compare(const HPComplex& lhs, const HPComplex& rhs, int tolerance_digits, const Precision& prec) {
  const mpfr_prec_t bits = prec.bits();
  const int working = prec.working_digits();
  VerificationReport r;
  r.tolerance_digits = tolerance_digits;
  r.lhs = lhs.to_string(prec.digits);
  r.rhs = rhs.to_string(prec.digits);

  const HPReal diff = abs(with_bits(lhs, bits) - with_bits(rhs, bits));
  const HPReal a = abs(lhs);
  const HPReal b = abs(rhs);
  const HPReal scale = a > b ? a : b;
  r.abs_diff = diff.to_string(6);

  const HPReal tiny = pow10_neg(prec.digits, bits);
  if (a < tiny && b < tiny) {
    r.vacuous = true;
    r.rel_diff = "0";
    r.digits_agreed = working;
    r.pass = true;
    return r;
  }

  const HPReal rel = diff / scale;
  r.rel_diff = rel.to_string(6);
  if (rel.is_zero() || rel < pow10_neg(working, bits)) {
    r.digits_agreed = working;
  } else {
    HPReal l(bits);
    mpfr_log10(l.get(), rel.get(), MPFR_RNDN);
    const HPReal agreed = floor(-l);
    r.digits_agreed = static_cast<int>(std::min<long>(working, mpfr_get_si(agreed.get(), MPFR_RNDN)));
  }
  r.pass = r.digits_agreed >= tolerance_digits;
  return r;
}

VerificationReport run_identity(const IdentitySpec& spec, int tolerance_digits) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  try {
    const Evaluation lhs = eval_lhs(spec);
    const Evaluation rhs = eval_rhs(spec);
    r = compare(lhs.value, rhs.value, tolerance_digits, spec.prec);
    if (lhs.error_estimate) r.error_estimate = lhs.error_estimate->to_string(6);
    if (spec.id == IdentityId::thm1 && !alpha_beta_sums_match(spec)) {
      r.pass = false;
      r.error = "alpha and beta sums differ";
    }
  } catch (const std::exception& e) {
    r = VerificationReport{};
    r.tolerance_digits = tolerance_digits;
    r.pass = false;
    r.error = e.what();
  }
  r.identity = std::string(to_string(spec.id));
  r.params = to_json(spec);
  r.params.erase("id");
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::string decimal_from_units(long units) {
  // units of 1e-4
  std::string sign = units < 0 ? "-" : "";
  long a = units < 0 ? -units : units;
  std::string frac = std::to_string(a % 10000);
  frac.insert(frac.begin(), 4 - frac.size(), '0');
  return sign + std::to_string(a / 10000) + "." + frac;
}

std::string complex_from_units(long re, long im) {
  if (im == 0) return decimal_from_units(re);
  std::string i = decimal_from_units(im);
  if (i[0] != '-') i.insert(i.begin(), '+');
  return decimal_from_units(re) + i + "i";
}

void add_character_grid(SuiteConfig& config, IdentityId id, const std::vector<long>& moduli,
                        const std::vector<std::string>& qs, const std::vector<std::string>& zs, const Precision& prec,
                        int tolerance, long blocks) {
  for (long k : moduli) {
    for (const auto& chi : enumerate_characters(k)) {
      if (chi.is_principal()) continue;
      for (const auto& z : zs) {
        const std::vector<std::string> q_list = qs.empty() ? std::vector<std::string>{""} : qs;
        for (const auto& q : q_list) {
          IdentitySpec s;
          s.id = id;
          s.chi = chi;
          s.q = q;
          s.z = z;
          s.prec = prec;
          s.blocks = blocks;
          config.items.push_back({s, tolerance});
        }
      }
    }
  }
}

}  // namespace

std::vector<IdentitySpec> random_thm1_specs(std::size_t count, std::uint64_t seed, const std::string& q,
                                            const Precision& prec) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> len_dist(1, 4);
  std::uniform_int_distribution<long> re_dist(2000, 30000);
  std::uniform_int_distribution<long> im_dist(-5000, 5000);
  std::vector<IdentitySpec> out;
  while (out.size() < count) {
    const long len = len_dist(rng);
    long re_sum = 0;
    long im_sum = 0;
    IdentitySpec s;
    s.id = IdentityId::thm1;
    s.q = q;
    s.prec = prec;
    for (long i = 0; i < len; ++i) {
      long re = re_dist(rng);
      long im = im_dist(rng);
      re_sum += re;
      im_sum += im;
      s.alphas.push_back(complex_from_units(re, im));
    }
    for (long i = 0; i + 1 < len; ++i) {
      long re = re_dist(rng);
      long im = im_dist(rng);
      re_sum -= re;
      im_sum -= im;
      s.betas.push_back(complex_from_units(re, im));
    }
    if (re_sum < 2000 || re_sum > 30000 || im_sum < -5000 || im_sum > 5000) continue;
    s.betas.push_back(complex_from_units(re_sum, im_sum));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<IdentitySpec> random_cor2_specs(std::size_t count, std::uint64_t seed, const Precision& prec) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> len_dist(2, 4);
  std::uniform_int_distribution<long> re_dist(2000, 30000);
  std::vector<IdentitySpec> out;
  while (out.size() < count) {
    const long len = len_dist(rng);
    long sum = 0;
    IdentitySpec s;
    s.id = IdentityId::cor2;
    s.prec = prec;
    for (long i = 0; i < len; ++i) {
      long a = re_dist(rng);
      sum += a;
      s.alphas.push_back(decimal_from_units(a));
    }
    for (long i = 0; i + 1 < len; ++i) {
      long b = re_dist(rng);
      sum -= b;
      s.betas.push_back(decimal_from_units(b));
    }
    if (sum < 2000 || sum > 30000) continue;
    s.betas.push_back(decimal_from_units(sum));
    out.push_back(std::move(s));
  }
  return out;
}

SuiteConfig default_suite_config() {
  SuiteConfig c;
  const Precision p50{50, 10};
  const Precision p60{60, 10};
  const Precision p30{30, 10};

  for (const char* q : {"0.1", "0.5", "0.9"}) {
    for (auto& s : random_thm1_specs(20, 20261018, q, p50)) c.items.push_back({std::move(s), 42});
  }

  {
    IdentitySpec s;
    s.id = IdentityId::cor2;
    s.alphas = {"1/2", "1/2"};
    s.betas = {"1/4", "3/4"};
    s.prec = p30;
    c.items.push_back({s, 4});
    for (auto& r : random_cor2_specs(10, 7, p30)) c.items.push_back({std::move(r), 4});
  }

  for (IdentityId id : {IdentityId::thm3_full, IdentityId::thm3_coprime}) {
    for (long n = 2; n <= 12; ++n) {
      for (const char* q : {"0.2", "0.6", "0.95"}) {
        IdentitySpec s;
        s.id = id;
        s.n = n;
        s.q = q;
        s.prec = p50;
        c.items.push_back({s, 40});
      }
    }
  }

  const std::vector<long> moduli{3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  for (IdentityId id : {IdentityId::thm5, IdentityId::cor6}) {
    add_character_grid(c, id, moduli, {"0.3", "0.7"}, {"0.5", "-0.5", "0.25+0.25i"}, p60, 40, 0);
  }
  add_character_grid(c, IdentityId::thm4, {3, 4}, {}, {"0.5"}, p30, 5, 1'000'000);

  {
    IdentitySpec s;
    s.id = IdentityId::prototype;
    s.prec = p30;
    c.items.push_back({s, 6});
  }
  for (IdentityId id : {IdentityId::ex1a, IdentityId::ex1b, IdentityId::ex2a, IdentityId::ex2a_corrected,
                        IdentityId::ex2b, IdentityId::jackson1, IdentityId::jackson2, IdentityId::jackson3,
                        IdentityId::jackson4}) {
    IdentitySpec s;
    s.id = id;
    s.prec = p60;
    c.items.push_back({s, 40});
  }
  return c;
}

SuiteConfig suite_config_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("suite config must be a JSON object");
  SuiteConfig c;
  if (j.contains("threads")) c.threads = j["threads"].get<unsigned>();
  if (j.contains("items")) {
    for (const auto& item : j["items"]) {
      if (!item.contains("spec")) throw std::invalid_argument("suite item needs a spec");
      c.items.push_back({spec_from_json(item["spec"]), item.value("tolerance", 40)});
    }
  }
  if (j.contains("grids")) {
    for (const auto& g : j["grids"]) {
      auto id = identity_from_string(g.at("id").get<std::string>());
      if (!id) throw std::invalid_argument("unknown identity id '" + g["id"].get<std::string>() + "'");
      Precision p{g.value("digits", 50), g.value("guard", 10)};
      const int tol = g.value("tolerance", 40);
      const auto qs = g.value("q", std::vector<std::string>{});
      const auto zs = g.value("z", std::vector<std::string>{});
      const auto ns = g.value("n", std::vector<long>{});
      const auto moduli = g.value("moduli", std::vector<long>{});
      const long blocks = g.value("blocks", 1'000'000L);
      const long terms = g.value("terms", 0L);
      if (!moduli.empty()) {
        add_character_grid(c, *id, moduli, qs, zs.empty() ? std::vector<std::string>{"0.5"} : zs, p, tol, blocks);
        continue;
      }
      const auto q_list = qs.empty() ? std::vector<std::string>{""} : qs;
      const auto n_list = ns.empty() ? std::vector<long>{0} : ns;
      for (const auto& q : q_list) {
        for (long n : n_list) {
          IdentitySpec s;
          s.id = *id;
          s.q = q;
          s.n = n;
          s.prec = p;
          s.terms = terms;
          s.blocks = blocks;
          c.items.push_back({s, tol});
        }
      }
    }
  }
  return c;
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
  std::vector<VerificationReport> reports(config.items.size());
  unsigned threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, config.items.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.items.size(); i = next++) {
      reports[i] = run_identity(config.items[i].spec, config.items[i].tolerance);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) keys.emplace_back(reports[i].identity + "|" + reports[i].params.dump(), i);
  std::stable_sort(keys.begin(), keys.end());
  std::vector<VerificationReport> sorted;
  sorted.reserve(reports.size());
  for (const auto& [key, i] : keys) sorted.push_back(std::move(reports[i]));
  return sorted;
}

SuiteSummary summarize(const std::vector<VerificationReport>& reports) {
  SuiteSummary s;
  s.total = reports.size();
  for (const auto& r : reports) (r.pass ? s.passed : s.failed)++;
  return s;
}

json to_json(const VerificationReport& r) {
  json j;
  j["identity"] = r.identity;
  j["params"] = r.params;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["abs_diff"] = r.abs_diff;
  j["rel_diff"] = r.rel_diff;
  j["digits_agreed"] = r.digits_agreed;
  j["tolerance_digits"] = r.tolerance_digits;
  j["pass"] = r.pass;
  j["vacuous"] = r.vacuous;
  j["error"] = r.error ? json(*r.error) : json(nullptr);
  j["error_estimate"] = r.error_estimate ? json(*r.error_estimate) : json(nullptr);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.identity = j.at("identity").get<std::string>();
  r.params = j.at("params");
  r.lhs = j.at("lhs").get<std::string>();
  r.rhs = j.at("rhs").get<std::string>();
  r.abs_diff = j.value("abs_diff", "");
  r.rel_diff = j.at("rel_diff").get<std::string>();
  r.digits_agreed = j.at("digits_agreed").get<int>();
  r.tolerance_digits = j.at("tolerance_digits").get<int>();
  r.pass = j.at("pass").get<bool>();
  r.vacuous = j.value("vacuous", false);
  if (!j.at("error").is_null()) r.error = j["error"].get<std::string>();
  if (j.contains("error_estimate") && !j["error_estimate"].is_null()) {
    r.error_estimate = j["error_estimate"].get<std::string>();
  }
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

json suite_to_json(const std::vector<VerificationReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  const SuiteSummary s = summarize(reports);
  return {{"reports", arr}, {"summary", {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}}}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "identity,params,lhs,rhs,abs_diff,rel_diff,digits_agreed,tolerance_digits,pass,vacuous,error,error_estimate,"
        "elapsed_ms\n";
  for (const auto& r : reports) {
    os << csv_field(r.identity) << ',' << csv_field(r.params.dump()) << ',' << csv_field(r.lhs) << ','
       << csv_field(r.rhs) << ',' << csv_field(r.abs_diff) << ',' << csv_field(r.rel_diff) << ',' << r.digits_agreed
       << ',' << r.tolerance_digits << ',' << (r.pass ? "true" : "false") << ',' << (r.vacuous ? "true" : "false")
       << ',' << csv_field(r.error.value_or("")) << ',' << csv_field(r.error_estimate.value_or("")) << ','
       << r.elapsed_ms << '\n';
  }
  return os.str();
}

}  // namespace qprod
