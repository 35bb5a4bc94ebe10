#include "qprod/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qprod/numtheory.hpp"
#include "qprod/serialize.hpp"
#include "qprod/verify.hpp"

namespace qprod {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string what;
  std::string id;
  long modulus = 0;
  long char_index = -1;
  std::string q;
  std::string z;
  std::string n;
  std::string alphas;
  std::string betas;
  int digits = 50;
  int guard = 10;
  int tolerance = -1;
  long blocks = 1'000'000;
  long terms = 0;
  std::string format = "text";
  std::string out_file;
  std::string config;
  unsigned threads = 0;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("empty entry in list '" + s + "'");
    out.push_back(item);
  }
  return out;
}

Precision precision_of(const Options& o) {
  Precision p{o.digits, o.guard};
  p.validate();
  return p;
}

DirichletCharacter select_character(const Options& o) {
  if (o.modulus < 1) throw UsageError("--modulus must be a positive integer");
  auto chars = enumerate_characters(o.modulus);
  long index = o.char_index;
  if (index < 0) {
    // first non-principal character
    index = chars.size() > 1 ? 1 : 0;
  }
  if (index >= static_cast<long>(chars.size())) {
    throw UsageError("--char-index out of range: modulus " + std::to_string(o.modulus) + " has " +
                     std::to_string(chars.size()) + " characters");
  }
  return chars[static_cast<std::size_t>(index)];
}

long parse_n(const std::string& s) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw UsageError("malformed integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("malformed integer '" + s + "'");
  }
}

IdentitySpec spec_of(const Options& o) {
  auto id = identity_from_string(o.id);
  if (!id) throw UsageError("unknown identity id '" + o.id + "'");
  IdentitySpec s;
  s.id = *id;
  s.prec = precision_of(o);
  s.q = o.q;
  s.z = o.z;
  if (!o.n.empty()) s.n = parse_n(o.n);
  if (!o.alphas.empty()) s.alphas = split_list(o.alphas);
  if (!o.betas.empty()) s.betas = split_list(o.betas);
  s.blocks = o.blocks;
  s.terms = o.terms;
  if (*id == IdentityId::thm4 || *id == IdentityId::thm5 || *id == IdentityId::cor6) s.chi = select_character(o);
  validate(s);
  return s;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_file);
  if (!f) throw UsageError("cannot open output file '" + o.out_file + "'");
  f << text;
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.identity << ' ' << (r.pass ? "PASS" : "FAIL") << " digits_agreed=" << r.digits_agreed
     << " tolerance=" << r.tolerance_digits << " params=" << r.params.dump() << "\n  lhs = " << r.lhs
     << "\n  rhs = " << r.rhs << "\n  rel_diff = " << r.rel_diff;
  if (r.error_estimate) os << "\n  error_estimate = " << *r.error_estimate;
  if (r.vacuous) os << "\n  vacuous comparison";
  if (r.error) os << "\n  error: " << *r.error;
  os << '\n';
  return os.str();
}

std::string format_reports(const Options& o, const std::vector<VerificationReport>& reports, bool single) {
  if (o.format == "json") {
    if (single && reports.size() == 1) return to_json(reports.front()).dump(2) + "\n";
    return suite_to_json(reports).dump(2) + "\n";
  }
  if (o.format == "csv") return to_csv(reports);
  std::string text;
  for (const auto& r : reports) text += report_text(r);
  if (!single) {
    const SuiteSummary s = summarize(reports);
    text += "total=" + std::to_string(s.total) + " passed=" + std::to_string(s.passed) +
            " failed=" + std::to_string(s.failed) + "\n";
  }
  return text;
}

int run_eval(const Options& o, std::ostream& out) {
  const Precision prec = precision_of(o);
  const mpfr_prec_t bits = prec.bits();
  json result;
  HPComplex value(bits);
  std::optional<HPReal> estimate;
  if (o.what == "qgamma" || o.what == "qpoch" || o.what == "gamma") {
    if (o.z.empty()) throw UsageError("eval " + o.what + " requires --z");
    const HPComplex z = HPComplex::parse(o.z, bits);
    if (o.what == "gamma") {
      value = gamma_classical(z, prec);
    } else {
      if (o.q.empty()) throw UsageError("eval " + o.what + " requires --q");
      const QParam q(HPReal::parse(o.q, bits));
      if (o.what == "qgamma") {
        value = qgamma(z, q, prec);
      } else if (o.n.empty() || o.n == "inf") {
        value = qpochhammer(z, q, prec);
      } else {
        value = qpochhammer(z, q, parse_n(o.n), prec);
      }
    }
    result = {{"function", o.what}, {"z", o.z}, {"q", o.q}, {"n", o.n}, {"digits", prec.digits}};
  } else if (o.what == "product-lhs" || o.what == "product-rhs") {
    const IdentitySpec spec = spec_of(o);
    Evaluation e = o.what == "product-lhs" ? eval_lhs(spec) : eval_rhs(spec);
    value = e.value;
    estimate = e.error_estimate;
    result = {{"function", o.what}, {"spec", to_json(spec)}};
  } else {
    throw UsageError("eval expects one of qgamma, qpoch, gamma, product-lhs, product-rhs");
  }
  result["value"] = value.to_string(prec.digits);
  result["error_estimate"] = estimate ? json(estimate->to_string(6)) : json(nullptr);

  if (o.format == "json") {
    emit(o, result.dump(2) + "\n", out);
  } else if (o.format == "csv") {
    emit(o, "function,value\n" + o.what + "," + value.to_string(prec.digits) + "\n", out);
  } else {
    emit(o, value.to_string(prec.digits) + "\n", out);
  }
  return 0;
}

int run_chars(const Options& o, std::ostream& out) {
  if (o.modulus < 1) throw UsageError("--modulus must be a positive integer");
  auto chars = enumerate_characters(o.modulus);
  std::vector<std::size_t> picked;
  if (o.char_index >= 0) {
    if (o.char_index >= static_cast<long>(chars.size())) throw UsageError("--char-index out of range");
    picked.push_back(static_cast<std::size_t>(o.char_index));
  } else {
    for (std::size_t i = 0; i < chars.size(); ++i) picked.push_back(i);
  }

  if (o.format == "json") {
    json arr = json::array();
    for (std::size_t i : picked) {
      json j = to_json(chars[i]);
      j["index"] = i;
      arr.push_back(j);
    }
    emit(o, arr.dump(2) + "\n", out);
    return 0;
  }
  std::ostringstream os;
  const bool csv = o.format == "csv";
  os << (csv ? "index,exponents,order,conductor,primitive,principal,values\n"
             : "index  exponents  order  conductor  primitive  principal  chi(1..k) as num/order\n");
  for (std::size_t i : picked) {
    const auto& chi = chars[i];
    const Conductor c = conductor(chi);
    std::string exps;
    for (long e : chi.exponents()) exps += (exps.empty() ? "" : " ") + std::to_string(e);
    std::string vals;
    for (long n = 1; n <= chi.modulus(); ++n) {
      auto v = chi.value(n);
      vals += (vals.empty() ? "" : " ") + (v ? std::to_string(v->numerator()) + "/" + std::to_string(v->order()) : "0");
    }
    if (csv) {
      os << i << ",\"" << exps << "\"," << chi.order() << ',' << c.value << ',' << c.primitive << ','
         << chi.is_principal() << ",\"" << vals << "\"\n";
    } else {
      os << i << "  [" << exps << "]  " << chi.order() << "  " << c.value << "  " << (c.primitive ? "yes" : "no")
         << "  " << (chi.is_principal() ? "yes" : "no") << "  " << vals << '\n';
    }
  }
  emit(o, os.str(), out);
  return 0;
}

int run_psi(const Options& o, std::ostream& out) {
  if (o.n.empty()) throw UsageError("psi requires --n");
  const long n = parse_n(o.n);
  if (n < 1 || n > 1'000'000) throw UsageError("--n must be in 1..1000000");
  const RationalPolyFraction psi = psi_by_definition(n);
  const PsiReduced red = psi_reduced(n);
  const bool agree = psi == red.as_fraction();
  const long rad = radical(n);
  if (o.format == "json") {
    json j = {{"n", n},
              {"psi", to_json(psi)},
              {"reduced", {{"base", to_json(red.base)}, {"exponent", red.exponent}, {"radical", rad}}},
              {"agree", agree}};
    emit(o, j.dump(2) + "\n", out);
  } else if (o.format == "csv") {
    emit(o, "n,numerator,denominator,radical,exponent,agree\n" + std::to_string(n) + ",\"" +
                psi.numerator().to_string() + "\",\"" + psi.denominator().to_string() + "\"," + std::to_string(rad) +
                "," + std::to_string(red.exponent) + "," + (agree ? "true" : "false") + "\n",
         out);
  } else {
    std::string text = "Psi_" + std::to_string(n) + "(x) = " + psi.to_string() + "\n";
    if (n == 1) {
      text += "  special case: Psi_1 = 1 - x = -Phi_1\n";
    } else {
      text += "  = Phi_" + std::to_string(rad) + "(x)^" + std::to_string(red.exponent) + " with Phi_" +
              std::to_string(rad) + " = " + red.base.to_string() + (agree ? "  [agrees]" : "  [MISMATCH]") + "\n";
    }
    emit(o, text, out);
  }
  return agree ? 0 : 1;
}

int run_verify(const Options& o, std::ostream& out) {
  const IdentitySpec spec = spec_of(o);
  const int tol = o.tolerance >= 0 ? o.tolerance : default_tolerance(spec.id);
  VerificationReport r = run_identity(spec, tol);
  emit(o, format_reports(o, {r}, true), out);
  return r.pass ? 0 : 1;
}

int run_suite_cmd(const Options& o, std::ostream& out) {
  SuiteConfig config;
  if (o.config.empty()) {
    config = default_suite_config();
  } else {
    std::ifstream f(o.config);
    if (!f) throw UsageError("cannot read config '" + o.config + "'");
    json j;
    try {
      j = json::parse(f);
    } catch (const json::exception& e) {
      throw UsageError(std::string("malformed config: ") + e.what());
    }
    config = suite_config_from_json(j);
  }
  if (o.threads != 0) config.threads = o.threads;
  auto reports = run_suite(config);
  emit(o, format_reports(o, reports, false), out);
  return summarize(reports).failed == 0 ? 0 : 1;
}

}  // namespace

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"High-precision q-gamma products, Dirichlet characters and identity verification", "qprod"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", o.out_file, "Write output to FILE");
  };
  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--digits", o.digits, "Target decimal digits");
    sub->add_option("--guard", o.guard, "Guard digits");
  };
  auto add_identity = [&](CLI::App* sub) {
    sub->add_option("--id", o.id, "Identity id (THM1, COR2, THM3_FULL, ...)");
    sub->add_option("--modulus", o.modulus, "Character modulus");
    sub->add_option("--char-index", o.char_index, "Index into the character enumeration");
    sub->add_option("--q", o.q, "Nome 0 < q < 1 (decimal, a/b, or e^-pi, e^-2pi, e^-4pi, e^-8pi)");
    sub->add_option("--z", o.z, "Complex parameter, e.g. 0.5 or 0.25+0.25i");
    sub->add_option("--n", o.n, "Integer parameter");
    sub->add_option("--alphas", o.alphas, "Comma-separated alpha list");
    sub->add_option("--betas", o.betas, "Comma-separated beta list");
    sub->add_option("--blocks", o.blocks, "THM4 residue blocks");
    sub->add_option("--terms", o.terms, "COR2 / PROTOTYPE factor count");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate qgamma, qpoch, gamma, product-lhs or product-rhs");
  eval->add_option("what", o.what, "qgamma | qpoch | gamma | product-lhs | product-rhs")->required();
  add_identity(eval);
  add_precision(eval);
  add_format(eval);

  auto* chars = app.add_subcommand("chars", "List Dirichlet characters");
  chars->add_option("--modulus", o.modulus, "Modulus k")->required();
  chars->add_option("--char-index", o.char_index, "Show a single character");
  add_format(chars);

  auto* psi = app.add_subcommand("psi", "Simplify Psi_n");
  psi->add_option("--n", o.n, "n")->required();
  add_format(psi);

  auto* verify = app.add_subcommand("verify", "Verify one identity");
  add_identity(verify);
  verify->get_option("--id")->required();
  verify->add_option("--tolerance", o.tolerance, "Required agreed digits");
  add_precision(verify);
  add_format(verify);

  auto* suite = app.add_subcommand("suite", "Run the verification suite");
  suite->add_option("--config", o.config, "Suite configuration JSON (default: built-in grid)");
  suite->add_option("--threads", o.threads, "Worker threads");
  add_format(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "qprod: " << e.what() << '\n';
    return 2;
  }

  try {
    if (eval->parsed()) return run_eval(o, out);
    if (chars->parsed()) return run_chars(o, out);
    if (psi->parsed()) return run_psi(o, out);
    if (verify->parsed()) return run_verify(o, out);
    if (suite->parsed()) return run_suite_cmd(o, out);
  } catch (const std::invalid_argument& e) {
    err << "qprod: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "qprod: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("qprod");
  for (const auto& a : args) argv.push_back(a.c_str());
  return parse_and_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qprod
