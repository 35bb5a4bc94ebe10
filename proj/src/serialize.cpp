#include "qprod/serialize.hpp"

#include <set>
#include <stdexcept>

namespace qprod {

using nlohmann::json;

json to_json(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) {
    if (c.fits_slong_p()) {
      out.push_back(c.get_si());
    } else {
      out.push_back(c.get_str());
    }
  }
  return out;
}

IntPolynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
  std::vector<mpz_class> coeffs;
  for (const auto& c : j) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long>());
    } else if (c.is_string()) {
      coeffs.emplace_back(c.get<std::string>(), 10);
    } else {
      throw std::invalid_argument("polynomial coefficients must be integers");
    }
  }
  return IntPolynomial(std::move(coeffs));
}

json to_json(const RationalPolyFraction& f) {
  return {{"numerator", to_json(f.numerator())},
          {"denominator", to_json(f.denominator())},
          {"text", f.to_string()}};
}

json to_json(const DirichletCharacter& chi) {
  json table = json::array();
  for (long n = 0; n < chi.modulus(); ++n) {
    auto v = chi.value(n);
    if (v) {
      table.push_back({v->numerator(), v->order()});
    } else {
      table.push_back(nullptr);
    }
  }
  const Conductor c = conductor(chi);
  return {{"modulus", chi.modulus()},
          {"exponents", std::vector<long>(chi.exponents().begin(), chi.exponents().end())},
          {"value_table", table},
          {"conductor", c.value},
          {"primitive", c.primitive},
          {"principal", chi.is_principal()}};
}

DirichletCharacter character_from_json(const json& j) {
  if (!j.is_object() || !j.contains("modulus") || !j.contains("exponents")) {
    throw std::invalid_argument("character needs modulus and exponents");
  }
  if (!j["modulus"].is_number_integer() || !j["exponents"].is_array()) {
    throw std::invalid_argument("character modulus must be an integer and exponents an array");
  }
  std::vector<long> e;
  for (const auto& x : j["exponents"]) {
    if (!x.is_number_integer()) throw std::invalid_argument("character exponents must be integers");
    e.push_back(x.get<long>());
  }
  return DirichletCharacter(j["modulus"].get<long>(), std::move(e));
}

json to_json(const IdentitySpec& spec) {
  json j;
  j["id"] = std::string(to_string(spec.id));
  if (!spec.alphas.empty()) j["alphas"] = spec.alphas;
  if (!spec.betas.empty()) j["betas"] = spec.betas;
  if (spec.n != 0) j["n"] = spec.n;
  if (spec.chi) {
    j["character"] = {{"modulus", spec.chi->modulus()},
                      {"exponents", std::vector<long>(spec.chi->exponents().begin(), spec.chi->exponents().end())}};
    j["primitive"] = conductor(*spec.chi).primitive;
  }
  if (!spec.q.empty()) j["q"] = spec.q;
  if (!spec.z.empty()) j["z"] = spec.z;
  j["digits"] = spec.prec.digits;
  j["guard"] = spec.prec.guard;
  if (spec.id == IdentityId::thm4) j["blocks"] = spec.blocks;
  if (spec.terms != 0) j["terms"] = spec.terms;
  if (spec.refine != 1.0) j["refine"] = spec.refine;
  if (spec.lhs_chi_shift) {
    j["lhs_chi_shift"] = {{"residue", spec.lhs_chi_shift->residue}, {"amount", spec.lhs_chi_shift->amount}};
  }
  return j;
}

namespace {

std::vector<std::string> string_list(const json& j, const char* name) {
  if (!j.is_array()) throw std::invalid_argument(std::string(name) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw std::invalid_argument(std::string(name) + " entries must be decimal strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

template <class T>
T field(const json& j, const char* name) {
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument(std::string("field '") + name + "' has the wrong type");
  }
}

}  // namespace

IdentitySpec spec_from_json(const json& j) {
  static const std::set<std::string> known{"id",    "alphas", "betas", "n",      "character", "primitive",
                                           "q",     "z",      "digits", "guard", "blocks",    "terms",
                                           "refine", "lhs_chi_shift"};
  if (!j.is_object()) throw std::invalid_argument("identity spec must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw std::invalid_argument("unknown identity spec field '" + key + "'");
  }
  IdentitySpec spec;
  auto id = identity_from_string(field<std::string>(j, "id"));
  if (!id) throw std::invalid_argument("unknown identity id '" + j["id"].get<std::string>() + "'");
  spec.id = *id;
  if (j.contains("alphas")) spec.alphas = string_list(j["alphas"], "alphas");
  if (j.contains("betas")) spec.betas = string_list(j["betas"], "betas");
  if (j.contains("n")) spec.n = field<long>(j, "n");
  if (j.contains("character")) spec.chi = character_from_json(j["character"]);
  if (j.contains("q")) spec.q = field<std::string>(j, "q");
  if (j.contains("z")) spec.z = field<std::string>(j, "z");
  if (j.contains("digits")) spec.prec.digits = field<int>(j, "digits");
  if (j.contains("guard")) spec.prec.guard = field<int>(j, "guard");
  if (j.contains("blocks")) spec.blocks = field<long>(j, "blocks");
  if (j.contains("terms")) spec.terms = field<long>(j, "terms");
  if (j.contains("refine")) spec.refine = field<double>(j, "refine");
  if (j.contains("lhs_chi_shift")) {
    const json& s = j["lhs_chi_shift"];
    spec.lhs_chi_shift = IdentitySpec::CharacterShift{field<long>(s, "residue"), field<std::string>(s, "amount")};
  }
  return spec;
}

}  // namespace qprod
