#ifndef CROWNVOL_SERIALIZE_HPP
#define CROWNVOL_SERIALIZE_HPP

#include <crownvol/errors.hpp>
#include <crownvol/precision_value.hpp>
#include <crownvol/symbolic.hpp>

#include <json.hpp>

#include <string>

namespace crownvol {

using Json = nlohmann::ordered_json;

/// Canonical JSON: an array of term objects in canonical order,
/// {"coeff": "p/q", "pi": e, "log2": e, "zeta": {"3": e}, "beta": {"2": e}, "vars": {"d": e}}.
/// Every key is always present so the layout is fixed.
inline Json to_json(const SymbolicValue& v) {
  Json out = Json::array();
  for (const auto& [m, c] : v.terms()) {
    Json t;
    t["coeff"] = c.get_str();
    t["pi"] = m.pi_exp();
    t["log2"] = m.log2_exp();
    Json z = Json::object();
    for (auto [j, e] : m.zeta_exps()) z[std::to_string(j)] = e;
    t["zeta"] = z;
    Json b = Json::object();
    for (auto [k, e] : m.beta_exps()) b[std::to_string(k)] = e;
    t["beta"] = b;
    Json vars = Json::object();
    for (const auto& [name, e] : m.var_exps()) vars[name] = e;
    t["vars"] = vars;
    out.push_back(std::move(t));
  }
  return out;
}

inline SymbolicValue symbolic_from_json(const Json& doc) {
  if (!doc.is_array()) throw SchemaError(SchemaError::Kind::Schema, "", "symbolic value must be an array of terms");
  SymbolicValue out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const Json& t = doc[i];
    std::string at = "/" + std::to_string(i);
    auto exponent = [&](const Json& node, const std::string& where) {
      if (!node.is_number_integer() || node.get<int>() < 0) {
        throw SchemaError(SchemaError::Kind::Schema, where, "exponent must be a nonnegative integer");
      }
      return node.get<int>();
    };
    if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string()) {
      throw SchemaError(SchemaError::Kind::Schema, at, "term needs a string \"coeff\"");
    }
    Rational c;
    try {
      c = parse_rational(t["coeff"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(SchemaError::Kind::Schema, at + "/coeff", e.what());
    }
    GradedMonomial m;
    if (t.contains("pi")) m = m * GradedMonomial::pi(exponent(t["pi"], at + "/pi"));
    if (t.contains("log2")) m = m * GradedMonomial::log2(exponent(t["log2"], at + "/log2"));
    try {
      if (t.contains("zeta")) {
        for (const auto& [k, e] : t["zeta"].items()) m = m * GradedMonomial::zeta(std::stoi(k), exponent(e, at + "/zeta/" + k));
      }
      if (t.contains("beta")) {
        for (const auto& [k, e] : t["beta"].items()) m = m * GradedMonomial::beta(std::stoi(k), exponent(e, at + "/beta/" + k));
      }
    } catch (const SchemaError&) {
      throw;
    } catch (const std::exception& e) {
      throw SchemaError(SchemaError::Kind::Schema, at, e.what());
    }
    if (t.contains("vars")) {
      for (const auto& [k, e] : t["vars"].items()) m = m * GradedMonomial::var(k, exponent(e, at + "/vars/" + k));
    }
    out.add_term(m, c);
  }
  return out;
}

/// {"value": "...", "abs_error": "..."} with enough digits to round-trip.
inline Json to_json(const PrecisionValue& x) {
  int digits = bits_to_digits(x.precision()) + 2;
  return Json{{"value", x.value.str(digits)}, {"abs_error", x.abs_error.str(6)}};
}

}  // namespace crownvol

#endif  // CROWNVOL_SERIALIZE_HPP
