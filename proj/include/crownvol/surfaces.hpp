#ifndef CROWNVOL_SURFACES_HPP
#define CROWNVOL_SURFACES_HPP

#include <crownvol/crown.hpp>
#include <crownvol/errors.hpp>
#include <crownvol/evaluate.hpp>
#include <crownvol/moments.hpp>
#include <crownvol/serialize.hpp>
#include <crownvol/symbolic.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace crownvol {

/// Weil-Petersson volume polynomial V_{g,N}(b_1..b_N), supplied externally.
struct WpPolynomial {
  int genus = 0;
  std::vector<std::string> vars;
  // (pi^2 power, per-variable powers) -> coefficient
  std::map<std::pair<int, std::vector<int>>, Rational> terms;

  [[nodiscard]] int degree() const { return 6 * genus - 6 + 2 * static_cast<int>(vars.size()); }

  [[nodiscard]] SymbolicValue to_symbolic() const {
    SymbolicValue out;
    for (const auto& [key, c] : terms) {
      GradedMonomial m = GradedMonomial::pi(2 * key.first);
      for (std::size_t i = 0; i < vars.size(); ++i) m = m * GradedMonomial::var(vars[i], key.second[i]);
      out.add_term(m, c);
    }
    return out;
  }

  /// V_{0,3} = 1, the point moduli space.
  static WpPolynomial v03(std::vector<std::string> names = {"b1", "b2", "b3"}) {
    WpPolynomial wp;
    wp.vars = std::move(names);
    wp.terms[{0, std::vector<int>(wp.vars.size(), 0)}] = 1;
    return wp;
  }
};

/// Parses and validates {"genus", "vars", "terms": [{"pi2", "pows", "coeff"}]}.
/// Errors carry a JSON pointer to the offending node.
inline WpPolynomial load_wp_polynomial(const Json& doc) {
  using K = SchemaError::Kind;
  if (!doc.is_object()) throw SchemaError(K::Schema, "", "WP document must be an object");
  auto require = [&](const Json& node, const char* key, const std::string& at) -> const Json& {
    if (!node.contains(key)) throw SchemaError(K::Schema, at + "/" + key, std::string("missing \"") + key + "\"");
    return node.at(key);
  };
  WpPolynomial wp;
  const Json& genus = require(doc, "genus", "");
  if (!genus.is_number_integer() || genus.get<int>() < 0) throw SchemaError(K::Schema, "/genus", "genus must be a nonnegative integer");
  wp.genus = genus.get<int>();
  const Json& vars = require(doc, "vars", "");
  if (!vars.is_array()) throw SchemaError(K::Schema, "/vars", "vars must be an array of names");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::string at = "/vars/" + std::to_string(i);
    if (!vars[i].is_string() || vars[i].get<std::string>().empty()) throw SchemaError(K::Schema, at, "variable name must be a nonempty string");
    if (!seen.insert(vars[i].get<std::string>()).second) throw SchemaError(K::Schema, at, "duplicate variable name");
    wp.vars.push_back(vars[i].get<std::string>());
  }
  if (wp.degree() < 0) throw SchemaError(K::Schema, "/vars", "V_{g,N} needs 2g - 2 + N > 0");
  const Json& terms = require(doc, "terms", "");
  if (!terms.is_array()) throw SchemaError(K::Schema, "/terms", "terms must be an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string at = "/terms/" + std::to_string(i);
    const Json& t = terms[i];
    if (!t.is_object()) throw SchemaError(K::Schema, at, "term must be an object");
    const Json& pi2 = require(t, "pi2", at);
    if (!pi2.is_number_integer() || pi2.get<int>() < 0) throw SchemaError(K::Schema, at + "/pi2", "pi2 must be a nonnegative integer");
    const Json& pows = require(t, "pows", at);
    if (!pows.is_array()) throw SchemaError(K::Schema, at + "/pows", "pows must be an array");
    if (pows.size() != wp.vars.size()) throw SchemaError(K::VariableCount, at + "/pows", "pows length differs from vars length");
    std::vector<int> p;
    int degree = 2 * pi2.get<int>();
    for (std::size_t j = 0; j < pows.size(); ++j) {
      std::string pat = at + "/pows/" + std::to_string(j);
      if (!pows[j].is_number_integer() || pows[j].get<int>() < 0) throw SchemaError(K::Schema, pat, "power must be a nonnegative integer");
      int e = pows[j].get<int>();
      if (e % 2 != 0) throw SchemaError(K::OddPower, pat, "odd power of " + wp.vars[j]);
      p.push_back(e);
      degree += e;
    }
    const Json& coeff = require(t, "coeff", at);
    if (!coeff.is_string()) throw SchemaError(K::Schema, at + "/coeff", "coeff must be a string \"p/q\"");
    Rational c;
    try {
      c = parse_rational(coeff.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(K::Schema, at + "/coeff", e.what());
    }
    if (c < 0) throw SchemaError(K::NegativeCoefficient, at + "/coeff", "coefficients must be nonnegative");
    if (degree != wp.degree()) {
      throw SchemaError(K::NotHomogeneous, at, "term degree " + std::to_string(degree) + " differs from 6g-6+2N = " + std::to_string(wp.degree()));
    }
    if (c == 0) continue;
    Rational& slot = wp.terms[{pi2.get<int>(), p}];
    slot += c;
  }
  return wp;
}

/// Genus g, m cuffs and crowns with a_1..a_l tines.
struct SurfaceSpec {
  int genus = 0;
  int cuffs = 0;
  std::vector<int> crowns;

  [[nodiscard]] int boundary_count() const { return cuffs + static_cast<int>(crowns.size()); }

  /// dim_R of the moduli space with free necks: 6g - 6 + 2m + 3l + sum a_k.
  [[nodiscard]] int dimension() const {
    int l = static_cast<int>(crowns.size());
    return 6 * genus - 6 + 2 * cuffs + 3 * l + std::accumulate(crowns.begin(), crowns.end(), 0);
  }

  /// Throws DomainError for invalid or special-family specs.
  void validate() const {
    if (genus < 0 || cuffs < 0) throw DomainError("genus and cuff count must be nonnegative");
    if (crowns.empty()) throw DomainError("a crowned surface needs at least one crown");
    for (int a : crowns) {
      if (a < 1) throw DomainError("every crown needs at least one tine");
    }
    std::size_t l = crowns.size();
    if (genus == 0 && cuffs == 0 && l == 1) throw DomainError("this is an ideal polygon D_n; use the ngon operations");
    if (genus == 0 && cuffs == 1 && l == 1) throw DomainError("this is a crown A_n; use the crown operations");
    if (genus == 0 && cuffs == 0 && l == 2) throw DomainError("this is an annulus A_{a1,a2}; use the annulus operations");
    if (2 * genus - 2 + boundary_count() <= 0) throw DomainError("surface does not admit a hyperbolic metric");
  }
};

/// numerator / prod_k denom_k(v_k / 2): a symbolic function with hyperbolic
/// half-angle denominators.
struct HyperbolicRational {
  SymbolicValue numerator;
  std::vector<std::pair<std::string, HalfAngle>> denominators;

  /// Numeric value. Each sinh(v/2) factor is paired with one power of v from
  /// the numerator when possible, so v = 0 is handled by the analytic limit.
  [[nodiscard]] PrecisionValue evaluate(const Assignments& values, Bits bits) const {
    Bits w = bits + 16;
    SymbolicValue num = numerator;
    PrecisionValue factor = PrecisionValue::from_rational(1, w);
    for (const auto& [v, kind] : denominators) {
      auto it = values.find(v);
      if (it == values.end()) throw UnassignedVariable(v);
      PrecisionValue x{Real(it->second.value, w), Real(it->second.abs_error, w)};
      if (x.lower() < 0L) throw DomainError("negative value for " + v);
      if (kind == HalfAngle::CoshHalf) {
        factor = factor * detail::eval_decreasing([](const Real& t, Bits) { return 1L / cosh(t / 2L); }, x, w);
        continue;
      }
      auto groups = num.collect(v);
      if (!groups.empty() && groups.begin()->first >= 1) {
        // v / sinh(v/2) = 2 (v/2) / sinh(v/2)
        SymbolicValue shifted;
        for (const auto& [p, c] : groups) shifted += c * sym_var(v, p - 1);
        num = shifted;
        factor = factor * detail::eval_decreasing([](const Real& t, Bits) { return 2L * detail::x_over_sinh(t / 2L); }, x, w);
      } else {
        if (x.lower() <= 0L) throw DomainError("1/sinh(" + v + "/2) is singular at " + v + " = 0");
        PrecisionValue s = detail::eval_decreasing([](const Real& t, Bits) { return 1L / sinh(t / 2L); }, x, w);
        factor = factor * s;
      }
    }
    PrecisionValue r = eval_symbolic(num, values, w) * factor;
    Real out(r.value, bits);
    return {out, detail::add_up(r.abs_error, abs(out - r.value))};
  }
};

inline std::string to_plain(const HyperbolicRational& h) {
  std::map<std::pair<std::string, HalfAngle>, int> powers;
  for (const auto& d : h.denominators) ++powers[d];
  std::string den;
  for (const auto& [key, e] : powers) {
    std::string f = std::string(key.second == HalfAngle::SinhHalf ? "sinh" : "cosh") + "(" + key.first + "/2)";
    if (e > 1) f += "^" + std::to_string(e);
    den += den.empty() ? f : " " + f;
  }
  std::string num = to_plain(h.numerator);
  if (h.numerator.size() > 1) num = "(" + num + ")";
  return den.empty() ? num : num + " / (" + den + ")";
}

inline std::string to_latex(const HyperbolicRational& h) {
  std::map<std::pair<std::string, HalfAngle>, int> powers;
  for (const auto& d : h.denominators) ++powers[d];
  std::string den;
  for (const auto& [key, e] : powers) {
    std::string f = std::string(key.second == HalfAngle::SinhHalf ? "\\sinh" : "\\cosh") + "(" + key.first + "/2)";
    if (e > 1) f += "^{" + std::to_string(e) + "}";
    den += den.empty() ? f : " " + f;
  }
  std::string num = to_latex(h.numerator);
  return den.empty() ? num : "\\frac{" + num + "}{" + den + "}";
}

/// A random WP-shaped polynomial for property tests: even powers, positive
/// coefficients, homogeneous of degree 6g - 6 + 2 nvars.
template <class Rng>
WpPolynomial random_wp_polynomial(int genus, std::size_t nvars, Rng& rng) {
  WpPolynomial wp;
  wp.genus = genus;
  for (std::size_t i = 0; i < nvars; ++i) wp.vars.push_back("b" + std::to_string(i + 1));
  int half_degree = wp.degree() / 2;
  if (half_degree < 0) throw DomainError("unstable genus and boundary count");
  int nterms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < nterms; ++t) {
    // distribute half_degree units among pi^2 and the b_i^2
    std::vector<int> pows(nvars, 0);
    int pi2 = 0;
    for (int u = 0; u < half_degree; ++u) {
      std::size_t slot = rng() % (nvars + 1);
      if (slot == nvars) ++pi2;
      else pows[slot] += 2;
    }
    wp.terms[{pi2, pows}] += ratio(1 + static_cast<long>(rng() % 20), 1 + static_cast<long>(rng() % 20));
  }
  return wp;
}

namespace detail {

inline DenomKind neck_kind(int a) { return a % 2 == 0 ? DenomKind::SinhHalf : DenomKind::CoshHalf; }

// prefactor * numerator of the a-crown volume in the named variable.
inline SymbolicValue crown_numerator(int a, const std::string& var) {
  CrownVolume cv = crown_volume_fixed_neck(a);
  return cv.numerator.renamed(var).to_symbolic() * cv.prefactor;
}

inline HalfAngle crown_half_angle(int a) { return a % 2 == 0 ? HalfAngle::SinhHalf : HalfAngle::CoshHalf; }

}  // namespace detail

/// V_{A_{a1,a2}}(d) = d V_{A_a1}(d) V_{A_a2}(d), factored.
inline HyperbolicRational annulus_volume_fixed_neck(int a1, int a2, const std::string& var = "d") {
  detail::require_positive_n(std::min(a1, a2), 1, "annulus_volume_fixed_neck");
  HyperbolicRational h;
  h.numerator = sym_var(var) * detail::crown_numerator(a1, var) * detail::crown_numerator(a2, var);
  h.denominators = {{var, detail::crown_half_angle(a1)}, {var, detail::crown_half_angle(a2)}};
  return h;
}

/// The l -> l denominator case for int l V_{A_a1}(l) V_{A_a2}(l) dl.
inline DenomKind annulus_denominator(int a1, int a2) {
  if (a1 % 2 != a2 % 2) return DenomKind::SinhHalfCoshHalf;
  return a1 % 2 == 0 ? DenomKind::SinhSqHalf : DenomKind::CoshSqHalf;
}

/// Exact free-neck annulus volume int_0^inf l V_{A_a1}(l) V_{A_a2}(l) dl.
inline SymbolicValue annulus_volume(int a1, int a2) {
  detail::require_positive_n(std::min(a1, a2), 1, "annulus_volume");
  CrownVolume c1 = crown_volume_fixed_neck(a1);
  CrownVolume c2 = crown_volume_fixed_neck(a2);
  PiPolynomial integrand = PiPolynomial::monomial(0, 1, 1, "l") * c1.numerator.renamed("l") * c2.numerator.renamed("l");
  return reduce_integral(integrand, annulus_denominator(a1, a2)) * (c1.prefactor * c2.prefactor);
}

namespace detail {

inline void check_wp_matches(const SurfaceSpec& spec, const WpPolynomial& wp) {
  spec.validate();
  if (static_cast<int>(wp.vars.size()) != spec.boundary_count()) {
    throw SchemaError(SchemaError::Kind::VariableCount, "/vars",
                      "WP polynomial has " + std::to_string(wp.vars.size()) + " variables, surface needs m + l = " +
                          std::to_string(spec.boundary_count()));
  }
  if (wp.genus != spec.genus) throw SchemaError(SchemaError::Kind::Schema, "/genus", "WP genus differs from surface genus");
}

// Neck variable names: the last l WP variables.
inline std::vector<std::string> neck_vars(const SurfaceSpec& spec, const WpPolynomial& wp) {
  return {wp.vars.begin() + spec.cuffs, wp.vars.end()};
}

}  // namespace detail

/// V_Sigma(b | d) = V_{g,m+l}(b, d) prod_k d_k V_{A_{a_k}}(d_k). The first m WP
/// variables are cuffs, the last l are necks.
inline HyperbolicRational surface_volume_fixed(const SurfaceSpec& spec, const WpPolynomial& wp) {
  detail::check_wp_matches(spec, wp);
  auto necks = detail::neck_vars(spec, wp);
  HyperbolicRational h;
  h.numerator = wp.to_symbolic();
  for (std::size_t k = 0; k < necks.size(); ++k) {
    h.numerator *= sym_var(necks[k]) * detail::crown_numerator(spec.crowns[k], necks[k]);
    h.denominators.emplace_back(necks[k], detail::crown_half_angle(spec.crowns[k]));
  }
  return h;
}

/// V_Sigma(b): each neck integrated out against l V_{A_a}(l). Even a reduces
/// against sinh(l/2) moments, odd a against cosh(l/2) moments. `order` lists
/// crown indices; the default is ascending. The integrand factorizes, so the
/// result does not depend on the order.
inline SymbolicValue surface_volume_free(const SurfaceSpec& spec, const WpPolynomial& wp,
                                         std::optional<std::vector<std::size_t>> order = std::nullopt) {
  detail::check_wp_matches(spec, wp);
  auto necks = detail::neck_vars(spec, wp);
  std::vector<std::size_t> idx(necks.size());
  std::iota(idx.begin(), idx.end(), 0);
  if (order) {
    std::vector<std::size_t> sorted = *order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != idx) throw DomainError("integration order must be a permutation of the crown indices");
    idx = *order;
  }
  SymbolicValue integrand = wp.to_symbolic();
  for (std::size_t k : idx) {
    SymbolicValue with_crown = integrand * sym_var(necks[k]) * detail::crown_numerator(spec.crowns[k], necks[k]);
    if (spec.crowns[k] % 2 == 0) {
      // the crown numerator carries the explicit d factor of d / sinh(d/2)
      integrand = reduce_integral(with_crown, necks[k], DenomKind::SinhHalf);
    } else {
      integrand = reduce_integral(with_crown, necks[k], DenomKind::CoshHalf);
    }
  }
  return integrand;
}

}  // namespace crownvol

#endif  // CROWNVOL_SURFACES_HPP
