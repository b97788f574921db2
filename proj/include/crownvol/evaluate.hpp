#ifndef CROWNVOL_EVALUATE_HPP
#define CROWNVOL_EVALUATE_HPP

#include <crownvol/constants.hpp>
#include <crownvol/errors.hpp>
#include <crownvol/precision_value.hpp>
#include <crownvol/symbolic.hpp>

#include <map>
#include <string>

namespace crownvol {

using Assignments = std::map<std::string, PrecisionValue>;

inline PrecisionValue eval_monomial(const GradedMonomial& m, const Assignments& vars, Bits bits) {
  // Constants are taken a few bits above the target so the final bound stays
  // close to 2^-bits relative.
  Bits cb = bits + 8;
  PrecisionValue r = PrecisionValue::from_rational(1, bits);
  if (m.pi_exp() > 0) r = r * pow(eval_constant(Constant::pi(), cb), static_cast<unsigned>(m.pi_exp()));
  if (m.log2_exp() > 0) r = r * pow(eval_constant(Constant::log2(), cb), static_cast<unsigned>(m.log2_exp()));
  for (auto [j, e] : m.zeta_exps()) r = r * pow(eval_constant(Constant::zeta(j), cb), static_cast<unsigned>(e));
  for (auto [k, e] : m.beta_exps()) r = r * pow(eval_constant(Constant::beta(k), cb), static_cast<unsigned>(e));
  for (const auto& [name, e] : m.var_exps()) {
    auto it = vars.find(name);
    if (it == vars.end()) throw UnassignedVariable(name);
    r = r * pow(it->second, static_cast<unsigned>(e));
  }
  return r;
}

/// Numeric value of `v` with a propagated worst-case error bound. Every
/// variable occurring in `v` must be assigned.
inline PrecisionValue eval_symbolic(const SymbolicValue& v, const Assignments& vars, Bits bits) {
  PrecisionValue sum = PrecisionValue::from_rational(0, bits);
  for (const auto& [m, c] : v.terms()) sum = sum + eval_monomial(m, vars, bits) * c;
  return sum;
}

inline PrecisionValue eval_symbolic(const SymbolicValue& v, Bits bits) { return eval_symbolic(v, Assignments{}, bits); }

}  // namespace crownvol

#endif  // CROWNVOL_EVALUATE_HPP
