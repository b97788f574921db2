#ifndef CROWNVOL_PRECISION_VALUE_HPP
#define CROWNVOL_PRECISION_VALUE_HPP

#include <crownvol/errors.hpp>
#include <crownvol/real.hpp>

#include <limits>
#include <string>

namespace crownvol {

namespace detail {

// Directed-rounding helpers for error bounds: results are never smaller than
// the exact value.
inline Real add_up(const Real& a, const Real& b) {
  Real r(std::max(a.precision(), b.precision()));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return r;
}
inline Real mul_up(const Real& a, const Real& b) {
  Real r(std::max(a.precision(), b.precision()));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return r;
}
inline Real div_up(const Real& a, const Real& b) {
  Real r(std::max(a.precision(), b.precision()));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return r;
}
inline Real sub_down(const Real& a, const Real& b) {
  Real r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDD);
  return r;
}
// Bound on the rounding error of a round-to-nearest result x.
inline Real rounding_bound(const Real& x) {
  if (x.is_zero() || !x.is_finite()) return Real(x.precision());
  return ldexp(abs(x), 1 - static_cast<long>(x.precision()));
}

}  // namespace detail

/// A binary float together with an absolute error bound: the quantity it
/// stands for lies in [value - abs_error, value + abs_error].
///
/// Arithmetic propagates worst-case bounds (first-order terms, the product of
/// the two error terms, and the rounding error of the result).
struct PrecisionValue {
  Real value;
  Real abs_error;

  PrecisionValue() = default;
  PrecisionValue(Real v, Real e) : value(std::move(v)), abs_error(std::move(e)) {}
  explicit PrecisionValue(Real v) : value(std::move(v)), abs_error(value.precision()) {}

  /// Exact rational rounded to `bits`; the error covers that rounding.
  static PrecisionValue from_rational(const Rational& q, Bits bits) {
    Real v(q, bits);
    Real e = v.to_rational() == q ? Real(bits) : detail::rounding_bound(v);
    return {std::move(v), std::move(e)};
  }
  /// Decimal string; the error is half a unit in its last written digit.
  static PrecisionValue from_decimal(const std::string& text, Bits bits);

  [[nodiscard]] Bits precision() const { return value.precision(); }
  [[nodiscard]] Real lower() const { return detail::sub_down(value, abs_error); }
  [[nodiscard]] Real upper() const { return detail::add_up(value, abs_error); }
  [[nodiscard]] bool contains(const Real& x) const { return lower() <= x && x <= upper(); }
  /// Relative error bound, or +inf for an interval containing zero.
  [[nodiscard]] Real relative_error() const {
    if (abs(value) <= abs_error) return Real(std::numeric_limits<double>::infinity(), 53);
    return detail::div_up(abs_error, abs(value));
  }
  /// Number of correct decimal digits implied by the bound.
  [[nodiscard]] double correct_digits() const {
    Real rel = relative_error();
    if (!rel.is_finite()) return 0.0;
    if (rel.is_zero()) return bits_to_digits(precision());
    return -std::log10(rel.to_double());
  }

  /// True when the two intervals overlap, i.e. the values are consistent.
  [[nodiscard]] bool agrees_with(const PrecisionValue& o) const {
    return detail::sub_down(abs(value - o.value), detail::add_up(abs_error, o.abs_error)) <= 0L;
  }
};

inline PrecisionValue PrecisionValue::from_decimal(const std::string& text, Bits bits) {
  Real v(text, bits);
  std::string mantissa = text;
  long exp10 = 0;
  if (auto e = mantissa.find_first_of("eE"); e != std::string::npos) {
    exp10 = std::stol(mantissa.substr(e + 1));
    mantissa = mantissa.substr(0, e);
  }
  long decimals = 0;
  if (auto dot = mantissa.find('.'); dot != std::string::npos) decimals = static_cast<long>(mantissa.size() - dot - 1);
  // half a unit in the last place: 0.5 * 10^(exp10 - decimals)
  Real half_ulp = Real(5, bits) * pow(Real(10, bits), exp10 - decimals - 1);
  Real err = detail::add_up(half_ulp, detail::rounding_bound(v));
  return {std::move(v), std::move(err)};
}

inline PrecisionValue operator-(const PrecisionValue& a) { return {-a.value, a.abs_error}; }

inline PrecisionValue operator+(const PrecisionValue& a, const PrecisionValue& b) {
  Real v = a.value + b.value;
  Real e = detail::add_up(detail::add_up(a.abs_error, b.abs_error), detail::rounding_bound(v));
  return {std::move(v), std::move(e)};
}

inline PrecisionValue operator-(const PrecisionValue& a, const PrecisionValue& b) { return a + (-b); }

inline PrecisionValue operator*(const PrecisionValue& a, const PrecisionValue& b) {
  using namespace detail;
  Real v = a.value * b.value;
  Real e = add_up(add_up(mul_up(abs(a.value), b.abs_error), mul_up(abs(b.value), a.abs_error)),
                  add_up(mul_up(a.abs_error, b.abs_error), rounding_bound(v)));
  return {std::move(v), std::move(e)};
}

inline PrecisionValue operator/(const PrecisionValue& a, const PrecisionValue& b) {
  using namespace detail;
  Real margin = sub_down(abs(b.value), b.abs_error);
  if (margin <= 0L) throw DomainError("division by an interval containing zero");
  Real v = a.value / b.value;
  // |a/b - A/B| <= (|a| eB + |b| eA) / (|b| (|b| - eB))
  Real num = add_up(mul_up(abs(a.value), b.abs_error), mul_up(abs(b.value), a.abs_error));
  Real den(abs(b.value));
  mpfr_mul(den.raw(), den.raw(), margin.raw(), MPFR_RNDD);
  Real e = add_up(div_up(num, den), rounding_bound(v));
  return {std::move(v), std::move(e)};
}

inline PrecisionValue operator*(const PrecisionValue& a, const Rational& q) {
  return a * PrecisionValue::from_rational(q, a.precision());
}

inline PrecisionValue pow(const PrecisionValue& x, unsigned e) {
  PrecisionValue r = PrecisionValue::from_rational(1, x.precision());
  PrecisionValue base = x;
  while (e != 0) {
    if (e & 1U) r = r * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return r;
}

}  // namespace crownvol

#endif  // CROWNVOL_PRECISION_VALUE_HPP
