#ifndef CROWNVOL_MOMENTS_HPP
#define CROWNVOL_MOMENTS_HPP

#include <crownvol/errors.hpp>
#include <crownvol/pi_polynomial.hpp>
#include <crownvol/quadrature.hpp>
#include <crownvol/symbolic.hpp>

#include <string>

namespace crownvol {

/// Hyperbolic denominators of the moment integrals int_0^inf l^p / D(l) dl.
enum class DenomKind {
  SinhFull,          // sinh(l)
  SinhSqHalf,        // sinh^2(l/2)
  CoshSqHalf,        // cosh^2(l/2)
  SinhHalf,          // sinh(l/2)
  CoshHalf,          // cosh(l/2)
  SinhHalfCoshHalf,  // sinh(l/2) cosh(l/2) = sinh(l)/2
};

inline std::string to_string(DenomKind k) {
  switch (k) {
    case DenomKind::SinhFull: return "sinh(l)";
    case DenomKind::SinhSqHalf: return "sinh^2(l/2)";
    case DenomKind::CoshSqHalf: return "cosh^2(l/2)";
    case DenomKind::SinhHalf: return "sinh(l/2)";
    case DenomKind::CoshHalf: return "cosh(l/2)";
    case DenomKind::SinhHalfCoshHalf: return "sinh(l/2)cosh(l/2)";
  }
  return "?";
}

namespace detail {

inline Rational pow2_rational(long e) {
  Integer p = 1;
  p <<= static_cast<mp_bitcnt_t>(e < 0 ? -e : e);
  return e < 0 ? Rational(1) / Rational(p) : Rational(p);
}

[[noreturn]] inline void moment_fail(MomentError::Reason r, long power, DenomKind k) {
  std::string why = r == MomentError::Reason::Divergent ? "divergent" : "wrong parity";
  throw MomentError(r, "moment l^" + std::to_string(power) + " / " + to_string(k) + " is " + why);
}

// Validates the (power, kind) pair against the closed-form table.
inline void check_moment(long power, DenomKind k) {
  using R = MomentError::Reason;
  if (power < 0) moment_fail(R::Divergent, power, k);
  switch (k) {
    case DenomKind::SinhFull:
    case DenomKind::SinhHalf:
    case DenomKind::SinhHalfCoshHalf:
      if (power == 0) moment_fail(R::Divergent, power, k);
      if (power % 2 != 0) moment_fail(R::WrongParity, power, k);
      return;
    case DenomKind::SinhSqHalf:
      if (power < 2) moment_fail(R::Divergent, power, k);
      if (power % 2 == 0) moment_fail(R::WrongParity, power, k);
      return;
    case DenomKind::CoshSqHalf:
    case DenomKind::CoshHalf:
      if (power % 2 == 0) moment_fail(R::WrongParity, power, k);
      return;
  }
}

// int_0^inf t^(2k) / sinh t dt = 2 (2k)! (1 - 2^(-2k-1)) zeta(2k+1)
inline SymbolicValue moment_sinh_full(long p) {
  return sym_zeta(static_cast<int>(p + 1)) * (Rational(2 * factorial(p)) * (1 - pow2_rational(-p - 1)));
}

}  // namespace detail

/// Exact value of int_0^inf l^power / denom(l) dl.
///
/// Half-angle kinds are reduced by l = 2t, contributing 2^(power+1). Throws
/// MomentError for divergent or wrong-parity requests.
inline SymbolicValue moment(long power, DenomKind kind) {
  using detail::factorial;
  using detail::pow2_rational;
  detail::check_moment(power, kind);
  const long p = power;
  switch (kind) {
    case DenomKind::SinhFull:
      return detail::moment_sinh_full(p);
    case DenomKind::SinhHalfCoshHalf:
      return detail::moment_sinh_full(p) * Rational(2);
    case DenomKind::SinhHalf:
      return detail::moment_sinh_full(p) * pow2_rational(p + 1);
    case DenomKind::SinhSqHalf: {
      // int t^(2k+1)/sinh^2 t = (2k+1)!/2^(2k) zeta(2k+1)
      Rational c = Rational(factorial(p)) * pow2_rational(-(p - 1));
      return sym_zeta(static_cast<int>(p)) * (c * pow2_rational(p + 1));
    }
    case DenomKind::CoshSqHalf: {
      if (p == 1) return sym_log2() * pow2_rational(2);  // int t/cosh^2 t = log 2
      // int t^(2k+1)/cosh^2 t = (2k+1)!/2^(2k) (1 - 2^(-2k)) zeta(2k+1)
      Rational c = Rational(factorial(p)) * pow2_rational(-(p - 1)) * (1 - pow2_rational(-(p - 1)));
      return sym_zeta(static_cast<int>(p)) * (c * pow2_rational(p + 1));
    }
    case DenomKind::CoshHalf: {
      // int t^(2k-1)/cosh t = 2 (2k-1)! beta(2k)
      Rational c = Rational(2 * factorial(p));
      return sym_beta(static_cast<int>(p + 1)) * (c * pow2_rational(p + 1));
    }
  }
  return {};
}

/// Linear reduction of int numerator(l) / denom(l) dl for a polynomial in
/// pi^2 and l. The error message names the offending monomial.
inline SymbolicValue reduce_integral(const PiPolynomial& numerator, DenomKind kind) {
  SymbolicValue out;
  for (const auto& [key, c] : numerator.coefficients()) {
    SymbolicValue m;
    try {
      m = moment(key.second, kind);
    } catch (const MomentError& e) {
      throw MomentError(e.reason(), std::string(e.what()) + " (monomial " +
                                        PiPolynomial::monomial(key.first, key.second, c, numerator.variable()).to_plain() + ")");
    }
    out += sym_pi(2 * key.first) * m * c;
  }
  return out;
}

/// Same reduction for a general SymbolicValue numerator, integrating over the
/// named variable; every other generator or variable is a coefficient.
inline SymbolicValue reduce_integral(const SymbolicValue& numerator, const std::string& var, DenomKind kind) {
  SymbolicValue out;
  for (const auto& [power, coeff] : numerator.collect(var)) {
    SymbolicValue m;
    try {
      m = moment(power, kind);
    } catch (const MomentError& e) {
      throw MomentError(e.reason(), std::string(e.what()) + " (coefficient " + to_plain(coeff) + ")");
    }
    out += coeff * m;
  }
  return out;
}

/// 1 / denom(l) evaluated without cancellation.
inline Real inverse_denominator(DenomKind kind, const Real& l) {
  Real half = l / 2L;
  switch (kind) {
    case DenomKind::SinhFull: return 1L / sinh(l);
    case DenomKind::SinhSqHalf: { Real s = sinh(half); return 1L / (s * s); }
    case DenomKind::CoshSqHalf: { Real c = cosh(half); return 1L / (c * c); }
    case DenomKind::SinhHalf: return 1L / sinh(half);
    case DenomKind::CoshHalf: return 1L / cosh(half);
    case DenomKind::SinhHalfCoshHalf: return 2L / sinh(l);
  }
  return Real(l.precision());
}

/// Exponential envelope of 1/denom(l) valid for l >= 1.
inline ExpTail denominator_tail(DenomKind kind, long power, Bits bits) {
  auto tail = [&](const char* c, Rational alpha) { return ExpTail{Real(std::string_view(c), bits), power, Real(alpha, bits)}; };
  switch (kind) {
    case DenomKind::SinhFull: return tail("2.32", 1);
    case DenomKind::SinhSqHalf: return tail("10.02", 1);
    case DenomKind::CoshSqHalf: return tail("4", 1);
    case DenomKind::SinhHalf: return tail("3.17", ratio(1, 2));
    case DenomKind::CoshHalf: return tail("2", ratio(1, 2));
    case DenomKind::SinhHalfCoshHalf: return tail("4.64", 1);
  }
  return tail("0", 1);
}

/// Direct numeric quadrature of the moment integral (validation oracle).
inline PrecisionValue moment_numeric(long power, DenomKind kind, const Real& abs_target, Bits bits) {
  return integrate_half_line(
      [&](const Real& l) { return l.is_zero() ? Real(bits) : pow(l, power) * inverse_denominator(kind, l); },
      denominator_tail(kind, power, bits), abs_target, bits);
}

}  // namespace crownvol

#endif  // CROWNVOL_MOMENTS_HPP
