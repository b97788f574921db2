#ifndef CROWNVOL_CROWN_HPP
#define CROWNVOL_CROWN_HPP

#include <crownvol/constants.hpp>
#include <crownvol/errors.hpp>
#include <crownvol/pi_polynomial.hpp>
#include <crownvol/precision_value.hpp>
#include <crownvol/series.hpp>
#include <crownvol/symbolic.hpp>

#include <string>
#include <vector>

namespace crownvol {

/// Hyperbolic half-angle factor in a crown denominator.
enum class HalfAngle { SinhHalf, CoshHalf };

/// V_{A_n}(d) = prefactor * numerator(d) / denominator(d/2), kept factored.
struct CrownVolume {
  int n = 1;
  PiPolynomial numerator{"d"};           // expanded product of the factors
  std::vector<PiPolynomial> factors;     // d (even n) and the d^2 + (j pi)^2 terms
  HalfAngle denom = HalfAngle::CoshHalf;
  Rational prefactor = 1;
};

namespace detail {

inline Integer double_factorial(long n) {
  Integer r = 1;
  for (long k = n; k > 1; k -= 2) r *= k;
  return r;  // (-1)!! = 0!! = 1
}

inline void require_positive_n(int n, int min, const char* what) {
  if (n < min) throw DomainError(std::string(what) + " needs n >= " + std::to_string(min) + ", got " + std::to_string(n));
}

// Evaluates a function that is decreasing on [0, inf) at an uncertain d >= 0,
// bounding the propagated error by the values at the interval ends.
template <class F>
PrecisionValue eval_decreasing(F&& f, const PrecisionValue& d, Bits bits) {
  Bits w = bits + 24;
  if (d.upper() < 0L) throw DomainError("negative d");
  Real lo = max(Real(0, w), Real(d.lower(), w));
  Real hi(d.upper(), w);
  Real mid = max(Real(0, w), Real(d.value, w));
  Real v = f(mid, w);
  Real err = max(abs(f(lo, w) - v), abs(v - f(hi, w)));
  Real out(v, bits);
  return {out, add_up(add_up(err, abs(out - v)), ldexp(abs(v), 8 - static_cast<long>(w)))};
}

// x / sinh(x) with the removable singularity at 0.
inline Real x_over_sinh(const Real& x) { return x.is_zero() ? Real(1, x.precision()) : x / sinh(x); }

}  // namespace detail

/// Closed form of the n-crown volume with fixed neck length d.
inline CrownVolume crown_volume_fixed_neck(int n) {
  detail::require_positive_n(n, 1, "crown_volume_fixed_neck");
  CrownVolume cv;
  cv.n = n;
  cv.numerator = PiPolynomial::constant(1);
  if (n % 2 == 0) {
    cv.denom = HalfAngle::SinhHalf;
    PiPolynomial d = PiPolynomial::monomial(0, 1, 1);
    cv.factors.push_back(d);
    for (int j = 1; j <= n / 2 - 1; ++j) {
      cv.factors.push_back(PiPolynomial::monomial(0, 2, 1) + PiPolynomial::monomial(1, 0, Rational(4 * j * j)));
    }
  } else {
    cv.denom = HalfAngle::CoshHalf;
    for (int j = 1; j <= (n - 1) / 2; ++j) {
      cv.factors.push_back(PiPolynomial::monomial(0, 2, 1) + PiPolynomial::monomial(1, 0, Rational((2 * j - 1) * (2 * j - 1))));
    }
  }
  for (const auto& f : cv.factors) cv.numerator = cv.numerator * f;
  cv.prefactor = Rational(1) / Rational(2 * detail::factorial(n - 1));
  return cv;
}

/// Renders e.g. "(d^2 + pi^2) / (4 cosh(d/2))".
inline std::string to_plain(const CrownVolume& cv, const std::string& var = "d") {
  std::string num;
  for (const auto& f : cv.factors) {
    std::string s = f.renamed(var).to_plain();
    std::string part = f.coefficients().size() > 1 ? "(" + s + ")" : s;
    num += num.empty() ? part : " " + part;
  }
  if (num.empty()) num = "1";
  Rational den = Rational(1) / cv.prefactor;
  std::string fn = cv.denom == HalfAngle::SinhHalf ? "sinh" : "cosh";
  return num + " / (" + den.get_str() + " " + fn + "(" + var + "/2))";
}

inline std::string to_latex(const CrownVolume& cv) {
  std::string num;
  for (const auto& f : cv.factors) {
    std::string s;
    bool first = true;
    std::map<int, std::map<int, Rational>, std::greater<>> rows;
    for (const auto& [k, c] : f.coefficients()) rows[k.second][k.first] = c;
    for (const auto& [power, row] : rows) {
      for (const auto& [pi2, c] : row) {
        std::string t = c == 1 ? "" : c.get_str();
        if (pi2 > 0) t += pi2 == 1 ? "\\pi^{2}" : "\\pi^{" + std::to_string(2 * pi2) + "}";
        if (power > 0) t += power == 1 ? "d" : "d^{" + std::to_string(power) + "}";
        s += first ? t : " + " + t;
        first = false;
      }
    }
    num += f.coefficients().size() > 1 ? "(" + s + ")" : s;
  }
  if (num.empty()) num = "1";
  Rational den = Rational(1) / cv.prefactor;
  std::string fn = cv.denom == HalfAngle::SinhHalf ? "\\sinh" : "\\cosh";
  return "\\frac{" + num + "}{" + den.get_str() + fn + "(d/2)}";
}

/// V_{A_n}(d) at a point d >= 0, analytic limit at d = 0.
inline Real crown_volume_value(const CrownVolume& cv, const Real& d) {
  Bits w = d.precision();
  Real pi = eval_constant(Constant::pi(), w).value;
  Real half = d / 2L;
  if (cv.denom == HalfAngle::SinhHalf) {
    // numerator = d * rest; d / sinh(d/2) = 2 (x / sinh x)
    Real rest = cv.numerator.divided_by_variable(1).evaluate(d, pi);
    return cv.prefactor * (2L * rest * detail::x_over_sinh(half));
  }
  return cv.prefactor * (cv.numerator.evaluate(d, pi) / cosh(half));
}

/// V_{A_n}(d) for an uncertain d >= 0. The crown volume is decreasing in d
/// (a convolution of symmetric log-concave kernels), which gives the bound.
inline PrecisionValue crown_volume_eval(const CrownVolume& cv, const PrecisionValue& d, Bits bits = kDefaultBits) {
  if (d.value < 0L) throw DomainError("crown volume needs d >= 0");
  return detail::eval_decreasing([&](const Real& x, Bits w) { return crown_volume_value(cv, Real(x, w)); }, d, bits);
}

/// Exact V_{A_n}(0): the d/sinh(d/2) factor tends to 2.
inline SymbolicValue crown_volume_at_zero(int n) {
  CrownVolume cv = crown_volume_fixed_neck(n);
  if (cv.denom == HalfAngle::SinhHalf) return cv.numerator.divided_by_variable(1).at_zero() * (2 * cv.prefactor);
  return cv.numerator.at_zero() * cv.prefactor;
}

/// Total volume of the n-crown moduli space, pi^n / 2.
inline SymbolicValue crown_total_volume(int n) {
  detail::require_positive_n(n, 1, "crown_total_volume");
  return sym_pi(n) * ratio(1, 2);
}

/// Exact generating-function coefficients over Q[pi^2, d].
///
/// With u = (d/pi) arcsin(pi x) the generating function is
///   x (1 - pi^2 x^2)^(-1/2) [cosh(u) / (2 cosh(d/2)) + sinh(u) / (2 sinh(d/2))],
/// so the x^n coefficient is A_n / (2 cosh(d/2)) + B_n / (2 sinh(d/2)).
struct CrownGfCoefficients {
  std::vector<PiPolynomial> cosh_part;  // A_n, index n = 0..N
  std::vector<PiPolynomial> sinh_part;  // B_n
};

inline CrownGfCoefficients crown_gf_exact(int N) {
  if (N < 1) throw DomainError("generating function needs N >= 1");
  auto order = static_cast<std::size_t>(N);
  PiPolynomial zero("d");
  PiPolynomial one = PiPolynomial::constant(1);
  TruncatedSeries<PiPolynomial> u(order, zero), root(order, zero), x(order, zero);
  x[1] = one;
  for (std::size_t m = 0; 2 * m <= order; ++m) {
    // C(2m, m) / 4^m
    Integer binom = detail::factorial(static_cast<long>(2 * m)) / (detail::factorial(static_cast<long>(m)) * detail::factorial(static_cast<long>(m)));
    Rational central = Rational(binom) / Rational(Integer(1) << static_cast<mp_bitcnt_t>(2 * m));
    root[2 * m] = PiPolynomial::monomial(static_cast<int>(m), 0, central);
    if (2 * m + 1 <= order) {
      u[2 * m + 1] = PiPolynomial::monomial(static_cast<int>(m), 1, central / Rational(static_cast<long>(2 * m + 1)));
    }
  }
  auto [ch, sh] = cosh_sinh(u, one);
  TruncatedSeries<PiPolynomial> prefix = x * root;
  TruncatedSeries<PiPolynomial> a = prefix * ch;
  TruncatedSeries<PiPolynomial> b = prefix * sh;
  CrownGfCoefficients out;
  for (std::size_t i = 0; i <= order; ++i) {
    out.cosh_part.push_back(a[i]);
    out.sinh_part.push_back(b[i]);
  }
  return out;
}

/// Numeric x^1..x^N coefficients of the crown generating function at d.
inline std::vector<PrecisionValue> crown_gf_coefficients(int N, const PrecisionValue& d, Bits bits) {
  if (d.value < 0L) throw DomainError("generating function needs d >= 0");
  CrownGfCoefficients exact = crown_gf_exact(N);
  Bits w = bits + 32;
  PrecisionValue pi = eval_constant(Constant::pi(), w);
  PrecisionValue pi2 = pi * pi;
  PrecisionValue dw{Real(d.value, w), Real(d.abs_error, w)};
  PrecisionValue inv_cosh = detail::eval_decreasing([](const Real& t, Bits) { return 1L / (2L * cosh(t / 2L)); }, dw, w);
  PrecisionValue d_over_sinh = detail::eval_decreasing([](const Real& t, Bits) { return detail::x_over_sinh(t / 2L); }, dw, w);
  auto eval_poly = [&](const PiPolynomial& p) {
    PrecisionValue s = PrecisionValue::from_rational(0, w);
    for (const auto& [k, c] : p.coefficients()) s = s + pow(pi2, static_cast<unsigned>(k.first)) * pow(dw, static_cast<unsigned>(k.second)) * c;
    return s;
  };
  std::vector<PrecisionValue> out;
  for (int n = 1; n <= N; ++n) {
    auto i = static_cast<std::size_t>(n);
    PrecisionValue v = eval_poly(exact.cosh_part[i]) * inv_cosh;
    if (!exact.sinh_part[i].is_zero()) {
      // B_n / (2 sinh(d/2)) = (B_n / d) * (d/2) / sinh(d/2)
      v = v + eval_poly(exact.sinh_part[i].divided_by_variable(1)) * d_over_sinh;
    }
    out.push_back({Real(v.value, bits), detail::add_up(v.abs_error, detail::rounding_bound(Real(v.value, bits)))});
  }
  return out;
}

/// Conjectured n-gon volume (labelled CONJECTURE wherever it is shown).
inline SymbolicValue ngon_conjecture_volume(int n) {
  detail::require_positive_n(n, 3, "ngon_conjecture_volume");
  Rational ratio_df = Rational(detail::double_factorial(n - 4)) / Rational(detail::double_factorial(n - 3));
  if (n % 2 == 0) return sym_pi(n - 4) * (ratio(2, n - 2) * ratio_df);
  return sym_pi(n - 3) * (ratio(1, n - 2) * ratio_df);
}

/// Upper bound on the n-gon volume for n >= 4; equals V_{A_{n-2}}(0).
inline SymbolicValue ngon_upper_bound(int n) {
  detail::require_positive_n(n, 3, "ngon_upper_bound");
  Rational ratio_df = Rational(detail::double_factorial(n - 4)) / Rational(detail::double_factorial(n - 3));
  if (n % 2 == 0) return sym_pi(n - 4) * ratio_df;
  return sym_pi(n - 3) * (ratio_df / 2);
}

/// Exact x^0..x^N coefficients of arcsin(pi x)/(pi x) + x (arcsin(pi x)/(pi x))^2.
inline std::vector<SymbolicValue> ngon_gf_coefficients(int N) {
  if (N < 0) throw DomainError("ngon_gf_coefficients needs N >= 0");
  auto order = static_cast<std::size_t>(N);
  // a(x) = arcsin(pi x)/(pi x) = sum_m C(2m,m)/(4^m (2m+1)) pi^(2m) x^(2m)
  std::vector<Rational> a(order + 1, Rational(0));
  for (std::size_t m = 0; 2 * m <= order; ++m) {
    Integer binom = detail::factorial(static_cast<long>(2 * m)) / (detail::factorial(static_cast<long>(m)) * detail::factorial(static_cast<long>(m)));
    a[2 * m] = Rational(binom) / Rational(Integer(1) << static_cast<mp_bitcnt_t>(2 * m)) / Rational(static_cast<long>(2 * m + 1));
  }
  std::vector<SymbolicValue> out;
  for (std::size_t n = 0; n <= order; ++n) {
    // coefficient of pi^n x^n (n even) or pi^(n-1) x^n (n odd, from x a^2)
    SymbolicValue c;
    if (n % 2 == 0) {
      c = sym_pi(static_cast<int>(n)) * a[n];
    } else {
      Rational sq = 0;
      for (std::size_t i = 0; i <= n - 1; ++i) sq += a[i] * a[n - 1 - i];
      c = sym_pi(static_cast<int>(n - 1)) * sq;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace crownvol

#endif  // CROWNVOL_CROWN_HPP
