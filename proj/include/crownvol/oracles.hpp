#ifndef CROWNVOL_ORACLES_HPP
#define CROWNVOL_ORACLES_HPP

// Numeric integrals that independently reproduce the closed forms.

#include <crownvol/crown.hpp>
#include <crownvol/errors.hpp>
#include <crownvol/quadrature.hpp>

#include <functional>
#include <vector>

namespace crownvol {

/// Envelope V_{A_n}(l) <= c l^(n-1) e^(-l/2) for l >= 1.
inline ExpTail crown_envelope(int n, Bits bits) {
  CrownVolume cv = crown_volume_fixed_neck(n);
  // every monomial pi^(2a) l^b is at most 10^a l^(n-1) once l >= 1
  Rational s = 0;
  for (const auto& [k, c] : cv.numerator.coefficients()) {
    Rational ten_pow = 1;
    for (int i = 0; i < k.first; ++i) ten_pow *= 10;
    s += c * ten_pow;
  }
  Rational denom_const = cv.denom == HalfAngle::SinhHalf ? ratio(317, 100) : Rational(2);
  return ExpTail{Real(s * cv.prefactor * denom_const, bits), n - 1, Real(ratio(1, 2), bits)};
}

/// Fourier-side form of the n-fold convolution of 1/(2 cosh(s/2)):
///   V_{A_n}(d) = pi^(n-2) int_0^inf cos(t d / pi) / cosh^n(t) dt.
inline PrecisionValue crown_convolution_check(int n, const Real& d, Bits bits, const Real& abs_target) {
  detail::require_positive_n(n, 1, "crown_convolution_check");
  if (d < 0L) throw DomainError("crown_convolution_check needs d >= 0");
  Bits w = bits + 16;
  Real pi = eval_constant(Constant::pi(), w).value;
  Real a = Real(d, w) / pi;
  Real scale = pow(pi, n - 2);
  ExpTail tail{Real(1L << n, w), 0, Real(n, w)};  // |cos| / cosh^n t <= 2^n e^(-n t)
  PrecisionValue integral = integrate_half_line(
      [&](const Real& t) { return cos(a * t) / pow(cosh(t), n); }, tail, abs_target / scale, w);
  return {Real(integral.value * scale, bits), integral.abs_error * scale};
}

/// int_0^inf V_{A_n}(d) dd by quadrature of the closed form.
inline PrecisionValue crown_marginal_numeric(int n, Bits bits, const Real& abs_target) {
  CrownVolume cv = crown_volume_fixed_neck(n);
  return integrate_half_line([&](const Real& d) { return crown_volume_value(cv, d); }, crown_envelope(n, bits), abs_target, bits);
}

/// int_0^inf l V_{A_a1}(l) V_{A_a2}(l) dl by quadrature of the closed forms.
inline PrecisionValue annulus_volume_numeric(int a1, int a2, Bits bits, const Real& abs_target) {
  CrownVolume c1 = crown_volume_fixed_neck(a1);
  CrownVolume c2 = crown_volume_fixed_neck(a2);
  ExpTail e1 = crown_envelope(a1, bits), e2 = crown_envelope(a2, bits);
  ExpTail tail{e1.c * e2.c, e1.p + e2.p + 1, Real(1, bits)};
  return integrate_half_line([&](const Real& l) { return l * crown_volume_value(c1, l) * crown_volume_value(c2, l); },
                             tail, abs_target, bits);
}

/// int_0^inf p(l) l V_{A_a}(l) dl for a polynomial weight p with nonnegative
/// coefficients of degree <= max_power, evaluated by quadrature.
inline PrecisionValue neck_integral_numeric(int a, const std::function<Real(const Real&)>& weight, long max_power,
                                            const Real& weight_bound, Bits bits, const Real& abs_target) {
  CrownVolume cv = crown_volume_fixed_neck(a);
  ExpTail e = crown_envelope(a, bits);
  ExpTail tail{e.c * weight_bound, e.p + 1 + max_power, e.alpha};
  return integrate_half_line([&](const Real& l) { return weight(l) * l * crown_volume_value(cv, l); }, tail, abs_target, bits);
}

namespace detail {

// Recursive simplex integration: deltas[0..k) fixed, the rest share `remaining`.
// Inner levels run 1000x tighter so their noise does not stall the outer level.
// They may miss the target only next to corners where the outer weight vanishes.
template <class F>
Real simplex_integrate(F& integrand, std::vector<Real>& deltas, int dims, const Real& remaining, Bits bits,
                       const TanhSinhOptions& opt) {
  TanhSinhOptions inner = opt;
  inner.abs_target = opt.abs_target / 1000L;
  inner.throw_on_failure = false;
  if (static_cast<int>(deltas.size()) == dims - 2) {
    // last free coordinate; its complement is the final delta
    return tanh_sinh(
               [&](const Real&, const Real& left, const Real& right) {
                 deltas.push_back(left);
                 deltas.push_back(right);
                 Real v = integrand(deltas);
                 deltas.pop_back();
                 deltas.pop_back();
                 return v;
               },
               Real(0, bits), remaining, bits, opt)
        .value;
  }
  return tanh_sinh(
             [&](const Real&, const Real& left, const Real& right) {
               deltas.push_back(left);
               Real v = simplex_integrate(integrand, deltas, dims, right, bits, inner);
               deltas.pop_back();
               return v;
             },
             Real(0, bits), remaining, bits, opt)
      .value;
}

}  // namespace detail

/// Corrected simplex form of the n-crown volume at neck length P:
///   int e^(P/2) (e^P - 1) / prod_i (e^(delta_i + delta_(i+1)) - 1)
/// over delta_i > 0, sum delta_i = P, indices cyclic.
///
/// Nested tanh-sinh; each delta is obtained from an endpoint complement so
/// the small sums in the denominators carry full relative accuracy. The error
/// estimate is the change between two inner tolerances.
inline PrecisionValue chekhov_corrected_crown_integral(int n, const Real& P, Bits bits, const Real& abs_target) {
  detail::require_positive_n(n, 2, "chekhov_corrected_crown_integral");
  if (P <= 0L) throw DomainError("P must be positive");
  Real Pw(P, bits);
  Real prefactor = exp(Pw / 2L) * expm1(Pw);
  auto integrand = [&](const std::vector<Real>& d) {
    Real prod(1, bits);
    for (int i = 0; i < n; ++i) prod *= expm1(d[static_cast<std::size_t>(i)] + d[static_cast<std::size_t>((i + 1) % n)]);
    return prefactor / prod;
  };
  auto run = [&](const Real& target) {
    TanhSinhOptions opt;
    opt.abs_target = Real(target, 64);
    opt.min_level = 2;
    std::vector<Real> deltas;
    return detail::simplex_integrate(integrand, deltas, n, Pw, bits, opt);
  };
  Real coarse = run(abs_target * 100L);
  Real fine = run(abs_target);
  return {fine, max(abs(fine - coarse), detail::rounding_bound(fine) * 64L)};
}

/// Two-crown lambda-length integral
///   int_0^inf dx / ((x + cosh(d/2))^2 - sinh^2(d/2)) = int dx / (x^2 + 2 cosh(d/2) x + 1),
/// mapped to [0, 1] by x = t / (1 - t).
inline PrecisionValue two_crown_lambda_integral(const Real& d, Bits bits, const Real& abs_target) {
  if (d <= 0L) throw DomainError("two_crown_lambda_integral needs d > 0");
  Real c = cosh(Real(d, bits) / 2L);
  TanhSinhOptions opt;
  opt.abs_target = Real(abs_target, 64);
  return tanh_sinh(
      [&](const Real& t, const Real& left, const Real& right) {
        // (1-t)^2 (x^2 + 2cx + 1) = t^2 + 2c t (1-t) + (1-t)^2
        return 1L / (t * t + 2L * c * left * right + right * right);
      },
      Real(0, bits), Real(1, bits), bits, opt);
}

}  // namespace crownvol

#endif  // CROWNVOL_ORACLES_HPP
