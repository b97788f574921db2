#ifndef CROWNVOL_QUADRATURE_HPP
#define CROWNVOL_QUADRATURE_HPP

#include <crownvol/constants.hpp>
#include <crownvol/errors.hpp>
#include <crownvol/precision_value.hpp>
#include <crownvol/real.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace crownvol {

/// Gauss-Legendre rule on [-1, 1]; nodes ascending.
struct GaussRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

namespace detail {

inline GaussRule compute_gauss_legendre(int p, Bits bits) {
  Bits w = bits + 16;
  GaussRule rule;
  rule.nodes.assign(static_cast<std::size_t>(p), Real(bits));
  rule.weights.assign(static_cast<std::size_t>(p), Real(bits));
  Real pi = eval_constant(Constant::pi(), w).value;
  Real eps = Real::pow2(-static_cast<long>(w) + 4, w);
  for (int i = 0; i < (p + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_p.
    Real x = cos(pi * Real(ratio(4 * i + 3, 4 * p + 2), w));
    Real dp(w);
    for (int iter = 0; iter < 100; ++iter) {
      Real p0(1, w), p1 = x;
      for (int k = 2; k <= p; ++k) {
        Real p2 = (Real(2 * k - 1, w) * x * p1 - Real(k - 1, w) * p0) / k;
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = Real(p, w) * (x * p1 - p0) / (x * x - 1L);
      Real dx = p1 / dp;
      x -= dx;
      if (abs(dx) < eps) break;
    }
    Real weight = 2L / ((1L - x * x) * dp * dp);
    auto lo = static_cast<std::size_t>(i);
    auto hi = static_cast<std::size_t>(p - 1 - i);
    rule.nodes[lo] = Real(-x, bits);
    rule.nodes[hi] = Real(x, bits);
    rule.weights[lo] = Real(weight, bits);
    rule.weights[hi] = Real(weight, bits);
  }
  if (p % 2 == 1) rule.nodes[static_cast<std::size_t>(p / 2)] = Real(0, bits);
  return rule;
}

// One tanh-sinh node on [-1, 1] at t > 0 (mirrored for -t).
struct TanhSinhNode {
  Real y;          // tanh(pi/2 sinh t)
  Real one_minus;  // 1 - y, computed without cancellation
  Real one_plus;   // 1 + y
  Real weight;     // (pi/2) cosh t / cosh^2(pi/2 sinh t)
};

struct TanhSinhLevel {
  std::vector<TanhSinhNode> nodes;  // positive t only; t = 0 handled separately
};

inline TanhSinhLevel compute_tanh_sinh_level(int level, Bits bits) {
  Bits w = bits + 16;
  Real half_pi = eval_constant(Constant::pi(), w).value / 2L;
  Real h = Real::pow2(-level, w);
  Real tmax = log(Real(static_cast<long>(bits) + 20, w) * ratio(11, 50) * 2L);  // ~ asinh((bits+20) ln2 / pi)
  TanhSinhLevel out;
  long stride = level == 0 ? 1 : 2;
  for (long j = 1;; j += stride) {
    Real t = h * j;
    if (t > tmax) break;
    Real u = half_pi * sinh(t);
    Real e2u = exp(2L * u);
    Real cu = cosh(u);
    TanhSinhNode node{Real(bits), Real(bits), Real(bits), Real(bits)};
    node.one_minus = Real(2L / (e2u + 1L), bits);
    node.one_plus = Real(2L * e2u / (e2u + 1L), bits);
    node.y = Real(tanh(u), bits);
    node.weight = Real(half_pi * cosh(t) / (cu * cu), bits);
    out.nodes.push_back(std::move(node));
  }
  return out;
}

inline const TanhSinhLevel& tanh_sinh_level(int level, Bits bits) {
  static std::mutex mutex;
  static std::map<std::pair<int, Bits>, std::unique_ptr<TanhSinhLevel>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{level, bits}];
  if (!slot) slot = std::make_unique<TanhSinhLevel>(compute_tanh_sinh_level(level, bits));
  return *slot;
}

}  // namespace detail

/// Gauss-Legendre rule with p nodes at the given precision (cached).
inline const GaussRule& gauss_legendre(int p, Bits bits) {
  if (p < 1) throw DomainError("Gauss rule needs at least one node");
  static std::mutex mutex;
  static std::map<std::pair<int, Bits>, std::unique_ptr<GaussRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, bits}];
  if (!slot) slot = std::make_unique<GaussRule>(detail::compute_gauss_legendre(p, bits));
  return *slot;
}

struct TanhSinhOptions {
  Real abs_target = Real(1e-20, 64);
  int max_level = 12;
  int min_level = 3;
  // when false, return the last estimate instead of throwing at max_level
  bool throw_on_failure = true;
};

/// Tanh-sinh quadrature of f over [a, b].
///
/// The integrand is called as f(x, x - a, b - x) so it can use accurate
/// distances to the endpoints near singular corners. The error is the
/// difference of the last two levels, which overestimates the true error once
/// the doubly exponential convergence sets in.
template <class F>
PrecisionValue tanh_sinh(F&& f, const Real& a, const Real& b, Bits bits, const TanhSinhOptions& opt = {}) {
  Real half = (b - a) / 2L;
  Real mid = (a + b) / 2L;
  Real pi_half = eval_constant(Constant::pi(), bits).value / 2L;
  auto sample = [&](const detail::TanhSinhNode& n) {
    Real dl = half * n.one_plus;   // x - a for x = mid + half*y
    Real dr = half * n.one_minus;  // b - x
    Real fr = f(b - dr, dl, dr);
    Real dl2 = half * n.one_minus;  // mirrored node: x - a
    Real dr2 = half * n.one_plus;
    Real fl = f(a + dl2, dl2, dr2);
    return n.weight * (fl + fr);
  };
  // level 0 includes t = 0 with weight pi/2
  Real sum = pi_half * f(mid, half, half);
  for (const auto& n : detail::tanh_sinh_level(0, bits).nodes) sum += sample(n);
  Real estimate = half * sum;
  Real h(1, bits);
  Real prev = estimate;
  Real err(bits);
  for (int level = 1; level <= opt.max_level; ++level) {
    for (const auto& n : detail::tanh_sinh_level(level, bits).nodes) sum += sample(n);
    h = Real::pow2(-level, bits);
    estimate = half * h * sum;
    err = abs(estimate - prev);
    if (level >= opt.min_level && err < opt.abs_target) {
      return {estimate, max(err, detail::rounding_bound(estimate) * 64L)};
    }
    prev = estimate;
  }
  if (!opt.throw_on_failure) return {estimate, err};
  throw ConvergenceError("tanh-sinh did not reach the target error (last difference " + err.str(3) + ")");
}

/// Exponential tail model |f(x)| <= c x^p e^(-alpha x) for x >= L.
struct ExpTail {
  Real c;
  long p = 0;
  Real alpha;

  /// Bound on the integral of the model over [L, inf), valid for L > p/alpha.
  [[nodiscard]] Real bound(const Real& L) const {
    Real slack = alpha - Real(p, L.precision()) / L;
    if (slack <= 0L) return Real(std::numeric_limits<double>::infinity(), 53);
    return c * pow(L, p) * exp(-alpha * L) / slack;
  }
};

/// Integral over [0, inf): tanh-sinh on [0,1], [1,2], [2,4], ... up to the
/// first L with tail.bound(L) below a quarter of the target, plus that bound.
template <class F>
PrecisionValue integrate_half_line(F&& f, const ExpTail& tail, const Real& abs_target, Bits bits) {
  Real L(1, bits);
  Real quarter = abs_target / 4L;
  std::vector<std::pair<Real, Real>> pieces{{Real(0, bits), Real(1, bits)}};
  while (!(tail.bound(L) < quarter)) {
    Real next = 2L * L;
    pieces.emplace_back(L, next);
    L = next;
    if (L > 1L << 20) throw ConvergenceError("tail bound does not decay");
  }
  TanhSinhOptions opt;
  opt.abs_target = Real(quarter / static_cast<long>(pieces.size()), 64);
  PrecisionValue total = PrecisionValue::from_rational(0, bits);
  for (const auto& [lo, hi] : pieces) {
    total = total + tanh_sinh([&](const Real& x, const Real&, const Real&) { return f(x); }, lo, hi, bits, opt);
  }
  total.abs_error = detail::add_up(total.abs_error, tail.bound(L));
  return total;
}

}  // namespace crownvol

#endif  // CROWNVOL_QUADRATURE_HPP
