#ifndef CROWNVOL_CONSTANTS_HPP
#define CROWNVOL_CONSTANTS_HPP

#include <crownvol/errors.hpp>
#include <crownvol/precision_value.hpp>
#include <crownvol/real.hpp>

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

namespace crownvol {

/// A transcendental generator of the constant ring.
struct Constant {
  enum class Kind { Pi, Log2, Zeta, Beta };
  Kind kind = Kind::Pi;
  int arg = 0;  // s for zeta(s) / beta(s)

  static Constant pi() { return {Kind::Pi, 0}; }
  static Constant log2() { return {Kind::Log2, 0}; }
  static Constant zeta(int s) { return {Kind::Zeta, s}; }
  static Constant beta(int s) { return {Kind::Beta, s}; }

  [[nodiscard]] std::string name() const {
    switch (kind) {
      case Kind::Pi: return "pi";
      case Kind::Log2: return "log(2)";
      case Kind::Zeta: return "zeta(" + std::to_string(arg) + ")";
      case Kind::Beta: return "beta(" + std::to_string(arg) + ")";
    }
    return "?";
  }
  friend bool operator<(const Constant& a, const Constant& b) {
    return std::tie(a.kind, a.arg) < std::tie(b.kind, b.arg);
  }
};

namespace detail {

inline constexpr Bits kGuardBits = 32;

// sum_{k>=0} (-1)^k x^(2k+1)/(2k+1) for small rational 1/q.
inline Real atan_inverse(long q, Bits bits) {
  Real x = Real(1, bits) / q;
  Real q2(q * q, bits);
  Real power = x;
  Real sum = x;
  Real eps = Real::pow2(-static_cast<long>(bits) - 2, bits);
  for (long k = 1;; ++k) {
    power /= q2;
    Real term = power / (2 * k + 1);
    if (k % 2) sum -= term; else sum += term;
    if (term < eps) break;
  }
  return sum;
}

// Cohen, Rodriguez Villegas, Zagier: sum_{k>=0} (-1)^k a_k for a_k completely
// monotone. Relative error about (3+sqrt 8)^-n.
template <class Term>
Real cvz_alternating(Term&& a, Bits bits) {
  long n = static_cast<long>(0.3934 * static_cast<double>(bits)) + 8;
  Real d = pow(Real(3, bits) + sqrt(Real(8, bits)), n);
  d = (d + Real(1, bits) / d) / 2;
  Real b(-1, bits);
  Real c = -d;
  Real s(bits);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    // b_{k+1} = b_k (k+n)(k-n) / ((k+1/2)(k+1))
    b *= ratio(2 * (k + n) * (k - n), (2 * k + 1) * (k + 1));
  }
  return s / d;
}

}  // namespace detail

/// Independent reference algorithms, used only to cross-check the primary ones.
namespace reference {

/// Gauss-Legendre arithmetic-geometric mean iteration.
inline Real pi_agm(Bits bits) {
  Bits w = bits + detail::kGuardBits;
  Real a(1, w);
  Real b = sqrt(Real(1, w) / 2);
  Real t(ratio(1, 4), w);
  Real p(1, w);
  Real eps = Real::pow2(-static_cast<long>(w), w);
  for (int i = 0; i < 64; ++i) {
    Real an = (a + b) / 2;
    b = sqrt(a * b);
    Real diff = a - an;
    t -= p * diff * diff;
    p *= 2L;
    a = an;
    if (abs(a - b) < eps) break;
  }
  Real s = a + b;
  return Real(s * s / (4L * t), bits);
}

/// log 2 = sum_{k>=1} 1/(k 2^k).
inline Real log2_series(Bits bits) {
  Bits w = bits + detail::kGuardBits;
  Real sum(w);
  Real half_power(1, w);
  Real eps = Real::pow2(-static_cast<long>(w) - 4, w);
  for (long k = 1;; ++k) {
    half_power /= 2L;
    Real term = half_power / k;
    sum += term;
    if (term < eps) break;
  }
  return Real(sum, bits);
}

/// Exact Bernoulli numbers B_0..B_m (B_1 = -1/2).
inline std::vector<Rational> bernoulli_numbers(int m) {
  std::vector<Rational> b(static_cast<std::size_t>(m) + 1);
  b[0] = 1;
  for (int j = 1; j <= m; ++j) {
    // sum_{k=0}^{j} C(j+1, k) B_k = 0
    Rational acc = 0;
    Integer binom = 1;  // C(j+1, 0)
    for (int k = 0; k < j; ++k) {
      acc += Rational(binom) * b[static_cast<std::size_t>(k)];
      binom = binom * (j + 1 - k) / (k + 1);
    }
    b[static_cast<std::size_t>(j)] = -acc / Rational(j + 1);
  }
  return b;
}

/// Hurwitz zeta(s, a) for integer s >= 2 and rational a > 0 by Euler-Maclaurin.
inline Real hurwitz_zeta(int s, const Rational& a, Bits bits) {
  Bits w = bits + detail::kGuardBits;
  int m = static_cast<int>(w / 4) + 10;  // correction terms
  long n = m;                             // explicit terms
  Real sum(w);
  for (long k = 0; k < n; ++k) sum += pow(Real(Rational(k) + a, w), -s);
  Real x(Rational(n) + a, w);
  sum += pow(x, 1 - s) / (s - 1);
  sum += pow(x, -s) / 2;
  std::vector<Rational> bern = bernoulli_numbers(2 * m);
  // term_j = B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^(-s-2j+1)
  Rational rising = s;  // s(s+1)...(s+2j-2) / (2j)!, built incrementally
  rising /= 2;
  Real xpow = pow(x, -s - 1);
  Real x2 = x * x;
  for (int j = 1; j <= m; ++j) {
    if (j > 1) {
      rising *= Rational((s + 2 * j - 3) * (s + 2 * j - 2));
      rising /= Rational((2 * j - 1) * (2 * j));
      xpow /= x2;
    }
    sum += Real(bern[static_cast<std::size_t>(2 * j)] * rising, w) * xpow;
  }
  return Real(sum, bits);
}

inline Real zeta_euler_maclaurin(int s, Bits bits) { return hurwitz_zeta(s, 1, bits); }

/// beta(s) = 4^-s (zeta(s, 1/4) - zeta(s, 3/4)).
inline Real beta_hurwitz(int s, Bits bits) {
  Bits w = bits + detail::kGuardBits + 8;
  Real diff = hurwitz_zeta(s, ratio(1, 4), w) - hurwitz_zeta(s, ratio(3, 4), w);
  return Real(ldexp(diff, -2L * s), bits);
}

}  // namespace reference

namespace detail {

inline Real pi_machin(Bits w) { return 16L * atan_inverse(5, w) - 4L * atan_inverse(239, w); }

// log 2 = 2 atanh(1/3) = 2 sum 1/((2k+1) 9^k 3).
inline Real log2_atanh(Bits w) {
  Real power = Real(1, w) / 3L;
  Real sum = power;
  Real eps = Real::pow2(-static_cast<long>(w) - 4, w);
  for (long k = 1;; ++k) {
    power /= 9L;
    Real term = power / (2 * k + 1);
    sum += term;
    if (term < eps) break;
  }
  return 2L * sum;
}

// zeta(s) = eta(s) / (1 - 2^(1-s)), eta by CVZ.
inline Real zeta_cvz(int s, Bits w) {
  Real eta = cvz_alternating([&](long k) { return pow(Real(k + 1, w), -s); }, w);
  return eta / (1L - Real::pow2(1 - s, w));
}

inline Real beta_cvz(int s, Bits w) {
  return cvz_alternating([&](long k) { return pow(Real(2 * k + 1, w), -s); }, w);
}

inline PrecisionValue compute_constant(const Constant& c, Bits bits) {
  Bits w = bits + kGuardBits;
  Real v(w);
  switch (c.kind) {
    case Constant::Kind::Pi: v = pi_machin(w); break;
    case Constant::Kind::Log2: v = log2_atanh(w); break;
    case Constant::Kind::Zeta: v = zeta_cvz(c.arg, w); break;
    case Constant::Kind::Beta: v = beta_cvz(c.arg, w); break;
  }
  // Algorithmic error is below 2^-(bits + 24) relative; the reported bound is
  // the contract 2^-bits |v|.
  Real err = ldexp(abs(v), -static_cast<long>(bits));
  return {std::move(v), std::move(err)};
}

}  // namespace detail

/// High-precision value of a ring generator, with abs_error <= 2^-bits |value|.
/// Results are cached per (constant, bits); the cache is guarded by a mutex.
inline PrecisionValue eval_constant(const Constant& c, Bits bits) {
  if (bits < 16) throw DomainError("eval_constant needs at least 16 bits");
  if (c.kind == Constant::Kind::Zeta && (c.arg < 3 || c.arg % 2 == 0)) {
    throw DomainError("zeta(" + std::to_string(c.arg) + ") is not a generator: only odd arguments >= 3");
  }
  if (c.kind == Constant::Kind::Beta && (c.arg < 2 || c.arg % 2 != 0)) {
    throw DomainError("beta(" + std::to_string(c.arg) + ") is not a generator: only even arguments >= 2");
  }
  static std::mutex mutex;
  static std::map<std::pair<Constant, Bits>, PrecisionValue> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({c, bits}); it != cache.end()) return it->second;
  }
  PrecisionValue v = detail::compute_constant(c, bits);
  std::lock_guard lock(mutex);
  return cache.try_emplace({c, bits}, std::move(v)).first->second;
}

/// The same constant from the independent reference algorithm.
inline Real eval_constant_reference(const Constant& c, Bits bits) {
  switch (c.kind) {
    case Constant::Kind::Pi: return reference::pi_agm(bits);
    case Constant::Kind::Log2: return reference::log2_series(bits);
    case Constant::Kind::Zeta: return reference::zeta_euler_maclaurin(c.arg, bits);
    case Constant::Kind::Beta: return reference::beta_hurwitz(c.arg, bits);
  }
  return Real(bits);
}

}  // namespace crownvol

#endif  // CROWNVOL_CONSTANTS_HPP
