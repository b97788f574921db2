#ifndef CROWNVOL_NGON_HPP
#define CROWNVOL_NGON_HPP

// Numerical estimators for the n-gon volumes V_{D_n}.

#include <crownvol/constants.hpp>
#include <crownvol/errors.hpp>
#include <crownvol/parallel.hpp>
#include <crownvol/precision_value.hpp>
#include <crownvol/quadrature.hpp>
#include <crownvol/symbolic.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace crownvol {

// ---------------------------------------------------------------------------
// Transfer-kernel quadrature

/// Discretization of (0, 1) for the chain integral. Panels are graded toward
/// y = 1: in the complement c = 1 - y they are [r, 1], [r^2, r], ...,
/// [r^K, r^(K-1)] and [0, r^K], each carrying a Gauss-Legendre rule.
struct QuadratureSpec {
  int nodes_per_panel = 12;
  int panel_count = 14;  // K
  double panel_ratio = 0.2;
  Bits precision_bits = 128;
  double abs_target = 1e-8;
  int max_refinements = 5;
  unsigned workers = 0;

  /// Settings sized for roughly `digits` correct digits.
  static QuadratureSpec for_digits(int digits, Bits bits = 0) {
    QuadratureSpec s;
    s.nodes_per_panel = std::max(4, static_cast<int>(std::ceil(1.2 * digits)));
    s.panel_count = std::max(4, static_cast<int>(std::ceil(1.45 * digits)));
    s.precision_bits = bits > 0 ? bits : std::max<Bits>(128, digits_to_bits(digits + 20));
    s.abs_target = std::pow(10.0, -digits);
    return s;
  }

  void validate() const {
    if (nodes_per_panel < 2) throw DomainError("nodes_per_panel must be at least 2");
    if (panel_count < 1) throw DomainError("panel_count must be at least 1");
    if (!(panel_ratio > 0 && panel_ratio < 1)) throw DomainError("panel_ratio must lie in (0, 1)");
    if (!(abs_target > 0)) throw DomainError("abs_target must be positive");
  }

  /// The next refinement stage: 25% more panels and nodes per panel.
  [[nodiscard]] QuadratureSpec refined() const {
    QuadratureSpec s = *this;
    s.nodes_per_panel = (nodes_per_panel * 5 + 3) / 4;
    s.panel_count = (panel_count * 5 + 3) / 4;
    return s;
  }
};

namespace detail {

// Complement nodes c = 1 - y and weights on the graded panels.
struct ChainGrid {
  std::vector<Real> c;
  std::vector<Real> w;
};

inline ChainGrid chain_grid(const QuadratureSpec& spec) {
  Bits bits = spec.precision_bits;
  const GaussRule& g = gauss_legendre(spec.nodes_per_panel, bits);
  Rational ratio_q(spec.panel_ratio);
  Real r(ratio_q, bits);
  ChainGrid grid;
  auto add_panel = [&](const Real& lo, const Real& hi) {
    Real half = (hi - lo) / 2L, mid = (hi + lo) / 2L;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      grid.c.push_back(mid + half * g.nodes[i]);
      grid.w.push_back(half * g.weights[i]);
    }
  };
  Real hi(1, bits);
  for (int k = 0; k < spec.panel_count; ++k) {
    Real lo = hi * r;
    add_panel(lo, hi);
    hi = lo;
  }
  add_panel(Real(0, bits), hi);
  return grid;
}

// e^T M^(n-4) e with M_ab = sqrt(w_a w_b) / (1 - y_a y_b), written as an
// iteration f <- K (w f) to avoid the square roots.
inline Real chain_contract(int n, const QuadratureSpec& spec) {
  ChainGrid grid = chain_grid(spec);
  Bits bits = spec.precision_bits;
  std::size_t q = grid.c.size();
  std::vector<Real> f(q, Real(1, bits));
  for (int step = 0; step < n - 4; ++step) {
    std::vector<Real> wf(q, Real(bits));
    for (std::size_t b = 0; b < q; ++b) wf[b] = grid.w[b] * f[b];
    std::vector<Real> next(q, Real(bits));
    parallel_for(q, spec.workers, [&](std::size_t a) {
      Real acc(0, bits), den(bits), prod(bits);
      const Real& ca = grid.c[a];
      for (std::size_t b = 0; b < q; ++b) {
        // 1 - (1 - ca)(1 - cb) = ca + cb - ca cb, exact for small complements
        mpfr_mul(prod.raw(), ca.raw(), grid.c[b].raw(), MPFR_RNDN);
        mpfr_add(den.raw(), ca.raw(), grid.c[b].raw(), MPFR_RNDN);
        mpfr_sub(den.raw(), den.raw(), prod.raw(), MPFR_RNDN);
        mpfr_div(prod.raw(), wf[b].raw(), den.raw(), MPFR_RNDN);
        mpfr_add(acc.raw(), acc.raw(), prod.raw(), MPFR_RNDN);
      }
      next[a] = std::move(acc);
    });
    f = std::move(next);
  }
  Real total(0, bits);
  for (std::size_t a = 0; a < q; ++a) total += grid.w[a] * f[a];
  return total;
}

}  // namespace detail

/// V_{D_n} as the chain integral over (0,1)^(n-3) of 1 / prod (1 - y_i y_(i+1)),
/// refining the grid until two successive stages agree to spec.abs_target.
/// The reported error is that difference.
inline PrecisionValue ngon_volume_quadrature(int n, const QuadratureSpec& spec = {}) {
  if (n < 5) throw DomainError("ngon_volume_quadrature needs n >= 5; V_{D_3} = V_{D_4} = 1 exactly");
  spec.validate();
  QuadratureSpec stage = spec;
  Real prev = detail::chain_contract(n, stage);
  for (int i = 0; i < spec.max_refinements; ++i) {
    stage = stage.refined();
    Real next = detail::chain_contract(n, stage);
    Real diff = abs(next - prev);
    if (diff.to_double() < spec.abs_target) return {next, max(diff, detail::rounding_bound(next) * 1024L)};
    prev = std::move(next);
  }
  throw ConvergenceError("ngon quadrature did not reach " + std::to_string(spec.abs_target) + " within " +
                         std::to_string(spec.max_refinements) + " refinements");
}

// ---------------------------------------------------------------------------
// Series representation

/// Partial sum over k_1..k_(n-4) <= K of 1/(k_1 prod(k_i + k_(i+1) - 1) k_(n-4)).
/// Every term is positive, so the partial sums increase with K.
inline double ngon_series_partial_sum(int n, long K) {
  if (n < 5) throw DomainError("ngon series needs n >= 5");
  if (K < 1) throw DomainError("series truncation must be positive");
  auto k_count = static_cast<std::size_t>(K);
  std::vector<long double> recip(2 * k_count + 1, 0.0L);  // recip[s] = 1/(s - 1)
  for (std::size_t s = 2; s < recip.size(); ++s) recip[s] = 1.0L / static_cast<long double>(s - 1);
  std::vector<long double> v(k_count + 1, 0.0L), f(k_count + 1, 0.0L);
  for (std::size_t k = 1; k <= k_count; ++k) v[k] = f[k] = 1.0L / static_cast<long double>(k);
  for (int step = 0; step < n - 5; ++step) {
    std::vector<long double> g(k_count + 1, 0.0L);
    for (std::size_t k = 1; k <= k_count; ++k) {
      long double acc = 0;
      for (std::size_t kp = 1; kp <= k_count; ++kp) acc += f[kp] * recip[k + kp];
      g[k] = acc;
    }
    f = std::move(g);
  }
  long double total = 0;
  for (std::size_t k = 1; k <= k_count; ++k) total += v[k] * f[k];
  return static_cast<double>(total);
}

namespace detail {

// Least-squares-free fit: solve S(K_i) = S + sum_j a_j log^j(K_i) / K_i exactly
// through as many points as unknowns and return S.
inline long double series_limit_fit(const std::vector<long>& ks, const std::vector<double>& sums, int log_powers) {
  std::size_t m = static_cast<std::size_t>(log_powers) + 1;
  std::vector<std::vector<long double>> a(m, std::vector<long double>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    auto K = static_cast<long double>(ks[i]);
    a[i][0] = 1;
    for (std::size_t j = 1; j < m; ++j) a[i][j] = std::pow(std::log(K), static_cast<long double>(j - 1)) / K;
    a[i][m] = sums[i];
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col) continue;
      long double factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= m; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return a[0][m] / a[0][0];
}

}  // namespace detail

/// Series estimate of V_{D_n}. With extrapolation the partial sums at
/// K, K/2, ..., are fitted to S + sum_{j <= n-5} a_j log^j(K)/K, which matches
/// the tail of the (n-4)-fold sum; the error is the change when the fit is
/// shifted by one halving. Without it the value is the partial sum at K and
/// the error is its last increment S(K) - S(K/2). Both errors are heuristic.
inline PrecisionValue ngon_volume_series(int n, long K, bool extrapolate = true) {
  if (n < 5) throw DomainError("ngon series needs n >= 5");
  if (K < 2) throw DomainError("series truncation must be at least 2");
  Bits bits = 64;
  if (!extrapolate) {
    double s = ngon_series_partial_sum(n, K);
    double prev = ngon_series_partial_sum(n, K / 2);
    return {Real(s, bits), Real(s - prev, bits)};
  }
  int log_powers = n - 4;  // j = 0..n-5
  std::size_t points = static_cast<std::size_t>(log_powers) + 2;
  std::vector<long> ks;
  std::vector<double> sums;
  long k = K;
  for (std::size_t i = 0; i < points; ++i, k /= 2) {
    if (k < 2) throw DomainError("series truncation too small for the extrapolation at this n");
    ks.push_back(k);
    sums.push_back(ngon_series_partial_sum(n, k));
  }
  long double fine = detail::series_limit_fit(ks, sums, log_powers);
  std::vector<long> ks_shift(ks.begin() + 1, ks.end());
  std::vector<double> sums_shift(sums.begin() + 1, sums.end());
  long double coarse = detail::series_limit_fit(ks_shift, sums_shift, log_powers);
  return {Real(static_cast<double>(fine), bits), Real(static_cast<double>(std::fabs(fine - coarse)), bits)};
}

// ---------------------------------------------------------------------------
// Monte Carlo

/// Sampling parameters. The estimate is a pure function of these three
/// fields; the worker count only affects wall time.
struct McSpec {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 20240611;
  unsigned streams = 16;

  void validate() const {
    if (samples < 2) throw DomainError("need at least 2 samples");
    if (streams < 1) throw DomainError("need at least one stream");
  }
};

struct McEstimate {
  PrecisionValue estimate;  // abs_error is 3 standard errors
  PrecisionValue stderr_;
};

namespace detail {

inline std::mt19937_64 stream_engine(std::uint64_t seed, unsigned stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

// Uniform on the open interval (0, 1).
inline double open_uniform(std::mt19937_64& eng) {
  return (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
}

struct StreamMoments {
  long double sum = 0;
  long double sum_sq = 0;
  std::uint64_t count = 0;
};

template <class Sample>
McEstimate run_streams(const McSpec& spec, unsigned workers, double scale, Sample&& sample) {
  spec.validate();
  std::vector<StreamMoments> moments(spec.streams);
  parallel_for(spec.streams, workers, [&](std::size_t s) {
    auto eng = stream_engine(spec.seed, static_cast<unsigned>(s));
    std::uint64_t count = spec.samples / spec.streams + (s < spec.samples % spec.streams ? 1 : 0);
    StreamMoments m;
    for (std::uint64_t i = 0; i < count; ++i) {
      long double x = sample(eng);
      m.sum += x;
      m.sum_sq += x * x;
    }
    m.count = count;
    moments[s] = m;
  });
  // fixed reduction order
  long double sum = 0, sum_sq = 0;
  for (const auto& m : moments) {
    sum += m.sum;
    sum_sq += m.sum_sq;
  }
  auto N = static_cast<long double>(spec.samples);
  long double mean = sum / N;
  long double var = std::max(0.0L, (sum_sq - N * mean * mean) / (N - 1));
  double se = static_cast<double>(std::sqrt(var / N)) * scale;
  Bits bits = 64;
  double est = static_cast<double>(mean) * scale;
  return {{Real(est, bits), Real(3 * se, bits)}, {Real(se, bits), Real(0, bits)}};
}

}  // namespace detail

/// Shear-coordinate weight W(s) = exp(sum s_i / 2) / (1 + sum_j exp(s_1 + ... + s_j)),
/// evaluated in log space. W <= 1/2 and W(0) = 1/(len(s) + 1).
inline double shear_weight(std::span<const double> s) {
  double partial = 0, half_sum = 0, mx = 0;
  std::vector<double> exps{0.0};
  for (double x : s) {
    partial += x;
    half_sum += x / 2;
    exps.push_back(partial);
    mx = std::max(mx, partial);
  }
  double acc = 0;
  for (double e : exps) acc += std::exp(e - mx);
  return std::exp(half_sum - mx - std::log(acc));
}

/// V_{D_n} = pi^(n-3) E[W(s)] with s_i i.i.d. of density 1/(2 pi cosh(s/2)).
inline McEstimate ngon_volume_mc(int n, const McSpec& spec = {}, unsigned workers = 0) {
  if (n < 4) throw DomainError("ngon_volume_mc needs n >= 4");
  auto dims = static_cast<std::size_t>(n - 3);
  double scale = std::pow(M_PI, n - 3);
  return detail::run_streams(spec, workers, scale, [dims](std::mt19937_64& eng) {
    std::vector<double> s(dims);
    for (auto& x : s) x = 2 * std::log(std::tan(M_PI * detail::open_uniform(eng) / 2));
    return static_cast<long double>(shear_weight(s));
  });
}

// ---------------------------------------------------------------------------
// Q polynomials

/// Q_j(u_1, ..., u_j) with Q_1 = 1 and Q_j = u_1 Q_(j-1)(u_2..u_j) + prod (1 - u_i).
struct QPolynomial {
  int j = 1;
  SymbolicValue poly;  // in variables u1..uj

  static std::string var(int i) { return "u" + std::to_string(i); }
};

namespace detail {
inline void require_q_index(int j) {
  if (j < 1) throw DomainError("Q_j needs j >= 1");
}
}  // namespace detail

/// Built from the defining recursion, innermost index first.
inline QPolynomial q_polynomial(int j) {
  detail::require_q_index(j);
  // q holds Q for the variables u_i..u_j, and tail the product of (1 - u_k) over the same range.
  SymbolicValue q(1);
  SymbolicValue tail = SymbolicValue(1) - sym_var(QPolynomial::var(j));
  for (int i = j - 1; i >= 1; --i) {
    SymbolicValue one_minus = SymbolicValue(1) - sym_var(QPolynomial::var(i));
    tail = one_minus * tail;
    q = sym_var(QPolynomial::var(i)) * q + tail;
  }
  return {j, q};
}

/// The expanded form sum_{k=0}^{j} u_1...u_k (1 - u_(k+1))...(1 - u_j).
inline SymbolicValue q_polynomial_sum_of_products(int j) {
  detail::require_q_index(j);
  SymbolicValue total;
  for (int k = 0; k <= j; ++k) {
    SymbolicValue term(1);
    for (int i = 1; i <= k; ++i) term = term * sym_var(QPolynomial::var(i));
    for (int i = k + 1; i <= j; ++i) term = term * (SymbolicValue(1) - sym_var(QPolynomial::var(i)));
    total += term;
  }
  return total;
}

/// Numeric Q_j(u) in O(j) from prefix products of u and suffix products of 1 - u.
inline double q_value(std::span<const double> u) {
  double total = 0, prefix = 1;
  std::vector<double> suffix(u.size() + 1, 1.0);
  for (std::size_t i = u.size(); i-- > 0;) suffix[i] = suffix[i + 1] * (1 - u[i]);
  for (std::size_t k = 0; k <= u.size(); ++k) {
    total += prefix * suffix[k];
    if (k < u.size()) prefix *= u[k];
  }
  return total;
}

enum class UCubeMap {
  Uniform,     // plain 1/Q on uniform points; infinite variance, stderr is optimistic
  Smoothstep,  // u = 3v^2 - 2v^3 per axis; the Jacobian cancels the corner blow-up
};

/// V_{D_n} as the integral of 1/Q_(n-3) over the cube (0,1)^(n-3).
inline McEstimate ngon_volume_u_mc(int n, const McSpec& spec = {}, unsigned workers = 0,
                                   UCubeMap map = UCubeMap::Uniform) {
  if (n < 5) throw DomainError("ngon_volume_u_mc needs n >= 5");
  auto dims = static_cast<std::size_t>(n - 3);
  return detail::run_streams(spec, workers, 1.0, [dims, map](std::mt19937_64& eng) {
    std::vector<double> u(dims);
    double jac = 1;
    for (auto& x : u) {
      double v = detail::open_uniform(eng);
      if (map == UCubeMap::Smoothstep) {
        x = v < 0.5 ? v * v * (3 - 2 * v) : 1 - (1 - v) * (1 - v) * (1 + 2 * v);
        jac *= 6 * v * (1 - v);
      } else {
        x = v;
      }
    }
    return static_cast<long double>(jac / q_value(u));
  });
}

}  // namespace crownvol

#endif  // CROWNVOL_NGON_HPP
