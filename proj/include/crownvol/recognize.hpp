#ifndef CROWNVOL_RECOGNIZE_HPP
#define CROWNVOL_RECOGNIZE_HPP

// Integer-relation recognition of numeric volumes, and the conjecture checks.

#include <crownvol/crown.hpp>
#include <crownvol/errors.hpp>
#include <crownvol/evaluate.hpp>
#include <crownvol/ngon.hpp>
#include <crownvol/surfaces.hpp>
#include <crownvol/symbolic.hpp>

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace crownvol {

// ---------------------------------------------------------------------------
// Monomial bases

struct BasisFlags {
  bool include_zeta = true;
  bool include_log2 = true;
  int max_log2_exp = 1;
  bool mix_log2_zeta = false;  // allow log2 and zeta in one monomial
  bool include_beta = false;

  /// Only the power of pi.
  static BasisFlags pi_power() { return {false, false, 0, false, false}; }
  static BasisFlags all() { return {true, true, 1 << 20, true, true}; }
};

struct MonomialBasis {
  int degree = 0;
  BasisFlags flags;
  std::vector<GradedMonomial> monomials;  // canonical order
};

namespace detail {

// Generators other than pi, in a fixed order, with their degrees.
inline std::vector<std::pair<GradedMonomial, int>> basis_generators(int degree, const BasisFlags& f) {
  std::vector<std::pair<GradedMonomial, int>> gens;
  if (f.include_log2 && f.max_log2_exp > 0) gens.emplace_back(GradedMonomial::log2(), 1);
  if (f.include_zeta)
    for (int j = 3; j <= degree; j += 2) gens.emplace_back(GradedMonomial::zeta(j), j);
  if (f.include_beta)
    for (int k = 2; k <= degree; k += 2) gens.emplace_back(GradedMonomial::beta(k), k);
  return gens;
}

inline void extend_basis(const std::vector<std::pair<GradedMonomial, int>>& gens, std::size_t idx, int left,
                         const GradedMonomial& acc, const BasisFlags& f, std::vector<GradedMonomial>& out) {
  if (idx == gens.size()) {
    GradedMonomial m = left == 0 ? acc : acc * GradedMonomial::pi(left);
    if (m.log2_exp() > f.max_log2_exp) return;
    if (!f.mix_log2_zeta && m.log2_exp() > 0 && !m.zeta_exps().empty()) return;
    out.push_back(m);
    return;
  }
  const auto& [g, d] = gens[idx];
  GradedMonomial cur = acc;
  for (int e = 0; e * d <= left; ++e) {
    extend_basis(gens, idx + 1, left - e * d, cur, f, out);
    cur = cur * g;
  }
}

}  // namespace detail

/// All variable-free monomials of exactly `degree` allowed by the flags.
inline MonomialBasis enumerate_basis(int degree, const BasisFlags& flags = {}) {
  if (degree < 0) throw DomainError("basis degree must be nonnegative");
  MonomialBasis basis{degree, flags, {}};
  detail::extend_basis(detail::basis_generators(degree, flags), 0, degree, GradedMonomial::one(), flags, basis.monomials);
  std::sort(basis.monomials.begin(), basis.monomials.end(), CanonicalOrder{});
  return basis;
}

// ---------------------------------------------------------------------------
// PSLQ

namespace detail {

inline Real real_of(const Integer& z, Bits bits) { return Real(z, bits); }

/// Integer relation search on x (all entries at the same precision). Returns
/// a relation c with |sum c_i x_i| / |x| below 10^(-0.75 digits) and norm at
/// most 10^(digits / 4 + 1), or nothing.
inline std::optional<std::vector<Integer>> pslq(const std::vector<Real>& x_in, int digits, int max_iter = 20000) {
  const std::size_t n = x_in.size();
  if (n < 2) return std::nullopt;
  Bits bits = digits_to_bits(digits) + 32;
  Real tol = pow(Real(10, bits), -static_cast<long>(std::ceil(0.75 * digits)));
  Real norm_limit = pow(Real(10, bits), static_cast<long>(digits / 4 + 1));
  Real gamma = sqrt(Real(4, bits) / Real(3, bits));

  std::vector<Real> x;
  for (const auto& v : x_in) x.emplace_back(v, bits);
  // exact zero entries give trivial relations
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) {
      std::vector<Integer> rel(n, 0);
      rel[i] = 1;
      return rel;
    }
  }
  std::vector<Real> s(n, Real(bits));
  Real acc(0, bits);
  for (std::size_t k = n; k-- > 0;) {
    acc += x[k] * x[k];
    s[k] = sqrt(acc);
  }
  Real t0 = s[0];
  std::vector<Real> y(n, Real(bits));
  for (std::size_t k = 0; k < n; ++k) {
    y[k] = x[k] / t0;
    s[k] = s[k] / t0;
  }
  // H is n x (n-1)
  std::vector<std::vector<Real>> H(n, std::vector<Real>(n - 1, Real(0, bits)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n - 1 && j <= i; ++j) {
      if (i == j) H[i][j] = s[j + 1] / s[j];
      else H[i][j] = -(y[i] * y[j]) / (s[j] * s[j + 1]);
    }
  }
  std::vector<std::vector<Integer>> A(n, std::vector<Integer>(n, 0)), B(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) A[i][i] = B[i][i] = 1;

  auto reduce_entry = [&](std::size_t i, std::size_t j) {
    if (H[j][j].is_zero()) return;
    Integer t = (H[i][j] / H[j][j]).round_to_integer();
    if (t == 0) return;
    Real tr = real_of(t, bits);
    y[j] += tr * y[i];
    for (std::size_t k = 0; k <= j; ++k) H[i][k] -= tr * H[j][k];
    for (std::size_t k = 0; k < n; ++k) {
      A[i][k] -= t * A[j][k];
      B[k][j] += t * B[k][i];
    }
  };
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j-- > 0;) reduce_entry(i, j);

  auto check = [&]() -> std::optional<std::vector<Integer>> {
    for (std::size_t j = 0; j < n; ++j) {
      if (abs(y[j]) < tol) {
        std::vector<Integer> rel(n);
        for (std::size_t i = 0; i < n; ++i) rel[i] = B[i][j];
        return rel;
      }
    }
    return std::nullopt;
  };
  if (auto r = check()) return r;

  for (int iter = 0; iter < max_iter; ++iter) {
    // pick r maximizing gamma^r |H_rr|
    std::size_t r = 0;
    Real best(-1, bits), g(1, bits);
    for (std::size_t i = 0; i < n - 1; ++i) {
      g *= gamma;
      Real v = g * abs(H[i][i]);
      if (v > best) {
        best = v;
        r = i;
      }
    }
    std::swap(y[r], y[r + 1]);
    std::swap(A[r], A[r + 1]);
    std::swap(H[r], H[r + 1]);
    for (std::size_t k = 0; k < n; ++k) std::swap(B[k][r], B[k][r + 1]);
    if (r + 1 < n - 1) {
      Real a = H[r][r], b = H[r][r + 1];
      Real t = sqrt(a * a + b * b);
      Real c1 = a / t, c2 = b / t;
      for (std::size_t i = r; i < n; ++i) {
        Real h3 = H[i][r], h4 = H[i][r + 1];
        H[i][r] = c1 * h3 + c2 * h4;
        H[i][r + 1] = c1 * h4 - c2 * h3;
      }
    }
    for (std::size_t i = r + 1; i < n; ++i)
      for (std::size_t j = std::min(i - 1, r + 1) + 1; j-- > 0;) reduce_entry(i, j);

    if (auto rel = check()) return rel;
    Real hmax(0, bits);
    for (std::size_t j = 0; j < n - 1; ++j) hmax = max(hmax, abs(H[j][j]));
    if (hmax.is_zero()) return std::nullopt;
    if (1L / hmax > norm_limit) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Recognition

struct RecognitionResult {
  enum class Status { Found, NotFound };
  Status status = Status::NotFound;
  SymbolicValue value;
  PrecisionValue residual;
  Integer coefficient_height = 0;
  std::string note;

  [[nodiscard]] bool found() const { return status == Status::Found; }
};

/// Decimal digits of x that the recognizer treats as known.
inline int available_digits(const PrecisionValue& x) {
  if (x.abs_error.is_zero()) return bits_to_digits(x.precision());
  if (x.value.is_zero()) return 0;
  double rel = (x.abs_error / abs(x.value)).to_double();
  int from_error = static_cast<int>(std::floor(-std::log10(rel)));
  return std::min(from_error, bits_to_digits(x.precision()));
}

/// Digits needed before a search at this basis size and height is attempted.
inline int required_digits(std::size_t basis_size, const Integer& max_height) {
  double h = std::log10(std::max(2.0, Real(max_height, 64).to_double()));
  return static_cast<int>(std::ceil(static_cast<double>(basis_size + 1) * h)) + 10;
}

namespace detail {

struct Candidate {
  std::vector<Rational> coeffs;
  Integer height = 0;
};

inline std::optional<Candidate> search_relation(const Real& x, const std::vector<Real>& basis_values, int digits) {
  Bits bits = digits_to_bits(digits);
  std::vector<Real> vec{Real(x, bits)};
  for (const auto& b : basis_values) vec.emplace_back(b, bits);
  auto rel = pslq(vec, digits);
  if (!rel || (*rel)[0] == 0) return std::nullopt;
  Candidate c;
  for (std::size_t i = 1; i < rel->size(); ++i) {
    Rational q = ratio(-(*rel)[i], (*rel)[0]);
    Integer num = abs(q.get_num()), den = q.get_den();
    c.height = std::max({c.height, q == 0 ? Integer(0) : num, q == 0 ? Integer(0) : den});
    c.coeffs.push_back(q);
  }
  return c;
}

}  // namespace detail

/// Finds v in the rational span of `basis` with |v - x| tiny and coefficient
/// height at most max_height. A relation counts only if it is found again
/// from 80% of the digits and its residual is below 100 x.abs_error.
/// Throws InsufficientPrecision when x carries too few digits for the search.
inline RecognitionResult recognize_value(const PrecisionValue& x, const MonomialBasis& basis, const Integer& max_height = 10000) {
  RecognitionResult result;
  if (abs(x.value) <= x.abs_error) {
    result.note = "value is indistinguishable from zero";
    return result;
  }
  int digits = available_digits(x);
  int need = required_digits(basis.monomials.size(), max_height);
  if (digits < need) {
    throw InsufficientPrecision("recognition needs " + std::to_string(need) + " digits for basis size " +
                                std::to_string(basis.monomials.size()) + ", input carries " + std::to_string(digits));
  }
  Bits eval_bits = digits_to_bits(digits) + 64;
  std::vector<PrecisionValue> bvals;
  std::vector<Real> bvals_real;
  for (const auto& m : basis.monomials) {
    bvals.push_back(eval_symbolic(SymbolicValue::term(m), eval_bits));
    bvals_real.push_back(bvals.back().value);
  }
  auto full = detail::search_relation(x.value, bvals_real, digits);
  if (!full) {
    result.note = "no integer relation";
    return result;
  }
  if (full->height > max_height) {
    result.note = "relation height " + full->height.get_str() + " exceeds bound";
    return result;
  }
  auto reduced = detail::search_relation(x.value, bvals_real, static_cast<int>(std::floor(0.8 * digits)));
  if (!reduced || reduced->coeffs != full->coeffs) {
    result.note = "relation does not persist at reduced precision";
    return result;
  }
  SymbolicValue v;
  PrecisionValue approx = PrecisionValue::from_rational(0, eval_bits);
  for (std::size_t i = 0; i < full->coeffs.size(); ++i) {
    v += SymbolicValue::term(basis.monomials[i], full->coeffs[i]);
    approx = approx + bvals[i] * full->coeffs[i];
  }
  PrecisionValue diff = approx - x;
  result.residual = {abs(diff.value), diff.abs_error};
  result.value = v;
  result.coefficient_height = full->height;
  if (result.residual.value > x.abs_error * 100L) {
    result.note = "residual too large";
    return result;
  }
  result.status = RecognitionResult::Status::Found;
  return result;
}

// ---------------------------------------------------------------------------
// Conjecture checks

struct ConjectureCheck {
  std::string name;
  int k_min = 0;
  int k_max = 0;
  bool passed = true;
  std::optional<int> first_counterexample;
  std::string detail;
};

namespace detail {

inline Rational pow2q(int e) {
  return e >= 0 ? Rational(Integer(1) << e) : ratio(1, Integer(1) << (-e));
}

// Polynomial prefactor of the i-th last term of A_{1,k} (i = 0 is the last).
inline Rational annuli_last_term_prefactor(int i, const Integer& k) {
  switch (i) {
    case 0: return Rational(k);
    case 1: return ratio(k * (k - 2), 6);
    case 2: return ratio(2 * k * (k - 4) * (5 * k + 2), factorial(6));
    case 3: return ratio(8 * k * (k - 6) * (35 * k * k + 42 * k + 16), factorial(9));
    case 4: return ratio(88 * k * (k - 8) * (5 * k + 4) * (35 * k * k + 56 * k + 36), factorial(12));
    case 5:
      return ratio(3640 * k * (k - 10) * (385 * k * k * k * k + 1540 * k * k * k + 2684 * k * k + 2288 * k + 768),
                   factorial(15));
    default: throw DomainError("no conjecture for this term");
  }
}

inline Rational dfact_ratio(int top, int bottom) {
  return ratio(double_factorial(top), double_factorial(bottom));
}

}  // namespace detail

/// Predicted i-th last term of A_{1,k} (i = 0..5), as stated in the conjectures.
inline SymbolicValue annuli_conjectured_last_term(int i, int k) {
  int exponent = k % 2 == 1 ? 2 * i + 1 - k : 2 * i - 1 - k;
  Rational c = detail::annuli_last_term_prefactor(i, Integer(k)) * (1 - detail::pow2q(exponent));
  return sym_pi(2 * i) * sym_zeta(2 * (k / 2) + 1 - 2 * i) * c;
}

/// Predicted leading term of A_{1,k}, k >= 1.
inline SymbolicValue annuli_conjectured_leading_term(int k) {
  if (k % 2 == 1) {
    int h = (k - 1) / 2;
    return sym_pi(2 * h) * sym_log2() * detail::dfact_ratio(2 * h - 1, 2 * h);
  }
  int h = k / 2;
  return sym_pi(2 * h - 2) * sym_zeta(3) * (ratio(7, 4) * detail::dfact_ratio(2 * h - 2, 2 * h - 1));
}

namespace detail {

// The term of `v` on the given monomial, as a SymbolicValue.
inline SymbolicValue term_on(const SymbolicValue& v, const GradedMonomial& m) {
  return SymbolicValue::term(m, v.coefficient(m));
}

inline const GradedMonomial& single_monomial(const SymbolicValue& v) { return v.terms().begin()->first; }

// Highest pi power term of v.
inline SymbolicValue leading_pi_term(const SymbolicValue& v) {
  const GradedMonomial* best = nullptr;
  for (const auto& [m, c] : v.terms())
    if (best == nullptr || m.pi_exp() > best->pi_exp()) best = &m;
  return best == nullptr ? SymbolicValue() : term_on(v, *best);
}

}  // namespace detail

/// Checks the seven annulus conjectures with exact arithmetic against
/// annulus_volume(1, k) for every k in each conjecture's range up to k_max.
inline std::vector<ConjectureCheck> verify_annuli_conjectures(int k_max) {
  if (k_max < 2) throw DomainError("k_max must be at least 2");
  std::vector<SymbolicValue> vols(static_cast<std::size_t>(k_max) + 1);
  for (int k = 1; k <= k_max; ++k) vols[static_cast<std::size_t>(k)] = annulus_volume(1, k);
  std::vector<ConjectureCheck> out;
  auto run = [&](const std::string& name, int k_min, const std::function<bool(int, std::string&)>& check) {
    ConjectureCheck c{name, k_min, k_max, true, std::nullopt, ""};
    for (int k = k_min; k <= k_max; ++k) {
      std::string why;
      if (!check(k, why)) {
        c.passed = false;
        c.first_counterexample = k;
        c.detail = why;
        break;
      }
    }
    if (c.passed) c.detail = k_min <= k_max ? "holds for k = " + std::to_string(k_min) + ".." + std::to_string(k_max) : "empty range";
    out.push_back(c);
  };
  run("annuliconj1", 1, [&](int k, std::string& why) {
    SymbolicValue got = detail::leading_pi_term(vols[static_cast<std::size_t>(k)]);
    SymbolicValue want = annuli_conjectured_leading_term(k);
    if (got == want) return true;
    why = "k=" + std::to_string(k) + ": leading term " + to_plain(got) + ", conjectured " + to_plain(want);
    return false;
  });
  for (int i = 0; i <= 5; ++i) {
    int k_min = i == 0 ? 2 : 2 * i + 2;
    run("annuliconj" + std::to_string(i + 2), k_min, [&, i](int k, std::string& why) {
      SymbolicValue want = annuli_conjectured_last_term(i, k);
      SymbolicValue got = detail::term_on(vols[static_cast<std::size_t>(k)], detail::single_monomial(want));
      if (got == want) return true;
      why = "k=" + std::to_string(k) + ": term " + to_plain(got) + ", conjectured " + to_plain(want);
      return false;
    });
  }
  return out;
}

struct NgonConjectureCheck {
  int n = 0;
  PrecisionValue estimate;
  PrecisionValue conjecture;
  double agreement_digits = 0;
  bool exact = false;     // n = 3, 4 are known exactly
  bool consistent = false;
};

/// Compares quadrature estimates of V_{D_n} with the conjectured closed form.
/// This is consistency evidence only; it proves nothing for n >= 9.
inline std::vector<NgonConjectureCheck> verify_ngon_conjecture(int n_min, int n_max, double tolerance_digits,
                                                               const QuadratureSpec& spec = {}) {
  if (n_min < 3 || n_max < n_min) throw DomainError("bad n range");
  std::vector<NgonConjectureCheck> out;
  for (int n = n_min; n <= n_max; ++n) {
    NgonConjectureCheck c;
    c.n = n;
    c.conjecture = eval_symbolic(ngon_conjecture_volume(n), spec.precision_bits);
    if (n <= 4) {
      c.estimate = PrecisionValue::from_rational(1, spec.precision_bits);
      c.exact = true;
      c.agreement_digits = bits_to_digits(spec.precision_bits);
      c.consistent = c.estimate.agrees_with(c.conjecture);
    } else {
      c.estimate = ngon_volume_quadrature(n, spec);
      Real d = abs(c.estimate.value - c.conjecture.value);
      c.agreement_digits = d.is_zero() ? bits_to_digits(spec.precision_bits)
                                       : -std::log10((d / abs(c.conjecture.value)).to_double());
      c.consistent = c.agreement_digits >= tolerance_digits;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace crownvol

#endif  // CROWNVOL_RECOGNIZE_HPP
