#ifndef CROWNVOL_SYMBOLIC_HPP
#define CROWNVOL_SYMBOLIC_HPP

#include <crownvol/errors.hpp>
#include <crownvol/real.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace crownvol {

/// Monomial in the graded ring Q[pi, log 2, zeta(3), zeta(5), ..., beta(2),
/// beta(4), ..., formal variables].
///
/// Degrees: pi and log 2 count 1, zeta(j) counts j, beta(k) counts k, every
/// formal variable counts 1. Zero exponents are never stored, so equal
/// monomials compare equal member-wise.
class GradedMonomial {
 public:
  GradedMonomial() = default;

  static GradedMonomial one() { return {}; }
  static GradedMonomial pi(int e = 1) {
    GradedMonomial m;
    m.pi_ = nonneg(e);
    return m;
  }
  static GradedMonomial log2(int e = 1) {
    GradedMonomial m;
    m.log2_ = nonneg(e);
    return m;
  }
  static GradedMonomial zeta(int j, int e = 1) {
    if (j < 3 || j % 2 == 0) {
      throw DomainError("zeta(" + std::to_string(j) + ") is not a ring generator; even zeta values fold into pi powers");
    }
    GradedMonomial m;
    if (nonneg(e) > 0) m.zeta_[j] = e;
    return m;
  }
  static GradedMonomial beta(int k, int e = 1) {
    if (k < 2 || k % 2 != 0) throw DomainError("beta(" + std::to_string(k) + ") is not a ring generator");
    GradedMonomial m;
    if (nonneg(e) > 0) m.beta_[k] = e;
    return m;
  }
  static GradedMonomial var(const std::string& name, int e = 1) {
    if (name.empty()) throw DomainError("empty variable name");
    GradedMonomial m;
    if (nonneg(e) > 0) m.vars_[name] = e;
    return m;
  }

  [[nodiscard]] int pi_exp() const { return pi_; }
  [[nodiscard]] int log2_exp() const { return log2_; }
  [[nodiscard]] const std::map<int, int>& zeta_exps() const { return zeta_; }
  [[nodiscard]] const std::map<int, int>& beta_exps() const { return beta_; }
  [[nodiscard]] const std::map<std::string, int>& var_exps() const { return vars_; }

  [[nodiscard]] int degree() const {
    int d = pi_ + log2_;
    for (auto [j, e] : zeta_) d += j * e;
    for (auto [k, e] : beta_) d += k * e;
    for (const auto& [name, e] : vars_) d += e;
    return d;
  }
  [[nodiscard]] int var_exp(const std::string& name) const {
    auto it = vars_.find(name);
    return it == vars_.end() ? 0 : it->second;
  }
  [[nodiscard]] bool has_variables() const { return !vars_.empty(); }
  [[nodiscard]] bool is_one() const { return pi_ == 0 && log2_ == 0 && zeta_.empty() && beta_.empty() && vars_.empty(); }

  /// This monomial with the given variable removed.
  [[nodiscard]] GradedMonomial without_var(const std::string& name) const {
    GradedMonomial m = *this;
    m.vars_.erase(name);
    return m;
  }
  /// This monomial with formal variables removed (the constant part).
  [[nodiscard]] GradedMonomial constant_part() const {
    GradedMonomial m = *this;
    m.vars_.clear();
    return m;
  }

  friend GradedMonomial operator*(const GradedMonomial& a, const GradedMonomial& b) {
    GradedMonomial m = a;
    m.pi_ += b.pi_;
    m.log2_ += b.log2_;
    for (auto [j, e] : b.zeta_) m.zeta_[j] += e;
    for (auto [k, e] : b.beta_) m.beta_[k] += e;
    for (const auto& [name, e] : b.vars_) m.vars_[name] += e;
    return m;
  }

  friend bool operator==(const GradedMonomial&, const GradedMonomial&) = default;

  /// Graded lexicographic key: degree, then pi, log 2, zeta keys ascending,
  /// beta keys ascending, variable names ascending.
  [[nodiscard]] auto canonical_key() const { return std::tie(pi_, log2_, zeta_, beta_, vars_); }

 private:
  static int nonneg(int e) {
    if (e < 0) throw DomainError("negative exponent in monomial");
    return e;
  }

  int pi_ = 0;
  int log2_ = 0;
  std::map<int, int> zeta_;
  std::map<int, int> beta_;
  std::map<std::string, int> vars_;
};

/// Total order used for every serialization and rendering.
struct CanonicalOrder {
  bool operator()(const GradedMonomial& a, const GradedMonomial& b) const {
    int da = a.degree();
    int db = b.degree();
    if (da != db) return da < db;
    return a.canonical_key() < b.canonical_key();
  }
};

/// Finite Q-linear combination of graded monomials in canonical form.
///
/// Zero coefficients are never stored, so equality is term-map equality.
class SymbolicValue {
 public:
  using TermMap = std::map<GradedMonomial, Rational, CanonicalOrder>;

  SymbolicValue() = default;
  SymbolicValue(const Rational& c) {  // NOLINT(google-explicit-constructor)
    add_term(GradedMonomial::one(), c);
  }
  SymbolicValue(long c) : SymbolicValue(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  SymbolicValue(int c) : SymbolicValue(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static SymbolicValue term(const GradedMonomial& m, const Rational& c = 1) {
    SymbolicValue v;
    v.add_term(m, c);
    return v;
  }

  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] Rational coefficient(const GradedMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const GradedMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SymbolicValue& operator+=(const SymbolicValue& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SymbolicValue& operator-=(const SymbolicValue& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  SymbolicValue& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend SymbolicValue operator+(SymbolicValue a, const SymbolicValue& b) { return a += b; }
  friend SymbolicValue operator-(SymbolicValue a, const SymbolicValue& b) { return a -= b; }
  friend SymbolicValue operator-(SymbolicValue a) { return a *= Rational(-1); }
  friend SymbolicValue operator*(SymbolicValue a, const Rational& s) { return a *= s; }
  friend SymbolicValue operator*(const Rational& s, SymbolicValue a) { return a *= s; }
  friend SymbolicValue operator*(const SymbolicValue& a, const SymbolicValue& b) {
    SymbolicValue r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
  }
  SymbolicValue& operator*=(const SymbolicValue& o) { return *this = *this * o; }

  friend bool operator==(const SymbolicValue& a, const SymbolicValue& b) { return a.terms_ == b.terms_; }

  /// Common degree of all terms; std::nullopt when degrees differ. The zero
  /// value reports degree 0.
  [[nodiscard]] std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) {
      if (m.degree() != d) return std::nullopt;
    }
    return d;
  }

  /// Highest exponent of `name` over all terms.
  [[nodiscard]] int degree_in(const std::string& name) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.var_exp(name));
    return d;
  }

  [[nodiscard]] std::set<std::string> variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_) {
      for (const auto& [name, e] : m.var_exps()) out.insert(name);
    }
    return out;
  }

  /// Groups terms by the exponent of `name`: value = sum_p coeff[p] * name^p.
  [[nodiscard]] std::map<int, SymbolicValue> collect(const std::string& name) const {
    std::map<int, SymbolicValue> out;
    for (const auto& [m, c] : terms_) out[m.var_exp(name)].add_term(m.without_var(name), c);
    return out;
  }

  /// Replaces every occurrence of `name` by `replacement`.
  [[nodiscard]] SymbolicValue substitute(const std::string& name, const SymbolicValue& replacement) const {
    SymbolicValue out;
    for (const auto& [p, coeff] : collect(name)) out += coeff * pow(replacement, p);
    return out;
  }

  friend SymbolicValue pow(const SymbolicValue& x, int e) {
    if (e < 0) throw DomainError("negative power of a symbolic value");
    SymbolicValue r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
  }

 private:
  TermMap terms_;
};

inline SymbolicValue sym_pi(int e = 1) { return SymbolicValue::term(GradedMonomial::pi(e)); }
inline SymbolicValue sym_log2() { return SymbolicValue::term(GradedMonomial::log2()); }
inline SymbolicValue sym_zeta(int j) { return SymbolicValue::term(GradedMonomial::zeta(j)); }
inline SymbolicValue sym_beta(int k) { return SymbolicValue::term(GradedMonomial::beta(k)); }
inline SymbolicValue sym_var(const std::string& name, int e = 1) { return SymbolicValue::term(GradedMonomial::var(name, e)); }

// ---------------------------------------------------------------------------
// Rendering

namespace detail {

inline std::string plain_monomial(const GradedMonomial& m) {
  std::vector<std::string> f;
  auto powered = [](std::string base, int e) { return e == 1 ? base : base + "^" + std::to_string(e); };
  if (m.pi_exp() > 0) f.push_back(powered("pi", m.pi_exp()));
  if (m.log2_exp() > 0) f.push_back(powered("log(2)", m.log2_exp()));
  for (auto [j, e] : m.zeta_exps()) f.push_back(powered("zeta(" + std::to_string(j) + ")", e));
  for (auto [k, e] : m.beta_exps()) f.push_back(powered("beta(" + std::to_string(k) + ")", e));
  for (const auto& [name, e] : m.var_exps()) f.push_back(powered(name, e));
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? " * " : "") + f[i];
  return out;
}

inline std::string latex_monomial(const GradedMonomial& m) {
  std::string out;
  auto powered = [](const std::string& base, int e) { return e == 1 ? base : base + "^{" + std::to_string(e) + "}"; };
  if (m.pi_exp() > 0) out += powered("\\pi", m.pi_exp()) + " ";
  if (m.log2_exp() > 0) out += m.log2_exp() == 1 ? "\\log 2 " : "(\\log 2)^{" + std::to_string(m.log2_exp()) + "} ";
  for (auto [j, e] : m.zeta_exps()) out += powered("\\zeta(" + std::to_string(j) + ")", e) + " ";
  for (auto [k, e] : m.beta_exps()) out += powered("\\beta(" + std::to_string(k) + ")", e) + " ";
  for (const auto& [name, e] : m.var_exps()) out += powered(name, e) + " ";
  if (!out.empty()) out.pop_back();
  return out;
}

}  // namespace detail

/// Plain text, e.g. "9/4 * zeta(3) + 1/2 * pi^2 * log(2)".
inline std::string to_plain(const SymbolicValue& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : v.terms()) {
    Rational mag = abs(c);
    std::string body;
    if (m.is_one()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = detail::plain_monomial(m);
    } else {
      body = mag.get_str() + " * " + detail::plain_monomial(m);
    }
    if (first) {
      out += (c < 0 ? "-" : "") + body;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

/// LaTeX, e.g. "\frac{9}{4} \zeta(3) + \frac{1}{2} \pi^{2} \log 2".
inline std::string to_latex(const SymbolicValue& v) {
  if (v.is_zero()) return "0";
  auto frac = [](const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
  };
  std::string out;
  bool first = true;
  for (const auto& [m, c] : v.terms()) {
    Rational mag = abs(c);
    std::string body;
    if (m.is_one()) {
      body = frac(mag);
    } else if (mag == 1) {
      body = detail::latex_monomial(m);
    } else {
      body = frac(mag) + " " + detail::latex_monomial(m);
    }
    out += first ? (c < 0 ? "-" : "") + body : (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace crownvol

#endif  // CROWNVOL_SYMBOLIC_HPP
