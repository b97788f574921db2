#ifndef CROWNVOL_PI_POLYNOMIAL_HPP
#define CROWNVOL_PI_POLYNOMIAL_HPP

#include <crownvol/errors.hpp>
#include <crownvol/real.hpp>
#include <crownvol/symbolic.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace crownvol {

/// Element of Q[pi^2, v] for a single named variable v.
///
/// Keys are (a, b) for the monomial pi^(2a) v^b. Zero coefficients are never
/// stored.
class PiPolynomial {
 public:
  using Key = std::pair<int, int>;

  explicit PiPolynomial(std::string variable = "d") : var_(std::move(variable)) {}

  static PiPolynomial constant(const Rational& c, std::string variable = "d") {
    PiPolynomial p(std::move(variable));
    p.add(0, 0, c);
    return p;
  }
  /// c * pi^(2 pi2) * v^power
  static PiPolynomial monomial(int pi2, int power, const Rational& c, std::string variable = "d") {
    PiPolynomial p(std::move(variable));
    p.add(pi2, power, c);
    return p;
  }

  [[nodiscard]] const std::string& variable() const { return var_; }
  [[nodiscard]] const std::map<Key, Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

  [[nodiscard]] Rational coefficient(int pi2, int power) const {
    auto it = coeffs_.find({pi2, power});
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  void add(int pi2, int power, const Rational& c) {
    if (pi2 < 0 || power < 0) throw DomainError("negative exponent in PiPolynomial");
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(Key{pi2, power}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  PiPolynomial& operator+=(const PiPolynomial& o) {
    check_var(o);
    for (const auto& [k, c] : o.coeffs_) add(k.first, k.second, c);
    return *this;
  }
  PiPolynomial& operator-=(const PiPolynomial& o) {
    check_var(o);
    for (const auto& [k, c] : o.coeffs_) add(k.first, k.second, -c);
    return *this;
  }
  PiPolynomial& operator*=(const Rational& s) {
    if (s == 0) coeffs_.clear();
    for (auto& [k, c] : coeffs_) c *= s;
    return *this;
  }
  friend PiPolynomial operator+(PiPolynomial a, const PiPolynomial& b) { return a += b; }
  friend PiPolynomial operator-(PiPolynomial a, const PiPolynomial& b) { return a -= b; }
  friend PiPolynomial operator*(PiPolynomial a, const Rational& s) { return a *= s; }
  friend PiPolynomial operator*(const Rational& s, PiPolynomial a) { return a *= s; }
  friend PiPolynomial operator*(const PiPolynomial& a, const PiPolynomial& b) {
    a.check_var(b);
    PiPolynomial r(a.var_);
    for (const auto& [ka, ca] : a.coeffs_) {
      for (const auto& [kb, cb] : b.coeffs_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
    return r;
  }
  friend bool operator==(const PiPolynomial& a, const PiPolynomial& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  /// Renames the variable (the polynomial itself is unchanged).
  [[nodiscard]] PiPolynomial renamed(std::string variable) const {
    PiPolynomial p = *this;
    p.var_ = std::move(variable);
    return p;
  }

  /// Degree with pi and v both of degree 1; nullopt if not homogeneous.
  [[nodiscard]] std::optional<int> homogeneous_degree() const {
    if (coeffs_.empty()) return 0;
    int d = 2 * coeffs_.begin()->first.first + coeffs_.begin()->first.second;
    for (const auto& [k, c] : coeffs_) {
      if (2 * k.first + k.second != d) return std::nullopt;
    }
    return d;
  }
  [[nodiscard]] int degree_in_variable() const {
    int d = 0;
    for (const auto& [k, c] : coeffs_) d = std::max(d, k.second);
    return d;
  }
  /// Every monomial has a v-exponent of parity `parity` (0 even, 1 odd).
  [[nodiscard]] bool has_parity(int parity) const {
    for (const auto& [k, c] : coeffs_) {
      if (k.second % 2 != parity) return false;
    }
    return true;
  }
  [[nodiscard]] bool all_coefficients_positive() const {
    for (const auto& [k, c] : coeffs_) {
      if (c <= 0) return false;
    }
    return true;
  }
  /// Exact division by v^k; throws if some monomial has a lower v-power.
  [[nodiscard]] PiPolynomial divided_by_variable(int k) const {
    PiPolynomial r(var_);
    for (const auto& [key, c] : coeffs_) {
      if (key.second < k) throw DomainError("polynomial is not divisible by " + var_ + "^" + std::to_string(k));
      r.add(key.first, key.second - k, c);
    }
    return r;
  }
  /// Substitutes v -> -v.
  [[nodiscard]] PiPolynomial reflected() const {
    PiPolynomial r(var_);
    for (const auto& [k, c] : coeffs_) r.add(k.first, k.second, k.second % 2 ? Rational(-c) : c);
    return r;
  }
  /// Value at v = 0 as a SymbolicValue in pi.
  [[nodiscard]] SymbolicValue at_zero() const {
    SymbolicValue out;
    for (const auto& [k, c] : coeffs_) {
      if (k.second == 0) out.add_term(GradedMonomial::pi(2 * k.first), c);
    }
    return out;
  }

  [[nodiscard]] SymbolicValue to_symbolic() const {
    SymbolicValue out;
    for (const auto& [k, c] : coeffs_) out.add_term(GradedMonomial::pi(2 * k.first) * GradedMonomial::var(var_, k.second), c);
    return out;
  }

  /// Evaluates at v = x with pi supplied by the caller.
  [[nodiscard]] Real evaluate(const Real& x, const Real& pi) const {
    Bits bits = std::max(x.precision(), pi.precision());
    Real pi2 = pi * pi;
    Real sum(bits);
    for (const auto& [k, c] : coeffs_) sum += Real(c, bits) * pow(pi2, k.first) * pow(x, k.second);
    return sum;
  }

  /// Descending powers of v, e.g. "d^3 + 4 pi^2 d".
  [[nodiscard]] std::string to_plain() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      // highest v-power first: iterate by power, then pi
      (void)it;
    }
    std::map<int, std::map<int, Rational>, std::greater<>> by_power;
    for (const auto& [k, c] : coeffs_) by_power[k.second][k.first] = c;
    for (const auto& [power, row] : by_power) {
      for (const auto& [pi2, c] : row) {
        std::vector<std::string> parts;
        Rational mag = abs(c);
        if (mag != 1 || (pi2 == 0 && power == 0)) parts.push_back(mag.get_str());
        if (pi2 > 0) parts.push_back(pi2 == 1 ? "pi^2" : "pi^" + std::to_string(2 * pi2));
        if (power > 0) parts.push_back(power == 1 ? var_ : var_ + "^" + std::to_string(power));
        std::string body;
        for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? " " : "") + parts[i];
        out += first ? (c < 0 ? "-" : "") + body : (c < 0 ? " - " : " + ") + body;
        first = false;
      }
    }
    return out;
  }

 private:
  void check_var(const PiPolynomial& o) const {
    if (o.var_ != var_ && !o.coeffs_.empty() && !coeffs_.empty()) {
      throw DomainError("PiPolynomial variable mismatch: " + var_ + " vs " + o.var_);
    }
  }

  std::string var_;
  std::map<Key, Rational> coeffs_;
};

}  // namespace crownvol

#endif  // CROWNVOL_PI_POLYNOMIAL_HPP
