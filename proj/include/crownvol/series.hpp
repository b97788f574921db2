#ifndef CROWNVOL_SERIES_HPP
#define CROWNVOL_SERIES_HPP

#include <crownvol/errors.hpp>
#include <crownvol/real.hpp>

#include <cstddef>
#include <vector>

namespace crownvol {

/// Power series in x truncated after x^order, coefficients in a ring T that
/// supports +, * and multiplication by Rational.
template <class T>
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t order, T zero) : coeffs_(order + 1, zero), zero_(std::move(zero)) {}

  [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
  T& operator[](std::size_t i) { return coeffs_[i]; }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  [[nodiscard]] const T& zero() const { return zero_; }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(a.order(), a.zero_);
    for (std::size_t i = 0; i <= a.order(); ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j <= a.order(); ++j) {
        if (!is_zero(b.coeffs_[j])) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }

  /// The constant series `c`.
  [[nodiscard]] TruncatedSeries constant(const T& c) const {
    TruncatedSeries r(order(), zero_);
    r.coeffs_[0] = c;
    return r;
  }

 private:
  static bool is_zero(const T& c) { return c.is_zero(); }

  std::vector<T> coeffs_;
  T zero_;
};

/// cosh(u) and sinh(u) for a series u without constant term.
template <class T>
std::pair<TruncatedSeries<T>, TruncatedSeries<T>> cosh_sinh(const TruncatedSeries<T>& u, const T& one) {
  if (!u[0].is_zero()) throw DomainError("cosh_sinh needs a series without constant term");
  TruncatedSeries<T> c = u.constant(one);
  TruncatedSeries<T> s(u.order(), u.zero());
  TruncatedSeries<T> power = u.constant(one);
  Integer fact = 1;
  for (std::size_t k = 1; k <= u.order(); ++k) {
    power = power * u;
    fact *= static_cast<unsigned long>(k);
    TruncatedSeries<T> term = power * Rational(Rational(1) / Rational(fact));
    if (k % 2 == 0) c = c + term; else s = s + term;
  }
  return {c, s};
}

}  // namespace crownvol

#endif  // CROWNVOL_SERIES_HPP
