#ifndef CROWNVOL_REAL_HPP
#define CROWNVOL_REAL_HPP

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace crownvol {

using Integer = mpz_class;
using Rational = mpq_class;

using Bits = mpfr_prec_t;

inline constexpr Bits kDefaultBits = 128;

/// Decimal digits carried by `bits` binary digits (rounded down).
inline int bits_to_digits(Bits bits) { return static_cast<int>(static_cast<double>(bits) * 0.30102999566398120); }

/// Binary digits needed for `digits` decimal digits (rounded up).
inline Bits digits_to_bits(int digits) {
  return static_cast<Bits>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 1;
}

/// Arbitrary precision binary float with value semantics.
///
/// Every value owns its precision. Binary operations produce a result at the
/// larger precision of the two operands; compound assignment widens the target
/// when the right-hand side is wider. There is no global precision state, so
/// values can be created and combined from any thread.
class Real {
 public:
  explicit Real(Bits bits = kDefaultBits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_zero(v_, 1);
  }
  template <std::integral T>
  Real(T x, Bits bits) {
    mpfr_init2(v_, clamp(bits));
    if constexpr (std::is_signed_v<T>) {
      mpfr_set_si(v_, static_cast<long>(x), MPFR_RNDN);
    } else {
      mpfr_set_ui(v_, static_cast<unsigned long>(x), MPFR_RNDN);
    }
  }
  Real(double x, Bits bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(const Rational& q, Bits bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Real(const Integer& z, Bits bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  Real(std::string_view text, Bits bits) {
    mpfr_init2(v_, clamp(bits));
    std::string s(text);
    if (s.empty() || mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
      mpfr_clear(v_);
      throw std::invalid_argument("not a decimal number: '" + s + "'");
    }
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  /// Copy of `o` rounded to `bits`.
  Real(const Real& o, Bits bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  [[nodiscard]] Bits precision() const { return mpfr_get_prec(v_); }
  [[nodiscard]] mpfr_srcptr raw() const { return v_; }
  [[nodiscard]] mpfr_ptr raw() { return v_; }

  [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  [[nodiscard]] bool is_finite() const { return mpfr_number_p(v_) != 0; }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  [[nodiscard]] long exponent() const { return is_zero() ? -(1L << 30) : static_cast<long>(mpfr_get_exp(v_)); }

  /// Nearest integer (ties away from zero).
  [[nodiscard]] Integer round_to_integer() const {
    Integer z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDNA);
    return z;
  }
  /// Exact rational value of this binary float.
  [[nodiscard]] Rational to_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

  /// Scientific notation with `digits` significant digits.
  [[nodiscard]] std::string str(int digits = 20) const {
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }
  /// Fixed notation with `decimals` digits after the point.
  [[nodiscard]] std::string fixed(int decimals) const {
    if (!is_finite()) return str();
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", std::max(decimals, 0), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  Real& operator+=(const Real& o) { widen(o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { widen(o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { widen(o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { widen(o); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator*=(const Rational& q) { mpfr_mul_q(v_, v_, q.get_mpq_t(), MPFR_RNDN); return *this; }
  Real& operator+=(const Rational& q) { mpfr_add_q(v_, v_, q.get_mpq_t(), MPFR_RNDN); return *this; }

  Real operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

  friend Real operator+(Real a, long b) { return a += b; }
  friend Real operator+(long b, Real a) { return a += b; }
  friend Real operator-(Real a, long b) { return a -= b; }
  friend Real operator-(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator*(long b, Real a) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  friend Real operator/(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(Real a, const Rational& q) { return a *= q; }
  friend Real operator*(const Rational& q, Real a) { return a *= q; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(bits_to_digits(x.precision())); }

  // Unary functions; the result carries the argument's precision.
  friend Real abs(const Real& x) { return unary(x, mpfr_abs); }
  friend Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
  friend Real exp(const Real& x) { return unary(x, mpfr_exp); }
  friend Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
  friend Real log(const Real& x) { return unary(x, mpfr_log); }
  friend Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
  friend Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
  friend Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
  friend Real tanh(const Real& x) { return unary(x, mpfr_tanh); }
  friend Real sin(const Real& x) { return unary(x, mpfr_sin); }
  friend Real cos(const Real& x) { return unary(x, mpfr_cos); }
  friend Real tan(const Real& x) { return unary(x, mpfr_tan); }
  friend Real atan(const Real& x) { return unary(x, mpfr_atan); }
  friend Real asin(const Real& x) { return unary(x, mpfr_asin); }
  friend Real pow(const Real& x, long e) {
    Real r(x.precision());
    mpfr_pow_si(r.v_, x.v_, e, MPFR_RNDN);
    return r;
  }
  friend Real pow(const Real& x, const Real& e) { return binary(x, e, mpfr_pow); }
  /// x * 2^e, exact.
  friend Real ldexp(const Real& x, long e) {
    Real r(x.precision());
    mpfr_mul_2si(r.v_, x.v_, e, MPFR_RNDN);
    return r;
  }
  friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }
  friend Real min(const Real& a, const Real& b) { return b < a ? b : a; }

  /// pi from the MPFR library; numerical routines use this, the
  /// constants module carries its own algorithms.
  static Real pi(Bits bits) {
    Real r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  /// 2^e at the requested precision.
  static Real pow2(long e, Bits bits) { return ldexp(Real(1, bits), e); }

 private:
  static Bits clamp(Bits bits) { return std::max<Bits>(bits, MPFR_PREC_MIN); }
  void widen(const Real& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  }
  template <class F>
  static Real binary(const Real& a, const Real& b, F f) {
    Real r(std::max(a.precision(), b.precision()));
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  template <class F>
  static Real unary(const Real& x, F f) {
    Real r(x.precision());
    f(r.v_, x.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

namespace detail {
inline Integer factorial(long n) {
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}
}  // namespace detail

/// p/q in lowest terms.
inline Rational ratio(const Integer& p, const Integer& q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Rational rendered as "p/q" (or "p" when q = 1).
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p/q", "p" or a terminating decimal such as "0.125" into lowest terms.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&] { throw std::invalid_argument("not a rational number: '" + s + "'"); };
  if (s.empty()) fail();
  auto dot = s.find('.');
  Rational q;
  try {
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      Integer den = 1;
      for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
      q = Rational(Integer(digits, 10), den);
    } else {
      q = Rational(s, 10);
    }
  } catch (const std::invalid_argument&) {
    fail();
  }
  if (q.get_den() == 0) fail();
  q.canonicalize();
  return q;
}

}  // namespace crownvol

#endif  // CROWNVOL_REAL_HPP
