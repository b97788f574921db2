#include <crownvol/crown.hpp>
#include <crownvol/evaluate.hpp>

#include <gtest/gtest.h>

using namespace crownvol;

namespace {
PrecisionValue exact(const char* s) { return PrecisionValue::from_decimal(s, 128); }
}  // namespace

TEST(CrownFixedNeck, FirstFour) {
  EXPECT_EQ(to_plain(crown_volume_fixed_neck(1)), "1 / (2 cosh(d/2))");
  EXPECT_EQ(to_plain(crown_volume_fixed_neck(2)), "d / (2 sinh(d/2))");
  EXPECT_EQ(to_plain(crown_volume_fixed_neck(3)), "(d^2 + pi^2) / (4 cosh(d/2))");
  EXPECT_EQ(to_plain(crown_volume_fixed_neck(4)), "d (d^2 + 4 pi^2) / (12 sinh(d/2))");
  CrownVolume c4 = crown_volume_fixed_neck(4);
  EXPECT_EQ(c4.numerator, PiPolynomial::monomial(0, 3, 1) + PiPolynomial::monomial(1, 1, 4));
  EXPECT_EQ(c4.prefactor, ratio(1, 12));
  EXPECT_THROW(crown_volume_fixed_neck(0), DomainError);
}

TEST(CrownFixedNeck, StructuralInvariantsUpTo30) {
  for (int n = 1; n <= 30; ++n) {
    CrownVolume cv = crown_volume_fixed_neck(n);
    EXPECT_TRUE(cv.numerator.all_coefficients_positive());
    EXPECT_EQ(cv.numerator.homogeneous_degree(), n - 1);
    EXPECT_EQ(cv.denom == HalfAngle::SinhHalf, n % 2 == 0);
    PiPolynomial even_part = n % 2 == 0 ? cv.numerator.divided_by_variable(1) : cv.numerator;
    EXPECT_EQ(even_part.reflected(), even_part) << n;
  }
}

TEST(CrownEval, Values) {
  EXPECT_NEAR(crown_volume_eval(crown_volume_fixed_neck(2), exact("0")).value.to_double(), 1.0, 1e-30);
  PrecisionValue v3 = crown_volume_eval(crown_volume_fixed_neck(3), exact("0"));
  EXPECT_TRUE(v3.agrees_with(eval_symbolic(sym_pi(2) * ratio(1, 4), 128)));
  PrecisionValue v1 = crown_volume_eval(crown_volume_fixed_neck(1), exact("2"));
  // 1/(2 cosh 1) from an independent library
  EXPECT_TRUE(v1.contains(Real("0.32402713683194269978748867661307516155424465603597", 200)));
  EXPECT_THROW(crown_volume_eval(crown_volume_fixed_neck(1), exact("-1")), DomainError);
}

TEST(CrownEval, ErrorGrowsWithInputUncertainty) {
  PrecisionValue d{Real(1, 128), Real(1e-10, 128)};
  PrecisionValue v = crown_volume_eval(crown_volume_fixed_neck(3), d);
  EXPECT_GT(v.abs_error.to_double(), 1e-12);
  EXPECT_LT(v.abs_error.to_double(), 1e-9);
}

TEST(CrownAtZero, MatchesNumericLimit) {
  EXPECT_EQ(crown_volume_at_zero(1), SymbolicValue(ratio(1, 2)));
  EXPECT_EQ(crown_volume_at_zero(2), SymbolicValue(Rational(1)));
  EXPECT_EQ(crown_volume_at_zero(3), sym_pi(2) * ratio(1, 4));
  for (int n = 1; n <= 10; ++n) {
    EXPECT_TRUE(crown_volume_eval(crown_volume_fixed_neck(n), exact("0")).agrees_with(eval_symbolic(crown_volume_at_zero(n), 128)));
  }
}

TEST(CrownTotal, PiPowerHalf) {
  EXPECT_EQ(crown_total_volume(1), sym_pi(1) * ratio(1, 2));
  EXPECT_EQ(crown_total_volume(2), sym_pi(2) * ratio(1, 2));
  EXPECT_EQ(crown_total_volume(4), sym_pi(4) * ratio(1, 2));
}

TEST(CrownGf, ExactParityStructure) {
  CrownGfCoefficients gf = crown_gf_exact(14);
  for (int n = 0; n <= 14; ++n) {
    auto i = static_cast<std::size_t>(n);
    if (n % 2 == 0) EXPECT_TRUE(gf.cosh_part[i].is_zero()) << n;
    else EXPECT_TRUE(gf.sinh_part[i].is_zero()) << n;
  }
}

TEST(CrownGf, DZeroLowCoefficients) {
  auto c = crown_gf_coefficients(3, exact("0"), 128);
  EXPECT_NEAR(c[0].value.to_double(), 0.5, 1e-30);
  EXPECT_NEAR(c[1].value.to_double(), 1.0, 1e-30);
  EXPECT_TRUE(c[2].agrees_with(eval_symbolic(sym_pi(2) * ratio(1, 4), 128)));
}

TEST(CrownGf, MatchesClosedFormsTo1e20) {
  for (const char* d : {"0", "1", "5"}) {
    auto coeffs = crown_gf_coefficients(12, exact(d), 128);
    for (int n = 1; n <= 12; ++n) {
      PrecisionValue closed = crown_volume_eval(crown_volume_fixed_neck(n), exact(d));
      Real rel = abs(coeffs[static_cast<std::size_t>(n - 1)].value - closed.value) / closed.value;
      EXPECT_LT(rel.to_double(), 1e-20) << "n=" << n << " d=" << d;
    }
  }
}

TEST(NgonConjecture, TableValues) {
  EXPECT_EQ(ngon_conjecture_volume(3), SymbolicValue(Rational(1)));
  EXPECT_EQ(ngon_conjecture_volume(4), SymbolicValue(Rational(1)));
  EXPECT_EQ(ngon_conjecture_volume(5), sym_pi(2) * ratio(1, 6));
  EXPECT_EQ(ngon_conjecture_volume(6), sym_pi(2) * ratio(1, 3));
  EXPECT_EQ(ngon_conjecture_volume(7), sym_pi(4) * ratio(3, 40));
  EXPECT_EQ(ngon_conjecture_volume(8), sym_pi(4) * ratio(8, 45));
  EXPECT_EQ(ngon_conjecture_volume(9), sym_pi(6) * ratio(5, 112));
  EXPECT_THROW(ngon_conjecture_volume(2), DomainError);
}

TEST(NgonUpperBound, ValuesAndCrownIdentity) {
  EXPECT_EQ(ngon_upper_bound(6), sym_pi(2) * ratio(2, 3));
  EXPECT_EQ(ngon_upper_bound(5), sym_pi(2) * ratio(1, 4));
  EXPECT_EQ(ngon_upper_bound(4), SymbolicValue(Rational(1)));
  for (int n = 3; n <= 30; ++n) {
    EXPECT_EQ(ngon_upper_bound(n), crown_volume_at_zero(n - 2)) << n;
    EXPECT_EQ(ngon_conjecture_volume(n), ngon_upper_bound(n) * ratio(2, n - 2)) << n;
  }
}

TEST(NgonGf, MatchesConjectureUpTo20) {
  auto gf = ngon_gf_coefficients(17);
  EXPECT_EQ(gf[0], SymbolicValue(Rational(1)));
  EXPECT_EQ(gf[2], sym_pi(2) * ratio(1, 6));
  EXPECT_EQ(gf[5], sym_pi(4) * ratio(8, 45));
  for (int n = 3; n <= 20; ++n) EXPECT_EQ(gf[static_cast<std::size_t>(n - 3)], ngon_conjecture_volume(n)) << n;
}
