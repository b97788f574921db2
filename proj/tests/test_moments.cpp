#include <crownvol/evaluate.hpp>
#include <crownvol/moments.hpp>

#include <gtest/gtest.h>

using namespace crownvol;

TEST(Moment, TableExamples) {
  EXPECT_EQ(moment(2, DenomKind::SinhFull), sym_zeta(3) * ratio(7, 2));
  EXPECT_EQ(moment(1, DenomKind::CoshSqHalf), sym_log2() * Rational(4));
  EXPECT_EQ(moment(1, DenomKind::CoshHalf), sym_beta(2) * Rational(8));
  EXPECT_EQ(moment(3, DenomKind::SinhSqHalf), sym_zeta(3) * Rational(24));
  EXPECT_EQ(moment(2, DenomKind::SinhHalf), sym_zeta(3) * Rational(28));
}

TEST(Moment, Errors) {
  auto reason = [](long p, DenomKind k) {
    try {
      moment(p, k);
    } catch (const MomentError& e) {
      return e.reason();
    }
    ADD_FAILURE() << "no error for power " << p;
    return MomentError::Reason::Divergent;
  };
  EXPECT_EQ(reason(0, DenomKind::SinhFull), MomentError::Reason::Divergent);
  EXPECT_EQ(reason(1, DenomKind::SinhSqHalf), MomentError::Reason::Divergent);
  EXPECT_EQ(reason(3, DenomKind::SinhFull), MomentError::Reason::WrongParity);
  EXPECT_EQ(reason(2, DenomKind::CoshHalf), MomentError::Reason::WrongParity);
  EXPECT_EQ(reason(4, DenomKind::SinhSqHalf), MomentError::Reason::WrongParity);
}

TEST(Moment, SubstitutionCoherence) {
  for (long k = 1; k <= 6; ++k) {
    EXPECT_EQ(moment(2 * k, DenomKind::SinhHalf), moment(2 * k, DenomKind::SinhFull) * detail::pow2_rational(2 * k + 1));
    EXPECT_EQ(moment(2 * k, DenomKind::SinhHalfCoshHalf), moment(2 * k, DenomKind::SinhFull) * Rational(2));
  }
}

TEST(Moment, NumericValidationAllKindsUpToPower9) {
  const Bits bits = 128;
  for (DenomKind k : {DenomKind::SinhFull, DenomKind::SinhSqHalf, DenomKind::CoshSqHalf, DenomKind::SinhHalf,
                      DenomKind::CoshHalf, DenomKind::SinhHalfCoshHalf}) {
    for (long p = 0; p <= 9; ++p) {
      SymbolicValue exact;
      try {
        exact = moment(p, k);
      } catch (const MomentError&) {
        continue;
      }
      PrecisionValue closed = eval_symbolic(exact, bits);
      Real target = abs(closed.value) * Real(1e-24, 64);
      PrecisionValue numeric = moment_numeric(p, k, target, bits);
      Real rel = abs(closed.value - numeric.value) / abs(closed.value);
      EXPECT_LT(rel.to_double(), 1e-20) << "power " << p << " over " << to_string(k);
    }
  }
}

TEST(ReduceIntegral, SingleMonomialAndMixed) {
  EXPECT_EQ(reduce_integral(PiPolynomial::monomial(0, 2, 1, "l"), DenomKind::SinhFull), sym_zeta(3) * ratio(7, 2));
  PiPolynomial p = PiPolynomial::monomial(0, 3, 1, "l") + PiPolynomial::monomial(1, 1, 1, "l");
  SymbolicValue r = reduce_integral(p, DenomKind::CoshSqHalf);
  EXPECT_EQ(r, sym_zeta(3) * Rational(18) + sym_pi(2) * sym_log2() * Rational(4));
  // 40-digit quadrature of int (l^3 + pi^2 l)/cosh^2(l/2) from an independent library
  Real ref("49.00137811230116331658520352302248411897", 160);
  EXPECT_LT((abs(eval_symbolic(r, 128).value - ref) / ref).to_double(), 1e-35);
}

TEST(ReduceIntegral, DivergentMonomialIsNamed) {
  PiPolynomial p = PiPolynomial::monomial(0, 2, 1, "l") + PiPolynomial::monomial(1, 0, 3, "l");
  try {
    reduce_integral(p, DenomKind::SinhFull);
    FAIL();
  } catch (const MomentError& e) {
    EXPECT_EQ(e.reason(), MomentError::Reason::Divergent);
    EXPECT_NE(std::string(e.what()).find("3 pi^2"), std::string::npos) << e.what();
  }
}

TEST(ReduceIntegral, Linearity) {
  PiPolynomial a = PiPolynomial::monomial(0, 5, ratio(2, 3), "l") + PiPolynomial::monomial(2, 1, 7, "l");
  PiPolynomial b = PiPolynomial::monomial(1, 3, ratio(-1, 5), "l") + PiPolynomial::monomial(0, 1, 1, "l");
  for (DenomKind k : {DenomKind::CoshSqHalf, DenomKind::CoshHalf}) {
    EXPECT_EQ(reduce_integral(a + b, k), reduce_integral(a, k) + reduce_integral(b, k));
  }
}

TEST(ReduceIntegral, SymbolicNumeratorWithParameters) {
  // int (b^2 l + l^3) / cosh(l/2) = 8 beta(2) b^2 + 96 beta(4)... checked against moment()
  SymbolicValue num = sym_var("b", 2) * sym_var("l") + sym_var("l", 3);
  SymbolicValue r = reduce_integral(num, "l", DenomKind::CoshHalf);
  EXPECT_EQ(r, sym_var("b", 2) * moment(1, DenomKind::CoshHalf) + moment(3, DenomKind::CoshHalf));
}
