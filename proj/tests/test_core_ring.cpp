#include <crownvol/constants.hpp>
#include <crownvol/evaluate.hpp>
#include <crownvol/pi_polynomial.hpp>
#include <crownvol/serialize.hpp>
#include <crownvol/symbolic.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace crownvol;

namespace {

// 50-digit values from an independent arbitrary-precision library.
const char* const kPi = "3.1415926535897932384626433832795028841971693993751";
const char* const kLog2 = "0.69314718055994530941723212145817656807550013436025";
const char* const kZeta3 = "1.2020569031595942853997381615114499907649862923405";
const char* const kZeta5 = "1.0369277551433699263313654864570341680570809195019";
const char* const kCatalan = "0.91596559417721901505460351493238411077414937428167";
const char* const kBeta4 = "0.98894455174110533610842263322837782131586088706273";
const char* const kPi2Over6 = "1.6449340668482264364724151666460251892189499012068";

void expect_close(const PrecisionValue& x, const char* decimal, double rel) {
  Real ref(decimal, 200);
  Real diff = abs(x.value - ref) / abs(ref);
  EXPECT_LT(diff.to_double(), rel) << x.value.str(40) << " vs " << decimal;
}

SymbolicValue random_value(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9), small(0, 2), count(0, 3);
  SymbolicValue v;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    GradedMonomial m = GradedMonomial::pi(small(rng)) * GradedMonomial::log2(small(rng) / 2) *
                       GradedMonomial::zeta(3, small(rng) / 2) * GradedMonomial::var("d", small(rng));
    v.add_term(m, ratio(coeff(rng), 1 + small(rng)));
  }
  return v;
}

}  // namespace

TEST(RingAdd, AdditiveIdentityAndCancellation) {
  SymbolicValue a = sym_pi(2) * ratio(1, 6);
  EXPECT_EQ(SymbolicValue() + a, a);
  SymbolicValue z = sym_zeta(3) * ratio(7, 4);
  EXPECT_TRUE((z + sym_zeta(3) * ratio(-7, 4)).is_zero());
}

TEST(RingAdd, AnnulusA13Shape) {
  SymbolicValue v = sym_pi(2) * sym_log2() * ratio(1, 2) + sym_zeta(3) * ratio(9, 4);
  EXPECT_EQ(v.size(), 2u);
  EXPECT_EQ(v.coefficient(GradedMonomial::pi(2) * GradedMonomial::log2()), ratio(1, 2));
  EXPECT_EQ(v.coefficient(GradedMonomial::zeta(3)), ratio(9, 4));
  EXPECT_EQ(v.homogeneous_degree(), 3);
}

TEST(RingMul, Examples) {
  EXPECT_EQ(sym_pi() * sym_pi(), sym_pi(2));
  SymbolicValue p = sym_var("d") * (sym_zeta(3) * Rational(6));
  EXPECT_EQ(p.coefficient(GradedMonomial::var("d") * GradedMonomial::zeta(3)), Rational(6));
  SymbolicValue x = sym_pi(2) + sym_log2();
  EXPECT_EQ(SymbolicValue(Rational(3)) * x, x * Rational(3));
}

TEST(RingMul, HandExpansion) {
  // (pi + d)(pi - d) = pi^2 - d^2
  SymbolicValue a = sym_pi() + sym_var("d");
  SymbolicValue b = sym_pi() - sym_var("d");
  EXPECT_EQ(a * b, sym_pi(2) - sym_var("d", 2));
}

TEST(HomogeneousDegree, Cases) {
  EXPECT_EQ(SymbolicValue(Rational(5)).homogeneous_degree(), 0);
  EXPECT_FALSE((sym_pi() + sym_pi(2)).homogeneous_degree().has_value());
  EXPECT_EQ((sym_beta(2) * sym_pi(2) + sym_zeta(3) * sym_var("b1")).homogeneous_degree(), 4);
}

TEST(Monomial, RejectsBadGenerators) {
  EXPECT_THROW(GradedMonomial::zeta(2), DomainError);
  EXPECT_THROW(GradedMonomial::beta(3), DomainError);
}

TEST(RingAxioms, RandomProperties) {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    SymbolicValue a = random_value(rng), b = random_value(rng), c = random_value(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(EvalConstant, KnownValues) {
  expect_close(eval_constant(Constant::pi(), 64), kPi, 1e-19);
  expect_close(eval_constant(Constant::beta(2), 64), kCatalan, 1e-19);
  expect_close(eval_constant(Constant::zeta(3), 64), kZeta3, 1e-19);
  expect_close(eval_constant(Constant::log2(), 160), kLog2, 1e-47);
  expect_close(eval_constant(Constant::zeta(5), 160), kZeta5, 1e-47);
  expect_close(eval_constant(Constant::beta(4), 160), kBeta4, 1e-47);
}

TEST(EvalConstant, ErrorBoundContract) {
  for (Bits bits : {16, 64, 128, 256}) {
    for (Constant c : {Constant::pi(), Constant::log2(), Constant::zeta(3), Constant::zeta(7), Constant::beta(2), Constant::beta(6)}) {
      PrecisionValue v = eval_constant(c, bits);
      EXPECT_LE(v.abs_error, ldexp(abs(v.value), -static_cast<long>(bits))) << c.name();
      Real ref = eval_constant_reference(c, bits + 64);
      EXPECT_TRUE(v.contains(ref)) << c.name() << " @ " << bits;
    }
  }
}

TEST(EvalConstant, DualAlgorithmAgreementAt128Bits) {
  std::vector<Constant> all = {Constant::pi(), Constant::log2()};
  for (int s = 3; s <= 15; s += 2) all.push_back(Constant::zeta(s));
  for (int s = 2; s <= 14; s += 2) all.push_back(Constant::beta(s));
  for (const Constant& c : all) {
    PrecisionValue primary = eval_constant(c, 128);
    Real ref = eval_constant_reference(c, 128);
    Real rel = abs(primary.value - ref) / abs(ref);
    EXPECT_LT(rel, Real::pow2(-124, 64)) << c.name();
  }
}

TEST(EvalConstant, RejectsUnsupported) {
  EXPECT_THROW(eval_constant(Constant::zeta(4), 64), DomainError);
  EXPECT_THROW(eval_constant(Constant::beta(3), 64), DomainError);
  EXPECT_THROW(eval_constant(Constant::pi(), 8), DomainError);
}

TEST(EvalConstant, Deterministic) {
  PrecisionValue a = detail::compute_constant(Constant::zeta(3), 96);
  PrecisionValue b = detail::compute_constant(Constant::zeta(3), 96);
  EXPECT_TRUE(a.value == b.value);
}

TEST(EvalSymbolic, Examples) {
  expect_close(eval_symbolic(sym_pi(2) * ratio(1, 6), 128), kPi2Over6, 1e-35);
  PrecisionValue zero = eval_symbolic(SymbolicValue(), 128);
  EXPECT_TRUE(zero.value.is_zero());
  EXPECT_TRUE(zero.abs_error.is_zero());
  expect_close(eval_symbolic(sym_log2(), 128), kLog2, 1e-35);
}

TEST(EvalSymbolic, UnassignedVariable) {
  EXPECT_THROW(eval_symbolic(sym_var("d"), 64), UnassignedVariable);
  Assignments a{{"d", PrecisionValue::from_rational(2, 64)}};
  EXPECT_EQ(eval_symbolic(sym_var("d", 3), a, 64).value.to_double(), 8.0);
}

TEST(EvalSymbolic, MultiplicativeWithinBounds) {
  std::mt19937_64 rng(99);
  Assignments vars{{"d", PrecisionValue::from_decimal("1.25", 128)}};
  for (int trial = 0; trial < 50; ++trial) {
    SymbolicValue a = random_value(rng), b = random_value(rng);
    PrecisionValue lhs = eval_symbolic(a * b, vars, 128);
    PrecisionValue rhs = eval_symbolic(a, vars, 128) * eval_symbolic(b, vars, 128);
    EXPECT_TRUE(lhs.agrees_with(rhs));
  }
}

TEST(PrecisionValueTest, IntervalArithmetic) {
  PrecisionValue a = PrecisionValue::from_decimal("1.5", 64);
  PrecisionValue b = PrecisionValue::from_rational(ratio(1, 3), 64);
  PrecisionValue q = a / b;
  EXPECT_TRUE(q.contains(Real(ratio(9, 2), 128)));
  PrecisionValue zeroish{Real(0, 64), Real(1, 64)};
  EXPECT_THROW(a / zeroish, DomainError);
}

TEST(Serialize, CanonicalJsonRoundTrip) {
  SymbolicValue v = sym_pi(4) * sym_log2() * ratio(1, 4) + sym_pi(2) * sym_zeta(3) * ratio(9, 4) + sym_zeta(5) * ratio(225, 8);
  Json j = to_json(v);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["coeff"], "225/8");  // degree 5 ties break on pi exponent first
  EXPECT_EQ(j[0]["zeta"]["5"], 1);
  EXPECT_EQ(symbolic_from_json(j), v);
  EXPECT_EQ(j.dump(), to_json(symbolic_from_json(j)).dump());
}

TEST(Serialize, SchemaErrors) {
  EXPECT_THROW(symbolic_from_json(Json::object()), SchemaError);
  Json bad = Json::parse(R"([{"coeff":"1/2","pi":-1}])");
  try {
    symbolic_from_json(bad);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.pointer(), "/0/pi");
  }
}

TEST(Render, PlainAndLatex) {
  EXPECT_EQ(to_plain(sym_zeta(3) * ratio(7, 4)), "7/4 * zeta(3)");
  EXPECT_EQ(to_plain(-sym_zeta(3)), "-zeta(3)");
  EXPECT_EQ(to_plain(SymbolicValue()), "0");
  EXPECT_NE(to_latex(sym_pi(2) * ratio(1, 6)).find("\\pi^{2}"), std::string::npos);
}

TEST(PiPolynomialTest, Basics) {
  PiPolynomial p = PiPolynomial::monomial(0, 2, 1) + PiPolynomial::monomial(1, 0, 1);  // d^2 + pi^2
  EXPECT_EQ(p.homogeneous_degree(), 2);
  EXPECT_TRUE(p.has_parity(0));
  EXPECT_EQ(p.to_plain(), "d^2 + pi^2");
  PiPolynomial sq = p * p;
  EXPECT_EQ(sq.coefficient(1, 2), Rational(2));
  EXPECT_EQ(p.at_zero(), sym_pi(2));
  Real v = p.evaluate(Real(1, 128), eval_constant(Constant::pi(), 128).value);
  EXPECT_NEAR(v.to_double(), 1 + 9.869604401089358, 1e-12);
}
