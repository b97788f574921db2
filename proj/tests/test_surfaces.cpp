#include <crownvol/evaluate.hpp>
#include <crownvol/oracles.hpp>
#include <crownvol/reference_tables.hpp>
#include <crownvol/surfaces.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace crownvol;

namespace {

Real rel_diff(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

}  // namespace

TEST(AnnulusTable, ReproducesAllPublishedEntries) {
  auto table = annulus_reference_table();
  EXPECT_EQ(table.size(), 18u);
  for (const auto& e : table) {
    EXPECT_EQ(annulus_volume(e.a1, e.a2), e.volume) << "A_{" << e.a1 << "," << e.a2 << "}: got " << to_plain(annulus_volume(e.a1, e.a2));
  }
}

TEST(AnnulusTable, SpotValues) {
  EXPECT_EQ(annulus_volume(1, 1), sym_log2());
  EXPECT_EQ(annulus_volume(1, 2), sym_zeta(3) * ratio(7, 4));
  EXPECT_EQ(annulus_volume(2, 2), sym_zeta(3) * Rational(6));
}

TEST(AnnulusShape, TheoremStructureUpToTwelve) {
  for (int n = 2; n <= 12; ++n) {
    for (int a1 = 1; a1 < n; ++a1) {
      int a2 = n - a1;
      SymbolicValue v = annulus_volume(a1, a2);
      EXPECT_EQ(v, annulus_volume(a2, a1));
      EXPECT_EQ(v.homogeneous_degree(), n % 2 == 0 ? n - 1 : n) << a1 << "," << a2;
      bool has_log = false;
      for (const auto& [m, c] : v.terms()) {
        EXPECT_GT(c, 0);
        EXPECT_TRUE(m.beta_exps().empty());
        EXPECT_EQ(m.pi_exp() % 2, 0);
        if (m.log2_exp() > 0) {
          has_log = true;
          EXPECT_EQ(m.pi_exp(), n - 2);
          EXPECT_TRUE(m.zeta_exps().empty());
        } else {
          ASSERT_EQ(m.zeta_exps().size(), 1u);
          auto [j, e] = *m.zeta_exps().begin();
          EXPECT_EQ(e, 1);
          EXPECT_EQ(j % 2, 1);
          EXPECT_EQ(j, n % 2 == 1 ? n - m.pi_exp() : n - 1 - m.pi_exp());
        }
      }
      EXPECT_EQ(has_log, a1 % 2 == 1 && a2 % 2 == 1) << a1 << "," << a2;
      if (n % 2 == 1) {
        EXPECT_FALSE(has_log);
      }
    }
  }
}

TEST(AnnulusNumeric, MatchesQuadratureUpToEight) {
  const Bits bits = 128;
  for (int n = 2; n <= 8; ++n) {
    for (int a1 = 1; a1 <= n / 2; ++a1) {
      PrecisionValue exact = eval_symbolic(annulus_volume(a1, n - a1), bits);
      PrecisionValue num = annulus_volume_numeric(a1, n - a1, bits, exact.value * Real(1e-24, 64));
      EXPECT_LT(rel_diff(num.value, exact.value).to_double(), 1e-20) << a1 << "," << n - a1;
    }
  }
}

TEST(AnnulusFixedNeck, Examples) {
  EXPECT_EQ(to_plain(annulus_volume_fixed_neck(1, 1)), "1/4 * d / (cosh(d/2)^2)");
  EXPECT_EQ(to_plain(annulus_volume_fixed_neck(2, 2)), "1/4 * d^3 / (sinh(d/2)^2)");
  HyperbolicRational h12 = annulus_volume_fixed_neck(1, 2);
  Assignments one{{"d", PrecisionValue::from_rational(1, 128)}};
  // d^2 / (2 sinh d) at d = 1
  Real expected = Real(1, 128) / (2L * sinh(Real(1, 128)));
  EXPECT_LT(rel_diff(h12.evaluate(one, 128).value, expected).to_double(), 1e-30);
  // value at d = 0 uses the analytic limit
  Assignments zero{{"d", PrecisionValue::from_rational(0, 128)}};
  EXPECT_TRUE(annulus_volume_fixed_neck(2, 2).evaluate(zero, 128).value.is_zero());
}

TEST(SurfaceSpecTest, ValidationAndDimension) {
  EXPECT_THROW((SurfaceSpec{0, 0, {5}}).validate(), DomainError);
  EXPECT_THROW((SurfaceSpec{0, 1, {5}}).validate(), DomainError);
  EXPECT_THROW((SurfaceSpec{0, 0, {1, 2}}).validate(), DomainError);
  EXPECT_THROW((SurfaceSpec{0, 2, {0}}).validate(), DomainError);
  EXPECT_NO_THROW((SurfaceSpec{0, 2, {1}}).validate());
  EXPECT_NO_THROW((SurfaceSpec{1, 0, {3}}).validate());
  EXPECT_EQ((SurfaceSpec{0, 2, {1}}).dimension(), 2);
  EXPECT_EQ((SurfaceSpec{1, 1, {2, 3}}).dimension(), 6 - 6 + 2 + 6 + 5);
}

TEST(SurfaceFixed, Examples) {
  SurfaceSpec s1{0, 2, {1}};
  HyperbolicRational h1 = surface_volume_fixed(s1, WpPolynomial::v03());
  EXPECT_EQ(to_plain(h1), "1/2 * b3 / (cosh(b3/2))");
  SurfaceSpec s2{0, 2, {2}};
  HyperbolicRational h2 = surface_volume_fixed(s2, WpPolynomial::v03({"b1", "b2", "d"}));
  EXPECT_EQ(to_plain(h2), "1/2 * d^2 / (sinh(d/2))");
  EXPECT_THROW(surface_volume_fixed(SurfaceSpec{0, 1, {1, 1}}, WpPolynomial::v03({"b1", "b2"})), SchemaError);
}

TEST(SurfaceFree, OneNeckExamplesAndQuadrature) {
  const Bits bits = 128;
  SymbolicValue v1 = surface_volume_free(SurfaceSpec{0, 2, {1}}, WpPolynomial::v03());
  EXPECT_EQ(v1, sym_beta(2) * Rational(4));
  SymbolicValue v2 = surface_volume_free(SurfaceSpec{0, 2, {2}}, WpPolynomial::v03());
  EXPECT_EQ(v2, sym_zeta(3) * Rational(14));
  auto one = [](const Real& l) { return Real(1, l.precision()); };
  for (auto [a, v] : {std::pair{1, v1}, std::pair{2, v2}}) {
    PrecisionValue exact = eval_symbolic(v, bits);
    PrecisionValue num = neck_integral_numeric(a, one, 0, Real(1, bits), bits, Real(1e-32, 128));
    EXPECT_LT(rel_diff(num.value, exact.value).to_double(), 1e-30);
  }
}

TEST(SurfaceFree, TwoNecksFactorizeAndAreOrderIndependent) {
  SurfaceSpec spec{0, 1, {2, 3}};
  WpPolynomial wp = WpPolynomial::v03({"b1", "d1", "d2"});
  SymbolicValue asc = surface_volume_free(spec, wp);
  SymbolicValue desc = surface_volume_free(spec, wp, std::vector<std::size_t>{1, 0});
  EXPECT_EQ(asc, desc);
  SymbolicValue i2 = surface_volume_free(SurfaceSpec{0, 2, {2}}, WpPolynomial::v03());
  SymbolicValue i3 = surface_volume_free(SurfaceSpec{0, 2, {3}}, WpPolynomial::v03());
  EXPECT_EQ(asc, i2 * i3);
  EXPECT_EQ(asc.homogeneous_degree(), spec.dimension());
}

TEST(SurfaceFree, NonTrivialWpAgainstQuadrature) {
  // V_{1,1}(b) = (b^2 + 4 pi^2)/48 with the single boundary made into a 3-crown neck
  Json doc = Json::parse(R"({"genus":1,"vars":["d"],"terms":[{"pi2":0,"pows":[2],"coeff":"1/48"},{"pi2":1,"pows":[0],"coeff":"1/12"}]})");
  WpPolynomial wp = load_wp_polynomial(doc);
  SurfaceSpec spec{1, 0, {3}};
  SymbolicValue v = surface_volume_free(spec, wp);
  EXPECT_EQ(v.homogeneous_degree(), spec.dimension());
  const Bits bits = 128;
  Real pi2 = pow(eval_constant(Constant::pi(), bits).value, 2);
  auto weight = [&](const Real& l) { return (l * l + 4L * pi2) / 48L; };
  PrecisionValue num = neck_integral_numeric(3, weight, 2, Real(1, bits), bits, Real(1e-30, 128));
  EXPECT_LT(rel_diff(num.value, eval_symbolic(v, bits).value).to_double(), 1e-25);
}

TEST(SurfaceFree, RandomizedHomogeneityAndDegreeBound) {
  std::mt19937_64 rng(2024);
  struct Shape { int g, m; std::vector<int> crowns; };
  std::vector<Shape> shapes = {{0, 2, {1}}, {0, 2, {4}}, {0, 1, {2, 3}}, {0, 3, {2}}, {1, 0, {5}}, {1, 1, {1, 2}}, {2, 0, {2}}, {0, 2, {1, 1}}};
  for (int trial = 0; trial < 40; ++trial) {
    const Shape& sh = shapes[static_cast<std::size_t>(trial) % shapes.size()];
    SurfaceSpec spec{sh.g, sh.m, sh.crowns};
    WpPolynomial wp = random_wp_polynomial(sh.g, static_cast<std::size_t>(spec.boundary_count()), rng);
    SymbolicValue v = surface_volume_free(spec, wp);
    EXPECT_EQ(v.homogeneous_degree(), spec.dimension());
    for (int i = 0; i < sh.m; ++i) EXPECT_LE(v.degree_in(wp.vars[static_cast<std::size_t>(i)]), 6 * sh.g - 6 + 2 * spec.boundary_count());
    for (std::size_t k = static_cast<std::size_t>(sh.m); k < wp.vars.size(); ++k) EXPECT_EQ(v.degree_in(wp.vars[k]), 0);
  }
}

TEST(WpLoader, ValidDocument) {
  Json doc = Json::parse(R"({"genus":0,"vars":["b1","b2","b3"],"terms":[{"pi2":0,"pows":[0,0,0],"coeff":"1"}]})");
  WpPolynomial wp = load_wp_polynomial(doc);
  EXPECT_EQ(wp.to_symbolic(), SymbolicValue(Rational(1)));
}

TEST(WpLoader, Errors) {
  auto kind_of = [](const char* text) {
    try {
      load_wp_polynomial(Json::parse(text));
    } catch (const SchemaError& e) {
      return std::pair{e.kind(), e.pointer()};
    }
    return std::pair{SchemaError::Kind::Schema, std::string("none")};
  };
  auto odd = kind_of(R"({"genus":0,"vars":["b1","b2","b3"],"terms":[{"pi2":0,"pows":[1,0,0],"coeff":"1"}]})");
  EXPECT_EQ(odd.first, SchemaError::Kind::OddPower);
  EXPECT_EQ(odd.second, "/terms/0/pows/0");
  auto inhom = kind_of(R"({"genus":0,"vars":["b1","b2","b3","b4"],"terms":[{"pi2":1,"pows":[0,0,0,0],"coeff":"1"},{"pi2":0,"pows":[4,0,0,0],"coeff":"1"}]})");
  EXPECT_EQ(inhom.first, SchemaError::Kind::NotHomogeneous);
  EXPECT_EQ(inhom.second, "/terms/1");
  auto neg = kind_of(R"({"genus":0,"vars":["b1","b2","b3"],"terms":[{"pi2":0,"pows":[0,0,0],"coeff":"-1"}]})");
  EXPECT_EQ(neg.first, SchemaError::Kind::NegativeCoefficient);
  auto missing = kind_of(R"({"genus":0,"terms":[]})");
  EXPECT_EQ(missing.second, "/vars");
  auto count = kind_of(R"({"genus":0,"vars":["b1","b2","b3"],"terms":[{"pi2":0,"pows":[0,0],"coeff":"1"}]})");
  EXPECT_EQ(count.first, SchemaError::Kind::VariableCount);
}
