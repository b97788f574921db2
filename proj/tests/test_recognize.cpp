#include <crownvol/recognize.hpp>
#include <crownvol/reference_tables.hpp>

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

using namespace crownvol;

namespace {

// Rounds an exact value to `digits` significant digits with a matching error.
PrecisionValue numeric(const SymbolicValue& v, int digits) {
  Real x = eval_symbolic(v, digits_to_bits(digits) + 64).value;
  Real rounded(x, digits_to_bits(digits));
  return {rounded, abs(rounded) * pow(Real(10, 64), -static_cast<long>(digits))};
}

// Brute-force count of monomials of a degree over an exponent box.
std::size_t brute_force_count(int degree, const BasisFlags& f) {
  std::vector<std::pair<GradedMonomial, int>> gens{{GradedMonomial::pi(), 1}};
  if (f.include_log2) gens.emplace_back(GradedMonomial::log2(), 1);
  if (f.include_zeta)
    for (int j = 3; j <= degree; j += 2) gens.emplace_back(GradedMonomial::zeta(j), j);
  if (f.include_beta)
    for (int k = 2; k <= degree; k += 2) gens.emplace_back(GradedMonomial::beta(k), k);
  std::vector<int> e(gens.size(), 0);
  std::size_t count = 0;
  while (true) {
    int d = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) d += e[i] * gens[i].second;
    if (d == degree) {
      GradedMonomial m = GradedMonomial::one();
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (int r = 0; r < e[i]; ++r) m = m * gens[i].first;
      bool ok = m.log2_exp() <= (f.include_log2 ? f.max_log2_exp : 0);
      if (!f.mix_log2_zeta && m.log2_exp() > 0 && !m.zeta_exps().empty()) ok = false;
      if (ok) ++count;
    }
    std::size_t i = 0;
    while (i < e.size() && ++e[i] > degree) e[i++] = 0;
    if (i == e.size()) break;
  }
  return count;
}

}  // namespace

TEST(Basis, SmallDegrees) {
  EXPECT_EQ(enumerate_basis(0).monomials, std::vector<GradedMonomial>{GradedMonomial::one()});
  auto b3 = enumerate_basis(3).monomials;
  std::set<std::string> names;
  for (const auto& m : b3) names.insert(detail::plain_monomial(m));
  EXPECT_EQ(names, (std::set<std::string>{"pi^3", "pi^2 * log(2)", "zeta(3)"}));
  BasisFlags with_beta;
  with_beta.include_beta = true;
  auto b4 = enumerate_basis(4, with_beta).monomials;
  auto has = [&](const GradedMonomial& m) { return std::find(b4.begin(), b4.end(), m) != b4.end(); };
  EXPECT_TRUE(has(GradedMonomial::beta(2, 2)));
  EXPECT_TRUE(has(GradedMonomial::pi(2) * GradedMonomial::beta(2)));
  EXPECT_TRUE(has(GradedMonomial::pi() * GradedMonomial::zeta(3)));
  EXPECT_TRUE(has(GradedMonomial::pi(3) * GradedMonomial::log2()));
  EXPECT_TRUE(has(GradedMonomial::pi(4)));
  EXPECT_EQ(enumerate_basis(4, BasisFlags::pi_power()).monomials, std::vector<GradedMonomial>{GradedMonomial::pi(4)});
  EXPECT_THROW(enumerate_basis(-1), DomainError);
}

TEST(Basis, CardinalityMatchesBruteForceAndOrderIsCanonical) {
  BasisFlags wide = BasisFlags::all();
  wide.max_log2_exp = 3;
  for (const BasisFlags& f : {BasisFlags{}, BasisFlags::pi_power(), wide}) {
    for (int d = 0; d <= 8; ++d) {
      MonomialBasis b = enumerate_basis(d, f);
      EXPECT_EQ(b.monomials.size(), brute_force_count(d, f)) << d;
      for (const auto& m : b.monomials) EXPECT_EQ(m.degree(), d);
      EXPECT_TRUE(std::is_sorted(b.monomials.begin(), b.monomials.end(), CanonicalOrder{}));
      EXPECT_EQ(b.monomials, enumerate_basis(d, f).monomials);
    }
  }
}

TEST(Recognize, AperyMultiple) {
  RecognitionResult r = recognize_value(numeric(sym_zeta(3) * ratio(7, 4), 50), enumerate_basis(3));
  ASSERT_TRUE(r.found()) << r.note;
  EXPECT_EQ(r.value, sym_zeta(3) * ratio(7, 4));
  EXPECT_EQ(r.coefficient_height, 7);
  EXPECT_LT(r.residual.value.to_double(), 1e-45);
}

TEST(Recognize, SquareRootOfTwoIsNotFound) {
  Real s = sqrt(Real(2, 300));
  PrecisionValue x{Real(s, digits_to_bits(50)), Real(1e-50, 64)};
  RecognitionResult r = recognize_value(x, enumerate_basis(1));
  EXPECT_FALSE(r.found());
}

TEST(Recognize, RefusesWithTooFewDigits) {
  PrecisionValue x = numeric(sym_zeta(3), 15);
  EXPECT_THROW(recognize_value(x, enumerate_basis(3), 10000), InsufficientPrecision);
}

TEST(Recognize, RoundTrip200) {
  std::mt19937_64 rng(77);
  int recovered = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int degree = static_cast<int>(rng() % 7);
    MonomialBasis basis = enumerate_basis(degree);
    std::size_t terms = 1 + rng() % std::min<std::size_t>(3, basis.monomials.size());
    SymbolicValue v;
    std::vector<std::size_t> idx(basis.monomials.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t t = 0; t < terms; ++t) {
      long p = 1 + static_cast<long>(rng() % 100);
      if (rng() % 2) p = -p;
      long q = 1 + static_cast<long>(rng() % 100);
      v += SymbolicValue::term(basis.monomials[idx[t]], ratio(p, q));
    }
    RecognitionResult r = recognize_value(numeric(v, 60), basis, 100);
    EXPECT_TRUE(r.found()) << "trial " << trial << ": " << to_plain(v) << " (" << r.note << ")";
    if (r.found()) {
      EXPECT_EQ(r.value, v) << to_plain(v);
      if (r.value == v) ++recovered;
    }
  }
  EXPECT_EQ(recovered, 200);
}

TEST(Recognize, NoFalsePositivesOnRandomReals) {
  std::mt19937_64 rng(4242);
  MonomialBasis basis = enumerate_basis(3);
  int false_positives = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::string digits = "1.";
    for (int i = 0; i < 55; ++i) digits.push_back(static_cast<char>('0' + rng() % 10));
    PrecisionValue x{Real(digits, digits_to_bits(50)), Real(1e-50, 64)};
    if (recognize_value(x, basis, 10000).found()) ++false_positives;
  }
  EXPECT_LE(false_positives, 2);
}

TEST(Recognize, NgonQuadratureOutputs) {
  QuadratureSpec spec = QuadratureSpec::for_digits(22);
  MonomialBasis basis = enumerate_basis(4, BasisFlags::pi_power());
  RecognitionResult r7 = recognize_value(ngon_volume_quadrature(7, spec), basis);
  ASSERT_TRUE(r7.found()) << r7.note;
  EXPECT_EQ(r7.value, sym_pi(4) * ratio(3, 40));
  RecognitionResult r8 = recognize_value(ngon_volume_quadrature(8, spec), basis);
  ASSERT_TRUE(r8.found()) << r8.note;
  EXPECT_EQ(r8.value, sym_pi(4) * ratio(8, 45));
}

TEST(Recognize, AnnulusTableFromNumerics) {
  for (const auto& e : annulus_reference_table()) {
    if (e.a1 + e.a2 > 6) continue;
    auto deg = e.volume.homogeneous_degree();
    ASSERT_TRUE(deg.has_value());
    RecognitionResult r = recognize_value(numeric(e.volume, 60), enumerate_basis(*deg), 1000);
    ASSERT_TRUE(r.found()) << e.a1 << "," << e.a2 << " " << r.note;
    EXPECT_EQ(r.value, e.volume);
  }
}

TEST(AnnuliConjectures, ExamplesFromTheTable) {
  EXPECT_EQ(annuli_conjectured_leading_term(3), sym_pi(2) * sym_log2() * ratio(1, 2));
  EXPECT_EQ(annuli_conjectured_leading_term(1), sym_log2());
  EXPECT_EQ(annuli_conjectured_last_term(0, 2), sym_zeta(3) * ratio(7, 4));
  EXPECT_EQ(annuli_conjectured_last_term(0, 5), sym_zeta(5) * ratio(75, 16));
}

TEST(AnnuliConjectures, AllHoldUpToTwelve) {
  auto report = verify_annuli_conjectures(12);
  ASSERT_EQ(report.size(), 7u);
  for (const auto& c : report) {
    EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    EXPECT_FALSE(c.first_counterexample.has_value());
  }
  EXPECT_EQ(report[6].k_min, 12);
  EXPECT_THROW(verify_annuli_conjectures(1), DomainError);
}

TEST(AnnuliConjectures, BeyondTheTable) {
  // exact arithmetic keeps working past the published range
  auto report = verify_annuli_conjectures(16);
  for (const auto& c : report) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(NgonConjecture, ConsistencyReport) {
  auto report = verify_ngon_conjecture(3, 10, 4.0, QuadratureSpec::for_digits(10));
  ASSERT_EQ(report.size(), 8u);
  EXPECT_TRUE(report[0].exact);
  for (const auto& c : report) EXPECT_TRUE(c.consistent) << c.n << " digits " << c.agreement_digits;
  for (const auto& c : report)
    if (c.n >= 5 && c.n <= 8) {
      EXPECT_GE(c.agreement_digits, 9.0) << c.n;
    }
}
