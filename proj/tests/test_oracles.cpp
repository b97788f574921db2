#include <crownvol/evaluate.hpp>
#include <crownvol/oracles.hpp>

#include <gtest/gtest.h>

using namespace crownvol;

namespace {
constexpr Bits kBits = 128;
double rel(const Real& a, const Real& b) { return (abs(a - b) / abs(b)).to_double(); }
}  // namespace

TEST(ConvolutionOracle, MatchesClosedForm) {
  for (int n = 1; n <= 6; ++n) {
    CrownVolume cv = crown_volume_fixed_neck(n);
    for (const char* ds : {"0", "0.1", "1", "5"}) {
      Real d(ds, kBits);
      Real closed = crown_volume_value(cv, d);
      PrecisionValue num = crown_convolution_check(n, d, kBits, closed * Real(1e-14, 64));
      EXPECT_LT(rel(num.value, closed), 1e-10) << "n=" << n << " d=" << ds;
    }
  }
}

TEST(MarginalOracle, HalfPiPower) {
  for (int n = 1; n <= 6; ++n) {
    PrecisionValue total = eval_symbolic(crown_total_volume(n), kBits);
    PrecisionValue num = crown_marginal_numeric(n, kBits, Real(1e-12, 64));
    EXPECT_LT(abs(num.value - total.value).to_double(), 1e-8) << n;
  }
}

TEST(ChekhovOracle, SimplexIntegralMatchesCrownVolume) {
  for (int n : {2, 3}) {
    CrownVolume cv = crown_volume_fixed_neck(n);
    for (int P : {1, 5}) {
      Real p(P, kBits);
      PrecisionValue num = chekhov_corrected_crown_integral(n, p, kBits, Real(1e-9, 64));
      Real closed = crown_volume_value(cv, p);
      EXPECT_LT(abs(num.value - closed).to_double(), 1e-6) << "n=" << n << " P=" << P;
      EXPECT_LT(num.abs_error.to_double(), 1e-6);
    }
  }
}

TEST(AppendixOracle, LambdaIntegral) {
  for (const char* ds : {"0.1", "1", "10"}) {
    Real d(ds, kBits);
    Real closed = d / (2L * sinh(d / 2L));
    PrecisionValue num = two_crown_lambda_integral(d, kBits, Real(1e-25, 64));
    EXPECT_LT(rel(num.value, closed), 1e-10) << ds;
  }
  EXPECT_THROW(two_crown_lambda_integral(Real(0, kBits), kBits, Real(1e-10, 64)), DomainError);
}

TEST(CrownEnvelope, BoundsTheFunction) {
  for (int n = 1; n <= 8; ++n) {
    CrownVolume cv = crown_volume_fixed_neck(n);
    ExpTail e = crown_envelope(n, kBits);
    for (int l = 1; l <= 60; l += 3) {
      Real x(l, kBits);
      Real env = e.c * pow(x, static_cast<int>(e.p)) * exp(-e.alpha * x);
      EXPECT_LE(crown_volume_value(cv, x).to_double(), env.to_double()) << n << " " << l;
    }
  }
}
