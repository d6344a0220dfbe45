#include <cmath>
#include <initializer_list>

#include <gtest/gtest.h>

#include "ellip/elliptic.hpp"
#include "ellip/errors.hpp"
#include "ellip/grid.hpp"
#include "ellip/lemmas.hpp"
#include "oracles.hpp"

using namespace ellip;
using oracle::Big;

namespace {

struct BigTerms {
  Big m, k, e, rc2, pi;
};

BigTerms big_terms(double r) {
  const auto ke = oracle::big_ke(r);
  const Big rr = r;
  return {rr * rr, ke.k, ke.e, 1 - rr * rr, oracle::big_pi()};
}

// Each lemma function written exactly as stated, evaluated at 50 digits.
double big_lemma22(int idx, double r) {
  const auto t = big_terms(r);
  const Big d = t.e - t.rc2 * t.k;
  const Big kme = t.k - t.e;
  switch (idx) {
    case 1: return static_cast<double>(d / t.m);
    case 2: return static_cast<double>(t.e / sqrt(sqrt(t.rc2)));
    case 3: return static_cast<double>(kme / (t.m * t.k));
    case 4: return static_cast<double>(d / (t.m * t.k));
    case 5: return static_cast<double>(pow(t.rc2, Big(3) / 8) * kme / t.m);
    case 6: return static_cast<double>(d * d / (t.e * t.e - t.rc2 * t.k * t.k));
    default: {
      const Big x = 2 * t.e - t.rc2 * t.k;
      return static_cast<double>((4 * x * x - t.pi * t.pi) / t.m);
    }
  }
}

double big_g(double r) {
  const auto t = big_terms(r);
  const Big d = t.e - t.rc2 * t.k;
  const Big kme = t.k - t.e;
  return static_cast<double>((kme * d + t.e * (kme - d)) / (d * d));
}

double big_h(double r, double p) {
  const auto t = big_terms(r);
  const Big d = t.e - t.rc2 * t.k;
  return static_cast<double>((2 * Big(p) - 1) * t.m + 2 * Big(p) * t.m * t.e / d);
}

double big_f26(double r, double u, double p) {
  const auto t = big_terms(r);
  const Big x = 2 * t.e - t.rc2 * t.k;
  return static_cast<double>(Big(p) * log(1 + Big(u) * t.m) - log(2 / t.pi * x));
}

double big_F(double r) {
  const auto t = big_terms(r);
  const Big x = 2 * t.e - t.rc2 * t.k;
  return static_cast<double>(x * x * (1 + (t.pi * t.pi - 4 * x * x) / (t.pi * t.pi * t.m)));
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

const std::initializer_list<double> kRadii = {1e-6, 1e-4, 1e-3, 0.05, 0.3,
                                              0.6999, 0.7001, 0.9, 0.99, 0.999999};

}  // namespace

TEST(MonotoneQuotients, MatchesFiftyDigitOracle) {
  for (int idx = 1; idx <= 7; ++idx) {
    for (double r : kRadii) {
      const double want = big_lemma22(idx, r);
      EXPECT_LE(rel(lemma22_function(idx, Modulus(r)), want), 1e-12)
          << "idx=" << idx << " r=" << r;
    }
  }
}

TEST(MonotoneQuotients, ShiftedFormsMatchOracle) {
  for (double r : kRadii) {
    const double s2 = big_lemma22(2, r) - kHalfPi;
    const double s5 = big_lemma22(5, r) - kPi / 4.0;
    if (r >= 0.05) {
      EXPECT_LE(rel(lemma22_shifted(2, Modulus(r)), s2), 1e-9) << r;
      EXPECT_LE(rel(lemma22_shifted(5, Modulus(r)), s5), 1e-9) << r;
    }
  }
  // Below the resolution of f itself, compare with the leading m^2 term of
  // E (1-m)^{-1/4} - pi/2 = (pi/2)(3/64) m^2 + O(m^3) and
  // (1-m)^{3/8} (K-E)/m - pi/4 = -(pi/4)(3/128) m^2 + O(m^3).
  const double m = 1e-8;
  const Modulus mod(1e-4);
  EXPECT_NEAR(lemma22_shifted(2, mod) / (m * m), kHalfPi * 3.0 / 64.0, 1e-6);
  EXPECT_NEAR(lemma22_shifted(5, mod) / (m * m), -kPi / 4.0 * 3.0 / 128.0, 1e-6);
  EXPECT_THROW((void)lemma22_shifted(1, mod), ConfigurationError);
}

TEST(MonotoneQuotients, StatedLimits) {
  const Modulus zero(1e-7);
  const Modulus one = Modulus::from_complement(1e-200);
  EXPECT_NEAR(lemma22_function(1, zero), kPi / 4.0, 1e-12);
  EXPECT_NEAR(lemma22_function(1, one), 1.0, 1e-12);
  EXPECT_NEAR(lemma22_function(6, zero), 2.0, 1e-12);
  EXPECT_NEAR(lemma22_function(6, one), 1.0, 1e-6);
  EXPECT_NEAR(lemma22_function(7, zero), kPi * kPi / 2.0, 1e-12);
  EXPECT_NEAR(lemma22_function(7, one), 16.0 - kPi * kPi, 1e-12);
  EXPECT_THROW((void)lemma22_function(0, zero), ConfigurationError);
  EXPECT_THROW((void)lemma22_function(8, zero), ConfigurationError);
  EXPECT_THROW((void)lemma22_function(1, Modulus(0.0)), DomainError);
}

TEST(LemmaTerms, SeriesAndDirectAgreeInOverlap) {
  for (double r : uniform_grid(0.3, 0.7, 41)) {
    const auto s = lemma_terms_series(Modulus(r));
    const auto d = lemma_terms_direct(Modulus(r));
    EXPECT_LE(rel(s.d_over_m, d.d_over_m), 1e-13) << r;
    EXPECT_LE(rel(s.kme_over_m, d.kme_over_m), 1e-13) << r;
    EXPECT_LE(rel(s.delta_over_m2, d.delta_over_m2), 1e-11) << r;
    EXPECT_LE(rel(s.excess_over_m, d.excess_over_m), 1e-12) << r;
    EXPECT_LE(rel(s.ediff_over_m2, d.ediff_over_m2), 1e-11) << r;
  }
}

TEST(GrowthRatio, MatchesOracle) {
  for (double r : kRadii) EXPECT_LE(rel(lemma23_g(Modulus(r)), big_g(r)), 1e-12) << r;
}

TEST(GrowthRatio, Examples) {
  EXPECT_NEAR(lemma23_g(Modulus(1e-3)), 1.5, 1e-5);
  const double g4 = lemma23_g(Modulus(0.4));
  const double g5 = lemma23_g(Modulus(0.5));
  EXPECT_GT(g4, 1.5);
  EXPECT_GT(g5, g4);
  // Grows like log(1/r'), so it is far below 1e3 here.
  EXPECT_NEAR(lemma23_g(Modulus(1.0 - 1e-6)), 12.895156566858958545, 1e-9);
  EXPECT_GT(lemma23_g(Modulus::from_complement(1e-300)), 1000.0);
}

TEST(ParametricH, MatchesOracleAndLimits) {
  for (double p : {0.5, 1.0, 2.0, 2.5}) {
    for (double r : kRadii) {
      EXPECT_LE(rel(lemma24_h(Modulus(r), p), big_h(r, p)), 1e-12) << r << " " << p;
    }
  }
  EXPECT_NEAR(lemma24_h(Modulus(1e-7), 1.0), 4.0, 1e-12);
  EXPECT_NEAR(lemma24_h(Modulus::from_complement(1e-300), 1.0), 3.0, 1e-2);
  EXPECT_NEAR(lemma24_h(Modulus(1e-7), 0.5), 2.0, 1e-12);
  EXPECT_THROW((void)lemma24_h(Modulus(0.5), 0.4), DomainError);
}

TEST(PowerMargins, Margins) {
  for (double p : uniform_grid(0.5, 2.0, 100)) {
    const auto m = lemma25_check(p);
    EXPECT_GT(m.lower, 0.0) << p;
    EXPECT_GT(m.upper, 0.0) << p;
  }
  const auto one = lemma25_check(1.0);
  EXPECT_NEAR(one.lower, 4.0 / kPi - 1.25, 1e-15);
  EXPECT_NEAR(one.upper, 1.0 / 3.0 - (4.0 / kPi - 1.0), 1e-15);
  EXPECT_THROW((void)lemma25_check(0.4), DomainError);
  EXPECT_THROW((void)lemma25_check(2.1), DomainError);
}

TEST(PowerMargins, EndpointConstants) {
  EXPECT_NEAR(lemma25_f1(2.0), 81.0 / 64.0, 1e-15);
  EXPECT_NEAR(lemma25_f2(2.0), 64.0 / 49.0, 1e-15);
  EXPECT_EQ(std::round(lemma25_f1(2.0) * 1e6) / 1e6, 1.265625);
  EXPECT_EQ(std::round(lemma25_f2(2.0) * 1e6) / 1e6, 1.306122);
  EXPECT_LT(lemma25_f1(2.0), 4.0 / kPi);
  EXPECT_GT(lemma25_f2(2.0), 4.0 / kPi);
}

TEST(LogDifference, MatchesOracle) {
  for (double r : kRadii) {
    for (double u : {0.0, 0.26, 1.0}) {
      EXPECT_NEAR(lemma26_f(Modulus(r), u, 1.0), big_f26(r, u, 1.0),
                  1e-15 + 1e-12 * std::abs(big_f26(r, u, 1.0)))
          << r << " " << u;
    }
  }
}

TEST(LogDifference, Limits) {
  EXPECT_NEAR(lemma26_f(Modulus(1e-8), 0.7, 1.3), 0.0, 1e-15);
  const auto one = Modulus::from_complement(1e-200);
  EXPECT_NEAR(lemma26_f(one, 0.0, 1.0), std::log(kPi / 4.0), 1e-12);
  for (double p : {0.5, 1.0, 2.0}) {
    const double u = std::pow(4.0 / kPi, 1.0 / p) - 1.0;
    EXPECT_NEAR(lemma26_f(one, std::min(u, 1.0), p), 0.0, 1e-12) << p;
  }
  EXPECT_THROW((void)lemma26_f(Modulus(0.5), 1.5, 1.0), DomainError);
  EXPECT_THROW((void)lemma26_f(Modulus(0.5), 0.5, 3.0), DomainError);
}

TEST(SquaredCombination, MatchesOracleAndRange) {
  for (double r : kRadii) EXPECT_LE(rel(lemma27_F(Modulus(r)), big_F(r)), 1e-12) << r;
  const double lo = kPi * kPi / 8.0;
  const double hi = 8.0 * (kPi * kPi - 8.0) / (kPi * kPi);
  EXPECT_NEAR(lemma27_F(Modulus(1e-7)), lo, 1e-12);
  EXPECT_NEAR(lemma27_F(Modulus::from_complement(1e-200)), hi, 1e-12);
  const double mid = lemma27_F(Modulus(0.5));
  EXPECT_GT(mid, lo);
  EXPECT_LT(mid, hi);
}
