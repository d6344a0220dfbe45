#include <gtest/gtest.h>

#include "ellip/constants.hpp"
#include "ellip/errors.hpp"
#include "ellip/family_spec.hpp"

using namespace ellip;

TEST(FamilySpec, FixedNames) {
  EXPECT_EQ(parse_family("vuorinen"), BoundSpec::vuorinen_lower());
  EXPECT_EQ(parse_family("barnard"), BoundSpec::barnard_upper());
  EXPECT_EQ(parse_family("alzer-qiu"), BoundSpec::alzer_qiu_upper());
  EXPECT_EQ(parse_family("cor31-lower"), BoundSpec::cor31_lower());
  EXPECT_EQ(parse_family("cor31-upper"), BoundSpec::cor31_upper());
}

TEST(FamilySpec, Parameters) {
  EXPECT_EQ(parse_family("thm12:t=0.85,p=2"), BoundSpec::thm12(0.85, 2.0));
  EXPECT_EQ(parse_family("thm12:p=2,t=0.85"), BoundSpec::thm12(0.85, 2.0));
  EXPECT_EQ(parse_family("thm11:q=0.3"), BoundSpec::thm11(0.3));
  EXPECT_EQ(parse_family("thm11:q=0.13").side(), Side::Invalid);
}

TEST(FamilySpec, NamedConstantsAndDefaults) {
  const auto& c = sharp_constants();
  EXPECT_EQ(parse_family("thm11-lower:q=beta_star"), BoundSpec::thm11(c.beta_star));
  EXPECT_EQ(parse_family("thm11-lower"), BoundSpec::thm11(c.beta_star));
  EXPECT_EQ(parse_family("thm11-upper"), BoundSpec::thm11(c.alpha_star));
  EXPECT_EQ(parse_family("thm12:t=lambda,p=2"), BoundSpec::thm12(c.lambda_star, 2.0));
  EXPECT_EQ(parse_family("thm12:t=mu,p=0.5"), BoundSpec::thm12(c.mu_star, 0.5));
  EXPECT_EQ(parse_family("thm12-lower:p=1"), BoundSpec::thm12(0.75, 1.0));
  EXPECT_EQ(parse_family("thm12-upper:p=2"),
            BoundSpec::thm12(thm12_upper_threshold(2.0), 2.0));
}

TEST(FamilySpec, AllExpandsToSharpFamilies) {
  EXPECT_EQ(parse_families("all"), sharp_families());
  EXPECT_THROW((void)parse_family("all"), ConfigurationError);
  EXPECT_THROW((void)parse_families("all:q=1"), ConfigurationError);
}

TEST(FamilySpec, LabelsRoundTrip) {
  for (const auto& s : sharp_families()) EXPECT_EQ(parse_family(s.label()), s) << s.label();
  const auto odd = BoundSpec::thm12(0.6000000000000001, 1.2345678901234567);
  EXPECT_EQ(parse_family(odd.label()), odd);
}

TEST(FamilySpec, Malformed) {
  EXPECT_THROW((void)parse_family(""), ConfigurationError);
  EXPECT_THROW((void)parse_family("nope"), ConfigurationError);
  EXPECT_THROW((void)parse_family("thm11"), ConfigurationError);
  EXPECT_THROW((void)parse_family("thm11:q"), ConfigurationError);
  EXPECT_THROW((void)parse_family("thm11:q=abc"), ConfigurationError);
  EXPECT_THROW((void)parse_family("thm11:q=0.3,q=0.3"), ConfigurationError);
  EXPECT_THROW((void)parse_family("thm11:q=0.3,"), ConfigurationError);
  EXPECT_THROW((void)parse_family("thm11:q=0.3,t=1"), ConfigurationError);
  EXPECT_THROW((void)parse_family("vuorinen:q=0.3"), ConfigurationError);
}

TEST(FamilySpec, HypothesisViolations) {
  EXPECT_THROW((void)parse_family("thm11:q=0.7"), DomainError);
  EXPECT_THROW((void)parse_family("thm12:t=0.4,p=1"), DomainError);
  EXPECT_THROW((void)parse_family("thm12:t=0.7,p=3"), DomainError);
}

TEST(FamilySpec, SidedNamesCheckTheirSide) {
  EXPECT_THROW((void)parse_family("thm11-lower:q=0.3"), ValidationError);
  EXPECT_THROW((void)parse_family("thm11-upper:q=0.05"), ValidationError);
}
