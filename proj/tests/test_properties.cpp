#include "support/properties.hpp"

#include <gtest/gtest.h>

namespace {

TEST(Properties, MultiplicationAssociativity) {
  const auto o = props::associativity_grid();
  EXPECT_TRUE(o.ok()) << o.summary();
  EXPECT_GT(o.cases, 100U);
}

TEST(Properties, RestrictionCompatibility) {
  const auto o = props::restriction_grid();
  EXPECT_TRUE(o.ok()) << o.summary();
}

TEST(Properties, RankNullityOnBuilders) {
  for (const auto& f : {p3x::spaces::QuarticForm::fermat(), p3x::spaces::QuarticForm::random(9)}) {
    const auto o = props::rank_nullity_builders(f);
    EXPECT_TRUE(o.ok()) << f.name() << ": " << o.summary();
  }
}

TEST(Properties, ModularRankBoundedByRationalRank) {
  const auto o = props::modular_vs_rational_fuzz(400, 21);
  EXPECT_TRUE(o.ok()) << o.summary();
}

TEST(Properties, CertifySoundOnPlantedRanks) {
  const auto o = props::certify_soundness_fuzz(200, 22);
  EXPECT_TRUE(o.ok()) << o.summary();
}

TEST(Properties, Determinism) {
  p3x::verify::Config c;
  const auto o = props::determinism(c);
  EXPECT_TRUE(o.ok()) << o.summary();
}

}  // namespace
