#include <gtest/gtest.h>

#include <pspin/slopes.hpp>

#include "support/generators.hpp"

using namespace pspin;

namespace {

Refinement R(const char* s) { return Refinement::parse(s); }

const PureWeight kLambda{12, 1, -1, -12};

std::map<int, Rational> triple(int a, int b, int c) { return {{1, Rational(a)}, {2, Rational(b)}, {3, Rational(c)}}; }

ValuationProfile random_pure_profile(std::mt19937_64& rng, const PureWeight& lam) {
  const int n = lam.rank();
  ValuationProfile prof{std::vector<Rational>(2 * static_cast<std::size_t>(n)), Rational(gen::uniform(rng, -6, 6), 2),
                        lam.sw()};
  for (int i = 0; i < n; ++i) {
    prof.t[i] = Rational(gen::uniform(rng, -20, 20), 2);
    prof.t[2 * n - 1 - i] = prof.eta_val - prof.t[i];
  }
  return prof;
}

void expect_certificate_valid(const ProfileSolution& sol) {
  ASSERT_FALSE(sol.consistent);
  ASSERT_EQ(sol.certificate.size(), sol.relations.size());
  for (std::size_t c = 0; c < sol.unknowns.size(); ++c) {
    Rational col = 0;
    for (std::size_t j = 0; j < sol.relations.size(); ++j) col += Rational(sol.certificate[j]) * sol.relations[j].coeffs[c];
    EXPECT_EQ(col, 0) << sol.unknowns[c];
  }
  Rational value = 0;
  for (std::size_t j = 0; j < sol.relations.size(); ++j) value += Rational(sol.certificate[j]) * sol.relations[j].rhs;
  EXPECT_NE(value, 0);
  EXPECT_EQ(value, sol.certificate_value);
}

}  // namespace

TEST(Slope, Examples) {
  const ValuationProfile zero{std::vector<Rational>(4, Rational(0)), Rational(0), 0};
  EXPECT_EQ(slope(R("1234"), 1, PureWeight::zero(2), zero), Rational(-3, 2));
  auto rng = gen::make_rng(61);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const auto lam = gen::random_pure_weight(rng, n, true);
      const auto prof = random_pure_profile(rng, lam);
      const Refinement r(gen::random_perm(rng, 2 * n));
      EXPECT_EQ(slope(r, 2 * n, lam, prof), Rational(n * lam.sw()) + n * prof.eta_val);
    }
}

TEST(SolveProfile, SingleSlope) {
  const auto sol = solve_profile({{1, Rational(-3, 2)}}, PureWeight::zero(2), Perm::identity(4));
  ASSERT_TRUE(sol.consistent);
  EXPECT_EQ(sol.profile->t[0], 0);
  EXPECT_FALSE(sol.determined());
}

TEST(SolveProfile, GL4ExampleSeparately) {
  const auto a = solve_profile(triple(11, 0, 11), kLambda, Perm::parse("1234"));
  ASSERT_TRUE(a.determined());
  EXPECT_EQ(a.profile->t, (std::vector<Rational>{Rational(1, 2), Rational(-23, 2), Rational(23, 2), Rational(-1, 2)}));
  EXPECT_EQ(a.profile->eta_val, 0);

  const auto b = solve_profile(triple(11, 0, 1), kLambda, Perm::parse("2134"));
  ASSERT_TRUE(b.determined());
  EXPECT_EQ(b.profile->t, (std::vector<Rational>{Rational(-23, 2), Rational(1, 2), Rational(3, 2), Rational(27, 2)}));
  EXPECT_EQ(b.profile->eta_val, 2);
}

TEST(SolveProfile, GL4ExampleJointlyInconsistent) {
  const auto sol = solve_profile({{R("1234"), triple(11, 0, 11)}, {R("2134"), triple(11, 0, 1)}}, kLambda);
  expect_certificate_valid(sol);
  EXPECT_FALSE(sol.violated.empty());
}

TEST(SolveProfile, RoundTripRecoversProfile) {
  auto rng = gen::make_rng(62);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      const auto lam = gen::random_pure_weight(rng, n, true);
      const auto prof = random_pure_profile(rng, lam);
      const Refinement r(gen::random_perm(rng, 2 * n));
      std::map<int, Rational> slopes;
      for (int k = 1; k <= 2 * n; ++k) slopes.emplace(k, slope(r, k, lam, prof));
      const auto sol = solve_profile({{r, slopes}}, lam);
      ASSERT_TRUE(sol.determined());
      EXPECT_EQ(*sol.profile, prof);
    }
}

TEST(SolveProfile, PartialSlopesReproduced) {
  auto rng = gen::make_rng(63);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      const auto lam = gen::random_pure_weight(rng, n, true);
      const auto prof = random_pure_profile(rng, lam);
      const Refinement r(gen::random_perm(rng, 2 * n));
      std::map<int, Rational> slopes;
      for (int k = 1; k <= 2 * n; ++k)
        if (gen::uniform(rng, 0, 1)) slopes.emplace(k, slope(r, k, lam, prof));
      const auto sol = solve_profile({{r, slopes}}, lam);
      ASSERT_TRUE(sol.consistent);
      EXPECT_TRUE(sol.profile->pure());
      for (const auto& [k, v] : slopes) EXPECT_EQ(slope(r, k, lam, *sol.profile), v);
    }
}

TEST(SolveProfile, RandomInconsistenciesCertified) {
  auto rng = gen::make_rng(64);
  for (int trial = 0; trial < 50; ++trial) {
    const auto lam = gen::random_pure_weight(rng, 2, true);
    const auto prof = random_pure_profile(rng, lam);
    const Refinement r(gen::random_perm(rng, 4));
    std::map<int, Rational> slopes;
    for (int k = 1; k <= 4; ++k) slopes.emplace(k, slope(r, k, lam, prof));
    slopes[4] += Rational(1, 2);  // breaks the telescoped purity sum
    expect_certificate_valid(solve_profile({{r, slopes}}, lam));
  }
}

TEST(NonCritical, GL4Example) {
  const auto b = SpinParabolic::borel(2);
  const auto a = non_critical_slope(triple(11, 0, 11), kLambda, b);
  ASSERT_EQ(a.rows.size(), 3u);
  EXPECT_EQ(a.rows[0].bound, 12);
  EXPECT_EQ(a.rows[1].bound, 3);
  EXPECT_EQ(a.rows[2].bound, 12);
  EXPECT_TRUE(a.non_critical);
  EXPECT_TRUE(non_critical_slope(triple(11, 0, 1), kLambda, b).non_critical);
  EXPECT_FALSE(non_critical_slope(triple(12, 0, 1), kLambda, b).non_critical);
  EXPECT_FALSE(non_critical_slope(triple(11, 3, 1), kLambda, b).non_critical);
}

TEST(NonCritical, ParahoricIndicesAndMissingData) {
  const auto q = SpinParabolic::from_composition({2, 2});
  const auto a = non_critical_slope({{2, Rational(2)}}, kLambda, q);
  ASSERT_EQ(a.rows.size(), 1u);
  EXPECT_EQ(a.rows[0].r, 2);
  EXPECT_TRUE(a.non_critical);
  EXPECT_TRUE(non_critical_slope({}, kLambda, SpinParabolic::whole(2)).non_critical);
  EXPECT_THROW(non_critical_slope({{1, Rational(0)}}, kLambda, SpinParabolic::borel(2)), MissingData);
}

TEST(NonCritical, MirrorBoundsAgreeUnderPurity) {
  auto rng = gen::make_rng(65);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const auto lam = gen::random_pure_weight(rng, n, true);
      for (int r = 1; r < n; ++r) EXPECT_EQ(lam.at(r) - lam.at(r + 1), lam.at(2 * n - r) - lam.at(2 * n - r + 1));
    }
}

TEST(NonCritical, ProfileAndParahoricForms) {
  const auto prof = *solve_profile(triple(11, 0, 11), kLambda, Perm::parse("1234")).profile;
  const auto q = SpinParabolic::from_composition({2, 2});
  const auto direct = non_critical_slope(R("1234"), kLambda, prof, q);
  const auto via_coset = non_critical_slope(parahoric_restrict(R("2143"), q), kLambda, prof, q);
  ASSERT_EQ(direct.rows.size(), 1u);
  EXPECT_EQ(direct.rows[0].slope, 0);
  EXPECT_EQ(via_coset.rows[0].slope, direct.rows[0].slope);
}
