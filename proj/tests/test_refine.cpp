#include <gtest/gtest.h>

#include <pspin/refine.hpp>

#include <set>

#include "support/generators.hpp"

using namespace pspin;

namespace {

Refinement R(const char* s) { return Refinement::parse(s); }

std::vector<std::string> names(const std::vector<Refinement>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs) out.push_back(r.to_string());
  return out;
}

}  // namespace

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma(R("123456")).values, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(gamma(R("216345"))(1), 1);
  EXPECT_EQ(gamma(R("2134")).values, (std::vector<int>{2, 1}));
}

TEST(Gamma, DefiningEquationAndInjectivity) {
  for (const auto& s : all_perms(4)) {
    const Refinement r(s);
    const auto g = gamma(r);
    std::set<int> seen(g.values.begin(), g.values.end());
    EXPECT_EQ(seen.size(), 2u);
    for (int i = 1; i <= 2; ++i) EXPECT_EQ(s(i) + s(5 - g(i)), 5);
  }
}

TEST(Gamma, InvariantUnderLeftWg0) {
  auto rng = gen::make_rng(41);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 200; ++trial) {
      const auto s = gen::random_perm(rng, 2 * n);
      const auto z = embed_wg0(gen::random_signed_perm(rng, n));
      EXPECT_EQ(gamma(Refinement(z * s)), gamma(Refinement(s)));
      EXPECT_EQ(spin_set(Refinement(z * s)), spin_set(Refinement(s)));
    }
}

TEST(RSpin, Examples) {
  EXPECT_TRUE(is_r_spin(R("216345"), 1));
  EXPECT_FALSE(is_r_spin(R("216345"), 2));
  EXPECT_FALSE(is_r_spin(R("216345"), 3));
  EXPECT_TRUE(is_r_spin(R("132456"), 1));
  EXPECT_FALSE(is_r_spin(R("132456"), 2));
  EXPECT_TRUE(is_r_spin(R("132456"), 3));
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(is_r_spin(R("123456"), k));
  EXPECT_THROW(is_r_spin(R("1234"), 3), std::invalid_argument);
}

TEST(RSpin, MatchesGammaPrefixAndAdjacency) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : all_perms(2 * n)) {
      const Refinement r(s);
      const auto g = gamma(r);
      for (int k = 1; k <= n; ++k) ASSERT_EQ(is_r_spin(r, k), g.preserves_prefix(k));
      if (n >= 2 && is_r_spin(r, n - 1)) {
        ASSERT_TRUE(is_r_spin(r, n));
      }
    }
}

TEST(PSpin, Examples) {
  const auto p141 = SpinParabolic::from_composition({1, 4, 1});
  for (auto m : {SpinMethod::Weyl, SpinMethod::Combinatorial, SpinMethod::Gamma}) {
    EXPECT_TRUE(is_P_spin(R("216345"), p141, m));
    EXPECT_FALSE(is_P_spin(R("216345"), SpinParabolic::borel(3), m));
  }
  for (const auto& w : all_signed_perms(3))
    EXPECT_TRUE(is_P_spin(Refinement(embed_wg0(w)), SpinParabolic::borel(3), SpinMethod::Weyl));
  EXPECT_THROW(is_P_spin(R("123456"), Parabolic::from_composition({1, 3, 2}), SpinMethod::Weyl), NonSpinParabolic);
}

TEST(PSpin, ThreeMethodsAgreeUpToSix) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : all_spin_parabolics(n)) {
      const WeylSpinTable table(p);
      for (const auto& s : all_perms(2 * n)) {
        const Refinement r(s);
        const bool weyl = table.contains(s);
        ASSERT_EQ(weyl, is_P_spin(r, p, SpinMethod::Combinatorial)) << s.to_string() << " " << p.label();
        ASSERT_EQ(weyl, is_P_spin(r, p, SpinMethod::Gamma)) << s.to_string() << " " << p.label();
      }
    }
}

TEST(Optimal, Examples) {
  EXPECT_EQ(optimal_parabolic(R("216345")).optimal.label(), "1,4,1");
  EXPECT_EQ(optimal_parabolic(R("132456")).optimal.label(), "1,2,2,1");
  EXPECT_EQ(optimal_parabolic(R("2314")).optimal.label(), "G");
  EXPECT_TRUE(optimal_parabolic(R("2314")).spin_set.empty());
}

TEST(Optimal, SpinExactlyAboveOptimal) {
  for (int n = 1; n <= 3; ++n) {
    const auto all = all_spin_parabolics(n);
    for (const auto& s : all_perms(2 * n)) {
      const Refinement r(s);
      const auto opt = optimal_parabolic(r).optimal;
      for (const auto& p : all) ASSERT_EQ(is_P_spin(r, p, SpinMethod::Combinatorial), opt.subset_of(p));
    }
  }
}

TEST(Stratify, GL4Table) {
  const auto strata = stratify(2);
  ASSERT_EQ(strata.size(), 4u);
  EXPECT_EQ(strata[0].parabolic.label(), "B");
  EXPECT_EQ(names(strata[0].members),
            (std::vector<std::string>{"1234", "1324", "2143", "2413", "3142", "3412", "4231", "4321"}));
  EXPECT_EQ(strata[1].parabolic.label(), "1,2,1");
  EXPECT_TRUE(strata[1].members.empty());
  EXPECT_EQ(strata[2].parabolic.label(), "2,2");
  EXPECT_EQ(names(strata[2].members),
            (std::vector<std::string>{"1243", "1342", "2134", "2431", "3124", "3421", "4213", "4312"}));
  EXPECT_EQ(strata[3].parabolic.label(), "G");
  EXPECT_EQ(names(strata[3].members),
            (std::vector<std::string>{"1423", "1432", "2314", "2341", "3214", "3241", "4123", "4132"}));
}

TEST(Stratify, ThreadedMatchesSerial) {
  const auto a = stratify(3);
  const auto b = stratify(3, {5, 4});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].members, b[i].members);
}

TEST(Stratify, BoundAndBSpinCount) {
  EXPECT_THROW(stratify(6), BoundExceeded);
  const std::size_t expected[] = {0, 2, 8, 48, 384};
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(stratify(n).front().members.size(), expected[n]);
}

TEST(Parahoric, QCosetsOfGL4) {
  const auto q = Parabolic::from_composition({2, 2});
  std::set<std::string> spin, not_spin;
  for (const auto& c : all_cosets(q)) (parahoric_is_spin({c}) ? spin : not_spin).insert(c.to_string());
  EXPECT_EQ(spin, (std::set<std::string>{"{12}⊔{34}", "{13}⊔{24}", "{24}⊔{13}", "{34}⊔{12}"}));
  EXPECT_EQ(not_spin, (std::set<std::string>{"{14}⊔{23}", "{23}⊔{14}"}));
}

TEST(Parahoric, RestrictAndExtend) {
  const auto q = Parabolic::from_composition({2, 2});
  const auto pr = parahoric_restrict(R("1234"), q);
  EXPECT_EQ(pr.to_string(), "{12}⊔{34}");
  EXPECT_EQ(names(extensions(pr)), (std::vector<std::string>{"1234", "1243", "2134", "2143"}));
  for (const auto& s : all_perms(4)) {
    EXPECT_EQ(parahoric_restrict(Refinement(s), Parabolic::whole(2)).coset.rep(), Perm::identity(4));
    for (const auto& p : all_spin_parabolics(2)) {
      const auto c = parahoric_restrict(Refinement(s), p);
      const auto ext = extensions(c);
      EXPECT_NE(std::find(ext.begin(), ext.end(), Refinement(s)), ext.end());
      bool any = false, all = true;
      for (const auto& e : ext) {
        EXPECT_EQ(parahoric_restrict(e, p), c);
        const bool sp = is_P_spin(e, p, SpinMethod::Combinatorial);
        any = any || sp;
        all = all && sp;
      }
      EXPECT_EQ(any, all);
      EXPECT_EQ(parahoric_is_spin(c), any);
    }
  }
}

TEST(Switching, Examples) {
  const auto step = improve_spin_step(R("2134"));
  EXPECT_EQ(step.i, 1);
  EXPECT_EQ(step.j, 2);
  EXPECT_EQ(step.result.to_string(), "1234");

  const auto step2 = improve_spin_step(R("216345"));
  EXPECT_EQ(step2.i, 2);
  EXPECT_TRUE(is_r_spin(step2.result, 1));
  EXPECT_TRUE(is_r_spin(step2.result, 2));

  EXPECT_THROW(improve_spin_step(R("1234")), std::invalid_argument);

  const auto path = to_B_spin(R("2134"));
  EXPECT_EQ(path.tau, (std::vector<std::pair<int, int>>{{1, 2}}));
  EXPECT_EQ(path.result.to_string(), "1234");
  EXPECT_TRUE(to_B_spin(R("4231")).tau.empty());
}

TEST(Switching, ExhaustiveUpToEight) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : all_perms(2 * n)) {
      const Refinement r(s);
      const auto path = to_B_spin(r);
      ASSERT_EQ(static_cast<int>(spin_set(path.result).size()), n);
      ASSERT_LE(static_cast<int>(path.tau.size()), n - static_cast<int>(spin_set(r).size()));
      auto rebuilt = s;
      for (auto [i, j] : path.tau) rebuilt = rebuilt * Perm::transposition(2 * n, i, j);
      ASSERT_EQ(rebuilt, path.result.sigma());
    }
}
