#include <gtest/gtest.h>

#include <pspin/hecke.hpp>

#include <set>

#include "support/generators.hpp"

using namespace pspin;

namespace {

Refinement R(const char* s) { return Refinement::parse(s); }

const PureWeight kLambda{12, 1, -1, -12};

SatakeMonomial random_monomial(std::mt19937_64& rng, int n) {
  std::vector<std::int64_t> t(2 * static_cast<std::size_t>(n));
  for (auto& e : t) e = gen::uniform(rng, -3, 3);
  return SatakeMonomial(gen::uniform(rng, -5, 5), t, gen::uniform(rng, -2, 2));
}

HeckeWord gl(int n, std::initializer_list<std::pair<int, std::int64_t>> gens) {
  auto w = HeckeWord::one(n, HeckeFamily::GL);
  for (auto [k, e] : gens) w.add(k, e);
  return w;
}

}  // namespace

TEST(Satake, PrintFormat) {
  EXPECT_EQ(SatakeMonomial::one(2).to_string(), "1");
  EXPECT_EQ(SatakeMonomial(-3, {1, -1, 0, 0}, 2).to_string(), "p^{-3/2} * θ_1 * θ_2^{-1} * η^{2}");
  EXPECT_EQ(SatakeMonomial::p_half(1, 2).to_string(), "p");
  EXPECT_EQ(SatakeMonomial::p_half(1, -4).to_string(), "p^{-2}");
}

TEST(Satake, NormalFormTradesMirrorPairs) {
  const SatakeMonomial m(0, {2, 1, 1, 1}, 0);
  const auto nf = m.normal_form();
  EXPECT_EQ(nf, SatakeMonomial(0, {1, 0, 0, 0}, 2));
  EXPECT_TRUE(m.spin_equal(nf));
  EXPECT_FALSE(SatakeMonomial::theta(2, 1).spin_equal(SatakeMonomial::theta(2, 2)));
}

TEST(Satake, NormalFormIsInvariantUnderRewrites) {
  auto rng = gen::make_rng(51);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(gen::uniform(rng, 1, 4));
    const auto m = random_monomial(rng, n);
    auto t = m.theta_exponents();
    auto eta = m.eta_exponent();
    // Apply theta_i theta_{2n+1-i} <-> eta at random positions, in random directions.
    for (int step = 0; step < 12; ++step) {
      const auto i = gen::uniform(rng, 0, n - 1);
      const auto d = gen::uniform(rng, 0, 1) ? 1 : -1;
      t[i] -= d;
      t[2 * n - 1 - i] -= d;
      eta += d;
    }
    const SatakeMonomial moved(m.half_p(), t, eta);
    ASSERT_EQ(moved.normal_form(), m.normal_form());
    const auto nf = m.normal_form();
    for (int i = 1; i <= n; ++i) EXPECT_EQ(std::min(nf.theta_exponent(i), nf.theta_exponent(2 * n + 1 - i)), 0);
    EXPECT_EQ(nf.normal_form(), nf);
  }
}

TEST(Satake, GroupLaws) {
  auto rng = gen::make_rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_monomial(rng, 3);
    const auto b = random_monomial(rng, 3);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a / a).is_one());
    EXPECT_EQ(a.pow(3), a * a * a);
    EXPECT_EQ((a * b).normal_form(), (a.normal_form() * b.normal_form()).normal_form());
  }
}

TEST(Satake, ValuationProfile) {
  ValuationProfile prof{{Rational(1), Rational(2), Rational(3), Rational(4)}, Rational(5), 3};
  EXPECT_TRUE(prof.pure());
  EXPECT_EQ(prof.eta0_val(), Rational(8));
  EXPECT_EQ(prof(SatakeMonomial(-3, {1, 0, 0, 0}, 1)), Rational(9, 2));
  prof.t[0] = 0;
  EXPECT_FALSE(prof.pure());
}

TEST(AlphaU, Examples) {
  EXPECT_EQ(alpha_U(R("12"), 1), SatakeMonomial(-1, {1, 0}, 0));
  EXPECT_EQ(alpha_U(R("1234"), 2), alpha_U(R("2134"), 2));
  for (const auto& s : all_perms(4)) {
    const auto top = alpha_U(Refinement(s), 4);
    EXPECT_EQ(top.half_p(), 0);
    EXPECT_EQ(top.normal_form(), SatakeMonomial::eta(2).pow(2));
  }
  EXPECT_TRUE(alpha_U(R("1234"), 0).is_one());
  EXPECT_THROW(alpha_U(R("1234"), 5), std::invalid_argument);
}

TEST(AlphaU, HalfExponentAndSupport) {
  auto rng = gen::make_rng(53);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const auto s = gen::random_perm(rng, 2 * n);
      for (int k = 1; k <= 2 * n; ++k) {
        const auto a = alpha_U(Refinement(s), k);
        std::int64_t expect = 0;
        for (int j = 1; j <= k; ++j) expect -= 2 * n - 2 * j + 1;
        EXPECT_EQ(a.half_p(), expect);
        for (int i = 1; i <= 2 * n; ++i) {
          bool in_prefix = false;
          for (int j = 1; j <= k; ++j) in_prefix = in_prefix || s(j) == i;
          EXPECT_EQ(a.theta_exponent(i), in_prefix ? 1 : 0);
        }
      }
    }
}

TEST(AlphaUCirc, Examples) {
  EXPECT_EQ(alpha_U_circ(R("1234"), 1, PureWeight::zero(2)), alpha_U(R("1234"), 1));
  EXPECT_EQ(alpha_U_circ(R("1234"), 1, kLambda), SatakeMonomial(21, {1, 0, 0, 0}, 0));
  const PureWeight lam{7, 4, 2, -1};
  EXPECT_EQ(lam.sw(), 6);
  EXPECT_EQ(alpha_U_circ(R("3142"), 4, lam).normal_form(),
            (SatakeMonomial::p_half(2, 2 * lam.sw() * 2) * SatakeMonomial::eta(2).pow(2)));
}

TEST(SpinRelation, Examples) {
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(spin_relation_check(R("123456"), k, PureWeight{5, 3, 1, 1, -1, -3}));
  for (const auto& s : all_perms(4)) EXPECT_TRUE(spin_relation_check(Refinement(s), 2, kLambda));
  EXPECT_FALSE(spin_relation_check(R("2134"), 1, kLambda));
}

TEST(SpinRelation, SpinImpliesRelation) {
  auto rng = gen::make_rng(54);
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : all_perms(2 * n)) {
      const Refinement r(s);
      const auto lam = gen::random_pure_weight(rng, n, true);
      for (int k = 1; k <= n; ++k) {
        // Holds exactly when the first k and last k values together are closed under i -> 2n+1-i.
        std::multiset<int> ends;
        for (int i = 1; i <= k; ++i) ends.insert({s(i), s(2 * n + 1 - i)});
        bool closed = true;
        for (int v : ends) closed = closed && ends.count(2 * n + 1 - v) == ends.count(v);
        ASSERT_EQ(spin_relation_check(r, k, lam), closed) << s.to_string() << " k=" << k;
        if (is_r_spin(r, k)) {
          ASSERT_TRUE(closed);
        }
      }
    }
  // Not 2-spin, yet the relation holds: {1,6} and {3,4} pair off only among themselves.
  EXPECT_FALSE(is_r_spin(R("162534"), 2));
  EXPECT_TRUE(spin_relation_check(R("162534"), 2, PureWeight::zero(3)));
}

TEST(ThetaFromRatios, RecoversSigma) {
  auto rng = gen::make_rng(55);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 30; ++trial) {
      const auto s = gen::random_perm(rng, 2 * n);
      const auto lam = gen::random_pure_weight(rng, n, true);
      for (int k = 1; k <= 2 * n; ++k) {
        const auto rec = theta_from_ratios(Refinement(s), k, lam);
        EXPECT_EQ(rec.raw, SatakeMonomial::theta(n, s(k)));
        EXPECT_EQ(rec.normalized, SatakeMonomial::theta(n, s(k)));
      }
    }
  EXPECT_EQ(theta_from_ratios(R("3142"), 1, kLambda).raw, SatakeMonomial::theta(2, 3));
}

TEST(GammaScan, Examples) {
  const auto id = gamma_uniqueness_scan(R("1234"));
  EXPECT_EQ(id.status, ScanStatus::Unique);
  EXPECT_EQ(id.candidates, 12u);
  EXPECT_EQ(id.matches.front().values, (std::vector<int>{1, 2}));

  const auto r = R("216345");
  const auto scan = gamma_uniqueness_scan(r);
  ASSERT_EQ(scan.status, ScanStatus::Unique);
  EXPECT_EQ(scan.matches.front(), gamma(r));
}

TEST(GammaScan, RecoversGammaExhaustively) {
  auto rng = gen::make_rng(56);
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : all_perms(2 * n)) {
      const Refinement r(s);
      const auto raw = gamma_uniqueness_scan(r);
      ASSERT_EQ(raw.status, ScanStatus::Unique) << s.to_string();
      ASSERT_EQ(raw.matches.front(), gamma(r));
      if (n <= 2) {
        const auto norm = gamma_uniqueness_scan(r, gen::random_pure_weight(rng, n, true));
        ASSERT_EQ(norm.status, ScanStatus::Unique);
        ASSERT_EQ(norm.matches.front(), gamma(r));
      }
    }
}

TEST(GammaScan, DegenerateProfileReportsMultiplicity) {
  const Rational half(1, 2);
  // Pure, with t_1 = t_2 and t_3 = t_4.
  const ValuationProfile flat{{half, half, half, half}, Rational(1), 0};
  EXPECT_EQ(gamma_uniqueness_scan(R("1234"), flat).status, ScanStatus::Multiple);
  const ValuationProfile generic{{Rational(0), Rational(3), Rational(7), Rational(10)}, Rational(10), 0};
  const auto ok = gamma_uniqueness_scan(R("1234"), generic);
  ASSERT_EQ(ok.status, ScanStatus::Unique);
  EXPECT_EQ(ok.matches.front(), gamma(R("1234")));
  const ValuationProfile impure{{Rational(0), Rational(3), Rational(7), Rational(11)}, Rational(10), 0};
  EXPECT_EQ(gamma_uniqueness_scan(R("1234"), impure).status, ScanStatus::NoMatch);
}

TEST(JmathHecke, Rules) {
  const auto b = SpinParabolic::borel(3);
  EXPECT_EQ(jmath_hecke(gl(3, {{3, 1}}), b).to_string(), "𝒰_3");
  EXPECT_EQ(jmath_hecke(gl(3, {{6, 1}}), b).to_string(), "𝒱^{3}");
  EXPECT_EQ(jmath_hecke(gl(3, {{1, 1}, {5, 1}}), b).to_string(), "𝒰_1^{2} * 𝒱^{2}");
  EXPECT_EQ(jmath_hecke(gl(2, {{2, -1}}), SpinParabolic::borel(2)).to_string(), "𝒰_2^{-1}");
  // U_1 is not in the Q-parahoric algebra.
  const auto q = SpinParabolic::from_composition({2, 2});
  EXPECT_THROW(jmath_hecke(gl(2, {{1, 1}}), q), std::invalid_argument);
  EXPECT_EQ(jmath_hecke(gl(2, {{2, 1}, {4, 1}}), q).to_string(), "𝒰_2 * 𝒱^{2}");
  EXPECT_EQ(jmath_hecke(gl(2, {{4, 1}}), SpinParabolic::whole(2)).to_string(), "𝒱^{2}");
}

TEST(GSpinRoot, MatchesTransferredRefinement) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& w : all_signed_perms(n)) {
      const Refinement r(embed_wg0(w));
      for (int k = 1; k <= 2 * n; ++k) ASSERT_TRUE(gspin_root(w, k).spin_equal(alpha_U(r, k))) << k;
    }
}

TEST(FactorsThroughSpin, Examples) {
  for (const auto& p : all_spin_parabolics(2)) {
    const auto a = factors_through_spin(R("1234"), p);
    ASSERT_TRUE(a.has_value()) << p.label();
    EXPECT_EQ(a->V, SatakeMonomial::eta(2));
  }
  EXPECT_FALSE(factors_through_spin(R("2314"), SpinParabolic::from_composition({2, 2})).has_value());
  EXPECT_TRUE(factors_through_spin(R("2314"), SpinParabolic::whole(2)).has_value());
}

TEST(FactorsThroughSpin, PresentExactlyWhenSpin) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : all_spin_parabolics(n))
      for (const auto& s : all_perms(2 * n)) {
        const Refinement r(s);
        const auto a = factors_through_spin(r, p);
        ASSERT_EQ(a.has_value(), is_P_spin(r, p, SpinMethod::Combinatorial)) << s.to_string() << " " << p.label();
        if (!a) continue;
        for (int k = 1; k <= 2 * n; ++k) {
          if (!in_parahoric_hecke(k, p)) continue;
          const auto image = jmath_hecke(HeckeWord::generator(n, HeckeFamily::GL, k), p);
          ASSERT_TRUE(a->evaluate(image).spin_equal(alpha_U(r, k)));
        }
      }
}

TEST(CharPoly, Examples) {
  const auto roots = char_poly_roots(Parabolic::borel(1), 1, Group::GL);
  EXPECT_EQ(roots, (std::vector<SatakeMonomial>{SatakeMonomial(-1, {0, 1}, 0), SatakeMonomial(-1, {1, 0}, 0)}));
  for (const auto& p : all_spin_parabolics(2))
    for (const auto& m : char_poly_roots(p, 4, Group::GSpin)) EXPECT_EQ(m, SatakeMonomial::eta(2).pow(2));
  EXPECT_EQ(char_poly_roots(Parabolic::borel(2), 1, Group::GL).size(), 24u);
  EXPECT_EQ(char_poly_roots(Parabolic::from_composition({2, 2}), 2, Group::GL).size(), 6u);
  EXPECT_EQ(char_poly_roots(Parabolic::from_composition({2, 2}), 2, Group::GSpin).size(), 4u);
}

TEST(CharPoly, GSpinDividesGL) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : all_spin_parabolics(n))
      for (int k = 1; k <= 2 * n; ++k) {
        if (!in_parahoric_hecke(k, p)) continue;
        EXPECT_TRUE(divides(char_poly_roots(p, k, Group::GSpin), char_poly_roots(p, k, Group::GL)))
            << p.label() << " k=" << k;
      }
}

TEST(Flags, GenericInputHasNoFlags) {
  const auto r = R("3142");
  std::vector<SatakeMonomial> alphas{SatakeMonomial::one(2)};
  for (int k = 1; k <= 4; ++k) alphas.push_back(alpha_U_circ(r, k, kLambda));
  for (const auto& f : reducibility_regularity_flags(alphas, kLambda)) {
    EXPECT_FALSE(f.reducible);
    EXPECT_FALSE(f.irregular);
  }
}

TEST(Flags, SubstitutedCoincidences) {
  const auto r = R("1234");
  const int a = 1, b = 3;  // positions; sigma = id so theta_{sigma(i)} = theta_i
  auto build = [&](const SatakeMonomial& value) {
    std::vector<SatakeMonomial> alphas{SatakeMonomial::one(2)};
    for (int k = 1; k <= 4; ++k) alphas.push_back(alpha_U_circ(r, k, kLambda).substitute_theta(a, value));
    return reducibility_regularity_flags(alphas, kLambda);
  };
  // theta_a = p theta_b
  for (const auto& f : build(SatakeMonomial::p_half(2, 2) * SatakeMonomial::theta(2, b))) {
    EXPECT_EQ(f.reducible, f.r == b && f.s == a) << f.r << "," << f.s;
    EXPECT_FALSE(f.irregular);
  }
  // theta_a = theta_b
  for (const auto& f : build(SatakeMonomial::theta(2, b))) {
    EXPECT_EQ(f.irregular, (f.r == a && f.s == b) || (f.r == b && f.s == a));
    EXPECT_FALSE(f.reducible);
  }
}

TEST(Phi, OutsideWindowUnchanged) {
  const auto m = PhiMap(2, kLambda).then(2, 3);
  EXPECT_EQ(m.image(1), HeckeWord::generator(2, HeckeFamily::GLNormalized, 1));
  EXPECT_EQ(m.image(3), HeckeWord::generator(2, HeckeFamily::GLNormalized, 3));
  EXPECT_EQ(m.image(4), HeckeWord::generator(2, HeckeFamily::GLNormalized, 4));
  // i <= r < j: p^{(2-3)+(1+1)} U_3 U_2^{-1} U_1 U_2^{-1} U_2
  EXPECT_EQ(m.image(2).to_string(), "p * U°_1 * U°_2^{-1} * U°_3");
}

TEST(Phi, TransfersEigenvaluesExhaustively) {
  for (const auto& s : all_perms(4))
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        const Refinement r(s);
        const Refinement swapped(s * Perm::transposition(4, i, j));
        for (int k = 1; k <= 4; ++k) {
          const auto w = HeckeWord::generator(2, HeckeFamily::GLNormalized, k);
          ASSERT_EQ(evaluate(phi_ij(w, i, j, kLambda), swapped, kLambda), alpha_U_circ(r, k, kLambda));
          ASSERT_EQ(evaluate(phi_ij(w, i, j, kLambda), r, kLambda), alpha_U_circ(swapped, k, kLambda));
        }
      }
}

TEST(Phi, IsAnInvolution) {
  auto rng = gen::make_rng(57);
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= 2 * n; ++i)
      for (int j = i + 1; j <= 2 * n; ++j) {
        const auto lam = gen::random_pure_weight(rng, n, true);
        const auto m = PhiMap(n, lam).then(i, j).then(i, j);
        for (int k = 1; k <= 2 * n; ++k)
          EXPECT_EQ(m.image(k), HeckeWord::generator(n, HeckeFamily::GLNormalized, k));
      }
}

TEST(PhiTau, EmptyIsIdentity) {
  const auto m = phi_tau({}, kLambda);
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(m.image(k), HeckeWord::generator(2, HeckeFamily::GLNormalized, k));
}

TEST(PhiTau, SwitchingTransfersToBSpin) {
  const auto path = to_B_spin(R("2134"));
  const auto m = phi_tau(path.tau, kLambda);
  for (int k = 1; k <= 4; ++k)
    EXPECT_EQ(evaluate(m.image(k), path.result, kLambda), alpha_U_circ(R("2134"), k, kLambda));

  auto rng = gen::make_rng(58);
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : all_perms(2 * n)) {
      const Refinement r(s);
      const auto p = to_B_spin(r);
      const auto lam = gen::random_pure_weight(rng, n, true);
      const auto phi = phi_tau(p.tau, lam);
      for (int k = 1; k <= 2 * n; ++k)
        ASSERT_EQ(evaluate(phi.image(k), p.result, lam), alpha_U_circ(r, k, lam)) << s.to_string();
    }
}

TEST(PhiTau, CoefficientsConstantOnParabolicCoset) {
  const auto q = Parabolic::from_composition({2, 2});
  auto rng = gen::make_rng(59);
  std::vector<PureWeight> coset{kLambda};
  while (coset.size() < 6) {
    const auto a = gen::uniform(rng, -20, 20);
    const auto b = a - 11 - gen::uniform(rng, 0, 10);
    PureWeight lam{a, a - 11, b, b - 11};
    ASSERT_TRUE(weight_in_parabolic_coset(lam, kLambda, q));
    coset.push_back(lam);
  }
  for (const auto& s : all_perms(4)) {
    const Refinement r(s);
    if (!is_P_spin(r, q, SpinMethod::Combinatorial)) continue;
    const auto tau = to_B_spin(r).tau;
    for (int k = 1; k <= 4; ++k) {
      const auto ref = phi_tau(tau, kLambda).image(k);
      for (const auto& lam : coset) EXPECT_EQ(phi_tau(tau, lam).image(k), ref) << s.to_string();
    }
  }
}
