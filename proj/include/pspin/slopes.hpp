#pragma once

#include "errors.hpp"
#include "hecke.hpp"
#include "numbers.hpp"
#include "parabolic.hpp"
#include "refine.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pspin {

/// v_p of alpha(U_k^circ) under the profile.
inline Rational slope(const Refinement& r, int k, const PureWeight& lambda, const ValuationProfile& prof) {
  if (prof.rank() != r.rank()) throw RankMismatch("slope: profile rank");
  return prof(alpha_U_circ(r, k, lambda));
}

/** Declared slopes v_p(U_k^circ) for one refinement. */
struct SlopeData {
  Refinement refinement;
  std::map<int, Rational> slopes;
};

/** One row sum_c coeffs[c] x_c = rhs over the unknowns t_1..t_2n, eta. */
struct LinearRelation {
  std::string label;
  std::vector<Rational> coeffs;
  Rational rhs;
};

struct ProfileSolution {
  bool consistent = false;
  std::vector<std::string> unknowns;
  std::vector<LinearRelation> relations;

  // Consistent case: free unknowns are set to zero.
  std::optional<ValuationProfile> profile;
  std::vector<std::string> free_unknowns;

  // Inconsistent case: integer y with y^T A = 0 and y^T b != 0.
  std::vector<Integer> certificate;
  Rational certificate_value;
  std::vector<std::string> violated;

  bool determined() const { return consistent && free_unknowns.empty(); }
};

namespace detail {
inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / boost::multiprecision::gcd(a, b) * b);
}
}  // namespace detail

/**
 * Solves the slope formula for the theta valuations, jointly over every
 * refinement, with the purity rows t_i + t_{2n+1-i} = eta.
 */
inline ProfileSolution solve_profile(const std::vector<SlopeData>& data, const PureWeight& lambda) {
  const int n = lambda.rank();
  const std::size_t cols = 2 * static_cast<std::size_t>(n) + 1;
  ProfileSolution out;
  for (int i = 1; i <= 2 * n; ++i) out.unknowns.push_back("t" + std::to_string(i));
  out.unknowns.push_back("eta");

  for (const auto& d : data) {
    if (d.refinement.rank() != n) throw RankMismatch("solve_profile: refinement rank");
    for (const auto& [k, v] : d.slopes) {
      detail::require_index(k, 1, 2 * n, "solve_profile");
      LinearRelation row{"slope[σ=" + d.refinement.to_string() + ",k=" + std::to_string(k) + "]",
                         std::vector<Rational>(cols, Rational(0)), Rational(0)};
      const auto a = alpha_U_circ(d.refinement, k, lambda);
      for (int i = 1; i <= 2 * n; ++i) row.coeffs[i - 1] = a.theta_exponent(i);
      row.rhs = v - Rational(a.half_p(), 2);
      out.relations.push_back(std::move(row));
    }
  }
  for (int i = 1; i <= n; ++i) {
    LinearRelation row{"purity[i=" + std::to_string(i) + "]", std::vector<Rational>(cols, Rational(0)), Rational(0)};
    row.coeffs[i - 1] = 1;
    row.coeffs[2 * n - i] += 1;
    row.coeffs[cols - 1] = -1;
    out.relations.push_back(std::move(row));
  }

  // Row reduction on [A | b | I], the identity block tracking row combinations.
  const std::size_t rows = out.relations.size();
  std::vector<std::vector<Rational>> a(rows), comb(rows, std::vector<Rational>(rows, Rational(0)));
  std::vector<Rational> b(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    a[i] = out.relations[i].coeffs;
    b[i] = out.relations[i].rhs;
    comb[i][i] = 1;
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    std::swap(b[piv], b[rank]);
    std::swap(comb[piv], comb[rank]);
    const Rational inv = 1 / a[rank][c];
    for (auto& x : a[rank]) x *= inv;
    b[rank] *= inv;
    for (auto& x : comb[rank]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[rank][j];
      b[i] -= f * b[rank];
      for (std::size_t j = 0; j < rows; ++j) comb[i][j] -= f * comb[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }

  for (std::size_t i = rank; i < rows; ++i) {
    if (b[i] == 0) continue;
    Integer scale = 1;
    for (const auto& y : comb[i]) scale = detail::lcm(scale, denominator(y));
    std::vector<Integer> y;
    Integer g = 0;
    for (const auto& q : comb[i]) {
      y.push_back(numerator(q) * (scale / denominator(q)));
      g = boost::multiprecision::gcd(g, y.back());
    }
    for (auto& v : y) v /= g;
    Rational value = 0;
    for (std::size_t j = 0; j < rows; ++j) {
      value += Rational(y[j]) * out.relations[j].rhs;
      if (y[j] != 0) out.violated.push_back(out.relations[j].label);
    }
    if (value < 0) {
      for (auto& v : y) v = -v;
      value = -value;
    }
    out.certificate = std::move(y);
    out.certificate_value = value;
    return out;
  }

  out.consistent = true;
  std::vector<Rational> x(cols, Rational(0));
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < rank; ++i) {
    x[pivot_col[i]] = b[i];
    is_pivot[pivot_col[i]] = true;
  }
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) out.free_unknowns.push_back(out.unknowns[c]);
  out.profile = ValuationProfile{std::vector<Rational>(x.begin(), x.end() - 1), x.back(), lambda.sw()};
  return out;
}

inline ProfileSolution solve_profile(const std::map<int, Rational>& slopes, const PureWeight& lambda,
                                     const Perm& sigma) {
  return solve_profile({SlopeData{Refinement(sigma), slopes}}, lambda);
}

/** One row of a non-criticality audit: v_p(U_r^circ) < lambda_r - lambda_{r+1} + 1. */
struct SlopeBound {
  int r;
  Rational slope;
  std::int64_t bound;
  bool ok;
};

struct SlopeAudit {
  std::vector<SlopeBound> rows;
  bool non_critical = true;
};

/// r in 1..2n-1 with a_r not in Delta_P.
inline std::vector<int> critical_indices(const Parabolic& p) {
  std::vector<int> out;
  for (int r = 1; r < p.size(); ++r)
    if (!p.contains_root(r)) out.push_back(r);
  return out;
}

inline SlopeAudit non_critical_slope(const std::map<int, Rational>& slopes, const PureWeight& lambda,
                                     const SpinParabolic& p) {
  if (lambda.rank() != p.rank()) throw RankMismatch("non_critical_slope: weight rank");
  SlopeAudit audit;
  for (int r : critical_indices(p)) {
    const auto it = slopes.find(r);
    if (it == slopes.end()) throw MissingData("missing slope for U_" + std::to_string(r));
    const std::int64_t bound = lambda.at(r) - lambda.at(r + 1) + 1;
    const bool ok = it->second < bound;
    audit.rows.push_back({r, it->second, bound, ok});
    audit.non_critical = audit.non_critical && ok;
  }
  return audit;
}

/// Same audit with slopes computed from a valuation profile.
inline SlopeAudit non_critical_slope(const Refinement& r, const PureWeight& lambda, const ValuationProfile& prof,
                                     const SpinParabolic& p) {
  std::map<int, Rational> slopes;
  for (int k : critical_indices(p)) slopes.emplace(k, slope(r, k, lambda, prof));
  return non_critical_slope(slopes, lambda, p);
}

/// The parahoric version: every extension has the same U_r eigenvalue for r outside Delta_P.
inline SlopeAudit non_critical_slope(const ParahoricRefinement& pr, const PureWeight& lambda,
                                     const ValuationProfile& prof, const SpinParabolic& p) {
  return non_critical_slope(Refinement(pr.coset.rep()), lambda, prof, p);
}

}  // namespace pspin
