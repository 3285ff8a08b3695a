#pragma once

#include "errors.hpp"
#include "parabolic.hpp"
#include "refine.hpp"
#include "rootdata.hpp"
#include "satake.hpp"
#include "weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace pspin {

namespace detail {
inline void require_index(int k, int lo, int hi, const char* what) {
  if (k < lo || k > hi)
    throw std::invalid_argument(std::string(what) + ": index " + std::to_string(k) + " outside [" +
                                std::to_string(lo) + "," + std::to_string(hi) + "]");
}
/// sum_{j<=k} (2n-2j+1)
inline std::int64_t rho_partial(int n, int k) {
  std::int64_t s = 0;
  for (int j = 1; j <= k; ++j) s += 2 * n - 2 * j + 1;
  return s;
}
}  // namespace detail

/// Eigenvalue of U_{p,k}: prod_{j<=k} p^{-(2n-2j+1)/2} theta_{sigma(j)}; k = 0 gives 1.
inline SatakeMonomial alpha_U(const Refinement& r, int k) {
  const int n = r.rank();
  detail::require_index(k, 0, 2 * n, "alpha_U");
  auto m = SatakeMonomial::p_half(n, -detail::rho_partial(n, k));
  for (int j = 1; j <= k; ++j) m *= SatakeMonomial::theta(n, r.sigma()(j));
  return m;
}

/// Eigenvalue of U_{p,k}^circ = lambda(t_{p,k}) U_{p,k}.
inline SatakeMonomial alpha_U_circ(const Refinement& r, int k, const PureWeight& lambda) {
  if (lambda.rank() != r.rank()) throw RankMismatch("alpha_U_circ: weight rank");
  return alpha_U(r, k) * SatakeMonomial::p_half(r.rank(), 2 * lambda.partial_sum(k));
}

/// eta_0 = eta * p^{sw}.
inline SatakeMonomial eta0(int n, std::int64_t sw) { return SatakeMonomial::eta(n) * SatakeMonomial::p_half(n, 2 * sw); }

/// eta_0^{n-k} alpha(U_k^circ) against alpha(U_{2n-k}^circ), after normal form.
inline bool spin_relation_check(const Refinement& r, int k, const PureWeight& lambda) {
  const int n = r.rank();
  detail::require_index(k, 1, n, "spin_relation_check");
  const auto lhs = eta0(n, lambda.sw()).pow(n - k) * alpha_U_circ(r, k, lambda);
  return lhs.spin_equal(alpha_U_circ(r, 2 * n - k, lambda));
}

struct ThetaRecovery {
  SatakeMonomial raw;
  SatakeMonomial normalized;
};

/// theta_{sigma(k)} recovered from consecutive eigenvalues, raw and lambda-normalised.
inline ThetaRecovery theta_from_ratios(const Refinement& r, int k, const PureWeight& lambda) {
  const int n = r.rank();
  detail::require_index(k, 1, 2 * n, "theta_from_ratios");
  const auto shift = SatakeMonomial::p_half(n, 2 * n - 2 * k + 1);
  ThetaRecovery out{shift * alpha_U(r, k) / alpha_U(r, k - 1),
                    shift * SatakeMonomial::p_half(n, -2 * lambda.at(k)) * alpha_U_circ(r, k, lambda) /
                        alpha_U_circ(r, k - 1, lambda)};
  return out;
}

enum class ScanStatus { Unique, NoMatch, Multiple };

inline const char* to_string(ScanStatus s) {
  switch (s) {
    case ScanStatus::Unique: return "unique";
    case ScanStatus::NoMatch: return "no-match";
    case ScanStatus::Multiple: return "multiple";
  }
  return "?";
}

struct GammaScanResult {
  ScanStatus status;
  std::vector<GammaMap> matches;
  std::size_t candidates = 0;
};

namespace detail {
inline void for_each_injection(int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::vector<bool> used(2 * static_cast<std::size_t>(n) + 1, false);
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == n) {
      fn(cur);
      return;
    }
    for (int v = 1; v <= 2 * n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      rec();
      cur.pop_back();
      used[v] = false;
    }
  };
  rec();
}

/**
 * Both sides of the s-th relation linking alpha_s to the eigenvalue ratios
 * at 2n+1-g(i), raw form.
 */
inline std::pair<SatakeMonomial, SatakeMonomial> gamma_relation_raw(const Refinement& r, const std::vector<int>& g,
                                                                     int s) {
  const int n = r.rank();
  auto lhs = alpha_U(r, s);
  for (int i = 1; i <= s; ++i) {
    const int m = 2 * n + 1 - g[i - 1];
    lhs *= SatakeMonomial::p_half(n, 2 * g[i - 1] - 2 * n - 1) * alpha_U(r, m) / alpha_U(r, m - 1);
  }
  auto rhs = SatakeMonomial::p_half(n, -rho_partial(n, s)) * SatakeMonomial::eta(n).pow(s);
  return {lhs, rhs};
}

/// The same relation in lambda-normalised eigenvalues, with eta_0 on the right.
inline std::pair<SatakeMonomial, SatakeMonomial> gamma_relation_normalized(const Refinement& r,
                                                                            const std::vector<int>& g, int s,
                                                                            const PureWeight& lambda) {
  const int n = r.rank();
  auto lhs = alpha_U_circ(r, s, lambda);
  for (int i = 1; i <= s; ++i) {
    const int gi = g[i - 1];
    const int m = 2 * n + 1 - gi;
    lhs *= SatakeMonomial::p_half(n, 2 * gi - 2 * n - 1 + 2 * (lambda.at(gi) - lambda.at(i))) *
           alpha_U_circ(r, m, lambda) / alpha_U_circ(r, m - 1, lambda);
  }
  auto rhs = SatakeMonomial::p_half(n, -rho_partial(n, s)) * eta0(n, lambda.sw()).pow(s);
  return {lhs, rhs};
}

inline GammaScanResult finish_scan(std::vector<GammaMap> matches, std::size_t candidates) {
  const auto status = matches.empty()       ? ScanStatus::NoMatch
                      : matches.size() == 1 ? ScanStatus::Unique
                                            : ScanStatus::Multiple;
  return {status, std::move(matches), candidates};
}
}  // namespace detail

/// Every injection {1..n} -> {1..2n} satisfying all n relations symbolically.
inline GammaScanResult gamma_uniqueness_scan(const Refinement& r) {
  const int n = r.rank();
  std::vector<GammaMap> matches;
  std::size_t candidates = 0;
  detail::for_each_injection(n, [&](const std::vector<int>& g) {
    ++candidates;
    for (int s = 1; s <= n; ++s) {
      auto [lhs, rhs] = detail::gamma_relation_raw(r, g, s);
      if (!lhs.spin_equal(rhs)) return;
    }
    matches.push_back({g});
  });
  return detail::finish_scan(std::move(matches), candidates);
}

/// Same scan on the lambda-normalised relations.
inline GammaScanResult gamma_uniqueness_scan(const Refinement& r, const PureWeight& lambda) {
  const int n = r.rank();
  std::vector<GammaMap> matches;
  std::size_t candidates = 0;
  detail::for_each_injection(n, [&](const std::vector<int>& g) {
    ++candidates;
    for (int s = 1; s <= n; ++s) {
      auto [lhs, rhs] = detail::gamma_relation_normalized(r, g, s, lambda);
      if (!lhs.spin_equal(rhs)) return;
    }
    matches.push_back({g});
  });
  return detail::finish_scan(std::move(matches), candidates);
}

/// Scan against valuations only; coincident valuations can admit several maps.
inline GammaScanResult gamma_uniqueness_scan(const Refinement& r, const ValuationProfile& prof) {
  const int n = r.rank();
  if (prof.rank() != n) throw RankMismatch("gamma scan: profile rank");
  std::vector<GammaMap> matches;
  std::size_t candidates = 0;
  detail::for_each_injection(n, [&](const std::vector<int>& g) {
    ++candidates;
    for (int s = 1; s <= n; ++s) {
      auto [lhs, rhs] = detail::gamma_relation_raw(r, g, s);
      if (prof(lhs) != prof(rhs)) return;
    }
    matches.push_back({g});
  });
  return detail::finish_scan(std::move(matches), candidates);
}

enum class HeckeFamily { GL, GLNormalized, GSpin };

/**
 * p^{half_p/2} * prod U_k^{e_k}. For GSpin words the keys index the U_r
 * generators and v_power is the exponent of V.
 */
struct HeckeWord {
  int n = 1;
  HeckeFamily family = HeckeFamily::GL;
  std::int64_t half_p = 0;
  std::map<int, std::int64_t> exps;
  std::int64_t v_power = 0;

  static HeckeWord generator(int n, HeckeFamily f, int k) {
    HeckeWord w{n, f, 0, {{k, 1}}, 0};
    return w;
  }
  static HeckeWord one(int n, HeckeFamily f) { return HeckeWord{n, f, 0, {}, 0}; }

  HeckeWord& operator*=(const HeckeWord& o) {
    if (o.n != n || o.family != family) throw RankMismatch("multiplying Hecke words of different kinds");
    half_p += o.half_p;
    for (auto [k, e] : o.exps) add(k, e);
    v_power += o.v_power;
    return *this;
  }
  friend HeckeWord operator*(HeckeWord a, const HeckeWord& b) { return a *= b; }
  HeckeWord pow(std::int64_t k) const {
    HeckeWord w = *this;
    w.half_p *= k;
    w.v_power *= k;
    for (auto& [g, e] : w.exps) e *= k;
    return w;
  }
  void add(int k, std::int64_t e) {
    auto& slot = exps[k];
    slot += e;
    if (slot == 0) exps.erase(k);
  }

  std::string to_string() const {
    std::vector<std::string> parts;
    if (half_p != 0) parts.push_back(SatakeMonomial::p_half(n, half_p).to_string());
    const std::string base = family == HeckeFamily::GL ? "U_" : family == HeckeFamily::GLNormalized ? "U°_" : "𝒰_";
    for (auto [k, e] : exps) parts.push_back(base + std::to_string(k) + (e == 1 ? "" : "^{" + std::to_string(e) + "}"));
    if (v_power != 0) parts.push_back(v_power == 1 ? "𝒱" : "𝒱^{" + std::to_string(v_power) + "}");
    if (parts.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " * " : "") << parts[i];
    return os.str();
  }

  friend bool operator==(const HeckeWord&, const HeckeWord&) = default;
};

/// U_k belongs to the P-parahoric Hecke algebra.
inline bool in_parahoric_hecke(int k, const Parabolic& p) {
  return k == p.size() || (k >= 1 && k < p.size() && !p.contains_root(k));
}

/// U_r -> 𝒰_r, U_{2n-r} -> 𝒰_r 𝒱^{n-r}, U_{2n} -> 𝒱^n.
inline HeckeWord jmath_hecke(const HeckeWord& word, const SpinParabolic& p) {
  if (word.family != HeckeFamily::GL) throw std::invalid_argument("jmath_hecke expects a GL word");
  const int n = word.n;
  if (p.rank() != n) throw RankMismatch("jmath_hecke: parabolic rank");
  HeckeWord out = HeckeWord::one(n, HeckeFamily::GSpin);
  out.half_p = word.half_p;
  for (auto [k, e] : word.exps) {
    if (!in_parahoric_hecke(k, p))
      throw std::invalid_argument("U_" + std::to_string(k) + " is not in the parahoric Hecke algebra of " + p.label());
    if (k == 2 * n) {
      out.v_power += n * e;
    } else if (k <= n) {
      out.add(k, e);
    } else {
      const int r = 2 * n - k;
      out.add(r, e);
      out.v_power += (n - r) * e;
    }
  }
  return out;
}

/** Values of the GSpin generators 𝒰_r (r in X_P) and 𝒱. */
struct GSpinEigenAssignment {
  SignedPerm witness;
  std::map<int, SatakeMonomial> U;
  SatakeMonomial V;

  SatakeMonomial evaluate(const HeckeWord& w) const {
    if (w.family != HeckeFamily::GSpin) throw std::invalid_argument("assignment evaluates GSpin words");
    auto m = SatakeMonomial::p_half(w.n, w.half_p) * V.pow(w.v_power);
    for (auto [r, e] : w.exps) m *= U.at(r).pow(e);
    return m;
  }
};

/**
 * Eigenvalue of the GSpin operator attached to nu_k, computed on the GSpin
 * side: the twisted parameter (eta; theta_1..theta_n)^w paired with
 * jmath_vee(e_1* + ... + e_k*).
 */
inline SatakeMonomial gspin_root(const SignedPerm& w, int k) {
  const int n = w.rank();
  detail::require_index(k, 1, 2 * n, "gspin_root");
  std::vector<SatakeMonomial> coeffs;
  coeffs.push_back(SatakeMonomial::eta(n));
  for (int i = 1; i <= n; ++i) coeffs.push_back(SatakeMonomial::theta(n, i));
  const auto twisted = gspin_act_coeffs(w, coeffs, [](const SatakeMonomial& c0, const SatakeMonomial& cj) { return c0 / cj; });
  auto nu = GLCocharacter::zero(2 * n);
  for (int j = 0; j < k; ++j) nu[j] = 1;
  const auto d = jmath_vee_cochar(nu, n);
  auto m = SatakeMonomial::p_half(n, -pairing(two_rho_gspin(n), d));
  for (int i = 0; i <= n; ++i) m *= twisted[i].pow(d[i]);
  return m.normal_form();
}

/**
 * A GSpin eigensystem whose transfer reproduces alpha on every generator of
 * the P-parahoric Hecke algebra, if one exists.
 */
inline std::optional<GSpinEigenAssignment> factors_through_spin(const Refinement& r, const SpinParabolic& p) {
  const int n = r.rank();
  if (p.rank() != n) throw RankMismatch("factors_through_spin: parabolic rank");
  const auto x = p.xp();
  std::set<Perm> tried;
  for (const auto& w : all_signed_perms(n)) {
    if (!tried.insert(coset_min_rep(embed_wg0(w), p)).second) continue;
    GSpinEigenAssignment a{w, {}, SatakeMonomial::eta(n)};
    for (int k : x) a.U.emplace(k, gspin_root(w, k));
    bool ok = true;
    for (int k = 1; k <= 2 * n && ok; ++k) {
      if (!in_parahoric_hecke(k, p)) continue;
      const auto image = jmath_hecke(HeckeWord::generator(n, HeckeFamily::GL, k), p);
      ok = a.evaluate(image).spin_equal(alpha_U(r, k));
    }
    if (ok) return a;
  }
  return std::nullopt;
}

/// Roots of the characteristic polynomial of U_k on the P-parahoric invariants, in normal form and sorted.
inline std::vector<SatakeMonomial> char_poly_roots(const Parabolic& p, int k, Group group) {
  const int n = p.rank();
  if (!in_parahoric_hecke(k, p))
    throw std::invalid_argument("U_" + std::to_string(k) + " is not in the parahoric Hecke algebra of " + p.label());
  std::vector<SatakeMonomial> roots;
  if (group == Group::GL) {
    for (const auto& c : all_cosets(p)) roots.push_back(alpha_U(Refinement(c.rep()), k).normal_form());
  } else {
    const SpinParabolic sp(p);
    std::set<Perm> seen;
    for (const auto& w : all_signed_perms(n))
      if (seen.insert(coset_min_rep(embed_wg0(w), sp)).second) roots.push_back(gspin_root(w, k));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Multiset inclusion of sorted root lists.
inline bool divides(const std::vector<SatakeMonomial>& small, const std::vector<SatakeMonomial>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/**
 * Flags for one ordered pair (r, s): whether theta_{sigma(s)} = p theta_{sigma(r)}
 * (reducibility) or theta_{sigma(s)} = theta_{sigma(r)} (regularity failure),
 * read off from the normalised eigenvalues.
 */
struct PairFlags {
  int r;
  int s;
  bool reducible;
  bool irregular;
};

/// alphas[k] is the eigenvalue of U_k^circ for k = 1..2n; alphas[0] is ignored.
inline std::vector<PairFlags> reducibility_regularity_flags(const std::vector<SatakeMonomial>& alphas,
                                                            const PureWeight& lambda) {
  const int n = lambda.rank();
  if (static_cast<int>(alphas.size()) != 2 * n + 1) throw RankMismatch("expected alphas for k = 0..2n");
  auto at = [&](int k) { return k == 0 ? SatakeMonomial::one(n) : alphas[k]; };
  std::vector<PairFlags> out;
  for (int r = 1; r <= 2 * n; ++r)
    for (int s = 1; s <= 2 * n; ++s) {
      if (r == s) continue;
      const auto shift = SatakeMonomial::p_half(n, 2 * ((s - r) + (lambda.at(s) - lambda.at(r))));
      const auto left = shift * at(r) * at(s - 1);
      const auto right = at(s) * at(r - 1);
      out.push_back({r, s, (SatakeMonomial::p_half(n, 2) * left).spin_equal(right), left.spin_equal(right)});
    }
  return out;
}

/**
 * The transfer phi_{ij}^lambda on normalised Hecke words:
 * U_r -> p^{(i-j)+(lambda_i-lambda_j)} U_j/U_{j-1} * U_{i-1}/U_i * U_r for i <= r < j.
 */
class PhiMap {
 public:
  PhiMap(int n, PureWeight lambda) : n_(n), lambda_(std::move(lambda)) {
    if (lambda_.rank() != n) throw RankMismatch("PhiMap: weight rank");
  }
  /// Appends phi_{ij}; later steps act after earlier ones.
  PhiMap& then(int i, int j) {
    if (!(1 <= i && i < j && j <= 2 * n_)) throw std::invalid_argument("phi needs 1 <= i < j <= 2n");
    steps_.emplace_back(i, j);
    return *this;
  }

  HeckeWord apply(const HeckeWord& word) const {
    if (word.family != HeckeFamily::GLNormalized) throw std::invalid_argument("phi acts on normalised words");
    HeckeWord cur = word;
    for (auto [i, j] : steps_) cur = apply_step(cur, i, j);
    return cur;
  }
  /// Image of a single generator U_r^circ.
  HeckeWord image(int r) const { return apply(HeckeWord::generator(n_, HeckeFamily::GLNormalized, r)); }
  const std::vector<std::pair<int, int>>& steps() const { return steps_; }

 private:
  HeckeWord apply_step(const HeckeWord& w, int i, int j) const {
    HeckeWord out = HeckeWord::one(n_, HeckeFamily::GLNormalized);
    out.half_p = w.half_p;
    for (auto [r, e] : w.exps) {
      HeckeWord g = HeckeWord::generator(n_, HeckeFamily::GLNormalized, r);
      if (i <= r && r < j) {
        g.half_p = 2 * ((i - j) + (lambda_.at(i) - lambda_.at(j)));
        g.add(j, 1);
        if (j - 1 >= 1) g.add(j - 1, -1);
        if (i - 1 >= 1) g.add(i - 1, 1);
        g.add(i, -1);
      }
      out *= g.pow(e);
    }
    return out;
  }

  int n_;
  PureWeight lambda_;
  std::vector<std::pair<int, int>> steps_;
};

inline HeckeWord phi_ij(const HeckeWord& word, int i, int j, const PureWeight& lambda) {
  return PhiMap(word.n, lambda).then(i, j).apply(word);
}

/// phi_{i_k j_k} o ... o phi_{i_1 j_1}.
inline PhiMap phi_tau(const std::vector<std::pair<int, int>>& taus, const PureWeight& lambda) {
  PhiMap m(lambda.rank(), lambda);
  for (auto [i, j] : taus) m.then(i, j);
  return m;
}

/// Evaluates a normalised word at the eigensystem of r.
inline SatakeMonomial evaluate(const HeckeWord& w, const Refinement& r, const PureWeight& lambda) {
  const int n = r.rank();
  SatakeMonomial m = SatakeMonomial::p_half(n, w.half_p);
  for (auto [k, e] : w.exps) {
    const auto base = w.family == HeckeFamily::GL ? alpha_U(r, k) : alpha_U_circ(r, k, lambda);
    m *= base.pow(e);
  }
  if (w.family == HeckeFamily::GSpin) throw std::invalid_argument("evaluate GSpin words through an assignment");
  return m;
}

}  // namespace pspin
