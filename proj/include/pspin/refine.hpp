#pragma once

#include "errors.hpp"
#include "parabolic.hpp"
#include "perm.hpp"
#include "weyl.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace pspin {

/** An Iwahori p-refinement, recorded by its permutation in S_2n. */
class Refinement {
 public:
  explicit Refinement(Perm sigma) : sigma_(std::move(sigma)) {
    if (sigma_.size() % 2 != 0 || sigma_.size() == 0) throw std::invalid_argument("refinement needs S_2n");
  }
  static Refinement parse(const std::string& text) { return Refinement(Perm::parse(text)); }

  int rank() const { return sigma_.size() / 2; }
  const Perm& sigma() const { return sigma_; }
  std::string to_string() const { return sigma_.to_string(); }

  friend bool operator==(const Refinement&, const Refinement&) = default;
  friend auto operator<=>(const Refinement&, const Refinement&) = default;

 private:
  Perm sigma_;
};

/** gamma(i) for i = 1..n. */
struct GammaMap {
  std::vector<int> values;

  int operator()(int i) const { return values.at(static_cast<std::size_t>(i - 1)); }
  /// gamma sends {1..r} onto itself.
  bool preserves_prefix(int r) const {
    for (int i = 1; i <= r; ++i)
      if ((*this)(i) > r) return false;
    return true;
  }
  friend bool operator==(const GammaMap&, const GammaMap&) = default;
  friend auto operator<=>(const GammaMap&, const GammaMap&) = default;
};

/// gamma(i) = 2n+1 - sigma^{-1}(2n+1 - sigma(i)).
inline GammaMap gamma(const Refinement& r) {
  const int n = r.rank();
  const auto inv = r.sigma().inverse();
  GammaMap g;
  for (int i = 1; i <= n; ++i) g.values.push_back(2 * n + 1 - inv(2 * n + 1 - r.sigma()(i)));
  return g;
}

/// The first k and last k images pair off into sums 2n+1.
inline bool is_r_spin(const Refinement& r, int k) {
  const int n = r.rank();
  if (k < 1 || k > n) throw std::invalid_argument("spin index out of range");
  const auto& s = r.sigma();
  std::vector<bool> tail(2 * static_cast<std::size_t>(n) + 1, false);
  for (int j = 2 * n + 1 - k; j <= 2 * n; ++j) tail[s(j)] = true;
  for (int i = 1; i <= k; ++i)
    if (!tail[2 * n + 1 - s(i)]) return false;
  return true;
}

inline std::set<int> spin_set(const Refinement& r) {
  std::set<int> x;
  for (int k = 1; k <= r.rank(); ++k)
    if (is_r_spin(r, k)) x.insert(k);
  return x;
}

/// r-spin for every r in x.
inline bool is_x_spin(const Refinement& r, const std::set<int>& x) {
  return std::all_of(x.begin(), x.end(), [&](int k) { return is_r_spin(r, k); });
}

/**
 * Minimal representatives of the image of W_G^0 in W_G / W_{L_P}.
 * Build once per parabolic when testing many refinements.
 */
class WeylSpinTable {
 public:
  explicit WeylSpinTable(const SpinParabolic& p) : parabolic_(p) {
    for (const auto& w : all_signed_perms(p.rank())) reps_.insert(coset_min_rep(embed_wg0(w), p));
  }
  bool contains(const Perm& s) const { return reps_.count(coset_min_rep(s, parabolic_)) != 0; }
  const std::set<Perm>& reps() const { return reps_; }
  const SpinParabolic& parabolic() const { return parabolic_; }

 private:
  SpinParabolic parabolic_;
  std::set<Perm> reps_;
};

enum class SpinMethod { Weyl, Combinatorial, Gamma };

inline bool is_P_spin(const Refinement& r, const Parabolic& p, SpinMethod method) {
  const SpinParabolic sp(p);
  if (sp.rank() != r.rank()) throw RankMismatch("is_P_spin: rank mismatch");
  switch (method) {
    case SpinMethod::Weyl:
      return WeylSpinTable(sp).contains(r.sigma());
    case SpinMethod::Combinatorial:
      return is_x_spin(r, sp.xp());
    case SpinMethod::Gamma: {
      const auto g = gamma(r);
      for (int k : sp.xp())
        if (!g.preserves_prefix(k)) return false;
      return true;
    }
  }
  return false;
}

struct SpinProfile {
  std::set<int> spin_set;
  SpinParabolic optimal;
};

inline SpinProfile optimal_parabolic(const Refinement& r) {
  auto x = spin_set(r);
  return {x, SpinParabolic::from_xp(x, r.rank())};
}

struct Stratum {
  SpinParabolic parabolic;
  std::vector<Refinement> members;
};

struct StratifyOptions {
  int bound = 5;
  unsigned threads = 1;
};

/// Partition of S_2n by optimal spin parabolic; every spin parabolic gets a row.
inline std::vector<Stratum> stratify(int n, StratifyOptions opts = {}) {
  detail::require_rank(n);
  if (n > opts.bound)
    throw BoundExceeded("rank " + std::to_string(n) + " exceeds enumeration bound " + std::to_string(opts.bound));
  const int size = 2 * n;
  // Work is split by the value of sigma(1).
  auto classify_prefix = [size](int first) {
    std::map<std::set<int>, std::vector<Refinement>> buckets;
    std::vector<int> rest;
    for (int v = 1; v <= size; ++v)
      if (v != first) rest.push_back(v);
    do {
      std::vector<int> img{first};
      img.insert(img.end(), rest.begin(), rest.end());
      Refinement r{Perm(std::move(img))};
      buckets[spin_set(r)].push_back(std::move(r));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return buckets;
  };

  std::vector<std::map<std::set<int>, std::vector<Refinement>>> parts(static_cast<std::size_t>(size));
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    for (int f = 1; f <= size; ++f) parts[f - 1] = classify_prefix(f);
  } else {
    std::vector<std::future<std::map<std::set<int>, std::vector<Refinement>>>> jobs;
    for (int f = 1; f <= size; ++f) jobs.push_back(std::async(std::launch::async, classify_prefix, f));
    for (int f = 1; f <= size; ++f) parts[f - 1] = jobs[f - 1].get();
  }

  std::vector<Stratum> out;
  for (const auto& p : all_spin_parabolics(n)) {
    Stratum s{p, {}};
    const auto x = p.xp();
    for (auto& part : parts) {
      auto it = part.find(x);
      if (it != part.end()) s.members.insert(s.members.end(), it->second.begin(), it->second.end());
    }
    std::sort(s.members.begin(), s.members.end());
    out.push_back(std::move(s));
  }
  return out;
}

/** A P-parahoric refinement: a coset of W_G / W_{L_P}. */
struct ParahoricRefinement {
  LeviCoset coset;

  int rank() const { return coset.parabolic().rank(); }
  std::string to_string() const { return coset.to_string(); }
  friend bool operator==(const ParahoricRefinement&, const ParahoricRefinement&) = default;
};

inline ParahoricRefinement parahoric_restrict(const Refinement& r, const Parabolic& p) {
  if (p.rank() != r.rank()) throw RankMismatch("parahoric_restrict: rank mismatch");
  return {LeviCoset(r.sigma(), p)};
}

/// Iwahori refinements restricting to pr.
inline std::vector<Refinement> extensions(const ParahoricRefinement& pr) {
  std::vector<Refinement> out;
  for (auto& s : pr.coset.members()) out.emplace_back(std::move(s));
  return out;
}

inline bool parahoric_is_spin(const ParahoricRefinement& pr) {
  const SpinParabolic sp(pr.coset.parabolic());
  return is_x_spin(Refinement(pr.coset.rep()), sp.xp());
}

struct SwitchStep {
  int i;
  int j;
  Refinement result;
};

/**
 * Transposes slots (i, j) of an optimally X-spin refinement so that it
 * becomes (X u {i})-spin, i being the least index outside X.
 */
inline SwitchStep improve_spin_step(const Refinement& r) {
  const int n = r.rank();
  const auto x = spin_set(r);
  if (static_cast<int>(x.size()) == n) throw std::invalid_argument("refinement is already B-spin");
  int i = 1;
  while (x.count(i)) ++i;
  const auto& s = r.sigma();
  const int j = s.inverse()(2 * n + 1 - s(2 * n + 1 - i));
  auto above = x.upper_bound(i - 1);
  const int k = above == x.end() ? 2 * n - i : *above;
  if (j < i + 1 || j > k)
    throw std::logic_error("switching index j=" + std::to_string(j) + " outside [" + std::to_string(i + 1) + "," +
                           std::to_string(k) + "] for " + r.to_string());
  Refinement next(s * Perm::transposition(s.size(), i, j));
  auto grown = x;
  grown.insert(i);
  if (!is_x_spin(next, grown)) throw std::logic_error("switching step did not improve " + r.to_string());
  return {i, j, std::move(next)};
}

struct SwitchPath {
  std::vector<std::pair<int, int>> tau;
  Refinement result;
};

/// Repeated improve_spin_step until B-spin; result sigma equals sigma * tau.
inline SwitchPath to_B_spin(const Refinement& r) {
  const int n = r.rank();
  const auto start = spin_set(r);
  SwitchPath path{{}, r};
  while (static_cast<int>(spin_set(path.result).size()) < n) {
    const auto running = spin_set(path.result);
    auto step = improve_spin_step(path.result);
    for (int x : running)
      if (step.i <= x && x < step.j) throw std::logic_error("switching window straddles a spin index");
    path.tau.emplace_back(step.i, step.j);
    path.result = std::move(step.result);
  }
  if (static_cast<int>(path.tau.size()) > n - static_cast<int>(start.size()))
    throw std::logic_error("switching used too many transpositions");
  return path;
}

}  // namespace pspin
