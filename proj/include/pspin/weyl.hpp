#pragma once

#include "parabolic.hpp"
#include "perm.hpp"
#include "rootdata.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace pspin {

/// Sorting values inside each Levi block gives the Bruhat-minimal element of s W_{L_P}.
inline Perm coset_min_rep(const Perm& s, const Parabolic& p) {
  if (s.size() != p.size()) throw RankMismatch("coset_min_rep: size mismatch");
  auto v = s.images();
  const auto parts = p.composition();
  auto it = v.begin();
  for (int m : parts) {
    std::sort(it, it + m);
    it += m;
  }
  return Perm(std::move(v));
}

/** A coset s W_{L_P}, canonicalised to its minimal representative. */
class LeviCoset {
 public:
  LeviCoset(const Perm& s, Parabolic p) : rep_(coset_min_rep(s, p)), parabolic_(std::move(p)) {}

  const Perm& rep() const { return rep_; }
  const Parabolic& parabolic() const { return parabolic_; }

  /// Value sets of each block.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out;
    int pos = 1;
    for (int m : parabolic_.composition()) {
      std::vector<int> b;
      for (int k = 0; k < m; ++k) b.push_back(rep_(pos++));
      out.push_back(std::move(b));
    }
    return out;
  }

  /// Every element of the coset, in lexicographic order.
  std::vector<Perm> members() const {
    auto bl = blocks();
    std::vector<Perm> out;
    std::function<void(std::size_t, std::vector<int>&)> rec = [&](std::size_t b, std::vector<int>& acc) {
      if (b == bl.size()) {
        out.emplace_back(acc);
        return;
      }
      auto vals = bl[b];
      do {
        const auto mark = acc.size();
        acc.insert(acc.end(), vals.begin(), vals.end());
        rec(b + 1, acc);
        acc.resize(mark);
      } while (std::next_permutation(vals.begin(), vals.end()));
    };
    std::vector<int> acc;
    rec(0, acc);
    return out;
  }

  /// "{12}⊔{34}"; values are comma-separated when 2n > 9.
  std::string to_string() const {
    std::string out;
    const bool digits = rep_.size() <= 9;
    bool first_block = true;
    for (const auto& b : blocks()) {
      if (!first_block) out += "⊔";
      first_block = false;
      out += '{';
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (!digits && i) out += ',';
        out += std::to_string(b[i]);
      }
      out += '}';
    }
    return out;
  }

  friend bool operator==(const LeviCoset&, const LeviCoset&) = default;
  friend auto operator<=>(const LeviCoset&, const LeviCoset&) = default;

 private:
  Perm rep_;
  Parabolic parabolic_;
};

/// Every coset of W_G / W_{L_P}, ordered by representative.
inline std::vector<LeviCoset> all_cosets(const Parabolic& p) {
  std::vector<LeviCoset> out;
  for (const auto& s : all_perms(p.size())) {
    if (coset_min_rep(s, p) == s) out.emplace_back(s, p);
  }
  return out;
}

enum class Trichotomy { Permutes, AllShorter, AllLonger };

inline const char* to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::Permutes: return "Permutes";
    case Trichotomy::AllShorter: return "AllShorter";
    case Trichotomy::AllLonger: return "AllLonger";
  }
  return "?";
}

/// How left multiplication by s_a interacts with a coset.
inline Trichotomy simple_trichotomy(int a, const LeviCoset& c) {
  const int size = c.rep().size();
  if (a < 1 || a >= size) throw std::invalid_argument("simple reflection index out of range");
  const auto moved = Perm::simple(size, a) * c.rep();
  if (coset_min_rep(moved, c.parabolic()) == c.rep()) return Trichotomy::Permutes;
  return bruhat_length(moved) < bruhat_length(c.rep()) ? Trichotomy::AllShorter : Trichotomy::AllLonger;
}

/// mu^s(i) = mu(s(i)).
template <class Tag>
LatticeVector<Tag> act(const Perm& s, const LatticeVector<Tag>& mu) {
  if (static_cast<int>(mu.size()) != s.size()) throw RankMismatch("act: size mismatch");
  auto out = mu;
  for (int i = 1; i <= s.size(); ++i) out[i - 1] = mu[s(i) - 1];
  return out;
}

/**
 * Action of a signed permutation on coefficient vectors over f_0..f_n.
 * The sign changes act first (sgn_j: c_j -> c_0 - c_j), then the
 * permutation (c_k -> c_{perm(k)}). flip receives (c_0, c_j).
 */
template <class Coeff, class Flip>
std::vector<Coeff> gspin_act_coeffs(const SignedPerm& w, std::vector<Coeff> c, Flip flip) {
  const int n = w.rank();
  if (static_cast<int>(c.size()) != n + 1) throw RankMismatch("gspin action: rank mismatch");
  for (int i = 1; i <= n; ++i)
    if (w.sign(i) < 0) c[w.perm(i)] = flip(c[0], c[w.perm(i)]);
  std::vector<Coeff> out = c;
  for (int k = 1; k <= n; ++k) out[k] = c[w.perm(k)];
  return out;
}

inline GSpinCharacter gspin_weyl_act(const SignedPerm& w, const GSpinCharacter& chi) {
  auto c = gspin_act_coeffs(w, chi.coeffs(), [](auto c0, auto cj) { return c0 - cj; });
  return GSpinCharacter(std::move(c));
}

/// Dual action: sgn_j sends f_j* to f_0* - f_j* and fixes f_0*.
inline GSpinCocharacter gspin_cochar_act(const SignedPerm& w, const GSpinCocharacter& nu) {
  const int n = w.rank();
  if (static_cast<int>(nu.size()) != n + 1) throw RankMismatch("gspin cochar action: rank mismatch");
  auto d = nu.coeffs();
  for (int i = 1; i <= n; ++i)
    if (w.sign(i) < 0) {
      const int j = w.perm(i);
      d[0] += d[j];
      d[j] = -d[j];
    }
  auto out = d;
  for (int k = 1; k <= n; ++k) out[k] = d[w.perm(k)];
  return GSpinCocharacter(std::move(out));
}

}  // namespace pspin
