#pragma once

#include "errors.hpp"
#include "parabolic.hpp"
#include "perm.hpp"
#include "ratfunc.hpp"
#include "weyl.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace pspin {

namespace detail {
inline void require_lower_simple(int a, int n) {
  if (a < n + 1 || a > 2 * n - 1)
    throw std::invalid_argument("simple reflection s_" + std::to_string(a) + " outside the lower block [" +
                                std::to_string(n + 1) + "," + std::to_string(2 * n - 1) + "]");
}
}  // namespace detail

/// c_s(theta^nu) = (1 - p^{-1} x)/(1 - x) with x = theta_{nu(a)}/theta_{nu(a+1)}.
inline RatFunc c_s(int a, const Perm& twist) {
  const int n = twist.size() / 2;
  detail::require_lower_simple(a, n);
  const auto ta = RatFunc::theta(n, twist(a));
  const auto tb = RatFunc::theta(n, twist(a + 1));
  const auto x = ta / tb;
  const auto one = RatFunc::constant(n, 1);
  return (one - RatFunc::p_inv(n) * x) / (one - x);
}

/** sum_w coeff_w f_w^nu in Ind theta^nu. */
struct PSVector {
  Perm twist;
  std::map<Perm, RatFunc> terms;

  int rank() const { return twist.size() / 2; }
  void add(const Perm& w, const RatFunc& c) {
    auto [it, fresh] = terms.try_emplace(w, c);
    if (!fresh) it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  friend bool operator==(const PSVector&, const PSVector&) = default;
};

/// The Casselman intertwining T_s^nu, landing in Ind theta^{nu s^{-1}}.
inline PSVector T_s(const PSVector& v, int a) {
  const int n = v.rank();
  const auto s = Perm::simple(2 * n, a);
  const auto c = c_s(a, v.twist);
  const auto one = RatFunc::constant(n, 1), p_inv = RatFunc::p_inv(n);
  PSVector out{v.twist * s, {}};
  for (const auto& [w, coeff] : v.terms) {
    const auto sw = s * w;
    if (bruhat_length(sw) > bruhat_length(w)) {
      out.add(sw, coeff * p_inv);
      out.add(w, coeff * (c - one));
    } else {
      out.add(sw, coeff);
      out.add(w, coeff * (c - p_inv));
    }
  }
  return out;
}

/** sum_[w] coeff h_[w]^nu, with h_[w] the sum of f_w' over the coset. */
struct ParahoricVector {
  Perm twist;
  Parabolic parabolic;
  std::map<LeviCoset, RatFunc> terms;

  int rank() const { return twist.size() / 2; }
  void add(const LeviCoset& c, const RatFunc& x) {
    auto [it, fresh] = terms.try_emplace(c, x);
    if (!fresh) it->second += x;
    if (it->second.is_zero()) terms.erase(it);
  }
  PSVector expand() const {
    PSVector out{twist, {}};
    for (const auto& [coset, x] : terms)
      for (const auto& w : coset.members()) out.add(w, x);
    return out;
  }
};

/// T_s on parahoric vectors, one trichotomy case per coset.
inline ParahoricVector T_s(const ParahoricVector& v, int a) {
  const int n = v.rank();
  const auto s = Perm::simple(2 * n, a);
  const auto c = c_s(a, v.twist);
  const auto one = RatFunc::constant(n, 1), p_inv = RatFunc::p_inv(n);
  ParahoricVector out{v.twist * s, v.parabolic, {}};
  for (const auto& [coset, x] : v.terms) {
    switch (simple_trichotomy(a, coset)) {
      case Trichotomy::Permutes:
        out.add(coset, x * c);
        break;
      case Trichotomy::AllLonger:
        out.add(LeviCoset(s * coset.rep(), v.parabolic), x * p_inv);
        out.add(coset, x * (c - one));
        break;
      case Trichotomy::AllShorter:
        out.add(LeviCoset(s * coset.rep(), v.parabolic), x);
        out.add(coset, x * (c - p_inv));
        break;
    }
  }
  return out;
}

/** A coset rho W_k in S_n, k a composition of n. */
class CompositionCoset {
 public:
  CompositionCoset(const Perm& rho, std::vector<int> k) : k_(std::move(k)) {
    if (std::accumulate(k_.begin(), k_.end(), 0) != rho.size()) throw RankMismatch("composition does not sum to n");
    auto v = rho.images();
    int start = 0;
    for (int len : k_) {
      std::sort(v.begin() + start, v.begin() + start + len);
      start += len;
    }
    rep_ = Perm(std::move(v));
  }
  const Perm& rep() const { return rep_; }
  const std::vector<int>& composition() const { return k_; }
  bool is_trivial() const { return rep_.is_identity(); }
  /// "{12}⊔{3}", listing the values on each block.
  std::string to_string() const {
    std::ostringstream os;
    int pos = 1;
    for (std::size_t b = 0; b < k_.size(); ++b) {
      os << (b ? "⊔" : "") << "{";
      for (int i = 0; i < k_[b]; ++i, ++pos) os << (rep_.size() > 9 && i ? "," : "") << rep_(pos);
      os << "}";
    }
    return os.str();
  }
  friend bool operator==(const CompositionCoset&, const CompositionCoset&) = default;
  friend auto operator<=>(const CompositionCoset& a, const CompositionCoset& b) { return a.rep_ <=> b.rep_; }

 private:
  Perm rep_;
  std::vector<int> k_;
};

/// P contained in the (n,n)-parabolic.
inline bool contained_in_Q(const Parabolic& p) { return !p.contains_root(p.rank()); }

/// (k_1..k_r) with P of type (k_1..k_r,k_r..k_1).
inline std::vector<int> half_composition(const SpinParabolic& p) {
  if (!contained_in_Q(p)) throw std::invalid_argument("parabolic " + p.label() + " is not contained in Q");
  auto parts = p.composition();
  parts.resize(parts.size() / 2);
  return parts;
}

/// w(rho) = [[0, w_n], [rho, 0]]: j -> n + rho(j), n + j -> n + 1 - j.
inline Perm w_of(const Perm& rho) {
  const int n = rho.size();
  std::vector<int> v(2 * static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    v[j - 1] = n + rho(j);
    v[n + j - 1] = n + 1 - j;
  }
  return Perm(std::move(v));
}

/// rho with [w] = [w(rho)], if the coset has that shape.
inline std::optional<Perm> rho_of(const LeviCoset& c) {
  const int n = c.rep().size() / 2;
  for (const auto& w : c.members()) {
    bool ok = true;
    for (int j = 1; j <= n && ok; ++j) ok = w(n + j) == n + 1 - j && w(j) > n;
    if (!ok) continue;
    std::vector<int> v;
    for (int j = 1; j <= n; ++j) v.push_back(w(j) - n);
    return Perm(std::move(v));
  }
  return std::nullopt;
}

/** The word w_n = s'_1 ... s'_c with s'_1..s'_b spanning the longest element of W_k. */
struct MTauWord {
  std::vector<int> letters;  ///< s'_i as indices in S_n
  int b = 0;
};

inline MTauWord m_tau_word(int n, const std::vector<int>& k) {
  std::vector<int> v(static_cast<std::size_t>(n));
  int start = 0;
  for (int len : k) {
    for (int i = 0; i < len; ++i) v[start + i] = start + len - i;
    start += len;
  }
  const Perm w0k(std::move(v));
  MTauWord out;
  out.letters = reduced_word(w0k);
  out.b = static_cast<int>(out.letters.size());
  const auto rest = reduced_word(w0k * Perm::longest(n));
  out.letters.insert(out.letters.end(), rest.begin(), rest.end());
  return out;
}

struct MTauExpansion {
  int n;
  std::vector<int> k;
  MTauWord word;
  Perm twist;                                     ///< tau
  RatFunc leading;                                ///< raw coefficient of [1]'
  std::vector<RatFunc> leading_factors;           ///< c_{s_i} for i <= b
  std::map<CompositionCoset, RatFunc> normalized; ///< coefficient of [1]' is 1
  ParahoricVector raw;
};

/// M_tau(H_[w_n]') as a combination of H^tau_x, x in W_n/W_k.
inline MTauExpansion m_tau_expansion(int n, const SpinParabolic& p) {
  if (p.rank() != n) throw RankMismatch("m_tau_expansion: parabolic rank");
  const auto k = half_composition(p);
  const auto word = m_tau_word(n, k);
  ParahoricVector v{Perm::identity(2 * n), p, {}};
  v.add(LeviCoset(w_of(Perm::longest(n)), p), RatFunc::constant(n, 1));
  std::vector<RatFunc> factors;
  for (int i = static_cast<int>(word.letters.size()); i >= 1; --i) {
    const int a = n + word.letters[i - 1];
    if (i <= word.b) factors.push_back(c_s(a, v.twist));
    v = T_s(v, a);
  }
  std::reverse(factors.begin(), factors.end());

  MTauExpansion out{n, k, word, v.twist, RatFunc(n), factors, {}, v};
  std::map<CompositionCoset, RatFunc> raw;
  for (const auto& [coset, x] : v.terms) {
    const auto rho = rho_of(coset);
    if (!rho) throw std::logic_error("M_tau produced a coset outside the w(rho) family: " + coset.to_string());
    raw.emplace(CompositionCoset(*rho, k), x);
  }
  const CompositionCoset one(Perm::identity(n), k);
  const auto it = raw.find(one);
  if (it == raw.end()) throw std::logic_error("M_tau expansion has no [1]' term");
  out.leading = it->second;
  for (const auto& [x, c] : raw) out.normalized.emplace(x, c / out.leading);
  return out;
}

/** p-exponents of the anti-diagonal matrix nu_beta(t) = p^{-beta} z_2^{-1} w_n z_1. */
struct AntiDiagonal {
  std::vector<std::int64_t> exps;  ///< exps[i-1]: p-power at (i, n+1-i)
  bool integral() const {
    return std::all_of(exps.begin(), exps.end(), [](auto e) { return e >= 0; });
  }
  friend bool operator==(const AntiDiagonal&, const AntiDiagonal&) = default;
};

inline AntiDiagonal nu_beta(const std::vector<std::int64_t>& z1, const std::vector<std::int64_t>& z2, std::int64_t beta) {
  if (z1.size() != z2.size()) throw RankMismatch("nu_beta: z1 and z2 differ in size");
  if (beta < 1) throw std::invalid_argument("beta must be positive");
  const std::size_t n = z1.size();
  AntiDiagonal out{std::vector<std::int64_t>(n)};
  for (std::size_t i = 0; i < n; ++i) out.exps[i] = -beta - z2[i] + z1[n - 1 - i];
  return out;
}

/// nu_beta at t_P^beta.
inline AntiDiagonal nu_beta(const Parabolic& p, std::int64_t beta) {
  const auto t = t_P(p);
  const int n = p.rank();
  std::vector<std::int64_t> z1, z2;
  for (int i = 0; i < n; ++i) {
    z1.push_back(beta * t[i]);
    z2.push_back(beta * t[n + i]);
  }
  return nu_beta(z1, z2, beta);
}

struct SupportVerdict {
  bool integral;
  int block_count;
  bool block_count_even;
  bool contained_in_Q;
  bool forced_vanishing;
};

/// Whether the zeta integral at u t_P^beta is forced to vanish, for every s.
inline SupportVerdict zeta_support_verdict(const SpinParabolic& p, std::int64_t beta) {
  const auto nu = nu_beta(p, beta);
  const int k = p.block_count();
  return {nu.integral(), k, k % 2 == 0, contained_in_Q(p), !nu.integral()};
}

/// [delta w_n]' = [1]', i.e. delta w_n lies in W_k.
inline bool factorisation_membership(const Perm& delta, const SpinParabolic& p) {
  const int n = delta.size();
  if (p.rank() != n) throw RankMismatch("factorisation_membership: parabolic rank");
  return CompositionCoset(delta * Perm::longest(n), half_composition(p)).is_trivial();
}

}  // namespace pspin
