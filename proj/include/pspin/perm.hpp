#pragma once

#include "errors.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace pspin {

/**
 * A permutation of {1..N} in one-line notation. Composition is
 * (s*t)(i) = s(t(i)).
 */
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images) : images_(std::move(images)) { validate(); }
  Perm(std::initializer_list<int> images) : images_(images) { validate(); }

  static Perm identity(int size) {
    std::vector<int> v(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) v[i] = i + 1;
    return Perm(std::move(v));
  }
  /// The transposition swapping i and j.
  static Perm transposition(int size, int i, int j) {
    auto p = identity(size);
    std::swap(p.images_.at(i - 1), p.images_.at(j - 1));
    return p;
  }
  /// s_i = (i, i+1).
  static Perm simple(int size, int i) { return transposition(size, i, i + 1); }
  /// The longest element i -> N+1-i.
  static Perm longest(int size) {
    std::vector<int> v(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) v[i] = size - i;
    return Perm(std::move(v));
  }

  /**
   * Concatenated digits when every value is a single digit, otherwise
   * comma-separated. Errors carry the character position.
   */
  static Perm parse(const std::string& text) {
    std::vector<int> v;
    if (text.find(',') != std::string::npos) {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        auto next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        auto field = text.substr(pos, next - pos);
        if (field.empty() || !std::all_of(field.begin(), field.end(), ::isdigit))
          throw ParseError(pos, "expected a positive integer");
        v.push_back(std::stoi(field));
        pos = next + 1;
      }
    } else {
      for (std::size_t i = 0; i < text.size(); ++i) {
        if (!::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError(i, "expected a digit");
        v.push_back(text[i] - '0');
      }
    }
    if (v.empty()) throw ParseError(0, "empty permutation");
    std::vector<bool> seen(v.size() + 1, false);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 1 || v[i] > static_cast<int>(v.size()))
        throw ParseError(i, "value " + std::to_string(v[i]) + " out of range");
      if (seen[v[i]]) throw ParseError(i, "value " + std::to_string(v[i]) + " repeated");
      seen[v[i]] = true;
    }
    return Perm(std::move(v));
  }

  int size() const { return static_cast<int>(images_.size()); }
  /// 1-based evaluation.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Perm inverse() const {
    std::vector<int> v(images_.size());
    for (int i = 0; i < size(); ++i) v[images_[i] - 1] = i + 1;
    return Perm(std::move(v));
  }

  friend Perm operator*(const Perm& s, const Perm& t) {
    if (s.size() != t.size()) throw RankMismatch("composing permutations of different size");
    std::vector<int> v(t.images_.size());
    for (int i = 0; i < t.size(); ++i) v[i] = s.images_[t.images_[i] - 1];
    Perm out;
    out.images_ = std::move(v);
    return out;
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (images_[i] != i + 1) return false;
    return true;
  }

  std::string to_string() const {
    std::ostringstream os;
    const bool digits = size() <= 9;
    for (int i = 0; i < size(); ++i) {
      if (!digits && i > 0) os << ',';
      os << images_[i];
    }
    return os.str();
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  void validate() const {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
        throw std::invalid_argument("not a permutation");
      seen[v] = true;
    }
  }
  std::vector<int> images_;
};

/// Number of inversions.
inline int bruhat_length(const Perm& s) {
  int inv = 0;
  for (int i = 1; i <= s.size(); ++i)
    for (int j = i + 1; j <= s.size(); ++j)
      if (s(i) > s(j)) ++inv;
  return inv;
}

/// Indices i_1..i_l with s = s_{i_1} * ... * s_{i_l}.
inline std::vector<int> reduced_word(const Perm& s) {
  std::vector<int> word;
  Perm cur = s;
  for (;;) {
    int descent = 0;
    for (int i = 1; i < cur.size(); ++i)
      if (cur(i) > cur(i + 1)) {
        descent = i;
        break;
      }
    if (descent == 0) break;
    cur = cur * Perm::simple(cur.size(), descent);
    word.push_back(descent);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

/// Product of simple reflections in word order.
inline Perm word_product(int size, const std::vector<int>& word) {
  auto out = Perm::identity(size);
  for (int i : word) out = out * Perm::simple(size, i);
  return out;
}

/// All permutations of {1..size} in lexicographic order.
inline std::vector<Perm> all_perms(int size) {
  std::vector<int> v(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) v[i] = i + 1;
  std::vector<Perm> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/**
 * Element of the hyperoctahedral group {+-1}^n x S_n. perm[i] is the
 * underlying image of slot i, signs[i] whether that slot is flipped.
 */
class SignedPerm {
 public:
  SignedPerm(std::vector<int> perm, std::vector<int> signs) : perm_(std::move(perm)), signs_(std::move(signs)) {
    if (perm_.size() != signs_.size()) throw RankMismatch("signs and perm differ in length");
    Perm check(perm_);
    for (int s : signs_)
      if (s != 1 && s != -1) throw std::invalid_argument("sign must be +1 or -1");
  }

  static SignedPerm identity(int n) {
    return SignedPerm(Perm::identity(n).images(), std::vector<int>(static_cast<std::size_t>(n), 1));
  }
  /// The sign change in slot i alone.
  static SignedPerm sign_flip(int n, int i) {
    auto s = identity(n);
    s.signs_.at(i - 1) = -1;
    return s;
  }

  int rank() const { return static_cast<int>(perm_.size()); }
  int perm(int i) const { return perm_[i - 1]; }
  int sign(int i) const { return signs_[i - 1]; }
  const std::vector<int>& perm_images() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  /// Signed image of slot i, as an element of {-n..-1, 1..n}.
  int signed_image(int i) const { return i > 0 ? sign(i) * perm(i) : -sign(-i) * perm(-i); }

  /// Composition of signed permutations of {+-1..+-n}.
  friend SignedPerm operator*(const SignedPerm& s, const SignedPerm& t) {
    if (s.rank() != t.rank()) throw RankMismatch("composing signed permutations of different rank");
    std::vector<int> perm(s.perm_.size()), signs(s.perm_.size());
    for (int i = 1; i <= s.rank(); ++i) {
      const int v = s.signed_image(t.signed_image(i));
      perm[i - 1] = v > 0 ? v : -v;
      signs[i - 1] = v > 0 ? 1 : -1;
    }
    return SignedPerm(std::move(perm), std::move(signs));
  }

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

/// Signed slot i goes to perm(i), or to its mirror 2n+1-perm(i) when flipped.
inline Perm embed_wg0(const SignedPerm& s) {
  const int n = s.rank();
  std::vector<int> v(2 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int img = s.sign(i) > 0 ? s.perm(i) : 2 * n + 1 - s.perm(i);
    v[i - 1] = img;
    v[2 * n - i] = 2 * n + 1 - img;
  }
  return Perm(std::move(v));
}

inline std::optional<SignedPerm> in_wg0(const Perm& s) {
  if (s.size() % 2 != 0) return std::nullopt;
  const int n = s.size() / 2;
  std::vector<int> perm(n), signs(n);
  for (int i = 1; i <= n; ++i) {
    if (s(i) + s(2 * n + 1 - i) != 2 * n + 1) return std::nullopt;
    if (s(i) <= n) {
      perm[i - 1] = s(i);
      signs[i - 1] = 1;
    } else {
      perm[i - 1] = 2 * n + 1 - s(i);
      signs[i - 1] = -1;
    }
  }
  return SignedPerm(std::move(perm), std::move(signs));
}

/// Every signed permutation of rank n (2^n n! of them).
inline std::vector<SignedPerm> all_signed_perms(int n) {
  std::vector<SignedPerm> out;
  for (const auto& p : all_perms(n))
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> signs(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) signs[i] = (mask >> i) & 1u ? -1 : 1;
      out.emplace_back(p.images(), std::move(signs));
    }
  return out;
}

}  // namespace pspin
