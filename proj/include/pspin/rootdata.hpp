#pragma once

#include "errors.hpp"

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace pspin {

/**
 * Integer vector in a fixed basis. The tag keeps characters and cocharacters
 * of the two groups from being mixed up.
 */
template <class Tag>
class LatticeVector {
 public:
  using value_type = std::int64_t;

  LatticeVector() = default;
  explicit LatticeVector(std::vector<value_type> coeffs) : coeffs_(std::move(coeffs)) {}
  LatticeVector(std::initializer_list<value_type> coeffs) : coeffs_(coeffs) {}

  static LatticeVector zero(std::size_t len) { return LatticeVector(std::vector<value_type>(len, 0)); }
  /// i-th standard basis vector (0-based slot).
  static LatticeVector basis(std::size_t len, std::size_t slot) {
    auto v = zero(len);
    v.coeffs_.at(slot) = 1;
    return v;
  }

  std::size_t size() const { return coeffs_.size(); }
  const std::vector<value_type>& coeffs() const { return coeffs_; }
  value_type operator[](std::size_t i) const { return coeffs_[i]; }
  value_type& operator[](std::size_t i) { return coeffs_[i]; }

  LatticeVector& operator+=(const LatticeVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(LatticeVector a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend LatticeVector operator*(value_type k, LatticeVector a) {
    for (auto& c : a.coeffs_) c *= k;
    return a;
  }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

 private:
  void check_size(const LatticeVector& o) const {
    if (o.size() != size()) throw RankMismatch("lattice vectors of different length");
  }
  std::vector<value_type> coeffs_;
};

struct GLCharacterTag {};
struct GLCocharacterTag {};
struct GSpinCharacterTag {};
struct GSpinCocharacterTag {};

/// Coordinates in e_1..e_2n.
using GLCharacter = LatticeVector<GLCharacterTag>;
/// Coordinates in e_1*..e_2n*.
using GLCocharacter = LatticeVector<GLCocharacterTag>;
/// Coordinates in f_0, f_1..f_n (slot 0 is f_0).
using GSpinCharacter = LatticeVector<GSpinCharacterTag>;
/// Coordinates in f_0*, f_1*..f_n*.
using GSpinCocharacter = LatticeVector<GSpinCocharacterTag>;

enum class Group { GL, GSpin };

namespace detail {
inline void require_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
}
template <class V>
void require_len(const V& v, std::size_t len, const char* what) {
  if (v.size() != len)
    throw RankMismatch(std::string(what) + ": expected length " + std::to_string(len) + ", got " +
                       std::to_string(v.size()));
}
}  // namespace detail

/// Dual-basis pairing <e_i, e_j*> = delta_ij.
inline std::int64_t pairing(const GLCharacter& mu, const GLCocharacter& nu) {
  detail::require_len(nu, mu.size(), "pairing");
  return std::inner_product(mu.coeffs().begin(), mu.coeffs().end(), nu.coeffs().begin(), std::int64_t{0});
}

inline std::int64_t pairing(const GSpinCharacter& mu, const GSpinCocharacter& nu) {
  detail::require_len(nu, mu.size(), "pairing");
  return std::inner_product(mu.coeffs().begin(), mu.coeffs().end(), nu.coeffs().begin(), std::int64_t{0});
}

/// f_i -> e_i - e_{2n+1-i}, f_0 -> e_{n+1} + ... + e_{2n}.
inline GLCharacter jmath_char(const GSpinCharacter& mu, int n) {
  detail::require_rank(n);
  detail::require_len(mu, static_cast<std::size_t>(n) + 1, "jmath_char");
  auto out = GLCharacter::zero(2 * n);
  for (int j = n; j < 2 * n; ++j) out[j] += mu[0];
  for (int i = 1; i <= n; ++i) {
    out[i - 1] += mu[i];
    out[2 * n - i] -= mu[i];
  }
  return out;
}

/// Coefficient of f_i* is the pairing of jmath(f_i) with nu.
inline GSpinCocharacter jmath_vee_cochar(const GLCocharacter& nu, int n) {
  detail::require_rank(n);
  detail::require_len(nu, 2 * static_cast<std::size_t>(n), "jmath_vee_cochar");
  auto out = GSpinCocharacter::zero(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = pairing(jmath_char(GSpinCharacter::basis(n + 1, i), n), nu);
  return out;
}

/// e_i - e_j for i < j.
inline std::vector<GLCharacter> positive_roots_gl(int n) {
  detail::require_rank(n);
  std::vector<GLCharacter> roots;
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i + 1; j < 2 * n; ++j) {
      auto r = GLCharacter::zero(2 * n);
      r[i] = 1;
      r[j] = -1;
      roots.push_back(r);
    }
  return roots;
}

/// f_i, and f_i +- f_j for i < j.
inline std::vector<GSpinCharacter> positive_roots_gspin(int n) {
  detail::require_rank(n);
  std::vector<GSpinCharacter> roots;
  for (int i = 1; i <= n; ++i) roots.push_back(GSpinCharacter::basis(n + 1, i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto fi = GSpinCharacter::basis(n + 1, i);
      auto fj = GSpinCharacter::basis(n + 1, j);
      roots.push_back(fi + fj);
      roots.push_back(fi - fj);
    }
  return roots;
}

/// a_i = e_i - e_{i+1}, i = 1..2n-1.
inline std::vector<GLCharacter> simple_roots_gl(int n) {
  detail::require_rank(n);
  std::vector<GLCharacter> out;
  for (int i = 0; i + 1 < 2 * n; ++i) {
    auto r = GLCharacter::zero(2 * n);
    r[i] = 1;
    r[i + 1] = -1;
    out.push_back(r);
  }
  return out;
}

/// b_i = f_i - f_{i+1} for i < n, b_n = f_n.
inline std::vector<GSpinCharacter> simple_roots_gspin(int n) {
  detail::require_rank(n);
  std::vector<GSpinCharacter> out;
  for (int i = 1; i < n; ++i) out.push_back(GSpinCharacter::basis(n + 1, i) - GSpinCharacter::basis(n + 1, i + 1));
  out.push_back(GSpinCharacter::basis(n + 1, n));
  return out;
}

/** Doubled half-sum of positive roots, 2*rho, kept integral. */
inline GLCharacter two_rho_gl(int n) {
  auto acc = GLCharacter::zero(2 * static_cast<std::size_t>(n));
  for (const auto& r : positive_roots_gl(n)) acc += r;
  return acc;
}

inline GSpinCharacter two_rho_gspin(int n) {
  auto acc = GSpinCharacter::zero(static_cast<std::size_t>(n) + 1);
  for (const auto& r : positive_roots_gspin(n)) acc += r;
  return acc;
}

/// Returns sw(lambda) when every pair sum lambda_i + lambda_{2n+1-i} agrees.
inline std::optional<std::int64_t> is_pure(const GLCharacter& lambda) {
  const std::size_t len = lambda.size();
  if (len == 0 || len % 2 != 0) return std::nullopt;
  const auto sw = lambda[0] + lambda[len - 1];
  for (std::size_t i = 1; i < len / 2; ++i)
    if (lambda[i] + lambda[len - 1 - i] != sw) return std::nullopt;
  return sw;
}

/// The unique mu with jmath(mu) = lambda, if lambda is pure.
inline std::optional<GSpinCharacter> jmath_preimage(const GLCharacter& lambda) {
  auto sw = is_pure(lambda);
  if (!sw) return std::nullopt;
  const int n = static_cast<int>(lambda.size() / 2);
  auto mu = GSpinCharacter::zero(n + 1);
  mu[0] = *sw;
  for (int i = 1; i <= n; ++i) mu[i] = lambda[i - 1];
  return mu;
}

/** A pure GL character together with its purity weight. */
class PureWeight {
 public:
  explicit PureWeight(GLCharacter lambda) : lambda_(std::move(lambda)) {
    auto sw = is_pure(lambda_);
    if (!sw) throw std::invalid_argument("weight is not pure");
    sw_ = *sw;
  }
  PureWeight(std::initializer_list<std::int64_t> c) : PureWeight(GLCharacter(c)) {}

  static PureWeight zero(int n) { return PureWeight(GLCharacter::zero(2 * static_cast<std::size_t>(n))); }

  int rank() const { return static_cast<int>(lambda_.size() / 2); }
  std::int64_t sw() const { return sw_; }
  const GLCharacter& character() const { return lambda_; }
  /// 1-based coordinate.
  std::int64_t at(int i) const { return lambda_[static_cast<std::size_t>(i - 1)]; }
  /// lambda_1 + ... + lambda_k
  std::int64_t partial_sum(int k) const {
    std::int64_t s = 0;
    for (int i = 1; i <= k; ++i) s += at(i);
    return s;
  }
  bool dominant() const {
    for (std::size_t i = 0; i + 1 < lambda_.size(); ++i)
      if (lambda_[i] < lambda_[i + 1]) return false;
    return true;
  }

  friend bool operator==(const PureWeight&, const PureWeight&) = default;

 private:
  GLCharacter lambda_;
  std::int64_t sw_ = 0;
};

}  // namespace pspin
