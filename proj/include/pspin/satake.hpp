#pragma once

#include "errors.hpp"
#include "numbers.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace pspin {

/**
 * p^{half_p/2} * prod theta_i^{theta[i]} * eta^{eta}, with theta_1..theta_2n
 * and eta formal symbols.
 */
class SatakeMonomial {
 public:
  explicit SatakeMonomial(int n) : theta_(2 * static_cast<std::size_t>(n), 0) {
    if (n < 1) throw std::invalid_argument("rank must be at least 1");
  }
  SatakeMonomial(std::int64_t half_p, std::vector<std::int64_t> theta, std::int64_t eta)
      : half_p_(half_p), theta_(std::move(theta)), eta_(eta) {
    if (theta_.empty() || theta_.size() % 2 != 0) throw std::invalid_argument("theta vector must have length 2n");
  }

  static SatakeMonomial one(int n) { return SatakeMonomial(n); }
  /// theta_i, 1-based.
  static SatakeMonomial theta(int n, int i) {
    SatakeMonomial m(n);
    m.theta_.at(static_cast<std::size_t>(i - 1)) = 1;
    return m;
  }
  static SatakeMonomial eta(int n) {
    SatakeMonomial m(n);
    m.eta_ = 1;
    return m;
  }
  /// p^{half/2}
  static SatakeMonomial p_half(int n, std::int64_t half) {
    SatakeMonomial m(n);
    m.half_p_ = half;
    return m;
  }

  int rank() const { return static_cast<int>(theta_.size() / 2); }
  std::int64_t half_p() const { return half_p_; }
  const std::vector<std::int64_t>& theta_exponents() const { return theta_; }
  std::int64_t theta_exponent(int i) const { return theta_[static_cast<std::size_t>(i - 1)]; }
  std::int64_t eta_exponent() const { return eta_; }

  SatakeMonomial& operator*=(const SatakeMonomial& o) {
    check(o);
    half_p_ += o.half_p_;
    for (std::size_t i = 0; i < theta_.size(); ++i) theta_[i] += o.theta_[i];
    eta_ += o.eta_;
    return *this;
  }
  SatakeMonomial& operator/=(const SatakeMonomial& o) { return *this *= o.inverse(); }
  friend SatakeMonomial operator*(SatakeMonomial a, const SatakeMonomial& b) { return a *= b; }
  friend SatakeMonomial operator/(SatakeMonomial a, const SatakeMonomial& b) { return a /= b; }

  SatakeMonomial inverse() const {
    SatakeMonomial m = *this;
    m.half_p_ = -m.half_p_;
    for (auto& e : m.theta_) e = -e;
    m.eta_ = -m.eta_;
    return m;
  }
  SatakeMonomial pow(std::int64_t k) const {
    SatakeMonomial m = *this;
    m.half_p_ *= k;
    for (auto& e : m.theta_) e *= k;
    m.eta_ *= k;
    return m;
  }

  /**
   * Trades theta_i theta_{2n+1-i} for eta, pair by pair from i = 1, until
   * one exponent in each pair is zero.
   */
  SatakeMonomial normal_form() const {
    SatakeMonomial m = *this;
    const std::size_t len = theta_.size();
    for (std::size_t i = 0; i < len / 2; ++i) {
      const auto k = std::min(m.theta_[i], m.theta_[len - 1 - i]);
      m.theta_[i] -= k;
      m.theta_[len - 1 - i] -= k;
      m.eta_ += k;
    }
    return m;
  }
  bool spin_equal(const SatakeMonomial& o) const { return normal_form() == o.normal_form(); }

  /// Replace theta_a by the given monomial.
  SatakeMonomial substitute_theta(int a, const SatakeMonomial& value) const {
    SatakeMonomial m = *this;
    const auto e = m.theta_.at(static_cast<std::size_t>(a - 1));
    m.theta_[a - 1] = 0;
    return m * value.pow(e);
  }

  /// v_p under the given theta valuations t and eta valuation.
  Rational valuation(const std::vector<Rational>& t, const Rational& eta_val) const {
    if (t.size() != theta_.size()) throw RankMismatch("valuation profile length");
    Rational v(half_p_, 2);
    for (std::size_t i = 0; i < theta_.size(); ++i) v += t[i] * theta_[i];
    v += eta_val * eta_;
    return v;
  }

  bool is_one() const {
    return half_p_ == 0 && eta_ == 0 && std::all_of(theta_.begin(), theta_.end(), [](auto e) { return e == 0; });
  }

  /// "p^{-3/2} * θ_1 * θ_2^{-1} * η^2"; the empty product prints as "1".
  std::string to_string() const {
    std::vector<std::string> parts;
    if (half_p_ != 0) {
      if (half_p_ % 2 == 0) {
        parts.push_back(half_p_ == 2 ? "p" : "p^{" + std::to_string(half_p_ / 2) + "}");
      } else {
        parts.push_back("p^{" + std::to_string(half_p_) + "/2}");
      }
    }
    auto power = [](const std::string& base, std::int64_t e) {
      return e == 1 ? base : base + "^{" + std::to_string(e) + "}";
    };
    for (std::size_t i = 0; i < theta_.size(); ++i)
      if (theta_[i] != 0) parts.push_back(power("θ_" + std::to_string(i + 1), theta_[i]));
    if (eta_ != 0) parts.push_back(power("η", eta_));
    if (parts.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " * " : "") << parts[i];
    return os.str();
  }

  friend bool operator==(const SatakeMonomial&, const SatakeMonomial&) = default;
  friend auto operator<=>(const SatakeMonomial&, const SatakeMonomial&) = default;

 private:
  void check(const SatakeMonomial& o) const {
    if (o.theta_.size() != theta_.size()) throw RankMismatch("monomials of different rank");
  }
  std::int64_t half_p_ = 0;
  std::vector<std::int64_t> theta_;
  std::int64_t eta_ = 0;
};

/** p-adic valuations of the Satake symbols. */
struct ValuationProfile {
  std::vector<Rational> t;  ///< v_p(theta_i), i = 1..2n
  Rational eta_val;         ///< v_p(eta)
  std::int64_t sw = 0;

  int rank() const { return static_cast<int>(t.size() / 2); }
  bool pure() const {
    const std::size_t len = t.size();
    for (std::size_t i = 0; i < len / 2; ++i)
      if (t[i] + t[len - 1 - i] != eta_val) return false;
    return true;
  }
  /// Valuation of the finite-order twist eta * p^{sw}.
  Rational eta0_val() const { return eta_val + sw; }
  Rational operator()(const SatakeMonomial& m) const { return m.valuation(t, eta_val); }
  friend bool operator==(const ValuationProfile&, const ValuationProfile&) = default;
};

}  // namespace pspin
