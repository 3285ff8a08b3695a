#pragma once

#include "errors.hpp"
#include "poly.hpp"

#include <string>
#include <vector>

namespace pspin {

/**
 * Quotient of integer polynomials in p, theta_1..theta_2n (variable 0 is p,
 * variable i is theta_i). Always reduced, with a denominator whose
 * lex-leading coefficient is positive.
 */
class RatFunc {
 public:
  explicit RatFunc(int n = 1) : num_(2 * n + 1), den_(Poly::constant(2 * n + 1, 1)) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw PoleError("rational function with zero denominator");
    canonicalize();
  }

  static RatFunc constant(int n, const Integer& c) { return RatFunc(Poly::constant(2 * n + 1, c), Poly::constant(2 * n + 1, 1)); }
  static RatFunc p(int n) { return RatFunc(Poly::var(2 * n + 1, 0), Poly::constant(2 * n + 1, 1)); }
  static RatFunc p_inv(int n) { return RatFunc(Poly::constant(2 * n + 1, 1), Poly::var(2 * n + 1, 0)); }
  static RatFunc theta(int n, int i) { return RatFunc(Poly::var(2 * n + 1, i), Poly::constant(2 * n + 1, 1)); }

  int rank() const { return (num_.nvars() - 1) / 2; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw PoleError("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  /// Replace variable v (0 = p, i = theta_i) by value; throws PoleError if the denominator vanishes.
  RatFunc substitute(int v, const RatFunc& value) const {
    const int d = std::max(num_.degree(v), den_.degree(v));
    auto hom = [&](const Poly& f) {
      Poly r(f.nvars());
      for (const auto& [deg, c] : f.coeffs_in(v)) r += c * value.num_.pow(deg) * value.den_.pow(d - deg);
      return r;
    };
    Poly den = hom(den_);
    if (den.is_zero()) throw PoleError("substitution makes the denominator vanish");
    return RatFunc(hom(num_), std::move(den));
  }

  static std::vector<std::string> names(int n) {
    std::vector<std::string> out{"p"};
    for (int i = 1; i <= 2 * n; ++i) out.push_back("θ_" + std::to_string(i));
    return out;
  }

  /// "num" or "(num)/(den)".
  std::string to_string() const {
    const auto nm = names(rank());
    const bool unit_den = den_.is_constant() && den_.constant_value() == 1;
    if (unit_den) return num_.to_string(nm);
    return "(" + num_.to_string(nm) + ")/(" + den_.to_string(nm) + ")";
  }

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = Poly::constant(num_.nvars(), 1);
      return;
    }
    const Poly g = gcd(num_, den_);
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
    if (den_.leading().second < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  Poly num_;
  Poly den_;
};

}  // namespace pspin
