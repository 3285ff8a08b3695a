#pragma once

#include "numbers.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pspin {

/**
 * Sparse multivariate polynomial with integer coefficients. Terms are kept
 * in lex order on exponent vectors, variable 0 most significant.
 */
class Poly {
 public:
  using Exps = std::vector<int>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(int nvars, const Integer& c) {
    Poly p(nvars);
    if (c != 0) p.terms_.emplace(Exps(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }
  static Poly var(int nvars, int i, int power = 1) {
    Poly p(nvars);
    Exps e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(i)) = power;
    p.terms_.emplace(std::move(e), Integer(1));
    return p;
  }
  static Poly monomial(const Exps& e, const Integer& c) {
    Poly p(static_cast<int>(e.size()));
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }

  int nvars() const { return nvars_; }
  const std::map<Exps, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && is_const_exps(terms_.begin()->first));
  }
  Integer constant_value() const {
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_.empty() ? Integer(0) : terms_.begin()->second;
  }
  /// Lex-leading term.
  const std::pair<const Exps, Integer>& leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    return *terms_.rbegin();
  }

  int degree(int v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
  }
  bool involves(int v) const { return degree(v) > 0; }

  Poly& operator+=(const Poly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.nvars_);
    Exps e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Integer& k) const {
    if (k == 0) return Poly(nvars_);
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c *= k;
    return r;
  }
  Poly pow(int k) const {
    Poly r = constant(nvars_, 1);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  /// Quotient if o divides this exactly, else nullopt.
  std::optional<Poly> divide_exact(const Poly& o) const {
    check(o);
    if (o.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly q(nvars_), r = *this;
    const auto& [eb, cb] = o.leading();
    Exps e(static_cast<std::size_t>(nvars_));
    while (!r.is_zero()) {
      const auto& [er, cr] = r.leading();
      for (int i = 0; i < nvars_; ++i) {
        e[i] = er[i] - eb[i];
        if (e[i] < 0) return std::nullopt;
      }
      if (cr % cb != 0) return std::nullopt;
      const auto t = monomial(e, cr / cb);
      q += t;
      r -= t * o;
    }
    return q;
  }

  /// Integer gcd of the coefficients, positive; zero for the zero polynomial.
  Integer integer_content() const {
    Integer g = 0;
    for (const auto& [e, c] : terms_) g = boost::multiprecision::gcd(g, c);
    return abs(g);
  }

  /// Coefficients as a polynomial in variable v.
  std::map<int, Poly> coeffs_in(int v) const {
    std::map<int, Poly> out;
    for (const auto& [e, c] : terms_) {
      Exps f = e;
      f[v] = 0;
      auto [it, fresh] = out.try_emplace(e[v], Poly(nvars_));
      it->second.add_term(f, c);
    }
    return out;
  }

  /// Replace variable v by value.
  Poly substitute(int v, const Poly& value) const {
    Poly r(nvars_);
    for (const auto& [deg, coeff] : coeffs_in(v)) r += coeff * value.pow(deg);
    return r;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      const bool bare = is_const_exps(e);
      if (mag != 1 || bare) os << mag;
      bool need_star = mag != 1;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (need_star) os << "*";
        os << names.at(static_cast<std::size_t>(i));
        if (e[i] != 1) os << "^" << e[i];
        need_star = true;
      }
    }
    return os.str();
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  static bool is_const_exps(const Exps& e) {
    for (int x : e)
      if (x != 0) return false;
    return true;
  }
  void check(const Poly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials over different variable sets");
  }
  void add_term(const Exps& e, const Integer& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int nvars_;
  std::map<Exps, Integer> terms_;
};

Poly gcd(const Poly& a, const Poly& b);

namespace detail {

inline Poly make_lead_positive(Poly p) {
  if (!p.is_zero() && p.leading().second < 0) p = -p;
  return p;
}

/// gcd of the coefficients of p viewed as a polynomial in v.
inline Poly content_in(const Poly& p, int v) {
  Poly g(p.nvars());
  for (const auto& [deg, c] : p.coeffs_in(v)) {
    g = gcd(g, c);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  return g;
}

inline Poly leading_in(const Poly& p, int v) { return p.coeffs_in(v).rbegin()->second; }

/// A multiple of the pseudo-remainder of a by b in v.
inline Poly pseudo_rem(Poly a, const Poly& b, int v) {
  const int db = b.degree(v);
  const Poly lb = leading_in(b, v);
  while (!a.is_zero() && a.degree(v) >= db) {
    const int da = a.degree(v);
    const Poly la = leading_in(a, v);
    a = a * lb - la * Poly::var(a.nvars(), v, da - db) * b;
  }
  return a;
}

}  // namespace detail

/// Greatest common divisor with positive lex-leading coefficient.
inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return detail::make_lead_positive(b);
  if (b.is_zero()) return detail::make_lead_positive(a);
  const int nv = a.nvars();
  int v = -1;
  for (int i = 0; i < nv && v < 0; ++i)
    if (a.involves(i) || b.involves(i)) v = i;
  if (v < 0) return Poly::constant(nv, boost::multiprecision::gcd(a.constant_value(), b.constant_value()));

  const Poly ca = detail::content_in(a, v), cb = detail::content_in(b, v);
  const Poly c = gcd(ca, cb);
  Poly pa = *a.divide_exact(ca), pb = *b.divide_exact(cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  Poly g(nv);
  while (true) {
    if (pb.degree(v) == 0) {
      g = Poly::constant(nv, 1);
      break;
    }
    Poly r = detail::pseudo_rem(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    pa = pb;
    pb = *r.divide_exact(detail::content_in(r, v));
  }
  if (!g.is_constant()) g = *g.divide_exact(detail::content_in(g, v));
  return detail::make_lead_positive(c * g);
}

}  // namespace pspin
