#pragma once

#include "numbers.hpp"
#include "parabolic.hpp"
#include "perm.hpp"
#include "refine.hpp"
#include "satake.hpp"

#include <json.hpp>

// JSON encodings. Permutations and refinements are one-line strings,
// rationals are "a" or "a/b" strings, monomials are exponent objects.

namespace nlohmann {

template <>
struct adl_serializer<pspin::Rational> {
  template <typename J>
  static void to_json(J& j, const pspin::Rational& q) { j = pspin::to_string(q); }
  template <typename J>
  static pspin::Rational from_json(const J& j) { return pspin::parse_rational(j.template get<std::string>()); }
};

template <>
struct adl_serializer<pspin::Perm> {
  template <typename J>
  static void to_json(J& j, const pspin::Perm& s) { j = s.to_string(); }
  template <typename J>
  static pspin::Perm from_json(const J& j) { return pspin::Perm::parse(j.template get<std::string>()); }
};

template <>
struct adl_serializer<pspin::Refinement> {
  template <typename J>
  static void to_json(J& j, const pspin::Refinement& r) { j = r.to_string(); }
  template <typename J>
  static pspin::Refinement from_json(const J& j) { return pspin::Refinement::parse(j.template get<std::string>()); }
};

template <>
struct adl_serializer<pspin::SatakeMonomial> {
  template <typename J>
  static void to_json(J& j, const pspin::SatakeMonomial& m) {
    j = J{{"half_p", m.half_p()}, {"theta", m.theta_exponents()}, {"eta", m.eta_exponent()}};
  }
  template <typename J>
  static pspin::SatakeMonomial from_json(const J& j) {
    return {j.at("half_p").template get<std::int64_t>(), j.at("theta").template get<std::vector<std::int64_t>>(),
            j.at("eta").template get<std::int64_t>()};
  }
};

template <>
struct adl_serializer<pspin::ValuationProfile> {
  template <typename J>
  static void to_json(J& j, const pspin::ValuationProfile& v) {
    j = J{{"t", v.t}, {"eta", v.eta_val}, {"sw", v.sw}};
  }
  template <typename J>
  static pspin::ValuationProfile from_json(const J& j) {
    return {j.at("t").template get<std::vector<pspin::Rational>>(), j.at("eta").template get<pspin::Rational>(),
            j.at("sw").template get<std::int64_t>()};
  }
};

/// {"n": 2, "parabolic": "2,2"}
template <>
struct adl_serializer<pspin::SpinParabolic> {
  template <typename J>
  static void to_json(J& j, const pspin::SpinParabolic& p) { j = J{{"n", p.rank()}, {"parabolic", p.label()}}; }
  template <typename J>
  static pspin::SpinParabolic from_json(const J& j) {
    return pspin::parse_spin_parabolic(j.at("parabolic").template get<std::string>(), j.at("n").template get<int>());
  }
};

}  // namespace nlohmann
