#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pspin {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

/** Accepts "a" or "a/b". */
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

}  // namespace pspin
