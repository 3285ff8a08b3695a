#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pspin {

/** Two objects built for different ranks were combined. */
struct RankMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/** A textual permutation, composition or weight could not be parsed. */
struct ParseError : std::invalid_argument {
  ParseError(std::size_t pos, const std::string& what)
      : std::invalid_argument(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

/** A spin-only operation was handed a non-symmetric parabolic. */
struct NonSpinParabolic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/** Enumeration was asked for a rank above the configured bound. */
struct BoundExceeded : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/** A computation needed data (a slope, an index) that was not supplied. */
struct MissingData : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/** Substitution sent a denominator to zero. */
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace pspin
