#pragma once

#include <cmath>
#include <string_view>

#include "leodoppler/errors.hpp"

namespace leodoppler {

/// Slack allowed on inverse-trig arguments before rounding noise is treated
/// as a genuine domain violation.
inline constexpr double kUnitClampTolerance = 1e-12;

/// Clamps v into [-1, 1]. Values further than kUnitClampTolerance outside
/// throw DomainError naming `what`.
inline double clamp_unit(double v, std::string_view what = "argument") {
  if (!(std::abs(v) <= 1.0 + kUnitClampTolerance)) {
    throw DomainError(std::string(what) + " outside [-1, 1]");
  }
  return v > 1.0 ? 1.0 : (v < -1.0 ? -1.0 : v);
}

inline double safe_acos(double v, std::string_view what = "acos argument") {
  return std::acos(clamp_unit(v, what));
}

}  // namespace leodoppler
