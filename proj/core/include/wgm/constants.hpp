#pragma once

#include <numbers>

namespace wgm {

/// Vacuum speed of light (m/s), exact by SI definition.
inline constexpr double kSpeedOfLight = 299'792'458.0;

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

/// Angular frequency (rad/s) to cycles per second.
constexpr double rad_s_to_hz(double rate) { return rate / (2.0 * kPi); }

}  // namespace wgm
