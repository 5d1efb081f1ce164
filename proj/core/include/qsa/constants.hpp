#pragma once

#include <numbers>

namespace qsa {

inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double pi = std::numbers::pi;

// Gyromagnetic ratios and splittings, all in angular units (rad/s or rad/s/T).
namespace constants {

// NV electron spin.
inline constexpr double gamma_electron = two_pi * 28.0e9;  // rad/s/T

// Nuclear species coupled to the NV electron.
inline constexpr double gamma_n15 = -two_pi * 4.3156e6;  // rad/s/T
inline constexpr double gamma_c13 = two_pi * 10.7e6;     // rad/s/T

// Ground-state zero-field splitting of the electron spin.
inline constexpr double zero_field_splitting = two_pi * 2.87e9;  // rad/s

// Intrinsic 15N hyperfine coupling (secular component).
inline constexpr double a_parallel_n15 = two_pi * 3.05e6;  // rad/s

}  // namespace constants

inline constexpr double hz_to_angular(double f_hz) { return two_pi * f_hz; }
inline constexpr double angular_to_hz(double w) { return w / two_pi; }

}  // namespace qsa
