#pragma once

#include <numbers>

namespace recoil::constants {

inline constexpr double pi = std::numbers::pi;

// speed of light in vacuum [m/s], exact (SI 2019)
inline constexpr double c0 = 299792458.0;

// Planck constant [J s], exact (SI 2019)
inline constexpr double planck_h = 6.62607015e-34;

// reduced Planck constant [J s]
inline constexpr double hbar = planck_h / (2.0 * pi);

// vacuum permittivity [F/m], CODATA 2018
inline constexpr double eps0 = 8.8541878128e-12;

} // namespace recoil::constants
