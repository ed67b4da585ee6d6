// Copyright 2026 The qnetsim Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef QNETSIM_CONSTANTS_HPP
#define QNETSIM_CONSTANTS_HPP

#include <numbers>

namespace qns {

// Exact SI defining constants (2019 redefinition).
namespace constants {

inline constexpr double c_m_per_s   = 299792458.0;        // speed of light
inline constexpr double h_J_s       = 6.62607015e-34;     // Planck constant
inline constexpr double k_B_J_per_K = 1.380649e-23;       // Boltzmann constant
inline constexpr double eps0_F_per_m = 8.8541878128e-12;  // vacuum permittivity

inline constexpr double pi = std::numbers::pi;
inline constexpr double hbar_J_s = h_J_s / (2.0 * pi);

// Wavenumber (cm^-1) -> angular frequency (rad/s): omega = 2*pi*c*100*k.
inline constexpr double rad_per_s_per_cm1 = 2.0 * pi * c_m_per_s * 100.0;

// "Second-radiation" style constant for phonon occupation in wavenumber
// units: h*c*100/k_B [cm*K], so that h*c*k/(k_B*T) = c2 * k_cm1 / T_K.
inline constexpr double c2_cm_K = h_J_s * c_m_per_s * 100.0 / k_B_J_per_K;

}  // namespace constants

}  // namespace qns

#endif  // QNETSIM_CONSTANTS_HPP
