// Copyright 2026 The qnetsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Spontaneous Raman scattering in the conversion waveguide: Lorentzian
// susceptibility over a set of phonon modes, Bose-Einstein occupation,
// anharmonic temperature dependence of mode position/width, modal overlap,
// noise spectral density, and an ODE oracle for the photon-number evolution.
#ifndef QNETSIM_RAMAN_HPP
#define QNETSIM_RAMAN_HPP

#include <cmath>
#include <complex>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qnetsim/constants.hpp"

namespace qns {

// Bose-Einstein occupation of a phonon at |shift| (cm^-1) and temperature T.
inline double phonon_occupation(double shift_cm1, double temperature_k) {
  if (!(temperature_k > 0.0)) {
    throw std::domain_error("temperature must be positive");
  }
  if (shift_cm1 == 0.0) {
    throw std::domain_error("zero shift: occupation diverges");
  }
  const double x = constants::c2_cm_K * std::abs(shift_cm1) / temperature_k;
  return 1.0 / std::expm1(x);
}

// Occupancy factor entering the scattering rate. Convention: the shift is
// Omega = nu_scattered - nu_pump, so Omega < 0 is the red-shifted (Stokes)
// branch with factor 1 + <n>, Omega > 0 the blue-shifted (anti-Stokes)
// branch with factor <n>.
inline double occupancy_factor(double shift_cm1, double temperature_k) {
  const double n = phonon_occupation(shift_cm1, temperature_k);
  return shift_cm1 < 0.0 ? 1.0 + n : n;
}

// One Lorentzian phonon mode. omega0/gamma0 are the T = 0 reference values
// in cm^-1; `weight` is the oscillator weight in SI susceptibility units
// times (rad/s)^2, matching the internal angular-frequency normalization.
// B, C, D, K are the anharmonic temperature coefficients.
struct PhononMode {
  std::string label;
  double omega0_cm1 = 0.0;
  double gamma0_cm1 = 0.0;
  double weight = 0.0;
  double B_cm1 = 0.0;        // linewidth occupation coefficient
  double C_cm1_per_K2 = 0.0; // linewidth quadratic coefficient
  double D_cm1 = 0.0;        // frequency occupation coefficient
  double K_per_K = 0.0;      // frequency linear coefficient
  std::string source;
};

// Anharmonic model: both coefficients are driven by the occupation of the
// half-frequency two-phonon decay channel, n(omega(0)/2).
//   omega(T) = omega(0) * (1 + K*T) - D * (1 + 2 n(omega(0)/2))
//   gamma(T) = gamma(0) + B * (1 + 2 n(omega(0)/2)) + C * T^2
struct ModeAtTemperature {
  double omega_cm1 = 0.0;
  double gamma_cm1 = 0.0;
};

inline ModeAtTemperature mode_params_at_temperature(const PhononMode& mode,
                                                    double temperature_k) {
  if (!(temperature_k > 0.0)) {
    throw std::domain_error("temperature must be positive");
  }
  const double occ = 1.0 + 2.0 * phonon_occupation(mode.omega0_cm1 / 2.0,
                                                   temperature_k);
  ModeAtTemperature out;
  out.omega_cm1 = mode.omega0_cm1 * (1.0 + mode.K_per_K * temperature_k) -
                  mode.D_cm1 * occ;
  out.gamma_cm1 = mode.gamma0_cm1 + mode.B_cm1 * occ +
                  mode.C_cm1_per_K2 * temperature_k * temperature_k;
  return out;
}

struct RamanModel {
  std::vector<PhononMode> modes;
  double n_signal = 2.14;  // refractive index at the scattered wavelength
  double n_pump = 2.14;    // refractive index at the pump wavelength
  // Room-temperature reference at which the dominant modes sit near their
  // quoted positions; evaluation temperature is passed per call.
  double reference_temperature_k = 300.0;
};

// Raman susceptibility at shift Omega (cm^-1): a sum of Lorentzians
//   chi(Omega) = sum_j f_j / (omega_j^2 + 2 i gamma_j Omega - Omega^2)
// evaluated in angular rad/s units with temperature-shifted mode parameters.
inline std::complex<double> susceptibility(double shift_cm1,
                                           const RamanModel& model,
                                           double temperature_k) {
  const double conv = constants::rad_per_s_per_cm1;
  const double omega = shift_cm1 * conv;
  std::complex<double> chi(0.0, 0.0);
  for (const auto& mode : model.modes) {
    const auto mt = mode_params_at_temperature(mode, temperature_k);
    const double wj = mt.omega_cm1 * conv;
    const double gj = mt.gamma_cm1 * conv;
    const std::complex<double> denom(wj * wj - omega * omega,
                                     2.0 * gj * omega);
    chi += mode.weight / denom;
  }
  return chi;
}

// Modal overlap of two normalized Gaussian modes of waists w0 (pump) and
// ws (scattered): Theta = 2 / (pi (w0^2 + ws^2)).
inline double overlap_gaussian(double w0_m, double ws_m) {
  if (!(w0_m > 0.0) || !(ws_m > 0.0)) {
    throw std::domain_error("waists must be positive");
  }
  return 2.0 / (constants::pi * (w0_m * w0_m + ws_m * ws_m));
}

struct WaveguideGeometry {
  double length_m = 0.03;
  double theta_r_m2 = 0.0;  // modal overlap integral

  static WaveguideGeometry from_waists(double length_m, double w0_m,
                                       double ws_m) {
    if (!(length_m > 0.0)) throw std::domain_error("length must be positive");
    return WaveguideGeometry{length_m, overlap_gaussian(w0_m, ws_m)};
  }
};

struct PumpConfig {
  double pump_nm = 0.0;
  double power_w = 0.2;
  double signal_nm = 0.0;  // target channel the noise density is quoted at
};

// Raman shift between a scattered wavelength and the pump, in cm^-1
// (positive = blue-shifted / anti-Stokes).
inline double raman_shift_cm1(double scattered_nm, double pump_nm) {
  if (!(scattered_nm > 0.0) || !(pump_nm > 0.0)) {
    throw std::domain_error("wavelengths must be positive");
  }
  return 1e7 / scattered_nm - 1e7 / pump_nm;
}

inline double scattered_wavelength_nm(double pump_nm, double shift_cm1) {
  const double nu = 1e7 / pump_nm + shift_cm1;
  if (!(nu > 0.0)) throw std::domain_error("scattered frequency non-positive");
  return 1e7 / nu;
}

// Per-meter scattering coefficient of the photon-number evolution
//   dN/dz = G * (N + 1),
//   G = (3 omega_s / (2 n_s n_0 eps0 c^2)) * |Im chi| * h(Omega) * Theta * P0.
// The pump power enters the coefficient so that integrating the evolution
// reproduces the spectral-density formula below.
inline double scattering_coefficient(const PumpConfig& pump,
                                     const WaveguideGeometry& geom,
                                     const RamanModel& model,
                                     double temperature_k, double shift_cm1) {
  if (!(pump.power_w >= 0.0)) throw std::domain_error("power must be >= 0");
  if (!(geom.theta_r_m2 > 0.0)) throw std::domain_error("overlap must be > 0");
  const double lambda_s_m = scattered_wavelength_nm(pump.pump_nm, shift_cm1) *
                            1e-9;
  const double omega_s = 2.0 * constants::pi * constants::c_m_per_s /
                         lambda_s_m;
  const double im_chi =
      std::abs(susceptibility(shift_cm1, model, temperature_k).imag());
  const double h = occupancy_factor(shift_cm1, temperature_k);
  const double prefactor =
      3.0 * omega_s /
      (2.0 * model.n_signal * model.n_pump * constants::eps0_F_per_m *
       constants::c_m_per_s * constants::c_m_per_s);
  return prefactor * im_chi * h * geom.theta_r_m2 * pump.power_w;
}

// Raman noise spectral density in photons per second per nanometer at the
// scattered wavelength:
//   dN/dlambda = 6 pi^2 P0 h(Omega) Theta |Im chi| L / (eps0 lambda_s^3 n_s n_0)
// (per meter of wavelength; scaled to per nm).
inline double noise_spectral_density(const PumpConfig& pump,
                                     const WaveguideGeometry& geom,
                                     const RamanModel& model,
                                     double temperature_k,
                                     double scattered_nm) {
  const double shift = raman_shift_cm1(scattered_nm, pump.pump_nm);
  if (shift == 0.0) {
    throw std::domain_error("scattered wavelength equals pump");
  }
  const double lambda_s_m = scattered_nm * 1e-9;
  const double im_chi =
      std::abs(susceptibility(shift, model, temperature_k).imag());
  const double h = occupancy_factor(shift, temperature_k);
  const double nsd_per_m =
      6.0 * constants::pi * constants::pi * pump.power_w * h *
      geom.theta_r_m2 * im_chi * geom.length_m /
      (constants::eps0_F_per_m * lambda_s_m * lambda_s_m * lambda_s_m *
       model.n_signal * model.n_pump);
  return nsd_per_m * 1e-9;  // per nm
}

// Same density composed from the evolution coefficient via the spectral
// Jacobian |d omega / d lambda| = 2 pi c / lambda^2. Kept as an independent
// code path for cross-validation.
inline double noise_spectral_density_from_coefficient(
    const PumpConfig& pump, const WaveguideGeometry& geom,
    const RamanModel& model, double temperature_k, double scattered_nm) {
  const double shift = raman_shift_cm1(scattered_nm, pump.pump_nm);
  const double g = scattering_coefficient(pump, geom, model, temperature_k,
                                          shift);
  const double lambda_s_m = scattered_nm * 1e-9;
  const double jacobian = 2.0 * constants::pi * constants::c_m_per_s /
                          (lambda_s_m * lambda_s_m);
  return g * geom.length_m * jacobian * 1e-9;
}

// Fourth-order Runge-Kutta integration of dN/dz = G(z) * (N + 1) from 0 to L
// with N(0) = 0. G is constant along z here, so the exact solution is
// exp(G L) - 1; the integrator exists as an oracle for that closed form.
inline double evolve_photon_number(const PumpConfig& pump,
                                   const WaveguideGeometry& geom,
                                   const RamanModel& model,
                                   double temperature_k, double shift_cm1,
                                   int steps) {
  if (steps < 1) throw std::domain_error("steps must be >= 1");
  const double g = scattering_coefficient(pump, geom, model, temperature_k,
                                          shift_cm1);
  const double dz = geom.length_m / static_cast<double>(steps);
  double n = 0.0;
  auto f = [g](double value) { return g * (value + 1.0); };
  for (int i = 0; i < steps; ++i) {
    const double k1 = f(n);
    const double k2 = f(n + 0.5 * dz * k1);
    const double k3 = f(n + 0.5 * dz * k2);
    const double k4 = f(n + dz * k3);
    n += dz / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return n;
}

// Counts per second through a narrow filter (density treated flat across it).
inline double noise_counts_in_filter(double nsd_per_s_per_nm,
                                     double bandwidth_nm, double efficiency) {
  if (!(bandwidth_nm >= 0.0)) {
    throw std::domain_error("bandwidth must be non-negative");
  }
  return nsd_per_s_per_nm * bandwidth_nm * efficiency;
}

// Editable phonon parameter file. `populated_from_external_tables` records
// whether the weights/coefficients were transcribed from measured tables or
// reconstructed; absolute-magnitude checks are conditioned on it.
struct PhononFile {
  std::string version;
  std::string material;
  bool populated_from_external_tables = false;
  std::string note;
  std::vector<PhononMode> modes;
};

inline PhononFile load_phonon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open phonon file: " + path);
  nlohmann::json j;
  in >> j;
  PhononFile file;
  file.version = j.at("version").get<std::string>();
  file.material = j.at("material").get<std::string>();
  file.populated_from_external_tables =
      j.at("populated_from_external_tables").get<bool>();
  if (j.contains("note")) file.note = j.at("note").get<std::string>();
  for (const auto& m : j.at("modes")) {
    PhononMode mode;
    mode.label = m.at("label").get<std::string>();
    mode.omega0_cm1 = m.at("omega0_cm1").get<double>();
    mode.gamma0_cm1 = m.at("gamma0_cm1").get<double>();
    mode.weight = m.at("weight").get<double>();
    mode.B_cm1 = m.at("B_cm1").get<double>();
    mode.C_cm1_per_K2 = m.at("C_cm1_per_K2").get<double>();
    mode.D_cm1 = m.at("D_cm1").get<double>();
    mode.K_per_K = m.at("K_per_K").get<double>();
    mode.source = m.at("source").get<std::string>();
    if (!(mode.omega0_cm1 > 0.0) || !(mode.gamma0_cm1 > 0.0)) {
      throw std::runtime_error("phonon mode reference values must be positive");
    }
    file.modes.push_back(mode);
  }
  return file;
}

}  // namespace qns

#endif  // QNETSIM_RAMAN_HPP
