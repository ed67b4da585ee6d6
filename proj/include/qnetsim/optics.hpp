// Copyright 2026 The qnetsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Wavelength/frequency arithmetic, ITU channel grids, phase-matching
// wavelength planners for the three conversion processes, and the thermal
// tuning map.
#ifndef QNETSIM_OPTICS_HPP
#define QNETSIM_OPTICS_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qnetsim/constants.hpp"

namespace qns {

// Vacuum wavelengths in nanometers everywhere; c = 299792458 m/s exact.
// Frequencies in GHz. Note c[m/s] / (w[nm]*1e-9) / 1e9 == c[m/s] / w[nm],
// so the conversion is a single exact division.

inline double wavelength_frequency_convert(double wavelength_nm) {
  if (!(wavelength_nm > 0.0)) {
    throw std::domain_error("wavelength must be positive");
  }
  return constants::c_m_per_s / wavelength_nm;  // GHz
}

inline double frequency_wavelength_convert(double frequency_ghz) {
  if (!(frequency_ghz > 0.0)) {
    throw std::domain_error("frequency must be positive");
  }
  return constants::c_m_per_s / frequency_ghz;  // nm
}

// A DWDM channel plan. Channels are anchored at the frequency of
// `start_wavelength_nm` (the short-wavelength / high-frequency end) and step
// down in frequency by exactly `spacing_ghz`, i.e. the list runs from the
// anchor toward longer wavelengths. count = floor(delta_f/spacing) + 1.
struct ChannelGrid {
  double start_wavelength_nm = 0.0;
  double end_wavelength_nm = 0.0;
  double spacing_ghz = 0.0;
  std::vector<double> channels_nm;  // anchor first

  std::size_t count() const { return channels_nm.size(); }
};

inline ChannelGrid build_itu_grid(double start_nm, double end_nm,
                                  double spacing_ghz) {
  if (!(start_nm > 0.0) || !(end_nm > 0.0) || !(start_nm < end_nm)) {
    throw std::domain_error("grid requires 0 < start < end (wavelengths)");
  }
  if (!(spacing_ghz > 0.0)) {
    throw std::domain_error("grid spacing must be positive");
  }
  const double f_hi = wavelength_frequency_convert(start_nm);
  const double f_lo = wavelength_frequency_convert(end_nm);
  const double delta_f = f_hi - f_lo;
  if (delta_f < spacing_ghz) {
    throw std::domain_error("grid range holds no full channel spacing");
  }
  const auto n = static_cast<std::size_t>(std::floor(delta_f / spacing_ghz)) + 1;
  ChannelGrid grid;
  grid.start_wavelength_nm = start_nm;
  grid.end_wavelength_nm = end_nm;
  grid.spacing_ghz = spacing_ghz;
  grid.channels_nm.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double f = f_hi - static_cast<double>(i) * spacing_ghz;
    grid.channels_nm.push_back(frequency_wavelength_convert(f));
  }
  return grid;
}

// chi(2) difference-frequency generation: omega_signal = omega_idler +
// omega_pump, i.e. 1/pump = 1/signal - 1/idler. The signal is the
// short-wavelength input photon, the idler the long-wavelength output.
inline double dfg_pump_for(double signal_nm, double idler_nm) {
  if (!(signal_nm > 0.0) || !(idler_nm > 0.0)) {
    throw std::domain_error("wavelengths must be positive");
  }
  if (!(idler_nm > signal_nm)) {
    throw std::domain_error("dfg requires idler wavelength > signal wavelength");
  }
  const double inv_pump = 1.0 / signal_nm - 1.0 / idler_nm;
  return 1.0 / inv_pump;
}

// chi(3) third-order DFG with two degenerate pump photons:
// omega_idler = omega_signal - 2*omega_pump.
inline double tdfg_idler_for(double signal_nm, double pump_nm) {
  if (!(signal_nm > 0.0) || !(pump_nm > 0.0)) {
    throw std::domain_error("wavelengths must be positive");
  }
  const double inv_idler = 1.0 / signal_nm - 2.0 / pump_nm;
  if (!(inv_idler > 0.0)) {
    throw std::domain_error("tdfg idler frequency non-positive");
  }
  return 1.0 / inv_idler;
}

// chi(3) four-wave-mixing Bragg scattering:
// omega_idler = omega_signal + omega_p1 - omega_p2.
inline double fwm_bs_idler_for(double signal_nm, double pump1_nm,
                               double pump2_nm) {
  if (!(signal_nm > 0.0) || !(pump1_nm > 0.0) || !(pump2_nm > 0.0)) {
    throw std::domain_error("wavelengths must be positive");
  }
  const double inv_idler = 1.0 / signal_nm + 1.0 / pump1_nm - 1.0 / pump2_nm;
  if (!(inv_idler > 0.0)) {
    throw std::domain_error("fwm idler frequency non-positive");
  }
  return 1.0 / inv_idler;
}

// Affine thermal tuning: signal wavelength shifts by `slope` nm per degree.
struct TuningModel {
  double slope_nm_per_c = 0.27;
  double reference_temperature_c = 25.0;
};

// Signed temperature change that moves the emitted signal from
// `current_signal_nm` to `target_signal_nm`.
inline double temperature_for_target(double current_signal_nm,
                                     double target_signal_nm,
                                     const TuningModel& model) {
  if (!(model.slope_nm_per_c > 0.0)) {
    throw std::domain_error("tuning slope must be positive");
  }
  return (target_signal_nm - current_signal_nm) / model.slope_nm_per_c;
}

}  // namespace qns

#endif  // QNETSIM_OPTICS_HPP
