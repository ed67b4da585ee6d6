// Sweeps the conversion-noise spectral density across the pump band that
// maps a 780 nm source onto the first DWDM channels, at several crystal
// temperatures, and prints the Stokes/anti-Stokes asymmetry at a few shifts.

#include <cstdio>
#include <vector>

#include "qnetsim/optics.hpp"
#include "qnetsim/raman.hpp"

namespace {

// Stand-in phonon response used when no calibration file is loaded: a single
// dominant lattice mode. The shipped data file carries the full mode list.
qns::RamanModel demo_model() {
  qns::RamanModel model;
  qns::PhononMode mode;
  mode.label = "demo_mode";
  mode.omega0_cm1 = 258.5;
  mode.gamma0_cm1 = 6.9;
  mode.weight = 1.34e5;
  mode.B_cm1 = 2.0;
  mode.C_cm1_per_K2 = 5e-6;
  mode.D_cm1 = 1.5;
  mode.K_per_K = -2e-5;
  mode.source = "demo placeholder";
  model.modes.push_back(mode);
  return model;
}

}  // namespace

int main() {
  const qns::RamanModel model = demo_model();
  const auto geom =
      qns::WaveguideGeometry::from_waists(0.03, 2e-6, 2e-6);
  const double atom_line_nm = 780.0;

  std::printf("%-10s %-12s %-12s %-10s %14s\n", "T [K]", "pump [nm]",
              "channel [nm]", "shift", "noise [/s/nm]");
  for (double temperature : {240.0, 270.0, 300.0, 330.0}) {
    for (int i = 0; i <= 8; ++i) {
      const double pump_nm = 1594.22 + 8.1 * i / 8.0;
      const double channel_nm = qns::dfg_pump_for(atom_line_nm, pump_nm);
      qns::PumpConfig pump;
      pump.pump_nm = pump_nm;
      pump.power_w = 0.2;
      pump.signal_nm = channel_nm;
      const double nsd = qns::noise_spectral_density(pump, geom, model,
                                                     temperature, channel_nm);
      std::printf("%-10.0f %-12.2f %-12.2f %-10.1f %14.4g\n", temperature,
                  pump_nm, channel_nm,
                  qns::raman_shift_cm1(channel_nm, pump_nm), nsd);
    }
  }

  std::printf("\nStokes vs anti-Stokes at 300 K, channel fixed at 1520 nm:\n");
  std::printf("%-12s %-14s %-14s %10s\n", "|shift|", "Stokes [/s/nm]",
              "anti [/s/nm]", "ratio");
  for (double pump_nm : {1278.0, 1312.0, 1346.0}) {
    qns::PumpConfig pump;
    pump.power_w = 0.2;
    pump.signal_nm = 1520.0;
    pump.pump_nm = pump_nm;
    const double shift = qns::raman_shift_cm1(1520.0, pump_nm);
    const double stokes =
        qns::noise_spectral_density(pump, geom, model, 300.0, 1520.0);
    pump.pump_nm = 1e7 / (1e7 / 1520.0 + shift);  // mirrored red pump
    const double anti =
        qns::noise_spectral_density(pump, geom, model, 300.0, 1520.0);
    std::printf("%-12.1f %-14.4g %-14.4g %10.1f\n", -shift, stokes, anti,
                stokes / anti);
  }
  return 0;
}
