#include <catch2/catch_amalgamated.hpp>

#include "qnetsim/optics.hpp"

using namespace qns;

TEST_CASE("wavelength/frequency conversion is exact and involutive") {
  CHECK(wavelength_frequency_convert(1550.0) ==
        Catch::Approx(299792458.0 / 1550.0).epsilon(1e-15));
  for (double nm : {780.0, 1519.86, 1550.0, 1602.32}) {
    const double f = wavelength_frequency_convert(nm);
    CHECK(frequency_wavelength_convert(f) == Catch::Approx(nm).epsilon(1e-14));
  }
  CHECK_THROWS_AS(wavelength_frequency_convert(0.0), std::domain_error);
  CHECK_THROWS_AS(frequency_wavelength_convert(-1.0), std::domain_error);
}

TEST_CASE("ITU grid anchors at the start wavelength and counts full slots") {
  const ChannelGrid sub = build_itu_grid(1519.86, 1527.22, 50.0);
  CHECK(sub.count() == 20);
  CHECK(sub.channels_nm.front() == Catch::Approx(1519.86).epsilon(1e-14));

  const ChannelGrid full = build_itu_grid(1519.86, 1577.03, 50.0);
  CHECK(full.count() == 144);

  // Channels step down in frequency, i.e. up in wavelength, by exactly the
  // grid spacing.
  for (std::size_t i = 1; i < sub.channels_nm.size(); ++i) {
    CHECK(sub.channels_nm[i] > sub.channels_nm[i - 1]);
    const double df = wavelength_frequency_convert(sub.channels_nm[i - 1]) -
                      wavelength_frequency_convert(sub.channels_nm[i]);
    CHECK(df == Catch::Approx(50.0).epsilon(1e-10));
  }

  // A window narrower than one spacing holds no grid.
  CHECK_THROWS_AS(build_itu_grid(1550.0, 1550.1, 50.0), std::domain_error);
  CHECK_THROWS_AS(build_itu_grid(1550.0, 1540.0, 50.0), std::domain_error);
  CHECK_THROWS_AS(build_itu_grid(1519.86, 1577.03, 0.0), std::domain_error);
}

TEST_CASE("DFG pump plan reproduces the band endpoints") {
  CHECK(dfg_pump_for(780.0, 1519.86) == Catch::Approx(1602.32).margin(0.05));
  CHECK(dfg_pump_for(780.0, 1577.03) == Catch::Approx(1543.33).margin(0.05));
  // Energy conservation is symmetric in pump and idler.
  const double pump = dfg_pump_for(780.0, 1519.86);
  CHECK(dfg_pump_for(780.0, pump) == Catch::Approx(1519.86).epsilon(1e-12));
  // An idler bluer than the source has no difference-frequency pump.
  CHECK_THROWS_AS(dfg_pump_for(780.0, 700.0), std::domain_error);
}

TEST_CASE("third-order processes place the idler where energy conservation "
          "says") {
  CHECK(tdfg_idler_for(780.0, 3140.0) ==
        Catch::Approx(1550.1265).margin(1e-3));
  CHECK_THROWS_AS(tdfg_idler_for(780.0, 1550.0), std::domain_error);

  CHECK(fwm_bs_idler_for(780.0, 3140.0, 2000.0) ==
        Catch::Approx(908.66).margin(0.01));
  // 1/1550 + 1/3140 < 1/500: the output frequency would be negative.
  CHECK_THROWS_AS(fwm_bs_idler_for(1550.0, 3140.0, 500.0),
                  std::domain_error);
}

TEST_CASE("temperature plan spans the 20-channel subgrid") {
  const TuningModel tuning;  // 0.27 nm/C referenced to 25 C
  const ChannelGrid sub = build_itu_grid(1519.86, 1527.22, 50.0);
  // Span between the quoted subgrid endpoints (the computed 20th channel
  // sits at 1527.2154 nm, a hair inside the nominal 1527.22 edge).
  const double span = temperature_for_target(1519.86, 1527.22, tuning);
  CHECK(span == Catch::Approx(27.26).margin(0.01));
  const double grid_span = temperature_for_target(
      sub.channels_nm.front(), sub.channels_nm.back(), tuning);
  CHECK(grid_span == Catch::Approx(27.24).margin(0.02));

  // One 50 GHz step near 1520 nm is about 0.385 nm, i.e. about 1.43 C.
  const double step = temperature_for_target(sub.channels_nm[0],
                                             sub.channels_nm[1], tuning);
  CHECK(step == Catch::Approx(1.427).margin(0.02));

  CHECK(temperature_for_target(1520.0, 1520.0, tuning) == 0.0);
  TuningModel bad;
  bad.slope_nm_per_c = 0.0;
  CHECK_THROWS_AS(temperature_for_target(1519.0, 1520.0, bad),
                  std::domain_error);
}
