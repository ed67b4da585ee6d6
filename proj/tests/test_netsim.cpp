#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "qnetsim/netsim.hpp"

using namespace qns;

namespace {

LinkModel per_arm_link() {
  LinkModel link;
  link.convention = EmissionConvention::PerArm;
  return link;
}

TdmParams big_cavity() {
  TdmParams tdm;
  tdm.atoms = 100000;
  return tdm;
}

Catalog lossless_catalog() {
  Catalog cat;
  cat.eta_col = 1.0;
  cat.eta_coup = 1.0;
  cat.l_tele_db_per_km = 0.0;
  cat.l_nir_db_per_km = 0.0;
  cat.mechanical_switch_db = 0.0;
  cat.mechanical_switch_worst_db = 0.0;
  cat.photonic_switch_db = 0.0;
  cat.l_mux_db = 0.0;
  cat.l_mux_lowloss_db = 0.0;
  cat.eta_d = 1.0;
  cat.eta_chip = 1.0;
  cat.eta_fp = 1.0;
  return cat;
}

}  // namespace

TEST_CASE("default scenarios expose the fitted fabric parameters") {
  const auto scenarios = default_scenarios();
  REQUIRE(scenarios.size() == 3);
  const ScenarioSpec& intra = find_scenario(scenarios, ScenarioKind::IntraRack);
  CHECK(intra.total_fiber_km == Catch::Approx(0.010));
  CHECK(intra.switch_hops == 2);
  CHECK(intra.qpu_count() >= 2);
  CHECK(intra.qpu_pair_count() == intra.qpu_count() *
                                      (intra.qpu_count() - 1) / 2);
  const ScenarioSpec& inter = find_scenario(scenarios, ScenarioKind::InterRack);
  CHECK(inter.total_fiber_km == Catch::Approx(0.5582));
  CHECK(inter.switch_hops == 3);
  const ScenarioSpec& cross = find_scenario(scenarios, ScenarioKind::CrossDC);
  CHECK(cross.total_fiber_km == Catch::Approx(5.950));
  CHECK(cross.switch_hops == 4);

  ScenarioSpec bad = intra;
  bad.total_fiber_km = -1.0;
  CHECK_THROWS(bad.validate());
}

TEST_CASE("arm chains carry the calibrated transmittances") {
  const Catalog cat;
  const auto scenarios = default_scenarios();
  const ScenarioSpec& intra = find_scenario(scenarios, ScenarioKind::IntraRack);

  // Multiplexed interconnect, intra-rack: common optics 0.8208, converter
  // module 0.35 dB, one mux + one demux at the ends (1.0 dB), two mechanical
  // hops (0.70 dB), and 5 m of telecom fiber.
  const ArmPair rqi = build_paths(intra, Architecture::RqiDwdm, cat);
  CHECK(chain_transmittance(rqi.arm_a) == Catch::Approx(0.511256).margin(2e-5));
  CHECK(chain_transmittance(rqi.arm_b) ==
        Catch::Approx(chain_transmittance(rqi.arm_a)).epsilon(1e-12));

  // Unconverted single channel keeps the photon in the near infrared and
  // pays photonic-switch crossings, split across the two arms.
  const ArmPair bare = build_paths(intra, Architecture::NoQfcSingle, cat);
  CHECK(chain_transmittance(bare.arm_a) ==
        Catch::Approx(0.485046).margin(2e-5));

  // Cross-DC without conversion: 4 dB/km over about 3 km of arm dominates.
  const ScenarioSpec& cross = find_scenario(scenarios, ScenarioKind::CrossDC);
  const ArmPair far = build_paths(cross, Architecture::NoQfcSingle, cat);
  CHECK(chain_transmittance(far.arm_a) < 0.06);
}

TEST_CASE("per-channel plateaus land on the calibrated operating points") {
  const Catalog cat;
  const LinkModel link = per_arm_link();
  const TdmParams tdm;
  const auto scenarios = default_scenarios();
  const ScenarioSpec& intra = find_scenario(scenarios, ScenarioKind::IntraRack);
  const ScenarioSpec& inter = find_scenario(scenarios, ScenarioKind::InterRack);
  const ScenarioSpec& cross = find_scenario(scenarios, ScenarioKind::CrossDC);

  struct Cell {
    const ScenarioSpec* scenario;
    Architecture arch;
    double plateau_hz;
  };
  const Cell cells[] = {
      {&intra, Architecture::NoQfcSingle, 26981.0},
      {&intra, Architecture::QfcSingle, 23114.0},
      {&intra, Architecture::RqiDwdm, 29975.0},
      {&inter, Architecture::NoQfcSingle, 9670.0},
      {&inter, Architecture::QfcSingle, 13431.0},
      {&inter, Architecture::RqiDwdm, 24980.0},
      {&cross, Architecture::NoQfcSingle, 40.008},
      {&cross, Architecture::QfcSingle, 6456.6},
      {&cross, Architecture::RqiDwdm, 17213.0},
  };
  for (const Cell& cell : cells) {
    CHECK(per_channel_rate_asymptotic(*cell.scenario, cell.arch, cat, tdm,
                                      link) ==
          Catch::Approx(cell.plateau_hz).epsilon(2e-3));
  }

  // Finite cavities stay below the plateau and grow with k.
  TdmParams small = tdm;
  small.atoms = 100;
  TdmParams large = tdm;
  large.atoms = 100000;
  const double r_small = per_channel_rate(intra, Architecture::RqiDwdm, cat,
                                          small, link);
  const double r_large = per_channel_rate(intra, Architecture::RqiDwdm, cat,
                                          large, link);
  CHECK(r_small < r_large);
  CHECK(r_large <
        per_channel_rate_asymptotic(intra, Architecture::RqiDwdm, cat, tdm,
                                    link));
}

TEST_CASE("atom budgets split as evenly as the channel count allows") {
  const CavityLoading even = split_atoms(144, 144);
  CHECK(even.k_low == 1);
  CHECK(even.n_low == 144);
  CHECK(even.n_high == 0);

  const CavityLoading mixed = split_atoms(1000, 144);
  CHECK(mixed.k_high == 7);
  CHECK(mixed.n_high == 136);
  CHECK(mixed.k_low == 6);
  CHECK(mixed.n_low == 8);
  CHECK(mixed.k_high * mixed.n_high + mixed.k_low * mixed.n_low == 1000);

  CHECK_THROWS(split_atoms(100, 144));
  CHECK_THROWS(split_atoms(0, 1));
}

TEST_CASE("aggregate rate honors architecture channel usage") {
  const Catalog cat;
  const LinkModel link = per_arm_link();
  const TdmParams tdm;
  const auto scenarios = default_scenarios();
  const ScenarioSpec& intra = find_scenario(scenarios, ScenarioKind::IntraRack);

  const auto single = aggregate_dwdm_rate(1440, 144, intra,
                                          Architecture::NoQfcSingle, cat, tdm,
                                          link);
  CHECK(single.channels_used == 1);
  CHECK(single.aggregate_hz == single.per_channel_hz);

  const auto rqi = aggregate_dwdm_rate(1440, 144, intra,
                                       Architecture::RqiDwdm, cat, tdm, link);
  CHECK(rqi.channels_used == 144);
  CHECK(rqi.aggregate_hz > single.aggregate_hz);

  // Near saturation the multiplexed fabric clears two orders of magnitude.
  const auto rqi_sat = aggregate_dwdm_rate(144000, 144, intra,
                                           Architecture::RqiDwdm, cat, tdm,
                                           link);
  const auto single_sat = aggregate_dwdm_rate(144000, 144, intra,
                                              Architecture::NoQfcSingle, cat,
                                              tdm, link);
  CHECK(rqi_sat.aggregate_hz > 100.0 * single_sat.aggregate_hz);

  // Monotone non-decreasing in N_tot and in channel count.
  double prev = 0.0;
  for (std::int64_t n_tot : {144, 288, 720, 1440, 14400}) {
    const auto agg = aggregate_dwdm_rate(n_tot, 144, intra,
                                         Architecture::RqiDwdm, cat, tdm,
                                         link);
    CHECK(agg.aggregate_hz >= prev);
    prev = agg.aggregate_hz;
  }
  const auto fewer = aggregate_dwdm_rate(1440, 72, intra,
                                         Architecture::RqiDwdm, cat, tdm,
                                         link);
  CHECK(fewer.aggregate_hz <= rqi.aggregate_hz);
}

TEST_CASE("reconfiguration overhead discounts the duty cycle exactly") {
  CHECK(effective_rate_with_reconfig(25000.0, 100, 1e-3) == 20000.0);
  CHECK(effective_rate_with_reconfig(25000.0, 100, 0.0) == 25000.0);
  const double lightly = effective_rate_with_reconfig(25000.0, 100, 1e-9);
  CHECK((25000.0 - lightly) / 25000.0 < 1e-6);
  CHECK(lightly <= 25000.0);
  CHECK_THROWS_AS(effective_rate_with_reconfig(0.0, 100, 1e-3),
                  std::domain_error);
  CHECK_THROWS_AS(effective_rate_with_reconfig(25000.0, 0, 1e-3),
                  std::domain_error);
  CHECK_THROWS_AS(effective_rate_with_reconfig(25000.0, 100, -1.0),
                  std::domain_error);
}

TEST_CASE("deterministic jobs follow the closed-form timeline") {
  const Catalog cat;
  const LinkModel link = per_arm_link();
  const TdmParams tdm = big_cavity();
  const auto scenarios = default_scenarios();
  const ScenarioSpec& intra = find_scenario(scenarios, ScenarioKind::IntraRack);

  JobSpec job;
  job.demands = {{0, 1000}, {1, 500}};
  job.epoch_pairs = 100;

  const SimReport report = simulate_job(job, intra, Architecture::RqiDwdm,
                                        cat, tdm, link, 144);
  CHECK(report.pairs_demanded == 1500);
  CHECK(report.pairs_delivered == 1500);
  CHECK(report.major_reconfigs == 1);
  CHECK(report.minor_reconfigs == 14);  // between the 15 epoch chunks

  const double rate = per_channel_rate(intra, Architecture::RqiDwdm, cat, tdm,
                                       link);
  const double expected = cat.mechanical_reconfig_latency_s + 1500.0 / rate +
                          14.0 * cat.rqi_retune_latency_s;
  CHECK(report.makespan_s == Catch::Approx(expected).epsilon(1e-12));
  CHECK(report.effective_hz <= report.per_channel_hz);

  // Events: one major, then generation chunks with minors in between,
  // timestamps strictly increasing, stamped at action start.
  REQUIRE_FALSE(report.events.empty());
  CHECK(report.events.front().kind == EventKind::MajorReconfig);
  CHECK(report.events.front().time_s == 0.0);
  int generations = 0;
  for (std::size_t i = 1; i < report.events.size(); ++i) {
    CHECK(report.events[i].time_s > report.events[i - 1].time_s);
    if (report.events[i].kind == EventKind::Generation) ++generations;
  }
  CHECK(generations == 15);

  // Per-demand completions are recorded before the following reconfig.
  REQUIRE(report.demands.size() == 2);
  CHECK(report.demands[0].pairs_delivered == 1000);
  CHECK(report.demands[0].completion_time_s <
        report.demands[1].completion_time_s);
  CHECK(report.demands[1].completion_time_s ==
        Catch::Approx(report.makespan_s).epsilon(1e-12));
}

TEST_CASE("trivial one-pair job emits exactly one generation event") {
  const Catalog cat;
  const LinkModel link = per_arm_link();
  const TdmParams tdm = big_cavity();
  const auto scenarios = default_scenarios();
  const ScenarioSpec& intra = find_scenario(scenarios, ScenarioKind::IntraRack);

  JobSpec job;
  job.demands = {{0, 1}};
  const SimReport report = simulate_job(job, intra, Architecture::RqiDwdm,
                                        cat, tdm, link, 144);
  int generations = 0;
  for (const auto& e : report.events) {
    if (e.kind == EventKind::Generation) ++generations;
  }
  CHECK(generations == 1);
  CHECK(report.minor_reconfigs == 0);
  const double rate = per_channel_rate(intra, Architecture::RqiDwdm, cat, tdm,
                                       link);
  CHECK(report.makespan_s >= 1.0 / rate +
                                 cat.mechanical_reconfig_latency_s - 1e-15);
}

TEST_CASE("jobs validate their demands against the scenario fabric") {
  const Catalog cat;
  const LinkModel link = per_arm_link();
  const TdmParams tdm = big_cavity();
  const auto scenarios = default_scenarios();
  const ScenarioSpec& intra = find_scenario(scenarios, ScenarioKind::IntraRack);

  JobSpec job;
  job.demands = {{intra.qpu_pair_count(), 10}};  // first out-of-range index
  CHECK_THROWS_AS(simulate_job(job, intra, Architecture::RqiDwdm, cat, tdm,
                               link, 144),
                  std::invalid_argument);
  job.demands = {{0, 0}};
  CHECK_THROWS(simulate_job(job, intra, Architecture::RqiDwdm, cat, tdm, link,
                            144));
  job.demands.clear();
  CHECK_THROWS(simulate_job(job, intra, Architecture::RqiDwdm, cat, tdm, link,
                            144));
}

TEST_CASE("stochastic mode is seeded, reproducible, and unbiased") {
  const Catalog cat;
  const LinkModel link = per_arm_link();
  const TdmParams tdm = big_cavity();
  const auto scenarios = default_scenarios();
  const ScenarioSpec& intra = find_scenario(scenarios, ScenarioKind::IntraRack);

  JobSpec job;
  job.demands = {{0, 100}};

  const SimReport a = simulate_job(job, intra, Architecture::RqiDwdm, cat,
                                   tdm, link, 144, SimMode::Stochastic, 99);
  const SimReport b = simulate_job(job, intra, Architecture::RqiDwdm, cat,
                                   tdm, link, 144, SimMode::Stochastic, 99);
  REQUIRE(a.events.size() == b.events.size());
  for (std::size_t i = 0; i < a.events.size(); ++i) {
    CHECK(a.events[i].time_s == b.events[i].time_s);
  }
  CHECK(a.makespan_s == b.makespan_s);

  const SimReport c = simulate_job(job, intra, Architecture::RqiDwdm, cat,
                                   tdm, link, 144, SimMode::Stochastic, 100);
  CHECK(c.makespan_s != a.makespan_s);

  const SimReport det = simulate_job(job, intra, Architecture::RqiDwdm, cat,
                                     tdm, link, 144);
  double mean = 0.0;
  const int runs = 1000;
  for (int seed = 0; seed < runs; ++seed) {
    mean += simulate_job(job, intra, Architecture::RqiDwdm, cat, tdm, link,
                         144, SimMode::Stochastic,
                         static_cast<std::uint64_t>(seed))
                .makespan_s;
  }
  mean /= runs;
  CHECK(mean == Catch::Approx(det.makespan_s).epsilon(0.015));
}

TEST_CASE("reference table reproduces the embedded targets cell by cell") {
  const Catalog cat;
  const LinkModel link = per_arm_link();
  const TdmParams tdm;
  const TableReport table = table_report(cat, default_scenarios(), tdm, 144,
                                         link);

  REQUIRE(table.rates.size() == 9);
  REQUIRE(table.fidelities.size() == 6);

  for (const TableRateCell& cell : table.rates) {
    CAPTURE(to_string(cell.scenario), to_string(cell.arch), cell.rate_hz,
            cell.target_hz);
    CHECK(std::abs(cell.rel_error) <= 0.10);
  }

  // The multiplexed interconnect dominates every single-channel cell by
  // more than two orders of magnitude.
  for (int s = 0; s < 3; ++s) {
    const double rqi = table.rates[3 * s + 2].rate_hz;
    CHECK(rqi / table.rates[3 * s + 0].rate_hz > 100.0);
    CHECK(rqi / table.rates[3 * s + 1].rate_hz > 100.0);
  }

  // Conversion pays intra-rack but wins once fiber loss matters.
  CHECK(table.rates[0].rate_hz >= table.rates[1].rate_hz);
  CHECK(table.rates[4].rate_hz > table.rates[3].rate_hz);
  CHECK(table.rates[7].rate_hz > table.rates[6].rate_hz);

  int within = 0;
  for (const TableFidelityCell& cell : table.fidelities) {
    if (std::abs(cell.abs_error) <= 0.02) ++within;
  }
  CHECK(within >= 5);  // the 9-node unconverted entry sits just outside

  // Spot targets.
  CHECK(reference_rate_hz(ScenarioKind::IntraRack, Architecture::RqiDwdm) ==
        4.508e6);
  CHECK(reference_fidelity(Architecture::NoQfcSingle, 3) == 0.987);
}

TEST_CASE("lossless fabric saturates every cell at the same ceiling") {
  const Catalog cat = lossless_catalog();
  const LinkModel link = per_arm_link();
  const TdmParams tdm;
  const auto scenarios = default_scenarios();

  const double ceiling = asymptotic_rate(0.125, tdm.t_ent_s);
  for (ScenarioKind kind : {ScenarioKind::IntraRack, ScenarioKind::InterRack,
                            ScenarioKind::CrossDC}) {
    const ScenarioSpec& scenario = find_scenario(scenarios, kind);
    for (Architecture arch : {Architecture::NoQfcSingle,
                              Architecture::QfcSingle,
                              Architecture::RqiDwdm}) {
      CHECK(per_channel_rate_asymptotic(scenario, arch, cat, tdm, link) ==
            Catch::Approx(ceiling).epsilon(1e-12));
    }
  }

  // And it is maximal: the lossy catalog can only do worse.
  const Catalog real;
  CHECK(per_channel_rate_asymptotic(find_scenario(scenarios,
                                                  ScenarioKind::IntraRack),
                                    Architecture::RqiDwdm, real, tdm, link) <
        ceiling);
}

TEST_CASE("swapping switch technologies moves inter-rack cells as expected") {
  const LinkModel link = per_arm_link();
  const TdmParams tdm;
  const auto scenarios = default_scenarios();
  const ScenarioSpec& inter = find_scenario(scenarios, ScenarioKind::InterRack);

  const Catalog normal;
  Catalog swapped;
  swapped.photonic_switch_db = normal.mechanical_switch_db;
  swapped.mechanical_switch_db = normal.photonic_switch_db;

  // Single-channel paths cross photonic switches: cheaper crossings help.
  CHECK(per_channel_rate_asymptotic(inter, Architecture::NoQfcSingle, swapped,
                                    tdm, link) >
        per_channel_rate_asymptotic(inter, Architecture::NoQfcSingle, normal,
                                    tdm, link));
  // The multiplexed path rides mechanical switches: pricier crossings hurt.
  CHECK(per_channel_rate_asymptotic(inter, Architecture::RqiDwdm, swapped,
                                    tdm, link) <
        per_channel_rate_asymptotic(inter, Architecture::RqiDwdm, normal, tdm,
                                    link));
}
