// qnetsim: batch front-end for the DWDM quantum-network simulation library.
//
// Loads a JSON run configuration, sweeps the requested axes, and emits CSV
// data sheets (plus a JSON report for simulation runs) into the configured
// output directory. Every CSV carries the effective-configuration
// fingerprint so a sheet can always be traced back to the inputs that
// produced it.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical-domain error.

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qnetsim/config.hpp"
#include "qnetsim/csv.hpp"
#include "qnetsim/fidelity.hpp"
#include "qnetsim/netsim.hpp"
#include "qnetsim/optics.hpp"
#include "qnetsim/raman.hpp"
#include "qnetsim/scenario.hpp"
#include "qnetsim/tdm.hpp"

namespace {

using qns::Architecture;
using qns::CsvWriter;
using qns::RunConfig;
using qns::ScenarioKind;

constexpr ScenarioKind kScenarios[] = {ScenarioKind::IntraRack,
                                       ScenarioKind::InterRack,
                                       ScenarioKind::CrossDC};
constexpr Architecture kArchitectures[] = {Architecture::NoQfcSingle,
                                           Architecture::QfcSingle,
                                           Architecture::RqiDwdm};

// Dispatch `count` independent sweep points to a worker pool. Each worker
// claims indices from a shared counter and writes into its own output slot,
// so results are deterministic and the collector can emit rows in order.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count;
           i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

std::vector<double> linspace(double start, double end, int points) {
  if (points < 1) throw std::domain_error("sweep needs at least one point");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(points));
  if (points == 1) {
    out.push_back(start);
    return out;
  }
  const double step = (end - start) / static_cast<double>(points - 1);
  for (int i = 0; i < points; ++i) {
    out.push_back(start + step * static_cast<double>(i));
  }
  return out;
}

std::filesystem::path out_file(const RunConfig& cfg, const char* name) {
  std::filesystem::create_directories(cfg.out_dir);
  return std::filesystem::path(cfg.out_dir) / name;
}

// ---------------------------------------------------------------- rate -----

int run_rate(const RunConfig& cfg) {
  struct Row {
    std::int64_t n_tot = 0;
    ScenarioKind scenario{};
    Architecture arch{};
    qns::AggregateResult agg;
    double effective_hz = 0.0;
  };

  std::vector<Row> rows;
  for (std::int64_t n_tot : cfg.n_tot_list) {
    for (ScenarioKind kind : kScenarios) {
      for (Architecture arch : kArchitectures) {
        Row row;
        row.n_tot = n_tot;
        row.scenario = kind;
        row.arch = arch;
        rows.push_back(row);
      }
    }
  }

  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  parallel_for(rows.size(), [&](std::size_t i) {
    try {
      Row& row = rows[i];
      const qns::ScenarioSpec& scenario =
          qns::find_scenario(cfg.scenarios, row.scenario);
      // A cavity cannot sit empty: cap the channel count by the atom budget.
      const int channels = static_cast<int>(
          std::min<std::int64_t>(cfg.channels, row.n_tot));
      row.agg = qns::aggregate_dwdm_rate(row.n_tot, channels, scenario,
                                         row.arch, cfg.catalog, cfg.tdm,
                                         cfg.link, cfg.worst_case);
      row.effective_hz = qns::effective_rate_with_reconfig(
          row.agg.aggregate_hz, cfg.job.epoch_pairs,
          qns::default_minor_latency(row.arch, cfg.catalog));
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);

  const auto path = out_file(cfg, "rate.csv");
  CsvWriter csv(path.string(),
                {"scenario", "architecture", "n_tot", "n_channels",
                 "per_channel_hz", "aggregate_hz", "effective_hz"},
                cfg.fingerprint);
  for (const Row& row : rows) {
    csv.row({qns::to_string(row.scenario), qns::to_string(row.arch),
             CsvWriter::cell(row.n_tot), CsvWriter::cell(row.agg.channels_used),
             CsvWriter::cell(row.agg.per_channel_hz),
             CsvWriter::cell(row.agg.aggregate_hz),
             CsvWriter::cell(row.effective_hz)});
  }
  std::cout << "rate: wrote " << rows.size() << " rows to " << path.string()
            << "\n";
  return 0;
}

// ------------------------------------------------------------- fidelity ----

int run_fidelity(const RunConfig& cfg) {
  const auto path = out_file(cfg, "fidelity.csv");
  CsvWriter csv(path.string(), {"architecture", "n_nodes", "fidelity"},
                cfg.fingerprint);
  for (Architecture arch : kArchitectures) {
    for (int nodes : cfg.node_list) {
      csv.row({qns::to_string(arch), CsvWriter::cell(nodes),
               CsvWriter::cell(qns::fidelity_at_nodes(arch, nodes,
                                                      cfg.noise))});
    }
  }
  const int crossover = qns::crossover_node_count(cfg.noise);
  std::cout << "fidelity: wrote "
            << cfg.node_list.size() * std::size(kArchitectures)
            << " rows to " << path.string() << "\n";
  if (crossover > 0) {
    std::cout << "fidelity: multiplexed architecture overtakes the "
                 "unconverted single channel at "
              << crossover << " nodes\n";
  }
  return 0;
}

// ---------------------------------------------------------------- raman ----

int run_raman(const RunConfig& cfg) {
  const qns::RamanModel model = cfg.raman_model();
  const qns::WaveguideGeometry geom = cfg.raman.geometry();

  struct Row {
    std::string part;
    std::string branch;
    double temperature_k = 0.0;
    double pump_nm = 0.0;
    double scattered_nm = 0.0;
    double shift_cm1 = 0.0;
    double nsd = 0.0;
    double ratio = 0.0;  // Stokes/anti-Stokes, on Stokes rows only
  };

  // Part A: conversion band. Each pump wavelength pairs with the channel it
  // converts the atomic line to; the scattered field lands blue of the pump
  // (anti-Stokes) across the whole band.
  const std::vector<double> pumps = linspace(
      cfg.pump_sweep.start_nm, cfg.pump_sweep.end_nm, cfg.pump_sweep.points);
  std::vector<Row> band(pumps.size() * cfg.temperatures_k.size());
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  parallel_for(band.size(), [&](std::size_t i) {
    try {
      const double temperature = cfg.temperatures_k[i / pumps.size()];
      const double pump = pumps[i % pumps.size()];
      Row& row = band[i];
      row.part = "conversion_band";
      row.branch = "anti_stokes";
      row.temperature_k = temperature;
      row.pump_nm = pump;
      // 1/idler = 1/signal - 1/pump: the channel this pump converts to.
      row.scattered_nm = qns::dfg_pump_for(cfg.atom_line_nm, pump);
      row.shift_cm1 = qns::raman_shift_cm1(row.scattered_nm, pump);
      qns::PumpConfig pc;
      pc.pump_nm = pump;
      pc.power_w = cfg.raman.power_w;
      pc.signal_nm = row.scattered_nm;
      row.nsd = qns::noise_spectral_density(pc, geom, model, temperature,
                                            row.scattered_nm);
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);

  // Part B: branch comparison at the reference temperature. Blue pumps put
  // the fixed target channel on the Stokes side; the mirrored red pump
  // reaches the same |shift| from the anti-Stokes side.
  const std::vector<double> blue_pumps =
      linspace(cfg.ratio_pump_sweep.start_nm, cfg.ratio_pump_sweep.end_nm,
               cfg.ratio_pump_sweep.points);
  const double t_ref = model.reference_temperature_k;
  const double target = cfg.raman.signal_nm;
  std::vector<Row> branches;
  branches.reserve(2 * blue_pumps.size());
  for (const double pump : blue_pumps) {
    Row stokes;
    stokes.part = "branch_ratio";
    stokes.branch = "stokes";
    stokes.temperature_k = t_ref;
    stokes.pump_nm = pump;
    stokes.scattered_nm = target;
    stokes.shift_cm1 = qns::raman_shift_cm1(target, pump);
    qns::PumpConfig pc;
    pc.pump_nm = pump;
    pc.power_w = cfg.raman.power_w;
    pc.signal_nm = target;
    stokes.nsd = qns::noise_spectral_density(pc, geom, model, t_ref, target);

    Row anti;
    anti.part = "branch_ratio";
    anti.branch = "anti_stokes";
    anti.temperature_k = t_ref;
    anti.scattered_nm = target;
    anti.shift_cm1 = -stokes.shift_cm1;
    anti.pump_nm = 1e7 / (1e7 / target - anti.shift_cm1);
    pc.pump_nm = anti.pump_nm;
    anti.nsd = qns::noise_spectral_density(pc, geom, model, t_ref, target);

    stokes.ratio = stokes.nsd / anti.nsd;
    branches.push_back(stokes);
    branches.push_back(anti);
  }

  const auto path = out_file(cfg, "raman.csv");
  CsvWriter csv(path.string(),
                {"part", "branch", "temperature_k", "pump_nm", "scattered_nm",
                 "shift_cm1", "nsd_hz_per_nm", "stokes_to_anti_ratio"},
                cfg.fingerprint);
  auto write = [&csv](const Row& row) {
    csv.row({row.part, row.branch, CsvWriter::cell(row.temperature_k),
             CsvWriter::cell(row.pump_nm), CsvWriter::cell(row.scattered_nm),
             CsvWriter::cell(row.shift_cm1), CsvWriter::cell(row.nsd),
             CsvWriter::cell(row.ratio)});
  };
  for (const Row& row : band) write(row);
  for (const Row& row : branches) write(row);

  double band_min = 0.0;
  double band_max = 0.0;
  for (const Row& row : band) {
    if (row.temperature_k != t_ref) continue;
    if (band_min == 0.0 || row.nsd < band_min) band_min = row.nsd;
    if (row.nsd > band_max) band_max = row.nsd;
  }
  std::cout << "raman: wrote " << band.size() + branches.size() << " rows to "
            << path.string() << "\n";
  std::cout << "raman: conversion-band density at " << t_ref << " K spans "
            << qns::format_double(band_min) << " to "
            << qns::format_double(band_max) << " photons/s/nm\n";
  if (!branches.empty()) {
    std::cout << "raman: Stokes/anti-Stokes ratio runs "
              << qns::format_double(branches.back().ratio) << " to "
              << qns::format_double(branches.front().ratio)
              << " over the sampled shifts\n";
  }
  return 0;
}

// ----------------------------------------------------------------- tune ----

int run_tune(const RunConfig& cfg, std::optional<double> target_nm) {
  const qns::ChannelGrid grid = qns::build_itu_grid(
      cfg.grid.start_nm, cfg.grid.end_nm, cfg.grid.spacing_ghz);
  const double base_nm = grid.channels_nm.front();

  std::vector<std::size_t> picks;
  if (target_nm) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < grid.channels_nm.size(); ++i) {
      if (std::abs(grid.channels_nm[i] - *target_nm) <
          std::abs(grid.channels_nm[best] - *target_nm)) {
        best = i;
      }
    }
    picks.push_back(best);
  } else {
    picks.resize(grid.channels_nm.size());
    for (std::size_t i = 0; i < picks.size(); ++i) picks[i] = i;
  }

  const auto path = out_file(cfg, "tune.csv");
  CsvWriter csv(path.string(),
                {"channel", "channel_nm", "pump_nm", "delta_t_c",
                 "temperature_c"},
                cfg.fingerprint);
  for (std::size_t idx : picks) {
    const double channel_nm = grid.channels_nm[idx];
    const double pump = qns::dfg_pump_for(cfg.atom_line_nm, channel_nm);
    const double delta_t =
        qns::temperature_for_target(base_nm, channel_nm, cfg.tuning);
    csv.row({CsvWriter::cell(static_cast<int>(idx) + 1),
             CsvWriter::cell(channel_nm), CsvWriter::cell(pump),
             CsvWriter::cell(delta_t),
             CsvWriter::cell(cfg.tuning.reference_temperature_c + delta_t)});
  }
  std::cout << "tune: wrote " << picks.size() << " rows to " << path.string()
            << "\n";
  const double first_ch = grid.channels_nm[picks.front()];
  const double last_ch = grid.channels_nm[picks.back()];
  std::cout << "tune: channel " << qns::format_double(first_ch)
            << " nm needs pump "
            << qns::format_double(qns::dfg_pump_for(cfg.atom_line_nm, first_ch))
            << " nm, dT "
            << qns::format_double(
                   qns::temperature_for_target(base_nm, first_ch, cfg.tuning))
            << " C\n";
  if (picks.size() > 1) {
    std::cout << "tune: full sweep spans dT "
              << qns::format_double(qns::temperature_for_target(
                     base_nm, last_ch, cfg.tuning))
              << " C across " << picks.size() << " channels\n";
  }
  return 0;
}

// ------------------------------------------------------------- simulate ----

int run_simulate(const RunConfig& cfg) {
  const qns::ScenarioSpec& scenario =
      qns::find_scenario(cfg.scenarios, cfg.job_scenario);
  const qns::SimReport report =
      qns::simulate_job(cfg.job, scenario, cfg.job_arch, cfg.catalog, cfg.tdm,
                        cfg.link, cfg.channels, cfg.mode, cfg.seed,
                        cfg.worst_case);

  const auto events_path = out_file(cfg, "events.csv");
  CsvWriter csv(events_path.string(),
                {"time_s", "event_kind", "qpu_pair", "channel"},
                cfg.fingerprint);
  for (const qns::SimEvent& e : report.events) {
    csv.row({CsvWriter::cell(e.time_s), qns::to_string(e.kind),
             CsvWriter::cell(e.qpu_pair), CsvWriter::cell(e.channel)});
  }

  nlohmann::json j;
  j["config_fingerprint"] = qns::format_fingerprint(cfg.fingerprint);
  j["scenario"] = qns::to_string(cfg.job_scenario);
  j["architecture"] = qns::to_string(cfg.job_arch);
  j["mode"] = cfg.mode == qns::SimMode::Deterministic ? "det" : "stoch";
  j["seed"] = cfg.seed;
  j["per_channel_hz"] = report.per_channel_hz;
  j["aggregate_hz"] = report.aggregate_hz;
  j["effective_hz"] = report.effective_hz;
  j["makespan_s"] = report.makespan_s;
  j["pairs_demanded"] = report.pairs_demanded;
  j["pairs_delivered"] = report.pairs_delivered;
  j["major_reconfigs"] = report.major_reconfigs;
  j["minor_reconfigs"] = report.minor_reconfigs;
  j["n_events"] = report.events.size();
  j["demands"] = nlohmann::json::array();
  for (const qns::DemandOutcome& d : report.demands) {
    j["demands"].push_back({{"qpu_pair", d.qpu_pair},
                            {"pairs_demanded", d.pairs_demanded},
                            {"pairs_delivered", d.pairs_delivered},
                            {"completion_time_s", d.completion_time_s}});
  }
  const auto report_path = out_file(cfg, "report.json");
  std::ofstream out(report_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " +
                             report_path.string());
  }
  out << j.dump(2) << "\n";

  std::cout << "simulate: " << report.pairs_delivered << " pairs over "
            << qns::format_double(report.makespan_s) << " s ("
            << report.major_reconfigs << " major / " << report.minor_reconfigs
            << " minor reconfigs, " << report.events.size() << " events)\n";
  std::cout << "simulate: wrote " << events_path.string() << " and "
            << report_path.string() << "\n";
  return 0;
}

// --------------------------------------------------------------- table1 ----

int run_table1(const RunConfig& cfg) {
  const qns::TableReport table =
      qns::table_report(cfg.catalog, cfg.scenarios, cfg.tdm, cfg.channels,
                        cfg.link, cfg.noise, cfg.worst_case);

  const auto path = out_file(cfg, "table1.csv");
  CsvWriter csv(path.string(),
                {"section", "scenario", "architecture", "nodes", "value",
                 "target", "rel_error", "abs_error"},
                cfg.fingerprint);
  for (const qns::TableRateCell& cell : table.rates) {
    csv.row({"rate", qns::to_string(cell.scenario), qns::to_string(cell.arch),
             CsvWriter::cell(0), CsvWriter::cell(cell.rate_hz),
             CsvWriter::cell(cell.target_hz), CsvWriter::cell(cell.rel_error),
             CsvWriter::cell(cell.rate_hz - cell.target_hz)});
  }
  for (const qns::TableFidelityCell& cell : table.fidelities) {
    csv.row({"fidelity", "-", qns::to_string(cell.arch),
             CsvWriter::cell(cell.nodes), CsvWriter::cell(cell.fidelity),
             CsvWriter::cell(cell.target),
             CsvWriter::cell((cell.fidelity - cell.target) / cell.target),
             CsvWriter::cell(cell.abs_error)});
  }

  std::cout << "table1: wrote " << table.rates.size() << " rate cells and "
            << table.fidelities.size() << " fidelity cells to "
            << path.string() << "\n";
  for (const qns::TableRateCell& cell : table.rates) {
    std::printf("table1: %-10s %-14s %14.1f Hz  (target %12.1f, %+6.2f%%)\n",
                qns::to_string(cell.scenario).c_str(),
                qns::to_string(cell.arch).c_str(), cell.rate_hz,
                cell.target_hz, 100.0 * cell.rel_error);
  }
  for (const qns::TableFidelityCell& cell : table.fidelities) {
    std::printf("table1: fidelity %-14s n=%d  %.4f  (target %.3f, %+.4f)\n",
                qns::to_string(cell.arch).c_str(), cell.nodes, cell.fidelity,
                cell.target, cell.abs_error);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qnetsim: DWDM quantum-network rate, fidelity, conversion-"
               "noise, and reconfiguration simulator"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path = "config/default.json";
  std::string out_dir;
  std::int64_t seed = 0;
  std::string mode;
  bool worst_case = false;
  app.add_option("--config", config_path, "Run-configuration JSON file")
      ->capture_default_str();
  auto* out_opt =
      app.add_option("--out", out_dir, "Output directory (overrides config)");
  auto* seed_opt =
      app.add_option("--seed", seed, "RNG seed (overrides config)");
  auto* mode_opt = app.add_option("--mode", mode, "det or stoch")
                       ->check(CLI::IsMember({"det", "stoch"}));
  app.add_flag("--worst-case", worst_case,
               "Use the worst-case mechanical-switch insertion loss");

  app.add_subcommand("rate", "Aggregate-rate sweep over the atom budget for "
                             "every scenario/architecture cell");
  app.add_subcommand("fidelity", "Pair fidelity versus Bell-swap node count "
                                 "per architecture");
  app.add_subcommand("raman",
                     "Conversion-noise spectral density over pump wavelength "
                     "and temperature, plus the Stokes/anti-Stokes branch "
                     "comparison");
  auto* tune_cmd = app.add_subcommand(
      "tune", "Pump wavelength and temperature plan per DWDM channel");
  double signal_nm = 0.0;
  double target_nm = 0.0;
  auto* signal_opt = tune_cmd->add_option(
      "--signal-nm", signal_nm, "Source line to convert (defaults to config)");
  auto* target_opt = tune_cmd->add_option(
      "--target-nm", target_nm, "Plan only the channel nearest this "
                                "wavelength");
  app.add_subcommand("simulate",
                     "Run the configured job and emit the event log and "
                     "report");
  app.add_subcommand("table1",
                     "Compare every scenario/architecture cell against the "
                     "embedded reference targets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::filesystem::path cfg_path(config_path);
    nlohmann::json j = qns::load_config_json(config_path);
    // Command-line overrides are folded into the JSON before parsing so the
    // fingerprint always reflects the effective configuration.
    if (*out_opt) j["out_dir"] = out_dir;
    if (*seed_opt) j["seed"] = seed;
    if (*mode_opt) j["mode"] = mode;
    if (worst_case) j["worst_case"] = true;
    if (*signal_opt) j["tune"]["atom_line_nm"] = signal_nm;
    if (*target_opt) j["tune"]["target_nm"] = target_nm;
    const RunConfig cfg =
        qns::parse_run_config(j, cfg_path.parent_path().string());

    std::optional<double> target;
    if (*target_opt) target = target_nm;

    if (app.got_subcommand("rate")) return run_rate(cfg);
    if (app.got_subcommand("fidelity")) return run_fidelity(cfg);
    if (app.got_subcommand("raman")) return run_raman(cfg);
    if (app.got_subcommand("tune")) return run_tune(cfg, target);
    if (app.got_subcommand("simulate")) return run_simulate(cfg);
    if (app.got_subcommand("table1")) return run_table1(cfg);
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const qns::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
