// Copyright 2026 The qnetsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Run configuration: a JSON file naming the component catalog and phonon
// parameter file, scenario/TDM overrides, sweep axes, and the job to
// simulate. Configuration problems raise config_error (CLI exit code 2),
// distinct from numerical domain errors (exit code 3).
#ifndef QNETSIM_CONFIG_HPP
#define QNETSIM_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qnetsim/components.hpp"
#include "qnetsim/fidelity.hpp"
#include "qnetsim/netsim.hpp"
#include "qnetsim/optics.hpp"
#include "qnetsim/raman.hpp"
#include "qnetsim/scenario.hpp"
#include "qnetsim/tdm.hpp"

namespace qns {

class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// FNV-1a 64-bit hash of the canonical configuration dump; stamped into every
// CSV so outputs can be traced back to the exact effective configuration.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct PumpSweep {
  double start_nm = 0.0;
  double end_nm = 0.0;
  int points = 2;
};

// Waveguide and pump parameters for the conversion-noise sweeps.
struct RamanRunParams {
  double signal_nm = 1520.0;
  double power_w = 0.2;
  double length_m = 0.03;
  double pump_waist_um = 2.0;
  double signal_waist_um = 2.0;
  double n_signal = 2.14;
  double n_pump = 2.14;

  WaveguideGeometry geometry() const {
    WaveguideGeometry geom;
    geom.length_m = length_m;
    geom.theta_r_m2 = overlap_gaussian(pump_waist_um * 1e-6,
                                       signal_waist_um * 1e-6);
    return geom;
  }
};

struct GridParams {
  double start_nm = 1519.86;
  double end_nm = 1577.03;
  double spacing_ghz = 50.0;
};

struct RunConfig {
  std::string config_dir;
  std::string catalog_path;
  std::string phonon_path;
  Catalog catalog;
  PhononFile phonons;

  std::vector<ScenarioSpec> scenarios = default_scenarios();
  TdmParams tdm;
  LinkModel link;
  int channels = 144;
  GridParams grid;

  std::vector<std::int64_t> n_tot_list;
  std::vector<int> node_list;
  std::vector<double> temperatures_k;
  PumpSweep pump_sweep;        // conversion-band pump sweep (blue-shifted)
  PumpSweep ratio_pump_sweep;  // red-shifted pumps for branch-ratio pairs

  double atom_line_nm = 780.0;
  TuningModel tuning;

  ArchitectureNoiseModel noise;

  JobSpec job;
  ScenarioKind job_scenario = ScenarioKind::IntraRack;
  Architecture job_arch = Architecture::RqiDwdm;

  std::uint64_t seed = 0;
  SimMode mode = SimMode::Deterministic;
  std::string out_dir = "out";
  bool worst_case = false;

  std::uint64_t fingerprint = 0;

  RamanModel raman_model() const {
    RamanModel model;
    model.modes = phonons.modes;
    model.n_signal = raman.n_signal;
    model.n_pump = raman.n_pump;
    return model;
  }

  RamanRunParams raman;
};

namespace detail_config {

using nlohmann::json;

inline double num(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number()) throw config_error(std::string(key) + " must be a number");
  return v.get<double>();
}

inline std::int64_t integer(const json& j, const char* key,
                            std::int64_t fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_integer()) {
    throw config_error(std::string(key) + " must be an integer");
  }
  return v.get<std::int64_t>();
}

inline std::string text(const json& j, const char* key,
                        const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_string()) throw config_error(std::string(key) + " must be a string");
  return v.get<std::string>();
}

inline PumpSweep pump_sweep(const json& j, const char* key,
                            PumpSweep fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  PumpSweep sweep;
  sweep.start_nm = num(v, "start_nm", 0.0);
  sweep.end_nm = num(v, "end_nm", 0.0);
  sweep.points = static_cast<int>(integer(v, "points", 2));
  if (!(sweep.start_nm > 0.0) || !(sweep.end_nm > sweep.start_nm)) {
    throw config_error(std::string(key) + ": need 0 < start_nm < end_nm");
  }
  if (sweep.points < 2) {
    throw config_error(std::string(key) + ": need at least 2 points");
  }
  return sweep;
}

}  // namespace detail_config

inline nlohmann::json load_config_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  try {
    nlohmann::json j;
    in >> j;
    if (!j.is_object()) throw config_error("config root must be an object");
    return j;
  } catch (const config_error&) {
    throw;
  } catch (const std::exception& e) {
    throw config_error(std::string("config parse error: ") + e.what());
  }
}

// Relative paths resolve against the working directory first, then against
// the directory containing the config file.
inline std::string resolve_path(const std::string& config_dir,
                                const std::string& path) {
  namespace fs = std::filesystem;
  const fs::path p(path);
  if (p.is_absolute() || fs::exists(p)) return path;
  return (fs::path(config_dir) / p).string();
}

inline RunConfig parse_run_config(const nlohmann::json& j,
                                  const std::string& config_dir) {
  using detail_config::integer;
  using detail_config::num;
  using detail_config::text;

  RunConfig cfg;
  cfg.config_dir = config_dir;
  try {
    cfg.catalog_path =
        resolve_path(config_dir, text(j, "catalog", "data/catalog.json"));
    cfg.phonon_path = resolve_path(
        config_dir, text(j, "phonon_file", "data/phonon_modes.json"));
    if (!std::filesystem::exists(cfg.catalog_path)) {
      throw config_error("catalog file not found: " + cfg.catalog_path);
    }
    if (!std::filesystem::exists(cfg.phonon_path)) {
      throw config_error("phonon file not found: " + cfg.phonon_path);
    }
    cfg.catalog = load_catalog(cfg.catalog_path);
    cfg.phonons = load_phonon_file(cfg.phonon_path);

    if (j.contains("scenarios")) {
      for (const auto& s : j.at("scenarios")) {
        const ScenarioKind kind = parse_scenario(s.at("name").get<std::string>());
        for (auto& spec : cfg.scenarios) {
          if (spec.kind != kind) continue;
          spec.total_fiber_km = num(s, "total_fiber_km", spec.total_fiber_km);
          spec.switch_hops =
              static_cast<int>(integer(s, "switch_hops", spec.switch_hops));
          spec.qpus_per_rack =
              static_cast<int>(integer(s, "qpus_per_rack", spec.qpus_per_rack));
          spec.leaf_count =
              static_cast<int>(integer(s, "leaf_count", spec.leaf_count));
          spec.spine_count =
              static_cast<int>(integer(s, "spine_count", spec.spine_count));
          spec.validate();
        }
      }
    }

    if (j.contains("tdm")) {
      const auto& t = j.at("tdm");
      cfg.tdm.t_move_s = num(t, "t_move_s", cfg.tdm.t_move_s);
      cfg.tdm.t_init_s = num(t, "t_init_s", cfg.tdm.t_init_s);
      cfg.tdm.t_ent_s = num(t, "t_ent_s", cfg.tdm.t_ent_s);
      cfg.tdm.rounds = static_cast<int>(integer(t, "rounds", cfg.tdm.rounds));
      cfg.tdm.atoms = integer(t, "atoms", cfg.tdm.atoms);
    }

    if (j.contains("link")) {
      const auto& l = j.at("link");
      const std::string conv = text(l, "convention", "joint");
      if (conv == "joint") {
        cfg.link.convention = EmissionConvention::Joint;
      } else if (conv == "per_arm") {
        cfg.link.convention = EmissionConvention::PerArm;
      } else {
        throw config_error("link.convention must be joint or per_arm");
      }
      cfg.link.p_bsm = num(l, "p_bsm", cfg.link.p_bsm);
    }

    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      cfg.grid.start_nm = num(g, "start_nm", cfg.grid.start_nm);
      cfg.grid.end_nm = num(g, "end_nm", cfg.grid.end_nm);
      cfg.grid.spacing_ghz = num(g, "spacing_ghz", cfg.grid.spacing_ghz);
    }
    const ChannelGrid grid =
        build_itu_grid(cfg.grid.start_nm, cfg.grid.end_nm, cfg.grid.spacing_ghz);
    cfg.channels = static_cast<int>(integer(j, "channels",
                                            static_cast<std::int64_t>(
                                                grid.count())));
    if (cfg.channels < 1) throw config_error("channels must be >= 1");

    const auto& sweeps = j.contains("sweeps") ? j.at("sweeps")
                                              : nlohmann::json::object();
    cfg.n_tot_list = {144, 288, 720, 1440, 14400, 144000, 1440000};
    if (sweeps.contains("n_tot")) {
      cfg.n_tot_list.clear();
      for (const auto& v : sweeps.at("n_tot")) {
        cfg.n_tot_list.push_back(v.get<std::int64_t>());
      }
    }
    cfg.node_list = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    if (sweeps.contains("nodes")) {
      cfg.node_list.clear();
      for (const auto& v : sweeps.at("nodes")) {
        cfg.node_list.push_back(v.get<int>());
      }
    }
    cfg.temperatures_k = {240.0, 270.0, 300.0, 330.0};
    if (sweeps.contains("temperatures_k")) {
      cfg.temperatures_k.clear();
      for (const auto& v : sweeps.at("temperatures_k")) {
        cfg.temperatures_k.push_back(v.get<double>());
      }
    }
    PumpSweep pump_default;
    pump_default.start_nm = 1594.22;
    pump_default.end_nm = 1602.32;
    pump_default.points = 41;
    cfg.pump_sweep = detail_config::pump_sweep(sweeps, "pump_nm", pump_default);
    PumpSweep ratio_default;
    ratio_default.start_nm = 1278.0;
    ratio_default.end_nm = 1346.0;
    ratio_default.points = 35;
    cfg.ratio_pump_sweep =
        detail_config::pump_sweep(sweeps, "ratio_pump_nm", ratio_default);
    if (cfg.n_tot_list.empty() || cfg.node_list.empty() ||
        cfg.temperatures_k.empty()) {
      throw config_error("sweep axes must be non-empty");
    }

    if (j.contains("raman")) {
      const auto& r = j.at("raman");
      cfg.raman.signal_nm = num(r, "signal_nm", cfg.raman.signal_nm);
      cfg.raman.power_w = num(r, "power_w", cfg.raman.power_w);
      cfg.raman.length_m = num(r, "length_m", cfg.raman.length_m);
      cfg.raman.pump_waist_um = num(r, "pump_waist_um", cfg.raman.pump_waist_um);
      cfg.raman.signal_waist_um =
          num(r, "signal_waist_um", cfg.raman.signal_waist_um);
      cfg.raman.n_signal = num(r, "n_signal", cfg.raman.n_signal);
      cfg.raman.n_pump = num(r, "n_pump", cfg.raman.n_pump);
    }

    if (j.contains("tune")) {
      const auto& t = j.at("tune");
      cfg.atom_line_nm = num(t, "atom_line_nm", cfg.atom_line_nm);
      cfg.tuning.slope_nm_per_c =
          num(t, "slope_nm_per_c", cfg.tuning.slope_nm_per_c);
      cfg.tuning.reference_temperature_c =
          num(t, "reference_temperature_c", cfg.tuning.reference_temperature_c);
    }

    if (j.contains("fidelity")) {
      const auto& f = j.at("fidelity");
      const double eps = num(f, "chi2_infidelity",
                             cfg.noise.converter.per_photon_infidelity);
      const std::string kind = text(f, "converter", "chi2_dfg");
      if (kind == "chi3_tdfg") {
        cfg.noise.converter = ConverterProfile::chi3_tdfg();
      } else if (kind == "none") {
        cfg.noise.converter = ConverterProfile::none();
      } else if (kind == "chi2_dfg") {
        cfg.noise.converter = ConverterProfile::chi2_dfg(eps);
      } else {
        throw config_error("fidelity.converter must be chi2_dfg, chi3_tdfg, "
                           "or none");
      }
      cfg.noise.photonic_switch_crosstalk_db =
          num(f, "photonic_switch_crosstalk_db",
              cfg.catalog.photonic_switch_crosstalk_db);
      cfg.noise.mechanical_switch_crosstalk_db =
          num(f, "mechanical_switch_crosstalk_db",
              cfg.catalog.mechanical_switch_crosstalk_db);
      cfg.noise.mux_crosstalk_db =
          num(f, "mux_crosstalk_db", cfg.catalog.mechanical_switch_crosstalk_db);
    } else {
      cfg.noise.photonic_switch_crosstalk_db =
          cfg.catalog.photonic_switch_crosstalk_db;
      cfg.noise.mechanical_switch_crosstalk_db =
          cfg.catalog.mechanical_switch_crosstalk_db;
      cfg.noise.mux_crosstalk_db = cfg.catalog.mechanical_switch_crosstalk_db;
    }

    if (j.contains("job")) {
      const auto& job = j.at("job");
      cfg.job_scenario = parse_scenario(text(job, "scenario", "intra_rack"));
      cfg.job_arch = parse_architecture(text(job, "architecture", "rqi_dwdm"));
      cfg.job.epoch_pairs = integer(job, "epoch_pairs", cfg.job.epoch_pairs);
      cfg.job.minor_latency_s =
          num(job, "minor_latency_s", cfg.job.minor_latency_s);
      cfg.job.major_latency_s =
          num(job, "major_latency_s", cfg.job.major_latency_s);
      if (job.contains("demands")) {
        for (const auto& d : job.at("demands")) {
          JobDemand demand;
          demand.qpu_pair = integer(d, "qpu_pair", 0);
          demand.pairs = integer(d, "pairs", 0);
          cfg.job.demands.push_back(demand);
        }
      }
    }
    if (cfg.job.demands.empty()) {
      cfg.job.demands.push_back({0, 100});
    }
    cfg.job.validate();

    cfg.seed = static_cast<std::uint64_t>(integer(j, "seed", 0));
    cfg.mode = parse_sim_mode(text(j, "mode", "det"));
    cfg.out_dir = text(j, "out_dir", "out");
    if (j.contains("worst_case")) {
      if (!j.at("worst_case").is_boolean()) {
        throw config_error("worst_case must be a boolean");
      }
      cfg.worst_case = j.at("worst_case").get<bool>();
    }
    cfg.tdm.validate();
  } catch (const config_error&) {
    throw;
  } catch (const std::exception& e) {
    throw config_error(std::string("invalid config: ") + e.what());
  }

  // The fingerprint identifies the inputs that determine the computed data.
  // The output directory is plumbing, not physics: the same run written to
  // two places must carry the same provenance hash.
  nlohmann::json canonical = j;
  canonical.erase("out_dir");
  cfg.fingerprint = fnv1a64(canonical.dump());
  return cfg;
}

inline RunConfig load_run_config(const std::string& path) {
  const nlohmann::json j = load_config_json(path);
  const std::string dir =
      std::filesystem::path(path).parent_path().string();
  return parse_run_config(j, dir.empty() ? "." : dir);
}

}  // namespace qns

#endif  // QNETSIM_CONFIG_HPP
