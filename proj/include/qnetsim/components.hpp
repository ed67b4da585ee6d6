// Copyright 2026 The qnetsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Catalog of optical components with insertion loss, crosstalk, and latency;
// composition of per-photon path chains into transmittance values.
#ifndef QNETSIM_COMPONENTS_HPP
#define QNETSIM_COMPONENTS_HPP

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qns {

inline double db_to_transmittance(double loss_db) {
  if (!(loss_db >= 0.0)) {
    throw std::domain_error("loss must be non-negative (gain not modeled)");
  }
  return std::pow(10.0, -loss_db / 10.0);
}

inline double transmittance_to_db(double efficiency) {
  if (!(efficiency > 0.0) || efficiency > 1.0) {
    throw std::domain_error("efficiency must lie in (0, 1]");
  }
  return -10.0 * std::log10(efficiency);
}

enum class ComponentKind {
  Fiber,
  PhotonicSwitch,
  MechanicalSwitch,
  DwdmMux,
  DwdmDemux,
  RqiConverter,
  Detector,
  FpFilter,
  ChipCoupling,
  CollectionOptics,
  SmfCoupling,
  Wss,
};

inline const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Fiber: return "fiber";
    case ComponentKind::PhotonicSwitch: return "photonic_switch";
    case ComponentKind::MechanicalSwitch: return "mechanical_switch";
    case ComponentKind::DwdmMux: return "dwdm_mux";
    case ComponentKind::DwdmDemux: return "dwdm_demux";
    case ComponentKind::RqiConverter: return "rqi_converter";
    case ComponentKind::Detector: return "detector";
    case ComponentKind::FpFilter: return "fp_filter";
    case ComponentKind::ChipCoupling: return "chip_coupling";
    case ComponentKind::CollectionOptics: return "collection_optics";
    case ComponentKind::SmfCoupling: return "smf_coupling";
    case ComponentKind::Wss: return "wss";
  }
  return "unknown";
}

enum class FiberBand { Nir, Telecom };

// One element of a photon path. Loss is insertion_loss_db except for fiber,
// which contributes loss_per_km_db * length_km. Crosstalk is consumed only by
// the fidelity model; transmittance ignores crosstalk leakage.
struct ComponentSpec {
  ComponentKind kind = ComponentKind::Fiber;
  double insertion_loss_db = 0.0;
  double loss_per_km_db = 0.0;                 // fiber only
  double length_km = 0.0;                      // fiber only
  FiberBand band = FiberBand::Telecom;         // fiber only
  double crosstalk_db = std::numeric_limits<double>::infinity();
  double reconfig_latency_s = 0.0;             // switches and RQI only

  double loss_db() const {
    if (kind == ComponentKind::Fiber) return loss_per_km_db * length_km;
    return insertion_loss_db;
  }
  double transmittance() const { return db_to_transmittance(loss_db()); }
};

using PathChain = std::vector<ComponentSpec>;

inline double chain_transmittance(const PathChain& chain) {
  double t = 1.0;
  for (const auto& c : chain) t *= c.transmittance();
  return t;
}

inline double chain_loss_db(const PathChain& chain) {
  double db = 0.0;
  for (const auto& c : chain) db += c.loss_db();
  return db;
}

// Composite WSS bound: demultiplexer + N x M switch + multiplexer.
inline double wss_loss(double demux_db, double switch_db, double mux_db) {
  if (demux_db < 0.0 || switch_db < 0.0 || mux_db < 0.0) {
    throw std::domain_error("loss must be non-negative");
  }
  return demux_db + switch_db + mux_db;
}

// Named default parameter set, loaded from a versioned data file. Every entry
// carries a provenance note in the file itself.
struct Catalog {
  std::string version;
  double p_emit = 0.5;
  double eta_col = 0.96;
  double eta_coup = 0.9;
  double l_tele_db_per_km = 0.17;
  double l_nir_db_per_km = 4.0;
  double mechanical_switch_db = 0.35;
  double mechanical_switch_worst_db = 0.7;
  double photonic_switch_db = 2.0;
  double l_mux_db = 0.5;
  double l_mux_lowloss_db = 0.137;
  double eta_d = 0.95;
  double eta_qe = 1.0;
  double eta_chip = 0.97;
  double eta_fp = 0.95;
  double photonic_switch_crosstalk_db = 25.0;
  double mechanical_switch_crosstalk_db = 60.0;
  double rqi_retune_latency_s = 1e-9;
  double mechanical_reconfig_latency_s = 1e-3;
  double photonic_switch_reconfig_latency_s = 1e-9;
};

namespace detail {

inline double catalog_value(const nlohmann::json& entries, const char* name) {
  if (!entries.contains(name)) {
    throw std::runtime_error(std::string("catalog entry missing: ") + name);
  }
  const auto& e = entries.at(name);
  if (e.is_object()) return e.at("value").get<double>();
  return e.get<double>();
}

}  // namespace detail

inline Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path);
  nlohmann::json j;
  in >> j;
  Catalog cat;
  cat.version = j.at("version").get<std::string>();
  const auto& e = j.at("entries");
  cat.p_emit = detail::catalog_value(e, "p_emit");
  cat.eta_col = detail::catalog_value(e, "eta_col");
  cat.eta_coup = detail::catalog_value(e, "eta_coup");
  cat.l_tele_db_per_km = detail::catalog_value(e, "l_tele_db_per_km");
  cat.l_nir_db_per_km = detail::catalog_value(e, "l_nir_db_per_km");
  cat.mechanical_switch_db = detail::catalog_value(e, "mechanical_switch_db");
  cat.mechanical_switch_worst_db =
      detail::catalog_value(e, "mechanical_switch_worst_db");
  cat.photonic_switch_db = detail::catalog_value(e, "photonic_switch_db");
  cat.l_mux_db = detail::catalog_value(e, "l_mux_db");
  cat.l_mux_lowloss_db = detail::catalog_value(e, "l_mux_lowloss_db");
  cat.eta_d = detail::catalog_value(e, "eta_d");
  cat.eta_qe = detail::catalog_value(e, "eta_qe");
  cat.eta_chip = detail::catalog_value(e, "eta_chip");
  cat.eta_fp = detail::catalog_value(e, "eta_fp");
  cat.photonic_switch_crosstalk_db =
      detail::catalog_value(e, "photonic_switch_crosstalk_db");
  cat.mechanical_switch_crosstalk_db =
      detail::catalog_value(e, "mechanical_switch_crosstalk_db");
  cat.rqi_retune_latency_s = detail::catalog_value(e, "rqi_retune_latency_s");
  cat.mechanical_reconfig_latency_s =
      detail::catalog_value(e, "mechanical_reconfig_latency_s");
  cat.photonic_switch_reconfig_latency_s =
      detail::catalog_value(e, "photonic_switch_reconfig_latency_s");
  return cat;
}

// Excess attenuation of the near-infrared band over the telecom band for a
// given span.
inline double nir_vs_telecom_excess_loss(double length_km, const Catalog& cat) {
  if (!(length_km >= 0.0)) {
    throw std::domain_error("length must be non-negative");
  }
  return (cat.l_nir_db_per_km - cat.l_tele_db_per_km) * length_km;
}

}  // namespace qns

#endif  // QNETSIM_COMPONENTS_HPP
