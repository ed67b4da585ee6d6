// Copyright 2026 The qnetsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Scalar multiplicative fidelity accumulation for distributed Bell pairs.
// Each switch/mux traversal and each wavelength conversion contributes an
// independent infidelity; the pair fidelity is the product of (1 - eps)
// over both photons' contributions times the source fidelity.
#ifndef QNETSIM_FIDELITY_HPP
#define QNETSIM_FIDELITY_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "qnetsim/scenario.hpp"

namespace qns {

// Crosstalk expressed in dB below the signal converts to an infidelity as a
// leakage-power ratio, applied once per traversal per photon.
inline double infidelity_from_crosstalk(double crosstalk_db) {
  if (!(crosstalk_db > 0.0)) {
    throw std::domain_error("crosstalk must be positive dB");
  }
  return std::pow(10.0, -crosstalk_db / 10.0);  // +inf dB -> 0
}

// Fraction of detected events that are noise, used to translate background
// counts into a per-photon infidelity.
inline double snr_to_infidelity(double signal_rate_hz, double noise_rate_hz) {
  if (signal_rate_hz < 0.0 || noise_rate_hz < 0.0) {
    throw std::domain_error("rates must be non-negative");
  }
  const double total = signal_rate_hz + noise_rate_hz;
  if (total == 0.0) throw std::domain_error("signal and noise both zero");
  return noise_rate_hz / total;
}

enum class NoiseSource { SwitchCrosstalk, MuxCrosstalk, ConverterNoise };

inline std::string to_string(NoiseSource source) {
  switch (source) {
    case NoiseSource::SwitchCrosstalk: return "switch_crosstalk";
    case NoiseSource::MuxCrosstalk: return "mux_crosstalk";
    case NoiseSource::ConverterNoise: return "converter_noise";
  }
  throw std::logic_error("unknown noise source");
}

struct NoiseContribution {
  NoiseSource source = NoiseSource::SwitchCrosstalk;
  double infidelity = 0.0;

  static NoiseContribution from_crosstalk_db(NoiseSource src, double db) {
    return NoiseContribution{src, infidelity_from_crosstalk(db)};
  }
  static NoiseContribution from_infidelity(NoiseSource src, double eps) {
    if (!(eps >= 0.0) || !(eps <= 1.0)) {
      throw std::domain_error("infidelity must lie in [0, 1]");
    }
    return NoiseContribution{src, eps};
  }
};

enum class ConverterKind { Chi2Dfg, Chi3FwmBs, Chi3Tdfg, None };

inline std::string to_string(ConverterKind kind) {
  switch (kind) {
    case ConverterKind::Chi2Dfg: return "chi2_dfg";
    case ConverterKind::Chi3FwmBs: return "chi3_fwm_bs";
    case ConverterKind::Chi3Tdfg: return "chi3_tdfg";
    case ConverterKind::None: return "none";
  }
  throw std::logic_error("unknown converter kind");
}

inline ConverterKind parse_converter_kind(const std::string& name) {
  if (name == "chi2_dfg") return ConverterKind::Chi2Dfg;
  if (name == "chi3_fwm_bs") return ConverterKind::Chi3FwmBs;
  if (name == "chi3_tdfg") return ConverterKind::Chi3Tdfg;
  if (name == "none") return ConverterKind::None;
  throw std::invalid_argument("unknown converter kind: " + name);
}

// Per-photon noise profile of a wavelength-conversion stage. The pump-induced
// background can be supplied either as a fixed per-photon infidelity or as a
// noise count rate to be combined with a signal rate via snr_to_infidelity.
struct ConverterProfile {
  ConverterKind kind = ConverterKind::None;
  double per_photon_infidelity = 0.0;
  double noise_counts_per_s = 0.0;

  void validate() const {
    if (!(per_photon_infidelity >= 0.0) || !(per_photon_infidelity <= 1.0)) {
      throw std::domain_error("converter infidelity must lie in [0, 1]");
    }
    if (noise_counts_per_s < 0.0) {
      throw std::domain_error("noise counts must be non-negative");
    }
    if (kind == ConverterKind::Chi3Tdfg && noise_counts_per_s != 0.0) {
      throw std::domain_error("three-wave cascaded converter is noise-free");
    }
    if (kind == ConverterKind::None &&
        (per_photon_infidelity != 0.0 || noise_counts_per_s != 0.0)) {
      throw std::domain_error("absent converter cannot carry noise");
    }
  }

  static ConverterProfile chi2_dfg(double infidelity,
                                   double noise_counts = 0.0) {
    ConverterProfile p{ConverterKind::Chi2Dfg, infidelity, noise_counts};
    p.validate();
    return p;
  }
  static ConverterProfile chi3_tdfg() {
    return ConverterProfile{ConverterKind::Chi3Tdfg, 0.0, 0.0};
  }
  static ConverterProfile none() { return ConverterProfile{}; }
};

// A Bell pair produced by interfering two photons; each arm carries an
// ordered list of noise contributions picked up along its path.
struct PairFidelityModel {
  double source_fidelity = 1.0;  // atom-photon entanglement assumed perfect
  std::vector<NoiseContribution> arm_a;
  std::vector<NoiseContribution> arm_b;
};

inline double pair_fidelity(const PairFidelityModel& model) {
  if (!(model.source_fidelity >= 0.0) || !(model.source_fidelity <= 1.0)) {
    throw std::domain_error("source fidelity must lie in [0, 1]");
  }
  double f = model.source_fidelity;
  for (const auto* arm : {&model.arm_a, &model.arm_b}) {
    for (const auto& c : *arm) {
      if (!(c.infidelity >= 0.0) || !(c.infidelity <= 1.0)) {
        throw std::domain_error("contribution infidelity must lie in [0, 1]");
      }
      f *= 1.0 - c.infidelity;
    }
  }
  return f;
}

// Default crosstalk/converter parameters for the architecture comparison.
// The converter infidelity is a fitted default: unfiltered pump background
// typically exceeds 5%, and narrowband filtering brings it to the few-percent
// level assumed here.
struct ArchitectureNoiseModel {
  double photonic_switch_crosstalk_db = 25.0;
  double mechanical_switch_crosstalk_db = 60.0;
  double mux_crosstalk_db = 60.0;
  ConverterProfile converter = ConverterProfile::chi2_dfg(0.0278);

  ArchitectureNoiseModel with_converter(const ConverterProfile& profile) const {
    ArchitectureNoiseModel copy = *this;
    copy.converter = profile;
    return copy;
  }
};

// Contributions picked up by ONE photon at ONE Bell-swap node:
//   single-channel routes cross one photonic switch per node;
//   the multiplexed route crosses one mechanical switch plus the two
//   mux/demux stages of the node's WSS.
inline std::vector<NoiseContribution> per_node_contributions(
    Architecture arch, const ArchitectureNoiseModel& model) {
  std::vector<NoiseContribution> out;
  switch (arch) {
    case Architecture::NoQfcSingle:
    case Architecture::QfcSingle:
      out.push_back(NoiseContribution::from_crosstalk_db(
          NoiseSource::SwitchCrosstalk, model.photonic_switch_crosstalk_db));
      break;
    case Architecture::RqiDwdm:
      out.push_back(NoiseContribution::from_crosstalk_db(
          NoiseSource::SwitchCrosstalk, model.mechanical_switch_crosstalk_db));
      out.push_back(NoiseContribution::from_crosstalk_db(
          NoiseSource::MuxCrosstalk, model.mux_crosstalk_db));
      out.push_back(NoiseContribution::from_crosstalk_db(
          NoiseSource::MuxCrosstalk, model.mux_crosstalk_db));
      break;
  }
  return out;
}

inline bool architecture_has_converter(Architecture arch) {
  return arch != Architecture::NoQfcSingle;
}

// Assemble the full pair model for a chain of `nodes` Bell-swap nodes: each
// photon crosses every node's switching stage, and converted architectures
// add one converter contribution per photon.
inline PairFidelityModel build_pair_model(Architecture arch, int nodes,
                                          const ArchitectureNoiseModel& model) {
  if (nodes < 1) throw std::domain_error("node count must be >= 1");
  model.converter.validate();
  PairFidelityModel pair;
  const auto per_node = per_node_contributions(arch, model);
  for (auto* arm : {&pair.arm_a, &pair.arm_b}) {
    for (int n = 0; n < nodes; ++n) {
      arm->insert(arm->end(), per_node.begin(), per_node.end());
    }
    if (architecture_has_converter(arch) &&
        model.converter.kind != ConverterKind::None) {
      arm->push_back(NoiseContribution::from_infidelity(
          NoiseSource::ConverterNoise, model.converter.per_photon_infidelity));
    }
  }
  return pair;
}

inline double fidelity_at_nodes(Architecture arch, int nodes,
                                const ArchitectureNoiseModel& model = {}) {
  return pair_fidelity(build_pair_model(arch, nodes, model));
}

struct FidelityPoint {
  int nodes = 0;
  double fidelity = 0.0;
};

inline std::vector<FidelityPoint> fidelity_vs_nodes(
    Architecture arch, const std::vector<int>& node_counts,
    const ArchitectureNoiseModel& model = {}) {
  std::vector<FidelityPoint> curve;
  curve.reserve(node_counts.size());
  for (int n : node_counts) {
    curve.push_back({n, fidelity_at_nodes(arch, n, model)});
  }
  return curve;
}

// Smallest node count at which the multiplexed architecture's fidelity
// meets or exceeds the unconverted single-channel one, or 0 if none is
// found up to max_nodes.
inline int crossover_node_count(const ArchitectureNoiseModel& model = {},
                                int max_nodes = 64) {
  for (int n = 1; n <= max_nodes; ++n) {
    const double rqi = fidelity_at_nodes(Architecture::RqiDwdm, n, model);
    const double bare = fidelity_at_nodes(Architecture::NoQfcSingle, n, model);
    if (rqi >= bare) return n;
  }
  return 0;
}

}  // namespace qns

#endif  // QNETSIM_FIDELITY_HPP
