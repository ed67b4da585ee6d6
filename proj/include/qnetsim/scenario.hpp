// Copyright 2026 The qnetsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared enumerations naming the compared deployment scenarios and link
// architectures. Kept in a leaf header so the fidelity and network modules
// can both use them without depending on each other.
#ifndef QNETSIM_SCENARIO_HPP
#define QNETSIM_SCENARIO_HPP

#include <stdexcept>
#include <string>

namespace qns {

enum class ScenarioKind {
  IntraRack,   // QPUs in the same rack, metres of fibre
  InterRack,   // QPUs in different racks of one cluster
  CrossDC,     // QPUs in different data-center buildings, km of fibre
};

enum class Architecture {
  NoQfcSingle,  // single channel, near-infrared photons end to end
  QfcSingle,    // single channel, converted to the telecom band
  RqiDwdm,      // wavelength-multiplexed telecom channels, WSS routing
};

inline std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::IntraRack: return "intra_rack";
    case ScenarioKind::InterRack: return "inter_rack";
    case ScenarioKind::CrossDC: return "cross_dc";
  }
  throw std::logic_error("unknown scenario kind");
}

inline std::string to_string(Architecture arch) {
  switch (arch) {
    case Architecture::NoQfcSingle: return "no_qfc_single";
    case Architecture::QfcSingle: return "qfc_single";
    case Architecture::RqiDwdm: return "rqi_dwdm";
  }
  throw std::logic_error("unknown architecture");
}

inline ScenarioKind parse_scenario(const std::string& name) {
  if (name == "intra_rack") return ScenarioKind::IntraRack;
  if (name == "inter_rack") return ScenarioKind::InterRack;
  if (name == "cross_dc") return ScenarioKind::CrossDC;
  throw std::invalid_argument("unknown scenario: " + name);
}

inline Architecture parse_architecture(const std::string& name) {
  if (name == "no_qfc_single") return Architecture::NoQfcSingle;
  if (name == "qfc_single") return Architecture::QfcSingle;
  if (name == "rqi_dwdm") return Architecture::RqiDwdm;
  throw std::invalid_argument("unknown architecture: " + name);
}

}  // namespace qns

#endif  // QNETSIM_SCENARIO_HPP
