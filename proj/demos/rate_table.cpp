// Prints the scenario/architecture comparison table: large-atom-budget
// entanglement rates for every cell, plus the pair fidelities after 3 and 9
// Bell-swap nodes, against the embedded reference targets.

#include <cstdio>

#include "qnetsim/netsim.hpp"

int main() {
  qns::Catalog catalog;  // built-in component defaults
  catalog.version = "builtin";
  qns::LinkModel link;
  link.convention = qns::EmissionConvention::PerArm;
  const qns::TdmParams tdm;
  const auto scenarios = qns::default_scenarios();

  const qns::TableReport table =
      qns::table_report(catalog, scenarios, tdm, /*channels=*/144, link);

  std::printf("%-12s %-16s %16s %16s %8s\n", "scenario", "architecture",
              "rate [Hz]", "target [Hz]", "error");
  for (const auto& cell : table.rates) {
    std::printf("%-12s %-16s %16.1f %16.1f %+7.2f%%\n",
                qns::to_string(cell.scenario).c_str(),
                qns::to_string(cell.arch).c_str(), cell.rate_hz,
                cell.target_hz, 100.0 * cell.rel_error);
  }
  std::printf("\n%-16s %6s %10s %10s %10s\n", "architecture", "nodes",
              "fidelity", "target", "error");
  for (const auto& cell : table.fidelities) {
    std::printf("%-16s %6d %10.4f %10.3f %+10.4f\n",
                qns::to_string(cell.arch).c_str(), cell.nodes, cell.fidelity,
                cell.target, cell.abs_error);
  }
  return 0;
}
