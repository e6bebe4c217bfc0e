#pragma once

#include <string>

#include "rpga/fabric.hpp"
#include "rpga/session.hpp"
#include "rpga/simulator.hpp"
#include "rpga/symmetry.hpp"
#include "rpga/truth_table.hpp"

// Plain-text renderings used by the command line tool. Formats are stable;
// golden tests depend on them.
namespace rpga {

std::string render_text(const ReversibleTruthTable& table, const Circuit& circuit);
std::string render_text(const IrreversibleTruthTable& table);
std::string render_text(const SymmetryReport& report);
std::string render_text(const Metrics& metrics);
std::string render_text(const BijectivityReport& report, std::size_t width);
std::string render_text(const ResourceReport& resources);
std::string render_text(const RenderModel& model);

/// "O1=1 O2=0"
std::string render_outputs(const FabricResult& result);
/// One line per netlist stage: slot, stage label, all line values.
std::string render_trace(const FabricResult& result, const Configuration& config);

}  // namespace rpga
