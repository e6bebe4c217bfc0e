#pragma once

#include <json.hpp>

#include "rpga/error.hpp"
#include "rpga/fabric.hpp"
#include "rpga/session.hpp"
#include "rpga/simulator.hpp"
#include "rpga/symmetry.hpp"
#include "rpga/truth_table.hpp"

namespace rpga {

using Json = nlohmann::ordered_json;

Json to_json(const ReversibleTruthTable& table);
Json to_json(const IrreversibleTruthTable& table);
Json to_json(const SymmetryReport& report);
Json to_json(const Metrics& metrics);
Json to_json(const BijectivityReport& report, std::size_t width);
Json to_json(const ResourceReport& resources);
Json to_json(const RenderModel& model);
Json to_json(const FabricResult& result, const Configuration& config, bool with_trace);
Json to_json(const Error& error);

/// Inverse of to_json(SymmetryReport). Throws FormatError.
SymmetryReport report_from_json(const Json& doc);

}  // namespace rpga
