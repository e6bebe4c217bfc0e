#include "rpga/json_codec.hpp"

namespace rpga {

namespace {

std::vector<unsigned> as_vector(const std::set<unsigned>& s) { return {s.begin(), s.end()}; }

Json trace_json(const Trace& trace, const Circuit& netlist, const std::vector<std::string>& labels) {
  Json stages = Json::array();
  for (const auto& snap : trace.snapshots) {
    Json j;
    if (snap.slot) {
      j["slot"] = *snap.slot;
      j["stage"] = *snap.slot < labels.size() ? labels[*snap.slot] : std::string{};
    } else {
      j["slot"] = nullptr;
      j["stage"] = "input";
    }
    j["values"] = format_bits(snap.values);
    stages.push_back(std::move(j));
  }
  Json names = Json::array();
  for (const auto& line : netlist.lines()) names.push_back(line.name);
  return {{"lines", names}, {"stages", stages}};
}

[[noreturn]] void report_fail(const std::string& message) {
  throw FormatError(0, 0, "symmetry report: " + message);
}

}  // namespace

Json to_json(const ReversibleTruthTable& table) {
  Json rows = Json::array();
  for (Word x = 0; x < table.rows(); ++x)
    rows.push_back({{"in", format_word(x, table.width)},
                    {"out", format_word(table.outputs[x], table.width)}});
  return {{"width", table.width}, {"rows", rows}};
}

Json to_json(const IrreversibleTruthTable& table) {
  Json rows = Json::array();
  for (Word x = 0; x < table.rows(); ++x)
    rows.push_back({{"in", format_word(x, table.input_count())},
                    {"out", format_word(table.output_word(x), table.output_count())}});
  return {{"inputs", table.input_names()}, {"outputs", table.output_names()}, {"rows", rows}};
}

Json to_json(const SymmetryReport& report) {
  Json outputs = Json::array();
  const std::size_t n = report.input_count;
  for (const auto& o : report.outputs) {
    Json j;
    j["name"] = o.name;
    j["symmetric"] = o.symmetric;
    if (o.value_vector) {
      std::vector<int> values;
      for (bool v : *o.value_vector) values.push_back(v ? 1 : 0);
      j["value_vector"] = values;
      j["K"] = as_vector(o.index_set);
      j["label"] = index_set_label(o.index_set);
    }
    if (o.witness) {
      j["witness"] = Json::array({
          {{"in", format_word(o.witness->first_row, n)}, {"out", o.witness->first_value ? 1 : 0}},
          {{"in", format_word(o.witness->second_row, n)}, {"out", o.witness->second_value ? 1 : 0}},
      });
    }
    outputs.push_back(std::move(j));
  }
  return {{"inputs", report.input_count},
          {"input_names", report.input_names},
          {"all_symmetric", report.all_symmetric()},
          {"outputs", outputs}};
}

SymmetryReport report_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("inputs") || !doc["inputs"].is_number_unsigned())
    report_fail("missing 'inputs'");
  if (!doc.contains("outputs") || !doc["outputs"].is_array()) report_fail("missing 'outputs'");
  SymmetryReport report;
  report.input_count = doc["inputs"].get<std::size_t>();
  const std::size_t n = report.input_count;
  if (doc.contains("input_names")) {
    if (!doc["input_names"].is_array()) report_fail("'input_names' must be an array");
    for (const auto& name : doc["input_names"]) {
      if (!name.is_string()) report_fail("input names must be strings");
      report.input_names.push_back(name.get<std::string>());
    }
  } else {
    for (std::size_t i = 1; i <= n; ++i) report.input_names.push_back("I" + std::to_string(i));
  }
  for (const auto& o : doc["outputs"]) {
    if (!o.is_object() || !o.contains("name") || !o["name"].is_string()) report_fail("output without a name");
    if (!o.contains("symmetric") || !o["symmetric"].is_boolean()) report_fail("output without 'symmetric'");
    OutputSymmetry entry;
    entry.name = o["name"].get<std::string>();
    entry.symmetric = o["symmetric"].get<bool>();
    if (entry.symmetric) {
      if (!o.contains("K") || !o["K"].is_array()) report_fail("symmetric output '" + entry.name + "' without 'K'");
      for (const auto& k : o["K"]) {
        if (!k.is_number_unsigned() || k.get<std::size_t>() > n)
          report_fail("index out of range in output '" + entry.name + "'");
        entry.index_set.insert(k.get<unsigned>());
      }
      std::vector<bool> values(n + 1, false);
      for (auto k : entry.index_set) values[k] = true;
      entry.value_vector = std::move(values);
    } else {
      Witness w;
      if (o.contains("witness") && o["witness"].is_array() && o["witness"].size() == 2) {
        try {
          w.first_row = to_word(parse_bits(o["witness"][0]["in"].get<std::string>()));
          w.first_value = o["witness"][0]["out"].get<int>() != 0;
          w.second_row = to_word(parse_bits(o["witness"][1]["in"].get<std::string>()));
          w.second_value = o["witness"][1]["out"].get<int>() != 0;
        } catch (const std::exception&) {
          report_fail("malformed witness in output '" + entry.name + "'");
        }
      }
      entry.witness = w;
    }
    report.outputs.push_back(std::move(entry));
  }
  return report;
}

Json to_json(const Metrics& m) {
  return {{"N", m.gate_count},        {"CI", m.constant_inputs}, {"GO", m.garbage_outputs},
          {"GL", m.gate_levels},      {"QC", m.quantum_cost},    {"uncosted", m.uncosted_gates}};
}

Json to_json(const BijectivityReport& report, std::size_t width) {
  Json j;
  j["bijective"] = report.bijective;
  std::vector<Word> perm(report.permutation.begin(), report.permutation.end());
  j["permutation"] = perm;
  if (report.collision)
    j["collision"] = {format_word(report.collision->first, width),
                      format_word(report.collision->second, width)};
  return j;
}

Json to_json(const ResourceReport& r) {
  return {{"nodes", r.nodes},
          {"node_constants", r.node_constants},
          {"node_garbage", r.node_garbage},
          {"constants", r.constants},
          {"garbage", r.garbage},
          {"copy_gates", r.copy_gates},
          {"feynman_gates", r.feynman_gates},
          {"not_gates", r.not_gates},
          {"uses_index_zero", r.uses_index_zero}};
}

Json to_json(const RenderModel& model) {
  Json j;
  j["mode"] = std::string(to_string(model.mode));
  j["n"] = model.n;
  j["cursor"] = model.cursor ? Json(*model.cursor) : Json(nullptr);
  j["input"] = model.input ? Json(format_bits(*model.input)) : Json(nullptr);
  j["nodes"] = Json::array();
  for (const auto& node : model.nodes)
    j["nodes"].push_back({{"id", node.id}, {"level", node.level}, {"state", to_string(node.state)}});
  j["taps"] = Json::array();
  for (const auto& tap : model.taps)
    j["taps"].push_back({{"k", tap.index}, {"state", to_string(tap.state)}});
  j["outputs"] = Json::array();
  for (const auto& out : model.outputs)
    j["outputs"].push_back(
        {{"name", out.name}, {"K", as_vector(out.index_set)}, {"state", to_string(out.state)}});
  return j;
}

Json to_json(const FabricResult& result, const Configuration& config, bool with_trace) {
  Json j;
  const auto& initial = result.trace.snapshots.front().values;
  j["input"] = format_bits(std::span(initial).first(config.fabric().n()));
  Json outputs = Json::object();
  for (const auto& [name, value] : result.outputs) outputs[name] = value ? 1 : 0;
  j["outputs"] = outputs;
  j["garbage"] = format_bits(result.garbage);
  if (with_trace) j["trace"] = trace_json(result.trace, config.netlist(), config.slot_labels());
  return j;
}

Json to_json(const Error& error) {
  Json j;
  j["code"] = std::string(to_string(error.code()));
  j["message"] = error.what();
  if (const auto* fe = dynamic_cast<const FormatError*>(&error)) {
    j["line"] = fe->line();
    j["column"] = fe->column();
    if (!fe->expected().empty()) j["expected"] = fe->expected();
  }
  return j;
}

}  // namespace rpga
