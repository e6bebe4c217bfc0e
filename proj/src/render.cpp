#include "rpga/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace rpga {

namespace {

std::string join(const std::vector<std::string>& items, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string line_label(const Line& line) {
  return line.name.empty() ? "l" + std::to_string(line.index) : line.name;
}

}  // namespace

std::string render_text(const ReversibleTruthTable& table, const Circuit& circuit) {
  std::ostringstream out;
  std::vector<std::string> names;
  for (const auto& line : circuit.lines()) names.push_back(line_label(line));
  out << "reversible truth table (" << table.width << " lines: " << join(names) << ")\n";
  for (Word x = 0; x < table.rows(); ++x)
    out << format_word(x, table.width) << " -> " << format_word(table.outputs[x], table.width) << '\n';
  return out.str();
}

std::string render_text(const IrreversibleTruthTable& table) {
  std::ostringstream out;
  out << "irreversible truth table (" << join(table.input_names()) << " -> "
      << join(table.output_names()) << ")\n";
  for (Word x = 0; x < table.rows(); ++x)
    out << format_word(x, table.input_count()) << " -> "
        << format_word(table.output_word(x), table.output_count()) << '\n';
  return out.str();
}

std::string render_text(const SymmetryReport& report) {
  std::ostringstream out;
  out << "inputs: " << report.input_count << " (" << join(report.input_names) << ")\n";
  for (const auto& o : report.outputs) {
    out << o.name << ": ";
    if (o.symmetric) {
      out << "symmetric " << index_set_label(o.index_set) << " A=[";
      for (std::size_t w = 0; w < o.value_vector->size(); ++w)
        out << (w ? "," : "") << ((*o.value_vector)[w] ? 1 : 0);
      out << "]\n";
    } else {
      const auto& w = *o.witness;
      out << "asymmetric (" << format_word(w.first_row, report.input_count) << " -> "
          << w.first_value << ", " << format_word(w.second_row, report.input_count) << " -> "
          << w.second_value << ")\n";
    }
  }
  out << (report.all_symmetric() ? "verdict: symmetric\n" : "verdict: not symmetric\n");
  return out.str();
}

std::string render_text(const Metrics& m) {
  std::ostringstream out;
  out << "N=" << m.gate_count << " CI=" << m.constant_inputs << " GO=" << m.garbage_outputs
      << " GL=" << m.gate_levels << " QC=" << m.quantum_cost << '\n';
  if (!m.uncosted_gates.empty())
    out << "warning: no cost entry for " << join(m.uncosted_gates, ", ") << " (counted as 1)\n";
  return out.str();
}

std::string render_text(const BijectivityReport& report, std::size_t width) {
  std::ostringstream out;
  if (report.bijective) {
    out << "bijective: yes\n";
  } else {
    out << "bijective: no";
    if (report.collision)
      out << " (inputs " << format_word(report.collision->first, width) << " and "
          << format_word(report.collision->second, width) << " collide)";
    out << '\n';
  }
  return out.str();
}

std::string render_text(const ResourceReport& r) {
  std::ostringstream out;
  out << "nodes=" << r.nodes << " node_constants=" << r.node_constants
      << " node_garbage=" << r.node_garbage << " constants=" << r.constants
      << " garbage=" << r.garbage << " copy_gates=" << r.copy_gates
      << " feynman_gates=" << r.feynman_gates << " not_gates=" << r.not_gates << '\n';
  if (r.uses_index_zero) out << "note: index 0 realized by an inverted copy of T1\n";
  return out.str();
}

std::string render_text(const RenderModel& model) {
  std::ostringstream out;
  out << "mode: " << to_string(model.mode) << '\n';
  if (model.input) out << "input: " << format_bits(*model.input) << '\n';
  std::size_t active = std::count_if(model.nodes.begin(), model.nodes.end(),
                                     [](const auto& n) { return n.state == NodeState::Active; });
  out << "nodes: " << active << "/" << model.nodes.size() << " active\n";
  out << "taps:";
  for (const auto& tap : model.taps) out << " S" << tap.index << "=" << to_string(tap.state);
  out << '\n';
  for (const auto& o : model.outputs)
    out << "output " << o.name << " " << index_set_label(o.index_set) << ": " << to_string(o.state)
        << '\n';
  return out.str();
}

std::string render_outputs(const FabricResult& result) {
  std::vector<std::string> parts;
  for (const auto& [name, value] : result.outputs) parts.push_back(name + "=" + (value ? "1" : "0"));
  return join(parts);
}

std::string render_trace(const FabricResult& result, const Configuration& config) {
  std::ostringstream out;
  const auto& labels = config.slot_labels();
  std::vector<std::string> names;
  for (const auto& line : config.netlist().lines()) names.push_back(line_label(line));
  std::size_t width = 5;
  for (const auto& label : labels) width = std::max(width, label.size());
  out << "lines: " << join(names) << '\n';
  for (const auto& snap : result.trace.snapshots) {
    std::string head = snap.slot ? "slot " + std::to_string(*snap.slot) : "input";
    std::string label = snap.slot && *snap.slot < labels.size() ? labels[*snap.slot] : "";
    out << std::left << std::setw(9) << head << std::setw(static_cast<int>(width) + 2) << label
        << format_bits(snap.values) << '\n';
  }
  out << "outputs: " << render_outputs(result) << '\n';
  return out.str();
}

}  // namespace rpga
