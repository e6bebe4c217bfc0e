#include "rpga/truth_table.hpp"

#include "rpga/circuit.hpp"
#include "rpga/error.hpp"
#include "rpga/gate.hpp"

namespace rpga {

IrreversibleTruthTable::IrreversibleTruthTable(std::vector<std::string> input_names,
                                               std::vector<std::string> output_names,
                                               std::vector<Word> outputs)
    : input_names_(std::move(input_names)),
      output_names_(std::move(output_names)),
      outputs_(std::move(outputs)) {
  if (output_names_.empty()) throw Error(ErrorCode::NoOutputs, "table has no output columns");
  if (input_names_.size() > 30 || output_names_.size() > 64)
    throw Error(ErrorCode::TooWide, "table too wide");
  const Word rows = Word{1} << input_names_.size();
  if (outputs_.size() != rows)
    throw Error(ErrorCode::MalformedTable, "table has " + std::to_string(outputs_.size()) +
                                               " rows, expected " + std::to_string(rows));
  if (output_names_.size() < 64) {
    for (Word row = 0; row < rows; ++row)
      if (outputs_[row] >> output_names_.size())
        throw Error(ErrorCode::MalformedTable,
                    "row " + format_word(row, input_names_.size()) + " output wider than " +
                        std::to_string(output_names_.size()) + " bits");
  }
}

IrreversibleTruthTable IrreversibleTruthTable::from_rows(
    std::vector<std::string> input_names, std::vector<std::string> output_names,
    const std::vector<std::pair<Word, Word>>& rows) {
  const std::size_t n = input_names.size();
  if (n > 30) throw Error(ErrorCode::TooWide, "table too wide");
  const Word count = Word{1} << n;
  std::vector<Word> outputs(count);
  std::vector<bool> seen(count, false);
  for (const auto& [in, out] : rows) {
    if (in >= count)
      throw Error(ErrorCode::MalformedTable, "input word " + std::to_string(in) + " out of range");
    if (seen[in])
      throw Error(ErrorCode::MalformedTable, "duplicate row " + format_word(in, n));
    seen[in] = true;
    outputs[in] = out;
  }
  for (Word row = 0; row < count; ++row)
    if (!seen[row]) throw Error(ErrorCode::MalformedTable, "missing row " + format_word(row, n));
  return IrreversibleTruthTable(std::move(input_names), std::move(output_names), std::move(outputs));
}

IrreversibleTruthTable IrreversibleTruthTable::with_default_names(std::size_t n, std::size_t m,
                                                                  std::vector<Word> outputs) {
  std::vector<std::string> ins, outs;
  for (std::size_t i = 1; i <= n; ++i) ins.push_back("I" + std::to_string(i));
  for (std::size_t j = 1; j <= m; ++j) outs.push_back("O" + std::to_string(j));
  return IrreversibleTruthTable(std::move(ins), std::move(outs), std::move(outputs));
}

Roles Roles::of(const Circuit& circuit) {
  Roles roles;
  for (const auto& line : circuit.lines()) {
    if (line.input.constant) roles.constants[line.index] = *line.input.constant;
    if (line.output.garbage) roles.garbage.insert(line.index);
    roles.line_names.push_back(line.name);
    roles.output_names.push_back(line.output.name);
  }
  return roles;
}

IrreversibleTruthTable project(const ReversibleTruthTable& table, const Roles& roles) {
  const std::size_t n = table.width;
  for (const auto& [line, value] : roles.constants)
    if (line >= n) throw Error(ErrorCode::PinOutOfRange, "constant on missing line " + std::to_string(line));
  for (auto line : roles.garbage)
    if (line >= n) throw Error(ErrorCode::PinOutOfRange, "garbage on missing line " + std::to_string(line));

  auto bit_of = [n](Word word, std::size_t line) { return (word >> (n - 1 - line)) & 1U; };
  auto named = [](const std::vector<std::string>& names, std::size_t line) -> std::string {
    return line < names.size() ? names[line] : std::string{};
  };

  std::vector<std::size_t> free_lines, output_lines;
  std::vector<std::string> input_names, output_names;
  for (std::size_t line = 0; line < n; ++line) {
    if (!roles.constants.contains(line)) {
      free_lines.push_back(line);
      auto name = named(roles.line_names, line);
      input_names.push_back(name.empty() ? "I" + std::to_string(free_lines.size()) : name);
    }
    if (!roles.garbage.contains(line)) {
      output_lines.push_back(line);
      auto name = named(roles.output_names, line);
      output_names.push_back(name.empty() ? "O" + std::to_string(output_lines.size()) : name);
    }
  }
  if (output_lines.empty()) throw Error(ErrorCode::NoOutputs, "every output line is garbage");

  // Row r of the projected table sets the free lines to r's bits and the
  // constant lines to their declared values.
  Word fixed = 0;
  for (const auto& [line, value] : roles.constants)
    if (value) fixed |= Word{1} << (n - 1 - line);

  const std::size_t free_count = free_lines.size();
  std::vector<Word> outputs(Word{1} << free_count);
  for (Word r = 0; r < outputs.size(); ++r) {
    Word full = fixed;
    for (std::size_t i = 0; i < free_count; ++i)
      if ((r >> (free_count - 1 - i)) & 1U) full |= Word{1} << (n - 1 - free_lines[i]);
    const Word out = table.outputs.at(full);
    Word projected = 0;
    for (auto line : output_lines) projected = (projected << 1) | bit_of(out, line);
    outputs[r] = projected;
  }
  return IrreversibleTruthTable(std::move(input_names), std::move(output_names), std::move(outputs));
}

CostTable CostTable::defaults() {
  CostTable t;
  t.costs_ = {{"not", 1},     {"feynman", 1}, {"swap", 3},   {"toffoli", 5},
              {"fredkin", 5}, {"frg", 5},     {"peres", 4},  {"kerntopf", 5},
              {"picton", 6},  {"f2g", 2},     {"nft", 5}};
  return t;
}

std::optional<unsigned> CostTable::cost(const GateDef& gate) const {
  if (auto it = costs_.find(gate.name()); it != costs_.end()) return it->second;
  auto lookup = [this](const char* name) -> std::optional<unsigned> {
    if (auto it = costs_.find(name); it != costs_.end()) return it->second;
    return std::nullopt;
  };
  switch (gate.family()) {
    case GateFamily::MultiControlToffoli:
      if (gate.controls() == 0) return lookup("not");
      if (gate.controls() == 1) return lookup("feynman");
      if (gate.controls() == 2) return lookup("toffoli");
      return mct_wide_;
    case GateFamily::MultiControlFredkin:
      if (gate.controls() == 0) return lookup("swap");
      if (gate.controls() == 1) return lookup("fredkin");
      return mcf_wide_;
    case GateFamily::Builtin:
      break;
  }
  return std::nullopt;
}

Metrics metrics(const Circuit& circuit, const CostTable& costs) {
  Metrics m;
  m.gate_count = circuit.placements().size();
  m.constant_inputs = circuit.constant_count();
  m.garbage_outputs = circuit.garbage_count();
  m.gate_levels = circuit.depth();
  for (const auto& p : circuit.placements()) {
    if (auto c = costs.cost(*p.gate)) {
      m.quantum_cost += *c;
    } else {
      m.quantum_cost += 1;
      m.uncosted_gates.push_back(p.gate->name());
    }
  }
  return m;
}

}  // namespace rpga
