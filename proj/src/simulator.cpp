#include "rpga/simulator.hpp"

#include <string>

#include "rpga/error.hpp"

namespace rpga {

namespace {

void check_width(const Circuit& circuit, std::size_t got) {
  if (got != circuit.width())
    throw Error(ErrorCode::WidthError, "circuit has " + std::to_string(circuit.width()) +
                                           " lines, input has " + std::to_string(got) + " bits");
}

void apply_placement(const Placement& p, Bits& state) {
  std::uint32_t in = 0;
  for (auto line : p.pins) in = (in << 1) | state[line];
  std::uint32_t out = p.gate->apply(in);
  const std::size_t k = p.pins.size();
  for (std::size_t i = 0; i < k; ++i) state[p.pins[i]] = (out >> (k - 1 - i)) & 1U;
}

void apply_placement(const Placement& p, Word& state, std::size_t width) {
  std::uint32_t in = 0;
  for (auto line : p.pins) in = (in << 1) | ((state >> (width - 1 - line)) & 1U);
  std::uint32_t out = p.gate->apply(in);
  const std::size_t k = p.pins.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Word mask = Word{1} << (width - 1 - p.pins[i]);
    if ((out >> (k - 1 - i)) & 1U)
      state |= mask;
    else
      state &= ~mask;
  }
}

void check_enumerable(const Circuit& circuit, std::size_t cap) {
  if (circuit.width() > cap || circuit.width() > 30)
    throw Error(ErrorCode::TooWide, "cannot enumerate " + std::to_string(circuit.width()) +
                                        " lines (cap " + std::to_string(cap) + ")");
}

}  // namespace

Bits eval(const Circuit& circuit, std::span<const std::uint8_t> input) {
  check_width(circuit, input.size());
  Bits state(input.begin(), input.end());
  // Placements are stored in slot order; gates sharing a slot touch
  // disjoint lines so their relative order does not matter.
  for (const auto& p : circuit.placements()) apply_placement(p, state);
  return state;
}

Word eval(const Circuit& circuit, Word input) {
  if (circuit.width() > 64)
    throw Error(ErrorCode::TooWide, "word evaluation supports at most 64 lines");
  const std::size_t width = circuit.width();
  if (width < 64 && (input >> width) != 0)
    throw Error(ErrorCode::WidthError, "input word wider than the circuit");
  for (const auto& p : circuit.placements()) apply_placement(p, input, width);
  return input;
}

Trace trace(const Circuit& circuit, std::span<const std::uint8_t> input) {
  check_width(circuit, input.size());
  Trace result;
  Bits state(input.begin(), input.end());
  result.snapshots.push_back({std::nullopt, state});
  const auto& placements = circuit.placements();
  for (std::size_t i = 0; i < placements.size(); ++i) {
    apply_placement(placements[i], state);
    const bool slot_ends = i + 1 == placements.size() || placements[i + 1].slot != placements[i].slot;
    if (slot_ends) result.snapshots.push_back({placements[i].slot, state});
  }
  return result;
}

ReversibleTruthTable full_table(const Circuit& circuit, std::size_t enumeration_cap) {
  check_enumerable(circuit, enumeration_cap);
  ReversibleTruthTable table;
  table.width = circuit.width();
  const Word rows = Word{1} << table.width;
  table.outputs.resize(rows);
  for (Word x = 0; x < rows; ++x) table.outputs[x] = eval(circuit, x);
  return table;
}

BijectivityReport check_bijective(const Circuit& circuit, std::size_t enumeration_cap) {
  const auto table = full_table(circuit, enumeration_cap);
  BijectivityReport report;
  report.permutation = table.outputs;
  std::vector<Word> first_preimage(table.rows(), table.rows());
  report.bijective = true;
  for (Word x = 0; x < table.rows(); ++x) {
    const Word y = table.outputs[x];
    if (first_preimage[y] != table.rows()) {
      report.bijective = false;
      report.collision = std::make_pair(first_preimage[y], x);
      break;
    }
    first_preimage[y] = x;
  }
  return report;
}

}  // namespace rpga
