#include "rpga/circuit.hpp"

#include <algorithm>

#include "rpga/error.hpp"

namespace rpga {

namespace {

void check_pins(const Placement& p, std::size_t width) {
  if (!p.gate) throw Error(ErrorCode::InvalidGate, "placement without a gate");
  if (p.pins.size() != p.gate->arity())
    throw Error(ErrorCode::WidthError, "gate '" + p.gate->name() + "' needs " +
                                           std::to_string(p.gate->arity()) + " pins, got " +
                                           std::to_string(p.pins.size()));
  for (std::size_t i = 0; i < p.pins.size(); ++i) {
    if (p.pins[i] >= width)
      throw Error(ErrorCode::PinOutOfRange,
                  "pin " + std::to_string(p.pins[i]) + " outside 0.." + std::to_string(width - 1));
    for (std::size_t j = 0; j < i; ++j)
      if (p.pins[i] == p.pins[j])
        throw Error(ErrorCode::PinClash, "gate '" + p.gate->name() + "' uses line " +
                                             std::to_string(p.pins[i]) + " twice");
  }
}

bool touches(const Placement& p, std::size_t line) {
  return std::find(p.pins.begin(), p.pins.end(), line) != p.pins.end();
}

}  // namespace

Circuit::Circuit(std::size_t num_lines, std::size_t line_cap) : line_cap_(line_cap) {
  if (num_lines < 1 || num_lines > line_cap)
    throw Error(ErrorCode::BadWidth, "line count " + std::to_string(num_lines) +
                                         " outside 1.." + std::to_string(line_cap));
  lines_.resize(num_lines);
  for (std::size_t i = 0; i < num_lines; ++i) lines_[i].index = i;
}

std::vector<std::size_t> Circuit::slots() const {
  std::vector<std::size_t> result;
  for (const auto& p : placements_)
    if (result.empty() || result.back() != p.slot) result.push_back(p.slot);
  return result;
}

std::size_t Circuit::depth() const { return slots().size(); }

std::size_t Circuit::next_free_slot() const {
  return placements_.empty() ? 0 : placements_.back().slot + 1;
}

void Circuit::place(std::size_t slot, GatePtr gate, std::vector<std::size_t> pins) {
  Placement p{slot, std::move(gate), std::move(pins)};
  check_pins(p, width());
  for (const auto& other : placements_) {
    if (other.slot != slot) continue;
    for (auto line : p.pins)
      if (touches(other, line))
        throw Error(ErrorCode::SlotConflict, "slot " + std::to_string(slot) + " already uses line " +
                                                 std::to_string(line));
  }
  auto pos = std::upper_bound(placements_.begin(), placements_.end(), slot,
                              [](std::size_t s, const Placement& q) { return s < q.slot; });
  placements_.insert(pos, std::move(p));
}

void Circuit::remove(std::size_t slot, std::size_t line) {
  auto it = std::find_if(placements_.begin(), placements_.end(), [&](const Placement& p) {
    return p.slot == slot && touches(p, line);
  });
  if (it == placements_.end())
    throw Error(ErrorCode::NoSuchPlacement, "no gate on line " + std::to_string(line) +
                                                " in slot " + std::to_string(slot));
  placements_.erase(it);
}

void Circuit::resize(std::size_t num_lines) {
  if (num_lines < 1 || num_lines > line_cap_)
    throw Error(ErrorCode::BadWidth, "line count " + std::to_string(num_lines) +
                                         " outside 1.." + std::to_string(line_cap_));
  std::erase_if(placements_, [&](const Placement& p) {
    return std::any_of(p.pins.begin(), p.pins.end(), [&](auto l) { return l >= num_lines; });
  });
  const auto old = lines_.size();
  lines_.resize(num_lines);
  for (std::size_t i = old; i < num_lines; ++i) lines_[i].index = i;
}

void Circuit::check_line(std::size_t line) const {
  if (line >= width())
    throw Error(ErrorCode::PinOutOfRange,
                "line " + std::to_string(line) + " outside 0.." + std::to_string(width() - 1));
}

void Circuit::set_roles(const std::map<std::size_t, bool>& constants,
                        const std::set<std::size_t>& garbage) {
  for (const auto& [line, value] : constants) check_line(line);
  for (auto line : garbage) check_line(line);
  for (auto& line : lines_) {
    line.input.constant.reset();
    line.output.garbage = false;
  }
  for (const auto& [line, value] : constants) lines_[line].input.constant = value;
  for (auto line : garbage) lines_[line].output.garbage = true;
}

void Circuit::set_line_name(std::size_t line, std::string name) {
  check_line(line);
  lines_[line].name = std::move(name);
}

void Circuit::set_output_name(std::size_t line, std::string name) {
  check_line(line);
  lines_[line].output.name = std::move(name);
}

std::size_t Circuit::free_input_count() const {
  return static_cast<std::size_t>(
      std::count_if(lines_.begin(), lines_.end(), [](const Line& l) { return !l.input.is_constant(); }));
}

std::size_t Circuit::primary_output_count() const {
  return static_cast<std::size_t>(
      std::count_if(lines_.begin(), lines_.end(), [](const Line& l) { return !l.output.garbage; }));
}

void Circuit::validate() const {
  if (lines_.empty() || lines_.size() > line_cap_)
    throw Error(ErrorCode::BadWidth, "line count outside 1.." + std::to_string(line_cap_));
  for (std::size_t i = 0; i < lines_.size(); ++i)
    if (lines_[i].index != i) throw Error(ErrorCode::BadWidth, "line indices are not dense");
  for (std::size_t i = 0; i < placements_.size(); ++i) {
    check_pins(placements_[i], width());
    if (i > 0 && placements_[i - 1].slot > placements_[i].slot)
      throw Error(ErrorCode::SlotConflict, "placements out of slot order");
    for (std::size_t j = 0; j < i; ++j) {
      if (placements_[j].slot != placements_[i].slot) continue;
      for (auto line : placements_[i].pins)
        if (touches(placements_[j], line))
          throw Error(ErrorCode::SlotConflict, "slot " + std::to_string(placements_[i].slot) +
                                                   " uses line " + std::to_string(line) + " twice");
    }
  }
}

Circuit reversed(const Circuit& circuit) {
  Circuit result(circuit.width(), circuit.line_cap());
  result.set_name(circuit.name());
  const auto& placements = circuit.placements();
  if (placements.empty()) return result;
  const std::size_t last = placements.back().slot;
  // Walk backwards so gates sharing a slot keep a consistent order.
  for (auto it = placements.rbegin(); it != placements.rend(); ++it)
    result.place(last - it->slot, it->gate, it->pins);
  return result;
}

}  // namespace rpga
