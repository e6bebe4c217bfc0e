#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rpga/gate.hpp"

namespace rpga {

inline constexpr std::size_t kDefaultLineCap = 16;

struct InputRole {
  std::optional<bool> constant;  // nullopt: primary input

  bool is_constant() const { return constant.has_value(); }
  bool operator==(const InputRole&) const = default;
};

struct OutputRole {
  bool garbage = false;
  std::string name;  // empty: named positionally on projection

  bool operator==(const OutputRole&) const = default;
};

struct Line {
  std::size_t index = 0;
  std::string name;  // empty: named positionally on projection
  InputRole input;
  OutputRole output;

  bool operator==(const Line&) const = default;
};

struct Placement {
  std::size_t slot = 0;
  GatePtr gate;
  std::vector<std::size_t> pins;  // one line index per gate pin, in pin order

  bool operator==(const Placement& other) const {
    return slot == other.slot && pins == other.pins && *gate == *other.gate;
  }
};

/// Lines crossed by time slots. Placements are kept sorted by slot (stable
/// in insertion order within a slot); a slot touches each line at most once.
class Circuit {
 public:
  /// Throws Error(BadWidth) unless 1 <= num_lines <= line_cap.
  explicit Circuit(std::size_t num_lines, std::size_t line_cap = kDefaultLineCap);

  std::size_t width() const noexcept { return lines_.size(); }
  /// Number of distinct occupied slots.
  std::size_t depth() const;
  std::size_t line_cap() const noexcept { return line_cap_; }

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::vector<Line>& lines() const noexcept { return lines_; }
  const std::vector<Placement>& placements() const noexcept { return placements_; }

  /// Sorted distinct occupied slots.
  std::vector<std::size_t> slots() const;
  std::size_t next_free_slot() const;

  /// Throws PinOutOfRange, PinClash, WidthError (pin count != arity) or
  /// SlotConflict. The circuit is unchanged on failure.
  void place(std::size_t slot, GatePtr gate, std::vector<std::size_t> pins);
  /// Removes the placement in `slot` touching `line`; throws NoSuchPlacement.
  void remove(std::size_t slot, std::size_t line);
  /// Grows or shrinks the line count. Shrinking drops placements that touch
  /// removed lines.
  void resize(std::size_t num_lines);

  /// Replaces all role annotations. Throws PinOutOfRange for unknown lines.
  void set_roles(const std::map<std::size_t, bool>& constants, const std::set<std::size_t>& garbage);
  void set_line_name(std::size_t line, std::string name);
  void set_output_name(std::size_t line, std::string name);

  std::size_t free_input_count() const;
  std::size_t primary_output_count() const;
  std::size_t constant_count() const { return width() - free_input_count(); }
  std::size_t garbage_count() const { return width() - primary_output_count(); }

  /// Re-checks every invariant; throws the matching Error on violation.
  void validate() const;

  bool operator==(const Circuit& other) const {
    return name_ == other.name_ && lines_ == other.lines_ && placements_ == other.placements_;
  }

 private:
  void check_line(std::size_t line) const;

  std::string name_;
  std::size_t line_cap_;
  std::vector<Line> lines_;
  std::vector<Placement> placements_;
};

/// Same circuit with placements mirrored in slot order. For circuits of
/// self-inverse gates this is the inverse circuit.
Circuit reversed(const Circuit& circuit);

}  // namespace rpga
