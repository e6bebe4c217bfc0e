#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rpga/bits.hpp"
#include "rpga/circuit.hpp"
#include "rpga/truth_table.hpp"

namespace rpga {

struct Snapshot {
  std::optional<std::size_t> slot;  // nullopt for the inputs before the first slot
  Bits values;

  bool operator==(const Snapshot&) const = default;
};

/// First entry holds the inputs, then one entry per occupied slot.
struct Trace {
  std::vector<Snapshot> snapshots;

  const Bits& final_values() const { return snapshots.back().values; }
};

/// Throws Error(WidthError) if input.size() != circuit.width().
Bits eval(const Circuit& circuit, std::span<const std::uint8_t> input);
Word eval(const Circuit& circuit, Word input);
Trace trace(const Circuit& circuit, std::span<const std::uint8_t> input);

/// Rows in ascending input order. Throws Error(TooWide) when the circuit is
/// wider than `enumeration_cap` lines.
ReversibleTruthTable full_table(const Circuit& circuit,
                                std::size_t enumeration_cap = kDefaultLineCap);

struct BijectivityReport {
  bool bijective = false;
  std::vector<Word> permutation;              // output word per input row
  std::optional<std::pair<Word, Word>> collision;  // two inputs with the same output
};

BijectivityReport check_bijective(const Circuit& circuit,
                                  std::size_t enumeration_cap = kDefaultLineCap);

}  // namespace rpga
