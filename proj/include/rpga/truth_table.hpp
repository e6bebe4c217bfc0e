#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rpga/bits.hpp"

namespace rpga {

class Circuit;
class GateDef;

/// Full 2n-column table of an n-line reversible circuit; row i has input word i.
struct ReversibleTruthTable {
  std::size_t width = 0;
  std::vector<Word> outputs;

  std::size_t rows() const { return outputs.size(); }
  bool operator==(const ReversibleTruthTable&) const = default;
};

/// n inputs by m outputs over all 2^n rows in ascending order. Output words
/// hold output column 0 in their most significant bit.
class IrreversibleTruthTable {
 public:
  /// Throws Error(NoOutputs) when output_names is empty, Error(MalformedTable)
  /// when outputs.size() != 2^n or a word does not fit in m bits.
  IrreversibleTruthTable(std::vector<std::string> input_names,
                         std::vector<std::string> output_names, std::vector<Word> outputs);

  /// Direct entry from (input, output) pairs in any order. Throws
  /// Error(MalformedTable) on missing or duplicate rows.
  static IrreversibleTruthTable from_rows(std::vector<std::string> input_names,
                                          std::vector<std::string> output_names,
                                          const std::vector<std::pair<Word, Word>>& rows);

  /// Default names I1..In and O1..Om.
  static IrreversibleTruthTable with_default_names(std::size_t n, std::size_t m,
                                                   std::vector<Word> outputs);

  std::size_t input_count() const { return input_names_.size(); }
  std::size_t output_count() const { return output_names_.size(); }
  std::size_t rows() const { return outputs_.size(); }

  const std::vector<std::string>& input_names() const { return input_names_; }
  const std::vector<std::string>& output_names() const { return output_names_; }
  const std::vector<Word>& outputs() const { return outputs_; }

  Word output_word(Word row) const { return outputs_.at(row); }
  bool output_bit(Word row, std::size_t column) const {
    return (outputs_.at(row) >> (output_count() - 1 - column)) & 1U;
  }

  bool operator==(const IrreversibleTruthTable&) const = default;

 private:
  std::vector<std::string> input_names_;
  std::vector<std::string> output_names_;
  std::vector<Word> outputs_;
};

/// Constant-input and garbage-output annotations plus the names used for
/// the projected table's columns.
struct Roles {
  std::map<std::size_t, bool> constants;
  std::set<std::size_t> garbage;
  std::vector<std::string> line_names;    // optional, per line
  std::vector<std::string> output_names;  // optional, per line

  static Roles of(const Circuit& circuit);
};

/// Keeps rows whose constant lines carry their declared values and drops
/// garbage output columns. Free lines become the input columns in index
/// order. Throws Error(NoOutputs) when every line is garbage and
/// Error(PinOutOfRange) for roles naming missing lines.
IrreversibleTruthTable project(const ReversibleTruthTable& table, const Roles& roles);

/// Per-gate quantum-cost convention. These numbers are a configurable
/// default, not measured values.
class CostTable {
 public:
  static CostTable defaults();

  void set(std::string gate_name, unsigned cost) { costs_[std::move(gate_name)] = cost; }
  void set_mct_wide(unsigned cost) { mct_wide_ = cost; }
  void set_mcf_wide(unsigned cost) { mcf_wide_ = cost; }

  std::optional<unsigned> cost(const GateDef& gate) const;

 private:
  std::map<std::string, unsigned> costs_;
  unsigned mct_wide_ = 13;  // mct with >= 3 controls
  unsigned mcf_wide_ = 15;  // mcf with >= 2 controls
};

struct Metrics {
  std::size_t gate_count = 0;       // N
  std::size_t constant_inputs = 0;  // CI
  std::size_t garbage_outputs = 0;  // GO
  std::size_t gate_levels = 0;      // GL
  std::size_t quantum_cost = 0;     // QC
  std::vector<std::string> uncosted_gates;  // counted at cost 1

  bool operator==(const Metrics&) const = default;
};

Metrics metrics(const Circuit& circuit, const CostTable& costs = CostTable::defaults());

}  // namespace rpga
