#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rpga/truth_table.hpp"

namespace rpga {

/// Two rows of equal input weight whose output values differ.
struct Witness {
  Word first_row = 0;
  bool first_value = false;
  Word second_row = 0;
  bool second_value = false;

  bool operator==(const Witness&) const = default;
};

struct OutputSymmetry {
  std::string name;
  bool symmetric = false;
  /// Output value per input weight 0..n; present iff symmetric.
  std::optional<std::vector<bool>> value_vector;
  /// {w : value_vector[w]}; empty when asymmetric.
  std::set<unsigned> index_set;
  /// Present iff asymmetric.
  std::optional<Witness> witness;

  bool operator==(const OutputSymmetry&) const = default;
};

struct SymmetryReport {
  std::size_t input_count = 0;
  std::vector<std::string> input_names;
  std::vector<OutputSymmetry> outputs;

  bool all_symmetric() const;
  bool operator==(const SymmetryReport&) const = default;
};

/// Buckets rows by input Hamming weight per output column; a column is
/// totally symmetric iff every bucket is constant.
SymmetryReport analyze(const IrreversibleTruthTable& table);

/// Reference check: invariance of the output column under every
/// transposition of two input columns. Limited to n <= 10.
bool brute_force_symmetric(const IrreversibleTruthTable& table, std::size_t output);

/// Single-output table that is 1 exactly on rows whose weight is in K.
/// Throws Error(WidthError) for indices above n.
IrreversibleTruthTable indices_to_function(std::size_t n, const std::set<unsigned>& index_set,
                                           std::string output_name = "O1");

/// "S{1,3}" style label for an index set; "S{}" when empty.
std::string index_set_label(const std::set<unsigned>& index_set);

}  // namespace rpga
