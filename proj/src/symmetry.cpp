#include "rpga/symmetry.hpp"

#include <algorithm>

#include "rpga/error.hpp"

namespace rpga {

bool SymmetryReport::all_symmetric() const {
  return std::all_of(outputs.begin(), outputs.end(), [](const auto& o) { return o.symmetric; });
}

SymmetryReport analyze(const IrreversibleTruthTable& table) {
  const std::size_t n = table.input_count();
  SymmetryReport report;
  report.input_count = n;
  report.input_names = table.input_names();

  for (std::size_t j = 0; j < table.output_count(); ++j) {
    OutputSymmetry entry;
    entry.name = table.output_names()[j];
    // Per weight: the first row seen and its value; nullopt = not yet seen.
    std::vector<std::optional<Word>> first_row(n + 1);
    for (Word row = 0; row < table.rows(); ++row) {
      const unsigned w = weight(row);
      const bool value = table.output_bit(row, j);
      if (!first_row[w]) {
        first_row[w] = row;
      } else if (table.output_bit(*first_row[w], j) != value) {
        entry.witness = Witness{*first_row[w], !value, row, value};
        break;
      }
    }
    if (!entry.witness) {
      entry.symmetric = true;
      std::vector<bool> values(n + 1, false);
      for (unsigned w = 0; w <= n; ++w) {
        values[w] = first_row[w] && table.output_bit(*first_row[w], j);
        if (values[w]) entry.index_set.insert(w);
      }
      entry.value_vector = std::move(values);
    }
    report.outputs.push_back(std::move(entry));
  }
  return report;
}

bool brute_force_symmetric(const IrreversibleTruthTable& table, std::size_t output) {
  const std::size_t n = table.input_count();
  if (n > 10) throw Error(ErrorCode::TooWide, "transposition check limited to 10 inputs");
  auto swap_columns = [n](Word row, std::size_t a, std::size_t b) {
    const Word ma = Word{1} << (n - 1 - a);
    const Word mb = Word{1} << (n - 1 - b);
    const bool ba = row & ma;
    const bool bb = row & mb;
    if (ba == bb) return row;
    return row ^ ma ^ mb;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (Word row = 0; row < table.rows(); ++row)
        if (table.output_bit(row, output) != table.output_bit(swap_columns(row, a, b), output))
          return false;
  return true;
}

IrreversibleTruthTable indices_to_function(std::size_t n, const std::set<unsigned>& index_set,
                                           std::string output_name) {
  for (auto k : index_set)
    if (k > n)
      throw Error(ErrorCode::WidthError,
                  "index " + std::to_string(k) + " exceeds input count " + std::to_string(n));
  std::vector<std::string> inputs;
  for (std::size_t i = 1; i <= n; ++i) inputs.push_back("I" + std::to_string(i));
  std::vector<Word> outputs(Word{1} << n);
  for (Word row = 0; row < outputs.size(); ++row) outputs[row] = index_set.contains(weight(row));
  return IrreversibleTruthTable(std::move(inputs), {std::move(output_name)}, std::move(outputs));
}

std::string index_set_label(const std::set<unsigned>& index_set) {
  std::string label = "S{";
  bool first = true;
  for (auto k : index_set) {
    if (!first) label += ',';
    label += std::to_string(k);
    first = false;
  }
  return label + "}";
}

}  // namespace rpga
