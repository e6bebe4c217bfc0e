#pragma once

// Reference computations written directly from definitions. None of these
// call into the code under test beyond plain data accessors.

#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rpga/bits.hpp"
#include "rpga/circuit.hpp"
#include "rpga/truth_table.hpp"

namespace rpga::testing {

/// "0110" -> word, first character most significant.
inline std::uint64_t word_of(const std::string& s) {
  std::uint64_t w = 0;
  for (char c : s)
    if (c == '0' || c == '1') w = (w << 1) | std::uint64_t(c == '1');
  return w;
}

/// Splits a "in out" row.
inline std::pair<std::string, std::string> split_row(const std::string& row) {
  const auto space = row.find(' ');
  return {row.substr(0, space), row.substr(space + 1)};
}

inline unsigned popcount(std::uint64_t w) { return static_cast<unsigned>(std::popcount(w)); }

/// Membership of the input weight in K.
inline bool weight_in(const std::set<unsigned>& k, std::uint64_t x) { return k.count(popcount(x)) > 0; }

/// Output bit `col` of row `x` straight from the stored words.
inline bool out_bit(const IrreversibleTruthTable& t, std::uint64_t x, std::size_t col) {
  return (t.outputs()[x] >> (t.output_count() - 1 - col)) & 1U;
}

/// Invariance under every adjacent transposition of input columns. Adjacent
/// transpositions generate the whole symmetric group.
inline bool symmetric_by_transpositions(const IrreversibleTruthTable& t, std::size_t col) {
  const std::size_t n = t.input_count();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::uint64_t hi = std::uint64_t{1} << (n - 1 - i);
    const std::uint64_t lo = hi >> 1;
    for (std::uint64_t x = 0; x < t.rows(); ++x) {
      std::uint64_t y = x;
      if (bool(x & hi) != bool(x & lo)) y ^= hi | lo;
      if (out_bit(t, x, col) != out_bit(t, y, col)) return false;
    }
  }
  return true;
}

/// Set of weights at which the output is 1, assuming it is symmetric.
inline std::set<unsigned> ones_by_weight(const IrreversibleTruthTable& t, std::size_t col) {
  std::set<unsigned> k;
  for (std::uint64_t x = 0; x < t.rows(); ++x)
    if (out_bit(t, x, col)) k.insert(popcount(x));
  return k;
}

/// Gate-by-gate simulation that extracts and writes pins bit by bit.
inline std::uint64_t simulate(const Circuit& c, std::uint64_t input) {
  const std::size_t n = c.width();
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = (input >> (n - 1 - i)) & 1U;
  for (const auto& p : c.placements()) {
    std::uint32_t in = 0;
    for (auto pin : p.pins) in = (in << 1) | std::uint32_t(v[pin]);
    const std::uint32_t out = p.gate->mapping()[in];
    const std::size_t k = p.pins.size();
    for (std::size_t j = 0; j < k; ++j) v[p.pins[j]] = (out >> (k - 1 - j)) & 1U;
  }
  std::uint64_t w = 0;
  for (int b : v) w = (w << 1) | std::uint64_t(b);
  return w;
}

/// Full adder sum and carry.
inline std::pair<bool, bool> full_adder(bool a, bool b, bool c) {
  return {a != (b != c), (a && b) || (a && c) || (b && c)};
}

/// Random table of n inputs and m outputs; with `symmetric_bias` some
/// outputs are drawn as symmetric functions so both verdicts get exercised.
inline IrreversibleTruthTable random_table(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                           bool symmetric_bias) {
  std::vector<std::uint64_t> outputs(std::size_t{1} << n, 0);
  for (std::size_t col = 0; col < m; ++col) {
    const bool make_symmetric = symmetric_bias && (rng() & 1U);
    const std::uint64_t values = rng();
    for (std::uint64_t x = 0; x < outputs.size(); ++x) {
      const bool bit = make_symmetric ? ((values >> popcount(x)) & 1U) : (rng() & 1U);
      outputs[x] = (outputs[x] << 1) | std::uint64_t(bit);
    }
  }
  return IrreversibleTruthTable::with_default_names(n, m, outputs);
}

}  // namespace rpga::testing
