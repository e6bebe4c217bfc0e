#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rpga/bits.hpp"
#include "rpga/circuit.hpp"
#include "rpga/simulator.hpp"
#include "rpga/symmetry.hpp"

namespace rpga {

enum class Realization { Kerntopf, Picton };

std::string_view to_string(Realization r);
/// Throws Error(FormatError) for anything but "kerntopf" / "picton".
Realization parse_realization(std::string_view text);

inline constexpr std::size_t kMaxFabricInputs = 12;

struct MaxMinResult {
  bool max = false;
  bool min = false;
  Bits garbage;  // 1 bit for kerntopf, 2 for a picton pair

  bool operator==(const MaxMinResult&) const = default;
};

/// One MAX/MIN module built from library gates: a kerntopf gate with its
/// third input tied to 1, or two cascaded picton gates fed constants 0, 1.
MaxMinResult maxmin_eval(Realization realization, bool a, bool b);

/// Wires are single-assignment values. Inputs are wires 0..n-1; every node
/// and every single-index feynman gate defines new wires.
struct MaxMinNode {
  std::size_t id = 0;
  std::size_t level = 0;
  std::size_t in_a = 0;
  std::size_t in_b = 0;
  std::size_t max_out = 0;
  std::size_t min_out = 0;
  std::vector<std::size_t> garbage;

  bool operator==(const MaxMinNode&) const = default;
};

/// Triangular MAX/MIN plane (bubble-sort comparator network) followed by
/// the single-index feynman plane.
class Fabric {
 public:
  /// Throws Error(BadWidth) unless 1 <= n <= kMaxFabricInputs. For n <= 8
  /// the taps are checked exhaustively against their weight definitions.
  static Fabric build(std::size_t n, Realization realization);

  std::size_t n() const noexcept { return n_; }
  Realization realization() const noexcept { return realization_; }
  const std::vector<MaxMinNode>& nodes() const noexcept { return nodes_; }
  std::size_t level_count() const;

  /// threshold_taps()[k-1] is the wire carrying T_k = [weight >= k].
  const std::vector<std::size_t>& threshold_taps() const noexcept { return thresholds_; }
  /// single_index_taps()[k-1] is the wire carrying S_k = [weight == k].
  const std::vector<std::size_t>& single_index_taps() const noexcept { return singles_; }
  std::size_t wire_count() const noexcept { return wire_count_; }

  /// Every wire value for one input assignment, evaluated module by module.
  Bits wire_values(std::span<const std::uint8_t> input) const;
  /// T_1..T_n.
  Bits thresholds(std::span<const std::uint8_t> input) const;
  /// S_0..S_n, with S_0 = NOT T_1.
  Bits single_indices(std::span<const std::uint8_t> input) const;

  bool operator==(const Fabric&) const = default;

 private:
  std::size_t n_ = 0;
  Realization realization_ = Realization::Kerntopf;
  std::vector<MaxMinNode> nodes_;
  std::vector<std::size_t> thresholds_;
  std::vector<std::size_t> singles_;
  std::size_t wire_count_ = 0;
};

struct Binding {
  std::string name;
  std::set<unsigned> index_set;  // K, subset of {0..n}
  std::size_t line = 0;          // accumulator line in the netlist

  bool operator==(const Binding&) const = default;
};

struct ResourceReport {
  std::size_t nodes = 0;
  std::size_t node_constants = 0;
  std::size_t node_garbage = 0;
  std::size_t constants = 0;  // node constants + copy/accumulator targets
  std::size_t garbage = 0;    // every netlist line that is not a bound output
  std::size_t copy_gates = 0;     // feynman gates targeting a fresh constant-0 line
  std::size_t feynman_gates = 0;  // remaining feynman (XOR) gates
  std::size_t not_gates = 0;      // inverters for index 0
  bool uses_index_zero = false;

  bool operator==(const ResourceReport&) const = default;
};

/// Output addressing space of an n-input fabric: nonempty subsets of
/// {1..n}, plus those containing 0 when `include_zero`.
std::uint64_t addressable_outputs(std::size_t n, bool include_zero);
/// Bit k of the address is set iff k is in K.
std::uint64_t output_address(const std::set<unsigned>& index_set);

/// A fabric with its output bindings, materialized as a reversible netlist.
class Configuration {
 public:
  /// Throws Error(WidthError) for an index above n.
  Configuration(Fabric fabric, std::vector<std::pair<std::string, std::set<unsigned>>> outputs);

  const Fabric& fabric() const noexcept { return fabric_; }
  const std::vector<Binding>& bindings() const noexcept { return bindings_; }
  /// The whole fabric as a circuit of library gates; bound outputs are the
  /// primary outputs and every other line is garbage.
  const Circuit& netlist() const noexcept { return netlist_; }
  /// Human-readable stage name per netlist slot.
  const std::vector<std::string>& slot_labels() const noexcept { return slot_labels_; }
  const ResourceReport& resources() const noexcept { return resources_; }
  /// Netlist line of each node's garbage wires, in node order.
  const std::vector<std::size_t>& garbage_lines() const noexcept { return garbage_lines_; }

  /// Nodes in the fan-in cone of some bound output.
  std::vector<bool> active_nodes() const;
  /// bound[k] for k in 0..n: some binding uses S_k.
  std::vector<bool> bound_taps() const;

  bool operator==(const Configuration& other) const {
    return fabric_ == other.fabric_ && bindings_ == other.bindings_;
  }

 private:
  Fabric fabric_;
  std::vector<Binding> bindings_;
  Circuit netlist_;
  std::vector<std::string> slot_labels_;
  ResourceReport resources_;
  std::vector<std::size_t> garbage_lines_;
};

/// Binds one line per report output. Throws Error(NotSymmetric) if any
/// output is asymmetric and Error(ConfigMismatch) if the report's input
/// count differs from the fabric's.
Configuration configure(const Fabric& fabric, const SymmetryReport& report);

struct FabricResult {
  std::vector<std::pair<std::string, bool>> outputs;
  Trace trace;   // netlist snapshots
  Bits garbage;  // node garbage wires after evaluation

  bool operator==(const FabricResult&) const = default;
};

/// Simulates the netlist on `input` (length n). Throws Error(WidthError).
FabricResult fabric_eval(const Configuration& config, std::span<const std::uint8_t> input);

inline ResourceReport resource_report(const Configuration& config) { return config.resources(); }

}  // namespace rpga
