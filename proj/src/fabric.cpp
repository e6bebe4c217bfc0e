#include "rpga/fabric.hpp"

#include <algorithm>
#include <stdexcept>

#include "rpga/error.hpp"
#include "rpga/gate.hpp"

namespace rpga {

namespace {

constexpr std::size_t kNetlistLineCap = std::size_t{1} << 20;

std::size_t constants_per_node(Realization r) { return r == Realization::Kerntopf ? 1 : 2; }

}  // namespace

std::string_view to_string(Realization r) {
  return r == Realization::Kerntopf ? "kerntopf" : "picton";
}

Realization parse_realization(std::string_view text) {
  if (text == "kerntopf") return Realization::Kerntopf;
  if (text == "picton") return Realization::Picton;
  throw FormatError(0, 0, "unknown realization '" + std::string(text) + "'", "kerntopf or picton");
}

MaxMinResult maxmin_eval(Realization realization, bool a, bool b) {
  const std::uint8_t x = a, y = b;
  if (realization == Realization::Kerntopf) {
    // With C = 1: P = A + B, Q = A * B, R = 1 ^ B.
    const Bits out = apply_gate(*builtin("kerntopf"), Bits{x, y, 1});
    return {out[0] == 1, out[1] == 1, Bits{out[2]}};
  }
  // First picton sorts the constants (0, 1) on whether a < b; the second
  // uses that pair as its own A, B to swap (a, b) into (max, min).
  const auto& picton = *builtin("picton");
  const Bits first = apply_gate(picton, Bits{x, y, 0, 1});
  const std::uint8_t r1 = first[2], s1 = first[3];
  const Bits second = apply_gate(picton, Bits{s1, r1, x, y});
  return {second[2] == 1, second[3] == 1, Bits{r1, s1}};
}

Fabric Fabric::build(std::size_t n, Realization realization) {
  if (n < 1 || n > kMaxFabricInputs)
    throw Error(ErrorCode::BadWidth, "fabric input count " + std::to_string(n) + " outside 1.." +
                                         std::to_string(kMaxFabricInputs));
  Fabric f;
  f.n_ = n;
  f.realization_ = realization;
  std::size_t next_wire = n;
  std::vector<std::size_t> current(n);
  for (std::size_t i = 0; i < n; ++i) current[i] = i;

  // Bubble sort: pass i sweeps comparators (j, j+1) for j < n-1-i, pushing
  // the minimum of the remaining values down to line n-1-i.
  for (std::size_t pass = 0; pass + 1 < n; ++pass) {
    for (std::size_t j = 0; j + 1 < n - pass; ++j) {
      MaxMinNode node;
      node.id = f.nodes_.size();
      node.level = 2 * pass + j;
      node.in_a = current[j];
      node.in_b = current[j + 1];
      node.max_out = next_wire++;
      node.min_out = next_wire++;
      for (std::size_t g = 0; g < constants_per_node(realization); ++g)
        node.garbage.push_back(next_wire++);
      current[j] = node.max_out;
      current[j + 1] = node.min_out;
      f.nodes_.push_back(std::move(node));
    }
  }
  f.thresholds_ = current;
  for (std::size_t k = 1; k < n; ++k) f.singles_.push_back(next_wire++);
  f.singles_.push_back(f.thresholds_.back());
  f.wire_count_ = next_wire;

  if (n <= 8) {
    for (Word x = 0; x < (Word{1} << n); ++x) {
      const Bits input = to_bits(x, n);
      const Bits t = f.thresholds(input);
      for (std::size_t k = 1; k <= n; ++k)
        if (t[k - 1] != (weight(x) >= k))
          throw std::logic_error("threshold tap T" + std::to_string(k) + " wrong for input " +
                                 format_word(x, n));
    }
  }
  return f;
}

std::size_t Fabric::level_count() const { return n_ < 2 ? 0 : 2 * n_ - 3; }

Bits Fabric::wire_values(std::span<const std::uint8_t> input) const {
  if (input.size() != n_)
    throw Error(ErrorCode::WidthError, "fabric has " + std::to_string(n_) + " inputs, got " +
                                           std::to_string(input.size()));
  Bits wires(wire_count_, 0);
  std::copy(input.begin(), input.end(), wires.begin());
  for (const auto& node : nodes_) {
    const auto r = maxmin_eval(realization_, wires[node.in_a], wires[node.in_b]);
    wires[node.max_out] = r.max;
    wires[node.min_out] = r.min;
    for (std::size_t g = 0; g < node.garbage.size(); ++g) wires[node.garbage[g]] = r.garbage[g];
  }
  for (std::size_t k = 1; k < n_; ++k)
    wires[singles_[k - 1]] = wires[thresholds_[k - 1]] ^ wires[thresholds_[k]];
  return wires;
}

Bits Fabric::thresholds(std::span<const std::uint8_t> input) const {
  const Bits wires = wire_values(input);
  Bits t;
  for (auto w : thresholds_) t.push_back(wires[w]);
  return t;
}

Bits Fabric::single_indices(std::span<const std::uint8_t> input) const {
  const Bits wires = wire_values(input);
  Bits s{static_cast<std::uint8_t>(!wires[thresholds_.front()])};
  for (auto w : singles_) s.push_back(wires[w]);
  return s;
}

std::uint64_t addressable_outputs(std::size_t n, bool include_zero) {
  const std::uint64_t base = (std::uint64_t{1} << n) - 1;
  return include_zero ? 2 * base + 1 : base;
}

std::uint64_t output_address(const std::set<unsigned>& index_set) {
  std::uint64_t address = 0;
  for (auto k : index_set) address |= std::uint64_t{1} << k;
  return address;
}

Configuration::Configuration(Fabric fabric,
                             std::vector<std::pair<std::string, std::set<unsigned>>> outputs)
    : fabric_(std::move(fabric)), netlist_(1) {
  const std::size_t n = fabric_.n();
  bool index_zero = false;
  for (const auto& [name, index_set] : outputs) {
    for (auto k : index_set) {
      if (k > n)
        throw Error(ErrorCode::WidthError, "output '" + name + "' uses index " + std::to_string(k) +
                                               " on a " + std::to_string(n) + "-input fabric");
      index_zero = index_zero || k == 0;
    }
  }

  const auto realization = fabric_.realization();
  const std::size_t per_node = constants_per_node(realization);
  const std::size_t node_lines = fabric_.nodes().size() * per_node;
  const std::size_t s0_line = n + node_lines;
  const std::size_t first_acc = s0_line + (index_zero ? 1 : 0);
  Circuit c(first_acc + outputs.size(), kNetlistLineCap);

  std::map<std::size_t, bool> constants;
  std::set<std::size_t> garbage;
  for (std::size_t i = 0; i < n; ++i) c.set_line_name(i, "x" + std::to_string(i + 1));

  std::vector<std::string> labels;
  auto label_slot = [&](std::size_t slot, std::string label) {
    if (labels.size() <= slot) labels.resize(slot + 1);
    labels[slot] = std::move(label);
  };

  // Data line of each wire, for placing the comparators.
  std::vector<std::size_t> wire_line(fabric_.wire_count(), 0);
  for (std::size_t i = 0; i < n; ++i) wire_line[i] = i;

  const auto kerntopf = builtin("kerntopf");
  const auto picton = builtin("picton");
  const auto feynman = builtin("feynman");
  const auto inverter = builtin("not");

  std::size_t slot = 0;
  for (const auto& node : fabric_.nodes()) {
    const std::size_t a = wire_line[node.in_a];
    const std::size_t b = wire_line[node.in_b];
    const std::size_t first_const = n + node.id * per_node;
    const std::string prefix = "n" + std::to_string(node.id);
    if (realization == Realization::Kerntopf) {
      c.set_line_name(first_const, prefix + ".c");
      constants[first_const] = true;
      slot = node.level;
      c.place(slot, kerntopf, {a, b, first_const});
      label_slot(slot, "maxmin level " + std::to_string(node.level));
      garbage_lines_.push_back(first_const);
    } else {
      const std::size_t c0 = first_const, c1 = first_const + 1;
      c.set_line_name(c0, prefix + ".c0");
      c.set_line_name(c1, prefix + ".c1");
      constants[c0] = false;
      constants[c1] = true;
      slot = 2 * node.level;
      c.place(slot, picton, {a, b, c0, c1});
      c.place(slot + 1, picton, {c1, c0, a, b});
      label_slot(slot, "maxmin level " + std::to_string(node.level) + " (first picton)");
      label_slot(slot + 1, "maxmin level " + std::to_string(node.level) + " (second picton)");
      garbage_lines_.push_back(c0);
      garbage_lines_.push_back(c1);
    }
    wire_line[node.max_out] = a;
    wire_line[node.min_out] = b;
  }
  slot = labels.size();

  if (index_zero) {
    c.set_line_name(s0_line, "s0");
    constants[s0_line] = false;
    c.place(slot, feynman, {wire_line[fabric_.threshold_taps()[0]], s0_line});
    label_slot(slot++, "copy T1");
    c.place(slot, inverter, {s0_line});
    label_slot(slot++, "invert S0");
    resources_.copy_gates += 1;
    resources_.not_gates += 1;
  }

  // S_k = T_k ^ T_{k+1}, computed in place on T_k's line while T_{k+1} is
  // still intact.
  for (std::size_t k = 1; k < n; ++k) {
    c.place(slot, feynman, {k, k - 1});
    label_slot(slot++, "single-index S" + std::to_string(k));
    resources_.feynman_gates += 1;
  }

  for (std::size_t b = 0; b < outputs.size(); ++b) {
    const auto& [name, index_set] = outputs[b];
    const std::size_t acc = first_acc + b;
    c.set_line_name(acc, name);
    c.set_output_name(acc, name);
    constants[acc] = false;
    bool first = true;
    for (auto k : index_set) {
      const std::size_t source = k == 0 ? s0_line : k - 1;
      c.place(slot, feynman, {source, acc});
      label_slot(slot++, "accumulate " + name + " ^= S" + std::to_string(k));
      if (first)
        resources_.copy_gates += 1;
      else
        resources_.feynman_gates += 1;
      first = false;
    }
    bindings_.push_back({name, index_set, acc});
  }

  for (std::size_t line = 0; line < first_acc; ++line) garbage.insert(line);
  c.set_roles(constants, garbage);
  netlist_ = std::move(c);
  slot_labels_ = std::move(labels);

  resources_.nodes = fabric_.nodes().size();
  resources_.node_constants = node_lines;
  resources_.node_garbage = node_lines;
  resources_.constants = netlist_.constant_count();
  resources_.garbage = netlist_.garbage_count();
  resources_.uses_index_zero = index_zero;
}

std::vector<bool> Configuration::active_nodes() const {
  std::vector<bool> needed(fabric_.wire_count(), false);
  const auto& t = fabric_.threshold_taps();
  const std::size_t n = fabric_.n();
  for (const auto& b : bindings_) {
    for (auto k : b.index_set) {
      if (k == 0) {
        needed[t[0]] = true;
        continue;
      }
      needed[t[k - 1]] = true;
      if (k < n) needed[t[k]] = true;
    }
  }
  std::vector<bool> active(fabric_.nodes().size(), false);
  const auto& nodes = fabric_.nodes();
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
    if (needed[it->max_out] || needed[it->min_out]) {
      active[it->id] = true;
      needed[it->in_a] = true;
      needed[it->in_b] = true;
    }
  }
  return active;
}

std::vector<bool> Configuration::bound_taps() const {
  std::vector<bool> bound(fabric_.n() + 1, false);
  for (const auto& b : bindings_)
    for (auto k : b.index_set) bound[k] = true;
  return bound;
}

Configuration configure(const Fabric& fabric, const SymmetryReport& report) {
  if (report.input_count != fabric.n())
    throw Error(ErrorCode::ConfigMismatch, "report has " + std::to_string(report.input_count) +
                                               " inputs, fabric has " + std::to_string(fabric.n()));
  std::string asymmetric;
  std::vector<std::pair<std::string, std::set<unsigned>>> outputs;
  for (const auto& o : report.outputs) {
    if (!o.symmetric) {
      asymmetric += (asymmetric.empty() ? "" : ", ") + o.name;
      continue;
    }
    outputs.emplace_back(o.name, o.index_set);
  }
  if (!asymmetric.empty())
    throw Error(ErrorCode::NotSymmetric,
                "fabric realizes only symmetric functions; asymmetric outputs: " + asymmetric);
  return Configuration(fabric, std::move(outputs));
}

FabricResult fabric_eval(const Configuration& config, std::span<const std::uint8_t> input) {
  const std::size_t n = config.fabric().n();
  if (input.size() != n)
    throw Error(ErrorCode::WidthError, "fabric has " + std::to_string(n) + " inputs, got " +
                                           std::to_string(input.size()));
  const auto& netlist = config.netlist();
  Bits state(netlist.width(), 0);
  std::copy(input.begin(), input.end(), state.begin());
  for (const auto& line : netlist.lines())
    if (line.input.constant) state[line.index] = *line.input.constant;

  FabricResult result;
  result.trace = trace(netlist, state);
  const Bits& final_values = result.trace.final_values();
  for (const auto& b : config.bindings()) result.outputs.emplace_back(b.name, final_values[b.line] == 1);
  for (auto line : config.garbage_lines()) result.garbage.push_back(final_values[line]);
  return result;
}

}  // namespace rpga
