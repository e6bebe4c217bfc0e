#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rpga/bits.hpp"

namespace rpga {

enum class GateFamily { Builtin, MultiControlToffoli, MultiControlFredkin };

/// Exhaustively computed properties of a gate mapping.
struct GateClass {
  bool bijective = false;
  bool conservative = false;       // Hamming weight preserved
  bool parity_preserving = false;
  bool self_inverse = false;

  bool operator==(const GateClass&) const = default;
};

/// A reversible k-line gate stored as an explicit table: entry i is the
/// output word for input word i, line 0 being the most significant bit.
class GateDef {
 public:
  /// Throws Error(InvalidGate) unless `mapping` is a permutation of
  /// 0..2^arity-1.
  GateDef(std::string name, std::size_t arity, std::vector<std::uint32_t> mapping,
          GateFamily family = GateFamily::Builtin, std::size_t controls = 0);

  const std::string& name() const noexcept { return name_; }
  std::size_t arity() const noexcept { return arity_; }
  GateFamily family() const noexcept { return family_; }
  /// Control count for multi-control families; 0 for builtins.
  std::size_t controls() const noexcept { return controls_; }

  std::span<const std::uint32_t> mapping() const noexcept { return mapping_; }
  std::uint32_t apply(std::uint32_t word) const { return mapping_.at(word); }
  std::uint32_t apply_inverse(std::uint32_t word) const { return inverse_.at(word); }

  const std::vector<std::string>& input_pins() const noexcept { return input_pins_; }
  const std::vector<std::string>& output_pins() const noexcept { return output_pins_; }

  bool operator==(const GateDef& other) const {
    return name_ == other.name_ && mapping_ == other.mapping_;
  }

 private:
  std::string name_;
  std::size_t arity_;
  std::vector<std::uint32_t> mapping_;
  std::vector<std::uint32_t> inverse_;
  GateFamily family_;
  std::size_t controls_;
  std::vector<std::string> input_pins_;
  std::vector<std::string> output_pins_;
};

using GatePtr = std::shared_ptr<const GateDef>;

inline constexpr std::size_t kDefaultArityCap = 12;

/// Names accepted by builtin(): not, feynman, toffoli, fredkin, peres, frg,
/// f2g, nft, picton, kerntopf, swap.
const std::vector<std::string>& builtin_names();

/// Throws Error(UnknownGate).
GatePtr builtin(std::string_view name);

/// Multi-control Toffoli. `positive[i]` selects the polarity of control i;
/// an empty list means all positive. The all-positive m = 0, 1, 2 cases come
/// back under the names not, feynman and toffoli.
GatePtr mct(std::size_t num_controls, const std::vector<bool>& positive = {},
            std::size_t arity_cap = kDefaultArityCap);

/// Multi-control Fredkin; m = 0 and m = 1 come back as swap and fredkin.
GatePtr mcf(std::size_t num_controls, std::size_t arity_cap = kDefaultArityCap);

/// Resolves builtin names plus the parametric spellings `mct<m>`,
/// `mct<m>:<p|n...>` and `mcf<m>`.
GatePtr gate_by_name(std::string_view name, std::size_t arity_cap = kDefaultArityCap);

/// Throws Error(WidthError) if word.size() != gate.arity().
Bits apply_gate(const GateDef& gate, std::span<const std::uint8_t> word);
Bits apply_gate_inverse(const GateDef& gate, std::span<const std::uint8_t> word);

GateClass classify(const GateDef& gate);

}  // namespace rpga
