#include "rpga/gate.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <mutex>
#include <optional>

#include "rpga/error.hpp"

namespace rpga {

namespace {

std::vector<std::string> pin_labels(std::size_t arity, char first, char last, char fallback) {
  std::vector<std::string> labels;
  labels.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    if (first + static_cast<int>(i) <= last)
      labels.emplace_back(1, static_cast<char>(first + static_cast<int>(i)));
    else
      labels.push_back(std::string(1, fallback) + std::to_string(i));
  }
  return labels;
}

using BitFunction = std::function<Bits(const Bits&)>;

std::vector<std::uint32_t> tabulate(std::size_t arity, const BitFunction& fn) {
  std::vector<std::uint32_t> mapping(std::size_t{1} << arity);
  for (std::uint32_t x = 0; x < mapping.size(); ++x)
    mapping[x] = static_cast<std::uint32_t>(to_word(fn(to_bits(x, arity))));
  return mapping;
}

GatePtr make(std::string name, std::size_t arity, const BitFunction& fn,
             GateFamily family = GateFamily::Builtin, std::size_t controls = 0) {
  return std::make_shared<const GateDef>(std::move(name), arity, tabulate(arity, fn), family,
                                         controls);
}

GatePtr make_builtin(std::string_view name) {
  // Each gate is written from its defining equations; the tests compare
  // the resulting tables row by row against transcribed truth tables.
  if (name == "not") return make("not", 1, [](const Bits& x) { return Bits{uint8_t(!x[0])}; });
  if (name == "feynman")
    return make("feynman", 2, [](const Bits& x) { return Bits{x[0], uint8_t(x[0] ^ x[1])}; });
  if (name == "swap") return make("swap", 2, [](const Bits& x) { return Bits{x[1], x[0]}; });
  if (name == "toffoli")
    return make("toffoli", 3, [](const Bits& x) {
      return Bits{x[0], x[1], uint8_t(x[2] ^ (x[0] & x[1]))};
    });
  if (name == "fredkin" || name == "frg") {
    // FRG shares the Fredkin mapping: Q = A'B ^ AC, R = A'C ^ AB.
    return make(std::string(name), 3, [](const Bits& x) {
      return x[0] ? Bits{x[0], x[2], x[1]} : x;
    });
  }
  if (name == "peres")
    return make("peres", 3, [](const Bits& x) {
      return Bits{x[0], uint8_t(x[0] ^ x[1]), uint8_t((x[0] & x[1]) ^ x[2])};
    });
  if (name == "f2g")
    return make("f2g", 3, [](const Bits& x) {
      return Bits{x[0], uint8_t(x[0] ^ x[1]), uint8_t(x[0] ^ x[2])};
    });
  if (name == "nft")
    return make("nft", 3, [](const Bits& x) {
      const uint8_t a = x[0], b = x[1], c = x[2];
      return Bits{uint8_t(a ^ b), uint8_t((uint8_t(!b) & c) ^ (a & !c)), uint8_t((b & c) ^ (a & !c))};
    });
  if (name == "picton")
    // R,S pass C,D through when A < B and swap them otherwise.
    return make("picton", 4, [](const Bits& x) {
      const bool pass = x[0] < x[1];
      return Bits{x[0], x[1], pass ? x[2] : x[3], pass ? x[3] : x[2]};
    });
  if (name == "kerntopf")
    return make("kerntopf", 3, [](const Bits& x) {
      const uint8_t a = x[0], b = x[1], c = x[2];
      return Bits{uint8_t(1 ^ a ^ b ^ c ^ (a & b)), uint8_t(1 ^ (a & b) ^ b ^ c ^ (b & c)),
                  uint8_t(1 ^ a ^ b ^ (a & c))};
    });
  throw Error(ErrorCode::UnknownGate, "unknown gate '" + std::string(name) + "'");
}

std::optional<std::size_t> parse_count(std::string_view text) {
  std::size_t value = 0;
  if (text.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

GateDef::GateDef(std::string name, std::size_t arity, std::vector<std::uint32_t> mapping,
                 GateFamily family, std::size_t controls)
    : name_(std::move(name)),
      arity_(arity),
      mapping_(std::move(mapping)),
      family_(family),
      controls_(controls),
      input_pins_(pin_labels(arity, 'A', 'O', 'I')),
      output_pins_(pin_labels(arity, 'P', 'Z', 'O')) {
  if (arity_ == 0 || arity_ > 31)
    throw Error(ErrorCode::InvalidGate, "gate '" + name_ + "' has unsupported arity");
  const std::size_t rows = std::size_t{1} << arity_;
  if (mapping_.size() != rows)
    throw Error(ErrorCode::InvalidGate, "gate '" + name_ + "' mapping has " +
                                            std::to_string(mapping_.size()) + " entries, need " +
                                            std::to_string(rows));
  inverse_.assign(rows, rows);
  for (std::uint32_t x = 0; x < rows; ++x) {
    const auto y = mapping_[x];
    if (y >= rows || inverse_[y] != rows)
      throw Error(ErrorCode::InvalidGate, "gate '" + name_ + "' mapping is not a permutation");
    inverse_[y] = x;
  }
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"not",  "feynman", "toffoli", "fredkin",
                                                 "peres", "frg",    "f2g",     "nft",
                                                 "picton", "kerntopf", "swap"};
  return names;
}

GatePtr builtin(std::string_view name) {
  static std::mutex mutex;
  static std::map<std::string, GatePtr, std::less<>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  auto gate = make_builtin(name);
  cache.emplace(std::string(name), gate);
  return gate;
}

GatePtr mct(std::size_t num_controls, const std::vector<bool>& positive, std::size_t arity_cap) {
  const std::size_t arity = num_controls + 1;
  if (arity > arity_cap)
    throw Error(ErrorCode::GateTooWide, "mct with " + std::to_string(num_controls) +
                                            " controls exceeds arity cap " +
                                            std::to_string(arity_cap));
  std::vector<bool> polarity(num_controls, true);
  if (!positive.empty()) {
    if (positive.size() != num_controls)
      throw Error(ErrorCode::InvalidGate, "polarity list length does not match control count");
    polarity = positive;
  }
  const bool all_positive = std::all_of(polarity.begin(), polarity.end(), [](bool p) { return p; });

  std::string name;
  if (all_positive && num_controls <= 2) {
    static const char* canonical[] = {"not", "feynman", "toffoli"};
    name = canonical[num_controls];
  } else {
    name = "mct" + std::to_string(num_controls);
    if (!all_positive) {
      name += ':';
      for (bool p : polarity) name += p ? 'p' : 'n';
    }
  }
  return make(name, arity,
              [num_controls, polarity](const Bits& x) {
                Bits y = x;
                bool fire = true;
                for (std::size_t i = 0; i < num_controls; ++i)
                  fire = fire && (x[i] == (polarity[i] ? 1 : 0));
                if (fire) y[num_controls] ^= 1;
                return y;
              },
              GateFamily::MultiControlToffoli, num_controls);
}

GatePtr mcf(std::size_t num_controls, std::size_t arity_cap) {
  const std::size_t arity = num_controls + 2;
  if (arity > arity_cap)
    throw Error(ErrorCode::GateTooWide, "mcf with " + std::to_string(num_controls) +
                                            " controls exceeds arity cap " +
                                            std::to_string(arity_cap));
  std::string name = num_controls == 0   ? "swap"
                     : num_controls == 1 ? "fredkin"
                                         : "mcf" + std::to_string(num_controls);
  return make(name, arity,
              [num_controls](const Bits& x) {
                Bits y = x;
                bool fire = true;
                for (std::size_t i = 0; i < num_controls; ++i) fire = fire && x[i];
                if (fire) std::swap(y[num_controls], y[num_controls + 1]);
                return y;
              },
              GateFamily::MultiControlFredkin, num_controls);
}

GatePtr gate_by_name(std::string_view name, std::size_t arity_cap) {
  if (name.starts_with("mct")) {
    auto rest = name.substr(3);
    auto colon = rest.find(':');
    auto count = parse_count(rest.substr(0, colon));
    if (!count) throw Error(ErrorCode::UnknownGate, "unknown gate '" + std::string(name) + "'");
    std::vector<bool> polarity;
    if (colon != std::string_view::npos) {
      for (char c : rest.substr(colon + 1)) {
        if (c != 'p' && c != 'n')
          throw Error(ErrorCode::UnknownGate, "bad polarity in gate '" + std::string(name) + "'");
        polarity.push_back(c == 'p');
      }
      if (polarity.size() != *count)
        throw Error(ErrorCode::UnknownGate, "polarity length mismatch in '" + std::string(name) + "'");
    }
    return mct(*count, polarity, arity_cap);
  }
  if (name.starts_with("mcf")) {
    auto count = parse_count(name.substr(3));
    if (!count) throw Error(ErrorCode::UnknownGate, "unknown gate '" + std::string(name) + "'");
    return mcf(*count, arity_cap);
  }
  return builtin(name);
}

Bits apply_gate(const GateDef& gate, std::span<const std::uint8_t> word) {
  if (word.size() != gate.arity())
    throw Error(ErrorCode::WidthError, "gate '" + gate.name() + "' expects " +
                                           std::to_string(gate.arity()) + " bits, got " +
                                           std::to_string(word.size()));
  return to_bits(gate.apply(static_cast<std::uint32_t>(to_word(word))), gate.arity());
}

Bits apply_gate_inverse(const GateDef& gate, std::span<const std::uint8_t> word) {
  if (word.size() != gate.arity())
    throw Error(ErrorCode::WidthError, "gate '" + gate.name() + "' expects " +
                                           std::to_string(gate.arity()) + " bits, got " +
                                           std::to_string(word.size()));
  return to_bits(gate.apply_inverse(static_cast<std::uint32_t>(to_word(word))), gate.arity());
}

GateClass classify(const GateDef& gate) {
  GateClass result;
  const auto mapping = gate.mapping();
  std::vector<bool> seen(mapping.size(), false);
  result.bijective = true;
  result.conservative = true;
  result.parity_preserving = true;
  result.self_inverse = true;
  for (std::uint32_t x = 0; x < mapping.size(); ++x) {
    const auto y = mapping[x];
    if (y >= mapping.size() || seen[y]) {
      result.bijective = false;
    } else {
      seen[y] = true;
    }
    const unsigned wx = weight(Word{x});
    const unsigned wy = weight(Word{y});
    if (wx != wy) result.conservative = false;
    if ((wx & 1U) != (wy & 1U)) result.parity_preserving = false;
    if (y >= mapping.size() || mapping[y] != x) result.self_inverse = false;
  }
  return result;
}

}  // namespace rpga
