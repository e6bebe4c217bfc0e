#include "rpga/bits.hpp"

#include <bit>

#include "rpga/error.hpp"

namespace rpga {

Bits to_bits(Word word, std::size_t width) {
  Bits bits(width);
  for (std::size_t i = 0; i < width; ++i) bits[i] = (word >> (width - 1 - i)) & 1U;
  return bits;
}

Word to_word(std::span<const std::uint8_t> bits) {
  Word word = 0;
  for (auto b : bits) word = (word << 1) | (b & 1U);
  return word;
}

unsigned weight(Word word) { return static_cast<unsigned>(std::popcount(word)); }

unsigned weight(std::span<const std::uint8_t> bits) {
  unsigned w = 0;
  for (auto b : bits) w += b;
  return w;
}

Bits parse_bits(std::string_view text) {
  Bits bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw Error(ErrorCode::WidthError, "invalid bit '" + std::string(1, c) + "' in \"" +
                                             std::string(text) + "\"");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return bits;
}

std::string format_bits(std::span<const std::uint8_t> bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

std::string format_word(Word word, std::size_t width) { return format_bits(to_bits(word, width)); }

}  // namespace rpga
