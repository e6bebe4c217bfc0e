#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rpga {

/// One value per line/pin, each 0 or 1. Element 0 is the most significant
/// bit when the vector is read as a binary word.
using Bits = std::vector<std::uint8_t>;

/// Row/word index. Line 0 maps to bit (width - 1).
using Word = std::uint64_t;

Bits to_bits(Word word, std::size_t width);
Word to_word(std::span<const std::uint8_t> bits);

unsigned weight(Word word);
unsigned weight(std::span<const std::uint8_t> bits);

/// "101" -> {1,0,1}; throws Error(WidthError) on any character other than 0/1.
Bits parse_bits(std::string_view text);
std::string format_bits(std::span<const std::uint8_t> bits);
std::string format_word(Word word, std::size_t width);

}  // namespace rpga
