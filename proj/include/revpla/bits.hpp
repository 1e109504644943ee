#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace revpla {

/// Hard cap on input/output line counts. 2^16 evaluations keep every
/// exhaustive operation (minterm enumeration, equivalence) tractable.
inline constexpr unsigned kMaxInputs = 16;

// Word convention used throughout: an n-line value is packed into a word
// with line 0 as the most significant bit, so the word equals the binary
// number spelled by the lines in declaration order.

/// Bit of `word` on line `index` (0 = most significant of `width` lines).
[[nodiscard]] constexpr bool word_bit(std::uint32_t word, unsigned index, unsigned width) {
    return (word >> (width - 1 - index)) & 1u;
}

[[nodiscard]] inline std::string word_to_bits(std::uint32_t word, unsigned width) {
    std::string s(width, '0');
    for (unsigned i = 0; i < width; ++i) {
        if (word_bit(word, i, width)) s[i] = '1';
    }
    return s;
}

namespace detail {

inline std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string{s.substr(first, last - first + 1)};
}

}  // namespace detail

/// Parses a string over {0,1} into a word. Throws std::invalid_argument on
/// other characters or on widths above 32.
[[nodiscard]] inline std::uint32_t bits_to_word(std::string_view bits) {
    if (bits.empty() || bits.size() > 32) {
        throw std::invalid_argument("bit string must have 1 to 32 characters");
    }
    std::uint32_t word = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string may contain only 0 and 1");
        }
        word = (word << 1) | static_cast<std::uint32_t>(c == '1');
    }
    return word;
}

}  // namespace revpla
