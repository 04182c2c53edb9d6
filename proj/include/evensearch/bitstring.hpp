#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "evensearch/errors.hpp"

namespace evensearch {

/// Fixed-width bit string, most-significant bit first.
///
/// Equality is bitwise and width-sensitive: strings of different widths
/// never compare equal. Immutable use is the norm; set_bit exists for
/// construction code.
class BitString {
public:
    explicit BitString(std::size_t width) : bits_(checked_width(width), 0) {}

    /// Parse from '0'/'1' characters, MSB first.
    static BitString parse(std::string_view text) {
        BitString out(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c != '0' && c != '1') {
                throw FormatError("bit string may contain only '0' and '1': \"" + std::string(text) + "\"");
            }
            out.bits_[i] = static_cast<std::uint8_t>(c == '1');
        }
        return out;
    }

    /// The low `width` bits of `value`, MSB first. Widths beyond 64 get
    /// leading zeros.
    static BitString from_value(std::uint64_t value, std::size_t width) {
        BitString out(width);
        for (std::size_t i = 0; i < width && i < 64; ++i) {
            out.bits_[width - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1u);
        }
        return out;
    }

    std::size_t width() const noexcept { return bits_.size(); }

    /// Bit at position `i`, where position 0 is the MSB.
    bool bit(std::size_t i) const {
        if (i >= bits_.size()) {
            throw RangeError("bit position " + std::to_string(i) + " out of range for width " +
                             std::to_string(bits_.size()));
        }
        return bits_[i] != 0;
    }

    void set_bit(std::size_t i, bool v) {
        if (i >= bits_.size()) {
            throw RangeError("bit position " + std::to_string(i) + " out of range for width " +
                             std::to_string(bits_.size()));
        }
        bits_[i] = static_cast<std::uint8_t>(v);
    }

    /// Unsigned integer value, reduced mod 2^64 for wide strings.
    std::uint64_t unsigned_value() const noexcept {
        std::uint64_t v = 0;
        for (const std::uint8_t b : bits_) v = (v << 1) | b;
        return v;
    }

    /// XOR of all bits: 1 iff the number of set bits is odd.
    bool parity() const noexcept {
        unsigned acc = 0;
        for (const std::uint8_t b : bits_) acc ^= b;
        return acc != 0;
    }

    std::string to_string() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i]) s[i] = '1';
        }
        return s;
    }

    bool operator==(const BitString&) const = default;

private:
    static std::size_t checked_width(std::size_t width) {
        if (width == 0) throw FormatError("bit string width must be positive");
        return width;
    }

    std::vector<std::uint8_t> bits_; // bits_[0] is the MSB; values are 0 or 1
};

inline BitString random_bitstring(std::size_t width, std::mt19937_64& rng) {
    BitString out(width);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < width; ++i) out.set_bit(i, coin(rng));
    return out;
}

} // namespace evensearch
