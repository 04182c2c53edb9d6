#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "evensearch/errors.hpp"

namespace evensearch {

/// Signed-magnitude index over an n-bit magnitude: one sign bit (the MSB of
/// the n+1-bit encoding) plus n magnitude bits. +0 (sign 0, magnitude 0) and
/// -0 (sign 1, magnitude 0) are distinct values.
///
/// Textual form is n+1 characters of '0'/'1', sign first: "010" is the
/// positive index with magnitude 2 over n=2 magnitude bits.
class SignedIndex {
public:
    SignedIndex(std::size_t magnitude_bits, bool negative, std::uint64_t magnitude)
        : magnitude_bits_(checked_bits(magnitude_bits)), negative_(negative), magnitude_(magnitude) {
        if (magnitude >> magnitude_bits_ != 0) {
            throw RangeError("magnitude " + std::to_string(magnitude) + " does not fit in " +
                             std::to_string(magnitude_bits_) + " bits");
        }
    }

    static SignedIndex parse(std::string_view text) {
        if (text.size() < 2) throw FormatError("signed index needs a sign bit and at least one magnitude bit");
        if (text.size() > 64) throw FormatError("signed index wider than 64 bits");
        std::uint64_t enc = 0;
        for (const char c : text) {
            if (c != '0' && c != '1') {
                throw FormatError("signed index may contain only '0' and '1': \"" + std::string(text) + "\"");
            }
            enc = (enc << 1) | static_cast<std::uint64_t>(c == '1');
        }
        return from_encoding(enc, text.size() - 1);
    }

    /// Rebuild from the n+1-bit encoding (sign in the top bit).
    static SignedIndex from_encoding(std::uint64_t encoding, std::size_t magnitude_bits) {
        checked_bits(magnitude_bits);
        const std::uint64_t mask = (std::uint64_t{1} << magnitude_bits) - 1;
        if (encoding >> (magnitude_bits + 1) != 0) {
            throw RangeError("encoding does not fit in " + std::to_string(magnitude_bits + 1) + " bits");
        }
        return SignedIndex(magnitude_bits, (encoding >> magnitude_bits) & 1, encoding & mask);
    }

    std::size_t magnitude_bits() const noexcept { return magnitude_bits_; }
    std::size_t width() const noexcept { return magnitude_bits_ + 1; }
    bool negative() const noexcept { return negative_; }
    std::uint64_t magnitude() const noexcept { return magnitude_; }

    /// The list position this index addresses: the magnitude as an unsigned
    /// integer in [0, 2^n). Both zeros address position 0.
    std::uint64_t magnitude_position() const noexcept { return magnitude_; }

    /// Same magnitude, flipped sign bit. An involution.
    SignedIndex negated() const noexcept {
        SignedIndex out = *this;
        out.negative_ = !out.negative_;
        return out;
    }

    /// The raw n+1-bit value, sign bit on top. Defines enumeration order.
    std::uint64_t encoding() const noexcept {
        return (static_cast<std::uint64_t>(negative_) << magnitude_bits_) | magnitude_;
    }

    std::string to_string() const {
        std::string s(magnitude_bits_ + 1, '0');
        s[0] = negative_ ? '1' : '0';
        for (std::size_t i = 0; i < magnitude_bits_; ++i) {
            if ((magnitude_ >> (magnitude_bits_ - 1 - i)) & 1) s[i + 1] = '1';
        }
        return s;
    }

    bool operator==(const SignedIndex&) const = default;

private:
    static std::size_t checked_bits(std::size_t magnitude_bits) {
        if (magnitude_bits == 0) throw RangeError("signed index needs at least one magnitude bit");
        if (magnitude_bits > 63) throw RangeError("signed index magnitude wider than 63 bits");
        return magnitude_bits;
    }

    std::size_t magnitude_bits_;
    bool negative_;
    std::uint64_t magnitude_;
};

inline SignedIndex negate(const SignedIndex& x) noexcept { return x.negated(); }

inline std::uint64_t magnitude_position(const SignedIndex& x) noexcept { return x.magnitude_position(); }

/// Index with the given magnitude position and sign. Throws RangeError when
/// position >= 2^magnitude_bits.
inline SignedIndex from_position(std::uint64_t position, std::size_t magnitude_bits, bool negative = false) {
    return SignedIndex(magnitude_bits, negative, position);
}

} // namespace evensearch
