#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "evensearch/errors.hpp"
#include "evensearch/signed_index.hpp"

namespace evensearch {

/// One control-register cell. Plus fixes the bit to 0, Minus fixes it to 1,
/// Free leaves it undetermined (the cell ranges over both values).
enum class Cell : std::uint8_t { Plus, Minus, Free };

inline char cell_char(Cell c) noexcept {
    switch (c) {
        case Cell::Plus: return '+';
        case Cell::Minus: return '-';
        default: return '0';
    }
}

/// Control register over an n+1-bit signed index: one cell per bit, sign
/// cell first. The pattern denotes the set of indices that agree with every
/// fixed cell; free cells contribute a factor of two each.
///
/// Textual form mirrors the cells, MSB first: "+-00" fixes sign 0 and the
/// top magnitude bit 1, leaving the last two bits free.
class RegisterPattern {
public:
    explicit RegisterPattern(std::size_t width, Cell fill = Cell::Free)
        : cells_(checked_width(width), fill) {}

    static RegisterPattern parse(std::string_view text) {
        RegisterPattern out(text.size(), Cell::Free);
        for (std::size_t i = 0; i < text.size(); ++i) {
            switch (text[i]) {
                case '+': out.cells_[i] = Cell::Plus; break;
                case '-': out.cells_[i] = Cell::Minus; break;
                case '0': out.cells_[i] = Cell::Free; break;
                default:
                    throw FormatError("register pattern may contain only '+', '-' and '0': \"" +
                                      std::string(text) + "\"");
            }
        }
        return out;
    }

    std::size_t width() const noexcept { return cells_.size(); }
    std::size_t magnitude_bits() const noexcept { return cells_.size() - 1; }

    Cell cell(std::size_t j) const {
        check_position(j);
        return cells_[j];
    }

    /// Copy with cell j set to v; the original is unchanged.
    RegisterPattern with_cell(std::size_t j, Cell v) const {
        check_position(j);
        RegisterPattern out = *this;
        out.cells_[j] = v;
        return out;
    }

    std::size_t free_count() const noexcept {
        std::size_t n = 0;
        for (const Cell c : cells_) n += (c == Cell::Free);
        return n;
    }

    bool fully_determined() const noexcept { return free_count() == 0; }

    /// Number of indices the pattern denotes: 2^(free cells).
    std::uint64_t domain_size() const {
        const std::size_t f = free_count();
        if (f > 62) throw RangeError("domain too large to enumerate");
        return std::uint64_t{1} << f;
    }

    /// The rank-th element of the domain in ascending encoding order.
    /// Free cells take the bits of `rank`, most significant free cell first.
    SignedIndex domain_element(std::uint64_t rank) const {
        if (rank >= domain_size()) {
            throw RangeError("domain rank " + std::to_string(rank) + " out of range for size " +
                             std::to_string(domain_size()));
        }
        std::size_t remaining = free_count();
        std::uint64_t enc = 0;
        for (const Cell c : cells_) {
            enc <<= 1;
            switch (c) {
                case Cell::Plus: break;
                case Cell::Minus: enc |= 1; break;
                case Cell::Free:
                    --remaining;
                    enc |= (rank >> remaining) & 1;
                    break;
            }
        }
        return SignedIndex::from_encoding(enc, magnitude_bits());
    }

    /// All denoted indices, ascending by encoding.
    std::vector<SignedIndex> domain() const {
        const std::uint64_t d = domain_size();
        std::vector<SignedIndex> out;
        out.reserve(static_cast<std::size_t>(d));
        for (std::uint64_t r = 0; r < d; ++r) out.push_back(domain_element(r));
        return out;
    }

    /// Collapse a fully determined pattern to its index: Plus -> 0, Minus -> 1.
    SignedIndex readout() const {
        if (!fully_determined()) {
            throw ReadoutError("readout requires a fully determined register: \"" + to_string() + "\"");
        }
        return domain_element(0);
    }

    std::string to_string() const {
        std::string s;
        s.reserve(cells_.size());
        for (const Cell c : cells_) s.push_back(cell_char(c));
        return s;
    }

    bool operator==(const RegisterPattern&) const = default;

private:
    static std::size_t checked_width(std::size_t width) {
        if (width < 2) throw FormatError("register pattern needs a sign cell and at least one magnitude cell");
        if (width > 64) throw FormatError("register pattern wider than 64 cells");
        return width;
    }

    void check_position(std::size_t j) const {
        if (j >= cells_.size()) {
            throw RangeError("cell position " + std::to_string(j) + " out of range for width " +
                             std::to_string(cells_.size()));
        }
    }

    std::vector<Cell> cells_; // sign cell first
};

} // namespace evensearch
