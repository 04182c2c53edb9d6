#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "evensearch/bitstring.hpp"
#include "evensearch/errors.hpp"
#include "evensearch/indexed_function.hpp"
#include "evensearch/signed_index.hpp"

namespace evensearch {

// ---------------------------------------------------------------------------
// Item transform family (f2)
// ---------------------------------------------------------------------------

/// The item itself; output width equals the item width.
struct IdentityF2 {
    bool operator==(const IdentityF2&) const = default;
};

/// The `output_width` most-significant bits of the item.
struct TruncateF2 {
    std::size_t output_width = 1;
    bool operator==(const TruncateF2&) const = default;
};

/// Single bit: XOR of all item bits.
struct ParityF2 {
    bool operator==(const ParityF2&) const = default;
};

/// Fold the item into `output_width` bits: starting at the MSB, XOR
/// consecutive chunks of `output_width` bits together. A short final chunk
/// is aligned to the most-significant end of the result.
struct XorFoldF2 {
    std::size_t output_width = 1;
    bool operator==(const XorFoldF2&) const = default;
};

/// (multiplier * v + addend) mod 2^output_width over the item's unsigned
/// value v. Non-injective in general; a hash-like transform.
struct AffineModF2 {
    std::uint64_t multiplier = 1;
    std::uint64_t addend = 0;
    std::size_t output_width = 1;
    bool operator==(const AffineModF2&) const = default;
};

using F2Selector = std::variant<IdentityF2, TruncateF2, ParityF2, XorFoldF2, AffineModF2>;

inline std::string f2_name(const F2Selector& f2) {
    struct Visitor {
        std::string operator()(const IdentityF2&) const { return "identity"; }
        std::string operator()(const TruncateF2&) const { return "truncate"; }
        std::string operator()(const ParityF2&) const { return "parity"; }
        std::string operator()(const XorFoldF2&) const { return "xor_fold"; }
        std::string operator()(const AffineModF2&) const { return "affine_mod"; }
    };
    return std::visit(Visitor{}, f2);
}

/// Apply an f2 variant to one item. Throws FormatError when the variant is
/// infeasible for the item width (truncate/xor_fold wider than the item).
inline BitString eval_f2(const F2Selector& f2, const BitString& item) {
    struct Visitor {
        const BitString& item;

        BitString operator()(const IdentityF2&) const { return item; }

        BitString operator()(const TruncateF2& t) const {
            if (t.output_width == 0 || t.output_width > item.width()) {
                throw FormatError("truncate width " + std::to_string(t.output_width) +
                                  " infeasible for item width " + std::to_string(item.width()));
            }
            BitString out(t.output_width);
            for (std::size_t i = 0; i < t.output_width; ++i) out.set_bit(i, item.bit(i));
            return out;
        }

        BitString operator()(const ParityF2&) const {
            BitString out(1);
            out.set_bit(0, item.parity());
            return out;
        }

        BitString operator()(const XorFoldF2& x) const {
            if (x.output_width == 0 || x.output_width > item.width()) {
                throw FormatError("xor_fold width " + std::to_string(x.output_width) +
                                  " infeasible for item width " + std::to_string(item.width()));
            }
            BitString out(x.output_width);
            for (std::size_t start = 0; start < item.width(); start += x.output_width) {
                for (std::size_t k = 0; k < x.output_width && start + k < item.width(); ++k) {
                    out.set_bit(k, out.bit(k) ^ item.bit(start + k));
                }
            }
            return out;
        }

        BitString operator()(const AffineModF2& a) const {
            if (a.output_width == 0 || a.output_width > 63) {
                throw FormatError("affine_mod width must be in [1, 63]");
            }
            const std::uint64_t mask = (std::uint64_t{1} << a.output_width) - 1;
            const std::uint64_t v = item.unsigned_value();
            return BitString::from_value((a.multiplier * v + a.addend) & mask, a.output_width);
        }
    };
    return std::visit(Visitor{item}, f2);
}

// ---------------------------------------------------------------------------
// Search criteria
// ---------------------------------------------------------------------------

/// A search specification: an f2 variant plus the target string z. An item
/// matches when f2(item) equals z.
class SearchSpec {
public:
    SearchSpec(F2Selector f2, BitString target) : f2_(std::move(f2)), target_(std::move(target)) {
        struct Check {
            std::size_t z_width;
            void operator()(const IdentityF2&) const {}
            void operator()(const TruncateF2& t) const { require(t.output_width); }
            void operator()(const ParityF2&) const { require(1); }
            void operator()(const XorFoldF2& x) const { require(x.output_width); }
            void operator()(const AffineModF2& a) const {
                if (a.output_width == 0 || a.output_width > 63) {
                    throw FormatError("affine_mod width must be in [1, 63]");
                }
                require(a.output_width);
            }
            void require(std::size_t l) const {
                if (l == 0) throw FormatError("f2 output width must be positive");
                if (l != z_width) {
                    throw FormatError("target width " + std::to_string(z_width) +
                                      " does not match f2 output width " + std::to_string(l));
                }
            }
        };
        std::visit(Check{target_.width()}, f2_);
    }

    const F2Selector& selector() const noexcept { return f2_; }
    const BitString& target() const noexcept { return target_; }

    /// Output width of the selected f2 for the given item width.
    std::size_t output_width(std::size_t item_width) const {
        struct Visitor {
            std::size_t m;
            std::size_t operator()(const IdentityF2&) const { return m; }
            std::size_t operator()(const TruncateF2& t) const { return t.output_width; }
            std::size_t operator()(const ParityF2&) const { return 1; }
            std::size_t operator()(const XorFoldF2& x) const { return x.output_width; }
            std::size_t operator()(const AffineModF2& a) const { return a.output_width; }
        };
        return std::visit(Visitor{item_width}, f2_);
    }

    BitString apply(const BitString& item) const { return eval_f2(f2_, item); }

    /// True iff f2(item) = z. Throws FormatError when the produced width
    /// cannot match the target width.
    bool matches(const BitString& item) const {
        const BitString out = eval_f2(f2_, item);
        if (out.width() != target_.width()) {
            throw FormatError("f2 output width " + std::to_string(out.width()) +
                              " does not match target width " + std::to_string(target_.width()));
        }
        return out == target_;
    }

private:
    F2Selector f2_;
    BitString target_;
};

inline BitString apply_f2(const SearchSpec& spec, const BitString& item) { return spec.apply(item); }

/// Check that a SearchSpec's f2 is feasible for the given item width and
/// produces the target's width. Throws FormatError otherwise.
inline void validate_for_item_width(const SearchSpec& spec, std::size_t item_width) {
    const BitString produced = spec.apply(BitString(item_width));
    if (produced.width() != spec.target().width()) {
        throw FormatError("f2 output width " + std::to_string(produced.width()) + " for items of width " +
                          std::to_string(item_width) + " does not match target width " +
                          std::to_string(spec.target().width()));
    }
}

// ---------------------------------------------------------------------------
// Item list
// ---------------------------------------------------------------------------

/// Immutable list of equal-width items. The searchable domain is padded to
/// the next power of two: positions at or beyond size() never match.
/// Copies are cheap; the items are shared.
class ItemList {
public:
    ItemList(std::size_t item_width, std::vector<BitString> items)
        : item_width_(item_width), items_(std::make_shared<const std::vector<BitString>>(std::move(items))) {
        if (item_width_ == 0) throw FormatError("item width must be positive");
        for (const BitString& it : *items_) {
            if (it.width() != item_width_) {
                throw FormatError("item width " + std::to_string(it.width()) + " does not match declared " +
                                  std::to_string(item_width_));
            }
        }
    }

    std::size_t item_width() const noexcept { return item_width_; }

    /// Number of loaded items (the raw, unpadded size).
    std::size_t size() const noexcept { return items_->size(); }

    /// Magnitude bits n of the padded domain: smallest n >= 1 with 2^n >= size().
    std::size_t magnitude_bits() const noexcept {
        const std::uint64_t raw = items_->empty() ? 1 : items_->size();
        const unsigned n = static_cast<unsigned>(std::bit_width(std::bit_ceil(raw)) - 1);
        return n < 1 ? 1 : n;
    }

    std::uint64_t padded_size() const noexcept { return std::uint64_t{1} << magnitude_bits(); }

    const BitString& item(std::size_t position) const {
        if (position >= items_->size()) {
            throw RangeError("item position " + std::to_string(position) + " out of range for size " +
                             std::to_string(items_->size()));
        }
        return (*items_)[position];
    }

    const std::vector<BitString>& items() const noexcept { return *items_; }

private:
    std::size_t item_width_;
    std::shared_ptr<const std::vector<BitString>> items_;
};

// ---------------------------------------------------------------------------
// Match predicates
// ---------------------------------------------------------------------------

/// Match predicate over padded list positions: 1 iff the position holds a
/// loaded item and f2(item) = z. Positions in the padding region are 0.
/// Throws RangeError when position >= padded_size().
inline bool f1(const SearchSpec& spec, const ItemList& items, std::uint64_t position) {
    if (position >= items.padded_size()) {
        throw RangeError("position " + std::to_string(position) + " outside the padded domain of size " +
                         std::to_string(items.padded_size()));
    }
    if (position >= items.size()) return false;
    return spec.matches(items.item(static_cast<std::size_t>(position)));
}

/// Sign-extended match predicate over signed indices: f1 at the magnitude
/// position for non-negative indices, 0 for all negative indices (both
/// zeros included: -0 is negative).
inline bool f3(const SearchSpec& spec, const ItemList& items, const SignedIndex& index) {
    if (index.magnitude_bits() != items.magnitude_bits()) {
        throw FormatError("index magnitude width " + std::to_string(index.magnitude_bits()) +
                          " does not match list domain width " + std::to_string(items.magnitude_bits()));
    }
    if (index.negative()) return false;
    return f1(spec, items, index.magnitude_position());
}

/// The black-box view of f3: input width n+1, output width 1.
inline IndexedFunction as_indexed_function(const SearchSpec& spec, const ItemList& items) {
    const std::size_t n = items.magnitude_bits();
    return IndexedFunction(n + 1, 1, [spec, items](const SignedIndex& x) {
        BitString out(1);
        out.set_bit(0, f3(spec, items, x));
        return out;
    });
}

// ---------------------------------------------------------------------------
// Items file I/O
// ---------------------------------------------------------------------------
//
// Text format: first line is the item width m; every subsequent non-empty
// line is one item, exactly m characters of '0'/'1'.

inline ItemList read_items(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("items file is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t item_width = 0;
    try {
        std::size_t consumed = 0;
        const unsigned long long parsed = std::stoull(line, &consumed);
        if (consumed != line.size() || parsed == 0) throw FormatError("");
        item_width = static_cast<std::size_t>(parsed);
    } catch (const std::exception&) {
        throw FormatError("items file must start with the item width, got \"" + line + "\"");
    }
    std::vector<BitString> items;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.size() != item_width) {
            throw FormatError("item \"" + line + "\" does not have the declared width " +
                              std::to_string(item_width));
        }
        items.push_back(BitString::parse(line));
    }
    return ItemList(item_width, std::move(items));
}

inline ItemList load_items(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open items file: " + path.string());
    return read_items(in);
}

inline void write_items(std::ostream& out, const ItemList& items) {
    out << items.item_width() << '\n';
    for (const BitString& it : items.items()) out << it.to_string() << '\n';
}

inline void save_items(const std::filesystem::path& path, const ItemList& items) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write items file: " + path.string());
    write_items(out, items);
}

// ---------------------------------------------------------------------------
// Planted instance generation
// ---------------------------------------------------------------------------

struct GeneratedInstance {
    ItemList items;
    SearchSpec spec;
};

/// Generate a list of 2^n items and a spec whose matches are exactly the
/// planted positions: the planted positions hold copies of one target item,
/// every other position holds an item verified non-matching (re-drawn on
/// collision). The f2 variant and its parameters are drawn from the seed.
inline GeneratedInstance gen_instance(std::uint64_t seed, std::size_t magnitude_bits, std::size_t item_width,
                                      const std::vector<std::uint64_t>& planted_positions) {
    if (magnitude_bits == 0 || magnitude_bits > 24) {
        throw GenerationError("magnitude bits must be in [1, 24] to materialize the list");
    }
    if (item_width == 0) throw GenerationError("item width must be positive");
    const std::uint64_t domain = std::uint64_t{1} << magnitude_bits;
    std::set<std::uint64_t> planted(planted_positions.begin(), planted_positions.end());
    for (const std::uint64_t p : planted) {
        if (p >= domain) {
            throw GenerationError("plant position " + std::to_string(p) + " outside domain of size " +
                                  std::to_string(domain));
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_kind(0, 4);
    std::uniform_int_distribution<std::size_t> pick_width(1, item_width);
    F2Selector f2;
    switch (pick_kind(rng)) {
        case 0: f2 = IdentityF2{}; break;
        case 1: f2 = TruncateF2{pick_width(rng)}; break;
        case 2: f2 = ParityF2{}; break;
        case 3: f2 = XorFoldF2{pick_width(rng)}; break;
        default: {
            const std::size_t l = std::min<std::size_t>(pick_width(rng), 63);
            const std::uint64_t mask = (std::uint64_t{1} << l) - 1;
            std::uniform_int_distribution<std::uint64_t> pick_value(0, mask);
            // odd multipliers are bijective mod 2^l, so non-matching fill always exists
            f2 = AffineModF2{pick_value(rng) | 1, pick_value(rng), l};
            break;
        }
    }

    const BitString target_item = random_bitstring(item_width, rng);
    SearchSpec spec(f2, eval_f2(f2, target_item));

    std::vector<BitString> items;
    items.reserve(static_cast<std::size_t>(domain));
    for (std::uint64_t p = 0; p < domain; ++p) {
        if (planted.count(p)) {
            items.push_back(target_item);
            continue;
        }
        bool placed = false;
        for (int attempt = 0; attempt < 256; ++attempt) {
            BitString candidate = random_bitstring(item_width, rng);
            if (!spec.matches(candidate)) {
                items.push_back(std::move(candidate));
                placed = true;
                break;
            }
        }
        if (!placed) {
            throw GenerationError("could not draw a non-matching filler item (f2 " + f2_name(f2) +
                                  ", item width " + std::to_string(item_width) + ")");
        }
    }
    return GeneratedInstance{ItemList(item_width, std::move(items)), std::move(spec)};
}

} // namespace evensearch
