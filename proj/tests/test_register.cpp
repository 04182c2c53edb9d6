#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include <evensearch/bitstring.hpp>
#include <evensearch/errors.hpp>
#include <evensearch/register_pattern.hpp>
#include <evensearch/signed_index.hpp>

using namespace evensearch;

namespace {

// All 3^width patterns of a given width, for exhaustive sweeps.
std::vector<RegisterPattern> all_patterns(std::size_t width) {
    std::vector<RegisterPattern> patterns;
    std::string text(width, '+');
    const char symbols[3] = {'+', '-', '0'};
    std::vector<std::size_t> digits(width, 0);
    while (true) {
        for (std::size_t i = 0; i < width; ++i) text[i] = symbols[digits[i]];
        patterns.push_back(RegisterPattern::parse(text));
        std::size_t pos = 0;
        while (pos < width && digits[pos] == 2) digits[pos++] = 0;
        if (pos == width) break;
        ++digits[pos];
    }
    return patterns;
}

std::set<std::uint64_t> domain_encodings(const RegisterPattern& pattern) {
    std::set<std::uint64_t> encodings;
    for (const SignedIndex& x : pattern.domain()) encodings.insert(x.encoding());
    return encodings;
}

} // namespace

TEST_CASE("pattern parse and to_string round-trip") {
    for (const std::string text : {"+0", "--", "+-+", "000", "+-0+-0"}) {
        CHECK(RegisterPattern::parse(text).to_string() == text);
    }
}

TEST_CASE("pattern rejects malformed text") {
    CHECK_THROWS_AS(RegisterPattern::parse("?"), FormatError);
    CHECK_THROWS_AS(RegisterPattern::parse("+"), FormatError);
    CHECK_THROWS_AS(RegisterPattern::parse("+1"), FormatError);
    CHECK_THROWS_AS(RegisterPattern::parse(""), FormatError);
    CHECK_THROWS_AS(RegisterPattern::parse(std::string(65, '+')), FormatError);
    CHECK_NOTHROW(RegisterPattern::parse(std::string(64, '+')));
}

TEST_CASE("cell access and functional update") {
    const RegisterPattern pattern = RegisterPattern::parse("+00");
    CHECK(pattern.cell(0) == Cell::Plus);
    CHECK(pattern.cell(1) == Cell::Free);
    CHECK_THROWS_AS(pattern.cell(3), RangeError);

    const RegisterPattern updated = pattern.with_cell(1, Cell::Minus);
    CHECK(updated.to_string() == "+-0");
    CHECK(pattern.to_string() == "+00");
    CHECK_THROWS_AS(pattern.with_cell(3, Cell::Plus), RangeError);
}

TEST_CASE("free count and determination") {
    CHECK(RegisterPattern::parse("+00").free_count() == 2);
    CHECK(RegisterPattern::parse("+-+").free_count() == 0);
    CHECK(RegisterPattern::parse("+-+").fully_determined());
    CHECK_FALSE(RegisterPattern::parse("+0-").fully_determined());
}

TEST_CASE("domain of a width-3 pattern with two free cells") {
    const RegisterPattern pattern = RegisterPattern::parse("+00");
    CHECK(pattern.domain_size() == 4);
    const std::vector<SignedIndex> domain = pattern.domain();
    REQUIRE(domain.size() == 4);
    CHECK(domain[0].to_string() == "000");
    CHECK(domain[1].to_string() == "001");
    CHECK(domain[2].to_string() == "010");
    CHECK(domain[3].to_string() == "011");
}

TEST_CASE("domain of a fully determined pattern is a single point") {
    const RegisterPattern pattern = RegisterPattern::parse("+-+");
    CHECK(pattern.domain_size() == 1);
    CHECK(pattern.domain_element(0).to_string() == "010");
    CHECK_THROWS_AS(pattern.domain_element(1), RangeError);
}

TEST_CASE("domain elements ascend by encoding and respect fixed cells") {
    for (const RegisterPattern& pattern : all_patterns(4)) {
        std::uint64_t previous = 0;
        for (std::uint64_t rank = 0; rank < pattern.domain_size(); ++rank) {
            const SignedIndex x = pattern.domain_element(rank);
            if (rank > 0) REQUIRE(x.encoding() > previous);
            previous = x.encoding();
            const BitString bits = BitString::parse(x.to_string());
            for (std::size_t j = 0; j < pattern.width(); ++j) {
                if (pattern.cell(j) == Cell::Plus) REQUIRE(bits.bit(j) == false);
                if (pattern.cell(j) == Cell::Minus) REQUIRE(bits.bit(j) == true);
            }
        }
    }
}

TEST_CASE("fixing the first free cell bisects the domain exactly, widths up to 8") {
    for (std::size_t width = 2; width <= 8; ++width) {
        for (const RegisterPattern& pattern : all_patterns(width)) {
            if (pattern.free_count() == 0) continue;
            std::size_t first_free = 0;
            while (pattern.cell(first_free) != Cell::Free) ++first_free;

            const std::set<std::uint64_t> whole = domain_encodings(pattern);
            const std::set<std::uint64_t> left =
                domain_encodings(pattern.with_cell(first_free, Cell::Plus));
            const std::set<std::uint64_t> right =
                domain_encodings(pattern.with_cell(first_free, Cell::Minus));

            REQUIRE(left.size() + right.size() == whole.size());
            std::set<std::uint64_t> merged = left;
            merged.insert(right.begin(), right.end());
            REQUIRE(merged == whole);
            for (const std::uint64_t enc : left) REQUIRE(right.count(enc) == 0);
        }
    }
}

TEST_CASE("readout inverts full determination") {
    CHECK(RegisterPattern::parse("+-+").readout().to_string() == "010");
    CHECK(RegisterPattern::parse("++-").readout().to_string() == "001");
    CHECK(RegisterPattern::parse("--").readout().to_string() == "11");
    CHECK_THROWS_AS(RegisterPattern::parse("+0-").readout(), ReadoutError);

    // Round-trip: pin every cell to an index's bits, then read it back.
    for (std::uint64_t enc = 0; enc < 16; ++enc) {
        const SignedIndex x = SignedIndex::from_encoding(enc, 3);
        RegisterPattern pattern(4, Cell::Free);
        const BitString bits = BitString::parse(x.to_string());
        for (std::size_t j = 0; j < 4; ++j) {
            pattern = pattern.with_cell(j, bits.bit(j) ? Cell::Minus : Cell::Plus);
        }
        REQUIRE(pattern.readout() == x);
    }
}

TEST_CASE("pattern width limits match the register shape") {
    CHECK_THROWS_AS(RegisterPattern(1), FormatError);
    CHECK_NOTHROW(RegisterPattern(2));
    CHECK_THROWS_AS(RegisterPattern(65), FormatError);
}
