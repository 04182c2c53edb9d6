#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <evensearch/criteria.hpp>
#include <evensearch/errors.hpp>
#include <evensearch/oracle.hpp>

using namespace evensearch;

namespace {

ItemList instance_r_items() {
    return ItemList(3, {BitString::parse("101"), BitString::parse("010"), BitString::parse("110"),
                        BitString::parse("011")});
}

SearchSpec instance_r_spec() { return SearchSpec(IdentityF2{}, BitString::parse("110")); }

// Lookup-table function over all (n+1)-bit encodings.
IndexedFunction table_function(std::vector<std::uint8_t> table, std::size_t width) {
    return IndexedFunction(width, 1, [table = std::move(table)](const SignedIndex& x) {
        BitString out(1);
        out.set_bit(0, table[x.encoding()] != 0);
        return out;
    });
}

// Reference evenness check: first violating domain point, if any.
std::optional<SignedIndex> brute_first_violation(const std::vector<std::uint8_t>& table,
                                                 const RegisterPattern& pattern) {
    for (std::uint64_t rank = 0; rank < pattern.domain_size(); ++rank) {
        const SignedIndex x = pattern.domain_element(rank);
        if (table[x.encoding()] != table[negate(x).encoding()]) return x;
    }
    return std::nullopt;
}

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

} // namespace

TEST_CASE("syndrome factories") {
    const Syndrome even = Syndrome::even();
    CHECK(even.is_even());
    CHECK_FALSE(even.witness().has_value());

    const Syndrome uneven = Syndrome::uneven(SignedIndex::parse("010"));
    CHECK(uneven.is_uneven());
    REQUIRE(uneven.witness().has_value());
    CHECK(uneven.witness()->to_string() == "010");

    CHECK(verdict_name(Verdict::Even) == "even");
    CHECK(verdict_name(Verdict::Uneven) == "uneven");
}

TEST_CASE("ledger counters accumulate and snapshot deltas subtract") {
    QueryLedger ledger;
    CHECK(ledger.snapshot() == LedgerSnapshot{});
    ledger.record_call();
    ledger.record_point_evaluations(6);
    ledger.record_shots(3);
    const LedgerSnapshot first = ledger.snapshot();
    CHECK(first.oracle_calls == 1);
    CHECK(first.point_evaluations == 6);
    CHECK(first.shots == 3);
    ledger.record_call();
    ledger.record_point_evaluations(4);
    const LedgerSnapshot delta = ledger.snapshot() - first;
    CHECK(delta.oracle_calls == 1);
    CHECK(delta.point_evaluations == 4);
    CHECK(delta.shots == 0);
}

TEST_CASE("exhaustive detection on the reference instance") {
    const IndexedFunction f = as_indexed_function(instance_r_spec(), instance_r_items());
    QueryLedger ledger;

    const Syndrome whole = even_or_not_exhaustive(f, RegisterPattern::parse("+00"), ledger);
    CHECK(whole.is_uneven());
    REQUIRE(whole.witness().has_value());
    CHECK(whole.witness()->to_string() == "010");
    // Scan stops at the third of four domain points: 2 evaluations each.
    CHECK(ledger.snapshot() == LedgerSnapshot{1, 6, 0});

    const Syndrome left = even_or_not_exhaustive(f, RegisterPattern::parse("++0"), ledger);
    CHECK(left.is_even());
    CHECK_FALSE(left.witness().has_value());
    CHECK(ledger.snapshot() == LedgerSnapshot{2, 10, 0});
}

TEST_CASE("constant functions are even on every pattern") {
    const IndexedFunction zero(3, 1, [](const SignedIndex&) { return BitString(1); });
    QueryLedger ledger;
    for (const RegisterPattern& pattern : all_patterns(3)) {
        REQUIRE(even_or_not_exhaustive(zero, pattern, ledger).is_even());
    }
}

TEST_CASE("a full even scan costs exactly 2D point evaluations") {
    const IndexedFunction zero(4, 1, [](const SignedIndex&) { return BitString(1); });
    QueryLedger ledger;
    even_or_not_exhaustive(zero, RegisterPattern::parse("0000"), ledger);
    CHECK(ledger.snapshot() == LedgerSnapshot{1, 32, 0});
}

TEST_CASE("exhaustive detection rejects width mismatches") {
    const IndexedFunction f = as_indexed_function(instance_r_spec(), instance_r_items());
    QueryLedger ledger;
    CHECK_THROWS_AS(even_or_not_exhaustive(f, RegisterPattern::parse("+000"), ledger), ContractError);
}

TEST_CASE("repeated calls with equal arguments return equal syndromes") {
    const IndexedFunction f = as_indexed_function(instance_r_spec(), instance_r_items());
    QueryLedger ledger;
    for (const RegisterPattern& pattern : all_patterns(3)) {
        const Syndrome first = even_or_not_exhaustive(f, pattern, ledger);
        const Syndrome second = even_or_not_exhaustive(f, pattern, ledger);
        REQUIRE(first == second);
    }
}

TEST_CASE("witness is the smallest violating domain point, random functions up to width 8") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t width = 2 + rng() % 7;
        std::vector<std::uint8_t> table(std::size_t{1} << width);
        for (auto& bit : table) bit = rng() & 1;
        const IndexedFunction f = table_function(table, width);

        std::string text(width, '0');
        for (auto& c : text) {
            const int d = static_cast<int>(rng() % 3);
            c = d == 0 ? '+' : d == 1 ? '-' : '0';
        }
        const RegisterPattern pattern = RegisterPattern::parse(text);

        QueryLedger ledger;
        const Syndrome verdict = even_or_not_exhaustive(f, pattern, ledger);
        const std::optional<SignedIndex> expected = brute_first_violation(table, pattern);
        REQUIRE(verdict.is_uneven() == expected.has_value());
        if (expected) {
            REQUIRE(verdict.witness().has_value());
            REQUIRE(*verdict.witness() == *expected);
        }
    }
}

TEST_CASE("ExhaustiveOracle wraps the detection and is exact") {
    ExhaustiveOracle oracle;
    CHECK(oracle.name() == "exhaustive");
    CHECK(oracle.exact());
    QueryLedger ledger;
    const IndexedFunction f = as_indexed_function(instance_r_spec(), instance_r_items());
    CHECK(oracle.detect(f, RegisterPattern::parse("+00"), ledger).is_uneven());
    CHECK(ledger.oracle_calls() == 1);
}
