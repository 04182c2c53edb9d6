#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include <evensearch/evensearch.hpp>

using namespace evensearch;

namespace {

const std::filesystem::path kFixtureDir = EVENSEARCH_FIXTURE_DIR;

ItemList instance_r_items() {
    return ItemList(3, {BitString::parse("101"), BitString::parse("010"), BitString::parse("110"),
                        BitString::parse("011")});
}

SearchSpec instance_r_spec() { return SearchSpec(IdentityF2{}, BitString::parse("110")); }

void check_spec_roundtrip(const SearchSpec& spec) {
    const SearchSpec back = spec_from_json(spec_to_json(spec));
    REQUIRE(back.selector() == spec.selector());
    REQUIRE(back.target() == spec.target());
}

} // namespace

TEST_CASE("spec JSON round-trips every f2 variant") {
    check_spec_roundtrip(SearchSpec(IdentityF2{}, BitString::parse("1101")));
    check_spec_roundtrip(SearchSpec(TruncateF2{3}, BitString::parse("010")));
    check_spec_roundtrip(SearchSpec(ParityF2{}, BitString::parse("1")));
    check_spec_roundtrip(SearchSpec(XorFoldF2{2}, BitString::parse("11")));
    check_spec_roundtrip(SearchSpec(AffineModF2{0x9e3779b97f4a7c15ULL | 1, 42, 16},
                                    BitString::parse("0000111100001111")));
}

TEST_CASE("spec JSON carries name, params, and target") {
    const nlohmann::json doc = spec_to_json(SearchSpec(AffineModF2{5, 2, 3}, BitString::parse("101")));
    CHECK(doc.at("f2") == "affine_mod");
    CHECK(doc.at("params").at("multiplier") == 5);
    CHECK(doc.at("params").at("addend") == 2);
    CHECK(doc.at("params").at("output_width") == 3);
    CHECK(doc.at("z") == "101");
}

TEST_CASE("malformed spec documents are format errors") {
    CHECK_THROWS_AS(spec_from_json(nlohmann::json{{"z", "101"}}), FormatError);
    CHECK_THROWS_AS(spec_from_json(nlohmann::json{{"f2", "identity"}}), FormatError);
    CHECK_THROWS_AS(spec_from_json(nlohmann::json{{"f2", "no_such"}, {"z", "1"}}), FormatError);
    CHECK_THROWS_AS(spec_from_json(nlohmann::json{{"f2", "truncate"}, {"params", {}}, {"z", "1"}}),
                    FormatError);
    CHECK_THROWS_AS(
        spec_from_json(nlohmann::json{{"f2", "parity"}, {"params", nlohmann::json::object()}, {"z", "11"}}),
        FormatError);
    CHECK_THROWS_AS(
        spec_from_json(nlohmann::json{{"f2", "identity"}, {"params", nlohmann::json::object()}, {"z", "1x"}}),
        FormatError);
}

TEST_CASE("the fixture spec file loads as the reference spec") {
    const SearchSpec spec = load_spec(kFixtureDir / "spec_r.json");
    CHECK(spec.selector() == F2Selector{IdentityF2{}});
    CHECK(spec.target() == BitString::parse("110"));
    CHECK_THROWS_AS(load_spec(kFixtureDir / "missing.json"), FormatError);
}

TEST_CASE("spec files save and load identically") {
    const std::filesystem::path dir = std::filesystem::temp_directory_path() / "evensearch_spec_io_test";
    std::filesystem::create_directories(dir);
    const SearchSpec spec(XorFoldF2{3}, BitString::parse("011"));
    save_spec(dir / "spec.json", spec);
    const SearchSpec back = load_spec(dir / "spec.json");
    CHECK(back.selector() == spec.selector());
    CHECK(back.target() == spec.target());

    std::ofstream(dir / "broken.json") << "{ not json";
    CHECK_THROWS_AS(load_spec(dir / "broken.json"), FormatError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("syndrome JSON carries the verdict and optional witness") {
    const nlohmann::json even = syndrome_to_json(Syndrome::even());
    CHECK(even.at("verdict") == "even");
    CHECK(even.at("witness").is_null());

    const nlohmann::json uneven = syndrome_to_json(Syndrome::uneven(SignedIndex::parse("010")));
    CHECK(uneven.at("verdict") == "uneven");
    CHECK(uneven.at("witness") == "010");
}

TEST_CASE("trace JSON follows the documented schema") {
    ExhaustiveOracle oracle;
    QueryLedger ledger;
    const SingleSearchOutcome outcome = search_single(instance_r_spec(), instance_r_items(), oracle, ledger);
    const nlohmann::json doc = trace_to_json(outcome.trace);

    CHECK(doc.at("algo") == "single");
    CHECK(doc.at("n") == 2);
    CHECK(doc.at("seed").is_null());
    CHECK(doc.at("result") == nlohmann::json::array({2}));
    CHECK(doc.at("ledger").at("oracle_calls") == 3);
    CHECK(doc.at("ledger").at("point_evaluations") == 12);
    CHECK(doc.at("ledger").at("shots") == 0);

    const nlohmann::json& events = doc.at("events");
    REQUIRE(events.is_array());
    REQUIRE(events.size() == 6);
    for (const nlohmann::json& event : events) {
        REQUIRE(event.contains("kind"));
        REQUIRE(event.contains("pattern"));
        REQUIRE(event.contains("j"));
        REQUIRE(event.contains("verdict"));
        REQUIRE(event.contains("witness"));
        REQUIRE(event.contains("depth"));
    }
    CHECK(events[0].at("kind") == "presence_check");
    CHECK(events[0].at("pattern") == "+00");
    CHECK(events[0].at("j") == 0);
    CHECK(events[0].at("verdict") == "uneven");
    CHECK(events[0].at("witness") == "010");
    CHECK(events[0].at("depth") == 1);
    CHECK(events[1].at("verdict") == "even");
    CHECK(events[1].at("witness").is_null());
    CHECK(events[2].at("kind") == "decide");
    CHECK(events[2].at("verdict").is_null());
}

TEST_CASE("trace JSON records the sampling seed when present") {
    SampledOracle oracle(64, 7);
    QueryLedger ledger;
    MultiSearchOutcome outcome = search_multi(instance_r_spec(), instance_r_items(), oracle, ledger);
    outcome.trace.seed = 7;
    const nlohmann::json doc = trace_to_json(outcome.trace);
    CHECK(doc.at("algo") == "multi");
    CHECK(doc.at("seed") == 7);
    CHECK(doc.at("ledger").at("shots") == doc.at("ledger").at("oracle_calls").get<std::uint64_t>() * 64);
}

TEST_CASE("traces save to disk as valid JSON") {
    const std::filesystem::path dir = std::filesystem::temp_directory_path() / "evensearch_trace_io_test";
    std::filesystem::create_directories(dir);
    ExhaustiveOracle oracle;
    QueryLedger ledger;
    const MultiSearchOutcome outcome = search_multi(instance_r_spec(), instance_r_items(), oracle, ledger);
    save_trace(dir / "trace.json", outcome.trace);

    std::ifstream in(dir / "trace.json");
    nlohmann::json doc;
    in >> doc;
    CHECK(doc.at("result") == nlohmann::json::array({2}));
    CHECK(doc.at("ledger").at("oracle_calls") == 5);
    std::filesystem::remove_all(dir);
}
