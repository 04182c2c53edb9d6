// Command-line front end: instance generation, oracle-driven search,
// verification against the linear scan, and oracle statistics.
//
// Exit codes: 0 found / success, 1 not found / mismatch, 2 usage error,
// 3 input format error, 4 oracle contract violation.

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <evensearch/evensearch.hpp>

namespace {

struct RunConfig {
    std::string subcommand;
    std::string items_path;
    std::string spec_path;
    std::string algo = "multi";
    std::string oracle = "exhaustive";
    std::uint64_t shots = 64;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool adaptive = false;
    std::string trace_path;
    // gen
    std::size_t magnitude_bits = 0;
    std::size_t item_width = 0;
    std::vector<std::uint64_t> plant;
    // oracle-stats
    std::string pattern_text;
};

std::uint64_t draw_entropy_seed() {
    std::random_device device;
    return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

std::string positions_text(const std::vector<std::uint64_t>& positions) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i > 0) out << ", ";
        out << positions[i];
    }
    out << ']';
    return out.str();
}

std::string real_text(double value) {
    std::ostringstream out;
    out << std::setprecision(10) << value;
    return out.str();
}

std::unique_ptr<evensearch::EvennessOracle> make_oracle(const RunConfig& cfg, std::uint64_t seed) {
    if (cfg.oracle == "sampled") return evensearch::amplified_oracle(cfg.shots, seed);
    return std::make_unique<evensearch::ExhaustiveOracle>();
}

int cmd_gen(const RunConfig& cfg) {
    const evensearch::GeneratedInstance instance =
        evensearch::gen_instance(cfg.seed, cfg.magnitude_bits, cfg.item_width, cfg.plant);
    evensearch::save_items(cfg.items_path, instance.items);
    evensearch::save_spec(cfg.spec_path, instance.spec);
    return 0;
}

int cmd_search(const RunConfig& cfg) {
    const evensearch::ItemList items = evensearch::load_items(cfg.items_path);
    const evensearch::SearchSpec spec = evensearch::load_spec(cfg.spec_path);
    evensearch::validate_for_item_width(spec, items.item_width());

    const bool sampled = cfg.oracle == "sampled";
    const std::uint64_t seed = cfg.seed_given ? cfg.seed : draw_entropy_seed();
    const std::unique_ptr<evensearch::EvennessOracle> oracle = make_oracle(cfg, seed);
    evensearch::QueryLedger ledger;

    std::vector<std::uint64_t> positions;
    evensearch::SearchTrace trace;
    if (cfg.algo == "single") {
        evensearch::SingleSearchOutcome outcome = evensearch::search_single(spec, items, *oracle, ledger);
        if (outcome.position) positions.push_back(*outcome.position);
        trace = std::move(outcome.trace);
    } else {
        evensearch::MultiSearchOutcome outcome =
            evensearch::search_multi(spec, items, *oracle, ledger, cfg.adaptive);
        positions = std::move(outcome.positions);
        trace = std::move(outcome.trace);
    }
    if (sampled) trace.seed = seed;
    if (!cfg.trace_path.empty()) evensearch::save_trace(cfg.trace_path, trace);

    if (positions.empty()) {
        std::cout << "not present\n";
    } else {
        for (const std::uint64_t p : positions) std::cout << p << '\n';
    }
    std::cout << "# oracle_calls=" << trace.ledger.oracle_calls
              << " point_evaluations=" << trace.ledger.point_evaluations << " shots=" << trace.ledger.shots;
    if (sampled) std::cout << " seed=" << seed;
    std::cout << '\n';
    return positions.empty() ? 1 : 0;
}

int cmd_verify(const RunConfig& cfg) {
    const evensearch::ItemList items = evensearch::load_items(cfg.items_path);
    const evensearch::SearchSpec spec = evensearch::load_spec(cfg.spec_path);
    evensearch::validate_for_item_width(spec, items.item_width());

    const std::vector<std::uint64_t> all_matches = evensearch::linear_scan(spec, items);
    std::vector<std::uint64_t> expected = all_matches;
    if (cfg.algo == "single" && !expected.empty()) expected.resize(1);

    const bool sampled = cfg.oracle == "sampled";
    const std::uint64_t seed = cfg.seed_given ? cfg.seed : draw_entropy_seed();
    const std::unique_ptr<evensearch::EvennessOracle> oracle = make_oracle(cfg, seed);
    evensearch::QueryLedger ledger;

    std::vector<std::uint64_t> actual;
    if (cfg.algo == "single") {
        const evensearch::SingleSearchOutcome outcome =
            evensearch::search_single(spec, items, *oracle, ledger);
        if (outcome.position) actual.push_back(*outcome.position);
    } else {
        actual = evensearch::search_multi(spec, items, *oracle, ledger, cfg.adaptive).positions;
    }

    if (actual == expected) {
        std::cout << "ok " << positions_text(expected) << '\n';
        return 0;
    }
    std::cout << "mismatch\n";
    std::cout << "  expected " << positions_text(expected) << '\n';
    std::cout << "  actual   " << positions_text(actual) << '\n';
    if (sampled) {
        const std::size_t n = items.magnitude_bits();
        const double p = static_cast<double>(all_matches.size()) /
                         static_cast<double>(std::uint64_t{1} << n);
        std::cout << "  note: sampled oracle may miss; per-shot detection on the presence domain is c/2^n = "
                  << real_text(p) << " (c=" << all_matches.size() << ", n=" << n << ")\n";
    }
    return 1;
}

int cmd_oracle_stats(const RunConfig& cfg) {
    const evensearch::ItemList items = evensearch::load_items(cfg.items_path);
    const evensearch::SearchSpec spec = evensearch::load_spec(cfg.spec_path);
    evensearch::validate_for_item_width(spec, items.item_width());

    evensearch::RegisterPattern pattern = evensearch::RegisterPattern(2);
    try {
        pattern = evensearch::RegisterPattern::parse(cfg.pattern_text);
    } catch (const evensearch::FormatError& e) {
        std::cerr << "error: bad pattern: " << e.what() << '\n';
        return 2;
    }
    if (pattern.width() != items.magnitude_bits() + 1) {
        std::cerr << "error: pattern width " << pattern.width() << " does not match the list's register width "
                  << items.magnitude_bits() + 1 << '\n';
        return 2;
    }

    const evensearch::IndexedFunction f = evensearch::as_indexed_function(spec, items);
    const std::uint64_t domain_size = pattern.domain_size();
    const std::uint64_t violations = evensearch::violating_points(f, pattern).size();
    const double p = static_cast<double>(violations) / static_cast<double>(domain_size);
    const double miss = std::pow(1.0 - p, static_cast<double>(cfg.shots));
    std::cout << "D=" << domain_size << " t=" << violations << " p=" << real_text(p)
              << " miss=" << real_text(miss) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Unstructured search over a bit-string list, driven by an evenness-detection oracle"};
    app.require_subcommand(1);

    CLI::App* gen = app.add_subcommand("gen", "Generate a planted instance (items file + spec file)");
    gen->add_option("--seed", cfg.seed, "Generator seed")->required();
    gen->add_option("-n,--n", cfg.magnitude_bits, "Magnitude bits; the list holds 2^n items")
        ->required()
        ->check(CLI::Range(1, 24));
    gen->add_option("-m,--m", cfg.item_width, "Item width in bits")->required()->check(CLI::PositiveNumber);
    gen->add_option("--plant", cfg.plant, "Positions that must match (repeatable, comma-separable)")
        ->delimiter(',');
    gen->add_option("--items", cfg.items_path, "Output items file")->required();
    gen->add_option("--spec", cfg.spec_path, "Output spec file")->required();

    const auto add_run_options = [&cfg](CLI::App* cmd) {
        cmd->add_option("--items", cfg.items_path, "Items file")->required();
        cmd->add_option("--spec", cfg.spec_path, "Spec file")->required();
        cmd->add_option("--algo", cfg.algo, "Search algorithm")
            ->check(CLI::IsMember({"single", "multi"}))
            ->capture_default_str();
        cmd->add_option("--oracle", cfg.oracle, "Oracle implementation")
            ->check(CLI::IsMember({"exhaustive", "sampled"}))
            ->capture_default_str();
        cmd->add_option("--shots", cfg.shots, "Shots per sampled-oracle call")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--seed", cfg.seed, "Sampling seed (drawn from entropy when absent)");
        cmd->add_flag("--adaptive", cfg.adaptive,
                      "Skip the second probe of a bit when the first half is even");
    };

    CLI::App* search = app.add_subcommand("search", "Run a search and print the found positions");
    add_run_options(search);
    search->add_option("--trace", cfg.trace_path, "Write a JSON trace of the run");

    CLI::App* verify = app.add_subcommand("verify", "Compare a search run against the linear scan");
    add_run_options(verify);

    CLI::App* stats = app.add_subcommand("oracle-stats", "Violation statistics for one register pattern");
    stats->add_option("--items", cfg.items_path, "Items file")->required();
    stats->add_option("--spec", cfg.spec_path, "Spec file")->required();
    stats->add_option("--pattern", cfg.pattern_text, "Register pattern text, sign cell first (+,-,0)")
        ->required();
    stats->add_option("--shots", cfg.shots, "Shots for the miss probability")
        ->check(CLI::PositiveNumber)
        ->default_val(std::uint64_t{1});

    try {
        app.parse(argc, argv);
        if (search->parsed()) cfg.seed_given = search->count("--seed") > 0;
        if (verify->parsed()) cfg.seed_given = verify->count("--seed") > 0;
        if (gen->parsed()) {
            cfg.subcommand = "gen";
            return cmd_gen(cfg);
        }
        if (search->parsed()) {
            cfg.subcommand = "search";
            return cmd_search(cfg);
        }
        if (verify->parsed()) {
            cfg.subcommand = "verify";
            return cmd_verify(cfg);
        }
        cfg.subcommand = "oracle-stats";
        return cmd_oracle_stats(cfg);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const evensearch::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const evensearch::GenerationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const evensearch::ContractError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
