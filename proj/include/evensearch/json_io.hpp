#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "evensearch/criteria.hpp"
#include "evensearch/errors.hpp"
#include "evensearch/oracle.hpp"
#include "evensearch/search.hpp"

namespace evensearch {

// ---------------------------------------------------------------------------
// Spec files: {"f2": name, "params": {...}, "z": "bits"}
// ---------------------------------------------------------------------------

inline nlohmann::json spec_to_json(const SearchSpec& spec) {
    struct Visitor {
        nlohmann::json operator()(const IdentityF2&) const { return nlohmann::json::object(); }
        nlohmann::json operator()(const TruncateF2& t) const { return {{"output_width", t.output_width}}; }
        nlohmann::json operator()(const ParityF2&) const { return nlohmann::json::object(); }
        nlohmann::json operator()(const XorFoldF2& x) const { return {{"output_width", x.output_width}}; }
        nlohmann::json operator()(const AffineModF2& a) const {
            return {{"multiplier", a.multiplier}, {"addend", a.addend}, {"output_width", a.output_width}};
        }
    };
    return nlohmann::json{{"f2", f2_name(spec.selector())},
                          {"params", std::visit(Visitor{}, spec.selector())},
                          {"z", spec.target().to_string()}};
}

inline SearchSpec spec_from_json(const nlohmann::json& doc) {
    try {
        const std::string name = doc.at("f2").get<std::string>();
        const nlohmann::json params = doc.value("params", nlohmann::json::object());
        const BitString target = BitString::parse(doc.at("z").get<std::string>());
        F2Selector f2;
        if (name == "identity") {
            f2 = IdentityF2{};
        } else if (name == "truncate") {
            f2 = TruncateF2{params.at("output_width").get<std::size_t>()};
        } else if (name == "parity") {
            f2 = ParityF2{};
        } else if (name == "xor_fold") {
            f2 = XorFoldF2{params.at("output_width").get<std::size_t>()};
        } else if (name == "affine_mod") {
            f2 = AffineModF2{params.at("multiplier").get<std::uint64_t>(),
                             params.at("addend").get<std::uint64_t>(),
                             params.at("output_width").get<std::size_t>()};
        } else {
            throw FormatError("unknown f2 name \"" + name + "\"");
        }
        return SearchSpec(std::move(f2), std::move(target));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed spec document: ") + e.what());
    }
}

inline SearchSpec load_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open spec file: " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("spec file " + path.string() + " is not valid JSON: " + e.what());
    }
    return spec_from_json(doc);
}

inline void save_spec(const std::filesystem::path& path, const SearchSpec& spec) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write spec file: " + path.string());
    out << spec_to_json(spec).dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Syndromes and traces
// ---------------------------------------------------------------------------

inline nlohmann::json syndrome_to_json(const Syndrome& syndrome) {
    nlohmann::json doc{{"verdict", verdict_name(syndrome.verdict())}, {"witness", nullptr}};
    if (syndrome.witness()) doc["witness"] = syndrome.witness()->to_string();
    return doc;
}

inline nlohmann::json trace_to_json(const SearchTrace& trace) {
    nlohmann::json events = nlohmann::json::array();
    for (const TraceEvent& event : trace.events) {
        nlohmann::json entry{{"kind", event_kind_name(event.kind)},
                             {"pattern", event.pattern.to_string()},
                             {"j", event.bit_position},
                             {"verdict", nullptr},
                             {"witness", nullptr},
                             {"depth", event.depth}};
        if (event.syndrome) {
            entry["verdict"] = verdict_name(event.syndrome->verdict());
            if (event.syndrome->witness()) entry["witness"] = event.syndrome->witness()->to_string();
        }
        events.push_back(std::move(entry));
    }
    nlohmann::json doc{{"algo", trace.algo},
                       {"n", trace.magnitude_bits},
                       {"seed", nullptr},
                       {"events", std::move(events)},
                       {"result", trace.result},
                       {"ledger",
                        {{"oracle_calls", trace.ledger.oracle_calls},
                         {"point_evaluations", trace.ledger.point_evaluations},
                         {"shots", trace.ledger.shots}}}};
    if (trace.seed) doc["seed"] = *trace.seed;
    return doc;
}

inline void save_trace(const std::filesystem::path& path, const SearchTrace& trace) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write trace file: " + path.string());
    out << trace_to_json(trace).dump(2) << '\n';
}

} // namespace evensearch
