#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evensearch/criteria.hpp"
#include "evensearch/errors.hpp"
#include "evensearch/indexed_function.hpp"
#include "evensearch/oracle.hpp"
#include "evensearch/register_pattern.hpp"
#include "evensearch/signed_index.hpp"

namespace evensearch {

enum class EventKind { PresenceCheck, Probe, Decide, Recurse, Emit };

inline std::string event_kind_name(EventKind kind) {
    switch (kind) {
        case EventKind::PresenceCheck: return "presence_check";
        case EventKind::Probe: return "probe";
        case EventKind::Decide: return "decide";
        case EventKind::Recurse: return "recurse";
        case EventKind::Emit: return "emit";
    }
    return "unknown";
}

/// One step of a search run. bit_position is the cell index j being worked
/// on (0 is the sign cell); depth is the resolved-bit entry position k of
/// the enclosing recursion instance.
struct TraceEvent {
    EventKind kind;
    RegisterPattern pattern;
    std::size_t bit_position;
    std::optional<Syndrome> syndrome;
    std::size_t depth;
};

struct SearchTrace {
    std::string algo;
    std::size_t magnitude_bits = 0;
    std::optional<std::uint64_t> seed;
    std::vector<TraceEvent> events;
    std::vector<std::uint64_t> result;
    LedgerSnapshot ledger;
};

struct SingleSearchOutcome {
    std::optional<std::uint64_t> position;
    SearchTrace trace;
};

struct MultiSearchOutcome {
    std::vector<std::uint64_t> positions;
    SearchTrace trace;
};

/// Brute-force reference: all loaded positions whose item matches, ascending.
inline std::vector<std::uint64_t> linear_scan(const SearchSpec& spec, const ItemList& items) {
    std::vector<std::uint64_t> positions;
    for (std::size_t p = 0; p < items.size(); ++p) {
        if (spec.matches(items.item(p))) positions.push_back(p);
    }
    return positions;
}

/// The presence pattern: sign cell Plus, all magnitude cells Free. Its
/// domain is every non-negative index, so the function is even on it iff
/// nothing matches.
inline RegisterPattern presence_pattern(std::size_t magnitude_bits) {
    return RegisterPattern(magnitude_bits + 1, Cell::Free).with_cell(0, Cell::Plus);
}

/// One oracle call on the presence pattern; true iff Uneven.
inline bool presence(const IndexedFunction& f, EvennessOracle& oracle, QueryLedger& ledger) {
    const RegisterPattern pattern = presence_pattern(f.input_width() - 1);
    return oracle.detect(f, pattern, ledger).is_uneven();
}

namespace detail {

/// Leaf handling shared by both algorithms: read out a fully determined
/// pattern, verify the match predicate at the resolved position, and emit.
/// A failed verification under an exact oracle means the oracle broke its
/// contract; under a sampled oracle the position is silently dropped so
/// that only omissions are possible.
inline std::optional<std::uint64_t> verified_readout(const SearchSpec& spec, const ItemList& items,
                                                     const RegisterPattern& pattern, EvennessOracle& oracle,
                                                     std::size_t depth, SearchTrace& trace) {
    const SignedIndex index = pattern.readout();
    const std::uint64_t position = index.magnitude_position();
    if (!f1(spec, items, position)) {
        if (oracle.exact()) {
            throw ContractError("exact oracle steered the search to non-matching position " +
                                std::to_string(position));
        }
        return std::nullopt;
    }
    trace.events.push_back(
        TraceEvent{EventKind::Emit, pattern, items.magnitude_bits(), std::nullopt, depth});
    return position;
}

} // namespace detail

/// Bisection search for one matching position. One presence call, then one
/// probe per magnitude bit: Uneven on the Plus probe keeps Plus, otherwise
/// the cell is fixed Minus. Exactly n+1 oracle calls when something is
/// present, 1 otherwise. With several matches the leftmost wins.
inline SingleSearchOutcome search_single(const SearchSpec& spec, const ItemList& items,
                                         EvennessOracle& oracle, QueryLedger& ledger) {
    const std::size_t n = items.magnitude_bits();
    const IndexedFunction f = as_indexed_function(spec, items);
    SearchTrace trace;
    trace.algo = "single";
    trace.magnitude_bits = n;
    const LedgerSnapshot before = ledger.snapshot();

    RegisterPattern pattern = presence_pattern(n);
    const Syndrome present = oracle.detect(f, pattern, ledger);
    trace.events.push_back(TraceEvent{EventKind::PresenceCheck, pattern, 0, present, 1});
    std::optional<std::uint64_t> position;
    if (present.is_uneven()) {
        for (std::size_t j = 1; j <= n; ++j) {
            const RegisterPattern probe = pattern.with_cell(j, Cell::Plus);
            const Syndrome verdict = oracle.detect(f, probe, ledger);
            trace.events.push_back(TraceEvent{EventKind::Probe, probe, j, verdict, 1});
            pattern = verdict.is_uneven() ? probe : pattern.with_cell(j, Cell::Minus);
            trace.events.push_back(TraceEvent{EventKind::Decide, pattern, j, std::nullopt, 1});
        }
        position = detail::verified_readout(spec, items, pattern, oracle, 1, trace);
    }

    if (position) trace.result.push_back(*position);
    trace.ledger = ledger.snapshot() - before;
    return SingleSearchOutcome{position, std::move(trace)};
}

namespace detail {

/// Recursive bisection over the free suffix starting at cell k. Both
/// halves of each bit are probed; the case table either fixes the cell,
/// recurses into both halves, or (both Even) stops: a contract violation
/// for an exact oracle, a pruned false negative for a sampled one. With
/// `adaptive`, an Even first probe fixes Minus without the second call
/// (the enclosing domain is known uneven, so the match must sit right).
inline void search_multi_descend(const SearchSpec& spec, const ItemList& items, const IndexedFunction& f,
                                 EvennessOracle& oracle, QueryLedger& ledger, RegisterPattern pattern,
                                 std::size_t k, bool adaptive, SearchTrace& trace,
                                 std::vector<std::uint64_t>& positions) {
    const std::size_t n = items.magnitude_bits();
    for (std::size_t j = k; j <= n; ++j) {
        const RegisterPattern left = pattern.with_cell(j, Cell::Plus);
        const RegisterPattern right = pattern.with_cell(j, Cell::Minus);
        const Syndrome y1 = oracle.detect(f, left, ledger);
        trace.events.push_back(TraceEvent{EventKind::Probe, left, j, y1, k});
        if (adaptive && y1.is_even()) {
            pattern = right;
            trace.events.push_back(TraceEvent{EventKind::Decide, pattern, j, std::nullopt, k});
            continue;
        }
        const Syndrome y2 = oracle.detect(f, right, ledger);
        trace.events.push_back(TraceEvent{EventKind::Probe, right, j, y2, k});
        if (y1.is_uneven() && y2.is_even()) {
            pattern = left;
        } else if (y1.is_even() && y2.is_uneven()) {
            pattern = right;
        } else if (y1.is_uneven() && y2.is_uneven()) {
            trace.events.push_back(TraceEvent{EventKind::Recurse, left, j, std::nullopt, j + 1});
            search_multi_descend(spec, items, f, oracle, ledger, left, j + 1, adaptive, trace, positions);
            trace.events.push_back(TraceEvent{EventKind::Recurse, right, j, std::nullopt, j + 1});
            search_multi_descend(spec, items, f, oracle, ledger, right, j + 1, adaptive, trace, positions);
            return;
        } else {
            if (oracle.exact()) {
                throw ContractError("both halves reported even at bit " + std::to_string(j) +
                                    " inside a domain known to contain a match");
            }
            return;
        }
        trace.events.push_back(TraceEvent{EventKind::Decide, pattern, j, std::nullopt, k});
    }
    if (const auto position = verified_readout(spec, items, pattern, oracle, k, trace)) {
        positions.push_back(*position);
    }
}

} // namespace detail

/// Recursive bisection for every matching position. One presence call,
/// then two probes per resolved bit; both halves uneven forks the search.
/// Under an exact oracle the result equals linear_scan exactly.
inline MultiSearchOutcome search_multi(const SearchSpec& spec, const ItemList& items, EvennessOracle& oracle,
                                       QueryLedger& ledger, bool adaptive = false) {
    const std::size_t n = items.magnitude_bits();
    const IndexedFunction f = as_indexed_function(spec, items);
    SearchTrace trace;
    trace.algo = "multi";
    trace.magnitude_bits = n;
    const LedgerSnapshot before = ledger.snapshot();

    const RegisterPattern pattern = presence_pattern(n);
    const Syndrome present = oracle.detect(f, pattern, ledger);
    trace.events.push_back(TraceEvent{EventKind::PresenceCheck, pattern, 0, present, 1});
    std::vector<std::uint64_t> positions;
    if (present.is_uneven()) {
        detail::search_multi_descend(spec, items, f, oracle, ledger, pattern, 1, adaptive, trace, positions);
        std::sort(positions.begin(), positions.end());
        positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    }

    trace.result = positions;
    trace.ledger = ledger.snapshot() - before;
    return MultiSearchOutcome{std::move(positions), std::move(trace)};
}

/// Instance shape as seen by the multi search: match count, the shared
/// magnitude-MSB prefix length for exactly two matches, and the oracle
/// calls one run consumes.
struct SearchStats {
    std::uint64_t match_count = 0;
    std::optional<std::size_t> shared_prefix_length;
    std::uint64_t oracle_calls = 0;
};

/// Leading equal bits of two n-bit magnitudes.
inline std::size_t shared_magnitude_prefix(std::uint64_t first, std::uint64_t second,
                                           std::size_t magnitude_bits) {
    std::size_t length = 0;
    for (std::size_t j = 0; j < magnitude_bits; ++j) {
        const std::size_t shift = magnitude_bits - 1 - j;
        if (((first >> shift) & 1) != ((second >> shift) & 1)) break;
        ++length;
    }
    return length;
}

inline SearchStats collect_stats(const SearchSpec& spec, const ItemList& items, EvennessOracle& oracle) {
    QueryLedger ledger;
    const MultiSearchOutcome outcome = search_multi(spec, items, oracle, ledger);
    SearchStats stats;
    stats.match_count = outcome.positions.size();
    stats.oracle_calls = ledger.oracle_calls();
    if (outcome.positions.size() == 2) {
        stats.shared_prefix_length =
            shared_magnitude_prefix(outcome.positions[0], outcome.positions[1], items.magnitude_bits());
    }
    return stats;
}

} // namespace evensearch
