// End-to-end tour on a four-item list: build the instance, run both search
// algorithms with the exhaustive oracle, rerun with the sampled oracle, and
// show the oracle-call trace that drives the bisection.

#include <iostream>

#include <evensearch/evensearch.hpp>

using namespace evensearch;

namespace {

void print_trace(const SearchTrace& trace) {
    for (const TraceEvent& event : trace.events) {
        std::cout << "  " << event_kind_name(event.kind) << " pattern=" << event.pattern.to_string()
                  << " j=" << event.bit_position << " depth=" << event.depth;
        if (event.syndrome) {
            std::cout << " -> " << verdict_name(event.syndrome->verdict());
            if (event.syndrome->witness()) std::cout << " witness=" << event.syndrome->witness()->to_string();
        }
        std::cout << '\n';
    }
    std::cout << "  ledger: oracle_calls=" << trace.ledger.oracle_calls
              << " point_evaluations=" << trace.ledger.point_evaluations << " shots=" << trace.ledger.shots
              << '\n';
}

} // namespace

int main() {
    // Four 3-bit items; the query asks for the item equal to 110, stored at
    // position 2. The padded domain has n = 2 magnitude bits.
    const ItemList items(3, {BitString::parse("101"), BitString::parse("010"), BitString::parse("110"),
                             BitString::parse("011")});
    const SearchSpec spec(IdentityF2{}, BitString::parse("110"));

    std::cout << "linear scan: " << linear_scan(spec, items).size() << " match(es)\n\n";

    ExhaustiveOracle exhaustive;
    {
        QueryLedger ledger;
        const SingleSearchOutcome outcome = search_single(spec, items, exhaustive, ledger);
        std::cout << "single search, exhaustive oracle -> position "
                  << (outcome.position ? std::to_string(*outcome.position) : "none") << '\n';
        print_trace(outcome.trace);
    }

    std::cout << '\n';
    {
        QueryLedger ledger;
        const MultiSearchOutcome outcome = search_multi(spec, items, exhaustive, ledger);
        std::cout << "multi search, exhaustive oracle -> " << outcome.positions.size() << " position(s)\n";
        print_trace(outcome.trace);
    }

    std::cout << '\n';
    {
        const auto oracle = amplified_oracle(64, 2026);
        QueryLedger ledger;
        const MultiSearchOutcome outcome = search_multi(spec, items, *oracle, ledger);
        std::cout << "multi search, sampled oracle (64 shots) -> " << outcome.positions.size()
                  << " position(s)\n";
        print_trace(outcome.trace);
    }

    // The per-shot detection probability the sampled oracle works against.
    const IndexedFunction f = as_indexed_function(spec, items);
    std::cout << "\nviolation probability on the presence pattern: "
              << violation_probability(f, presence_pattern(items.magnitude_bits())) << '\n';
    return 0;
}
