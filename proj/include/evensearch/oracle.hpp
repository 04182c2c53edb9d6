#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "evensearch/errors.hpp"
#include "evensearch/indexed_function.hpp"
#include "evensearch/register_pattern.hpp"
#include "evensearch/signed_index.hpp"

namespace evensearch {

enum class Verdict { Even, Uneven };

inline std::string verdict_name(Verdict v) { return v == Verdict::Even ? "even" : "uneven"; }

/// Oracle output, abstracting the multi-bit output register into its
/// zero/non-zero distinction. Even carries no witness; a present witness x
/// satisfies f(x) != f(negate(x)).
class Syndrome {
public:
    static Syndrome even() { return Syndrome(Verdict::Even, std::nullopt); }
    static Syndrome uneven() { return Syndrome(Verdict::Uneven, std::nullopt); }
    static Syndrome uneven(SignedIndex witness) { return Syndrome(Verdict::Uneven, std::move(witness)); }

    Verdict verdict() const noexcept { return verdict_; }
    bool is_even() const noexcept { return verdict_ == Verdict::Even; }
    bool is_uneven() const noexcept { return verdict_ == Verdict::Uneven; }
    const std::optional<SignedIndex>& witness() const noexcept { return witness_; }

    bool operator==(const Syndrome&) const = default;

private:
    Syndrome(Verdict verdict, std::optional<SignedIndex> witness)
        : verdict_(verdict), witness_(std::move(witness)) {}

    Verdict verdict_;
    std::optional<SignedIndex> witness_;
};

/// Point-in-time copy of the ledger counters.
struct LedgerSnapshot {
    std::uint64_t oracle_calls = 0;
    std::uint64_t point_evaluations = 0;
    std::uint64_t shots = 0;

    bool operator==(const LedgerSnapshot&) const = default;

    LedgerSnapshot operator-(const LedgerSnapshot& earlier) const {
        return LedgerSnapshot{oracle_calls - earlier.oracle_calls,
                              point_evaluations - earlier.point_evaluations, shots - earlier.shots};
    }
};

/// Monotone query accounting shared by all oracles. Updates are atomic so
/// concurrent oracle calls never lose counts.
class QueryLedger {
public:
    QueryLedger() = default;
    QueryLedger(const QueryLedger&) = delete;
    QueryLedger& operator=(const QueryLedger&) = delete;

    void record_call() noexcept { oracle_calls_.fetch_add(1, std::memory_order_relaxed); }
    void record_point_evaluations(std::uint64_t count) noexcept {
        point_evaluations_.fetch_add(count, std::memory_order_relaxed);
    }
    void record_shots(std::uint64_t count) noexcept { shots_.fetch_add(count, std::memory_order_relaxed); }

    std::uint64_t oracle_calls() const noexcept { return oracle_calls_.load(std::memory_order_relaxed); }
    std::uint64_t point_evaluations() const noexcept {
        return point_evaluations_.load(std::memory_order_relaxed);
    }
    std::uint64_t shots() const noexcept { return shots_.load(std::memory_order_relaxed); }

    LedgerSnapshot snapshot() const noexcept {
        return LedgerSnapshot{oracle_calls(), point_evaluations(), shots()};
    }

private:
    std::atomic<std::uint64_t> oracle_calls_{0};
    std::atomic<std::uint64_t> point_evaluations_{0};
    std::atomic<std::uint64_t> shots_{0};
};

/// Evenness detection contract. One-sided soundness: if f is even on
/// domain(pattern), the result MUST be Even. Exact oracles additionally
/// guarantee completeness: any violation yields Uneven. Sampled oracles may
/// miss violations but never invent one.
class EvennessOracle {
public:
    virtual ~EvennessOracle() = default;
    virtual Syndrome detect(const IndexedFunction& f, const RegisterPattern& pattern, QueryLedger& ledger) = 0;
    virtual std::string name() const = 0;
    virtual bool exact() const = 0;
};

/// Classical reference detection: scan domain(pattern) in ascending
/// encoding order and compare f(x) with f(negate(x)). Returns Uneven with
/// the smallest violating index, or Even after a full scan. Every scanned
/// point costs two evaluations; the scan stops at the first violation and
/// the ledger records exactly what was evaluated.
inline Syndrome even_or_not_exhaustive(const IndexedFunction& f, const RegisterPattern& pattern,
                                       QueryLedger& ledger) {
    if (f.input_width() != pattern.width()) {
        throw ContractError("function input width " + std::to_string(f.input_width()) +
                            " does not match pattern width " + std::to_string(pattern.width()));
    }
    ledger.record_call();
    const std::uint64_t domain_size = pattern.domain_size();
    std::uint64_t scanned = 0;
    std::optional<SignedIndex> witness;
    for (std::uint64_t rank = 0; rank < domain_size; ++rank) {
        const SignedIndex x = pattern.domain_element(rank);
        ++scanned;
        if (f(x) != f(negate(x))) {
            witness = x;
            break;
        }
    }
    ledger.record_point_evaluations(2 * scanned);
    if (witness) return Syndrome::uneven(*std::move(witness));
    return Syndrome::even();
}

class ExhaustiveOracle final : public EvennessOracle {
public:
    Syndrome detect(const IndexedFunction& f, const RegisterPattern& pattern, QueryLedger& ledger) override {
        return even_or_not_exhaustive(f, pattern, ledger);
    }
    std::string name() const override { return "exhaustive"; }
    bool exact() const override { return true; }
};

} // namespace evensearch
