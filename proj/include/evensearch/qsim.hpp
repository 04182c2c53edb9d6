#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "evensearch/errors.hpp"
#include "evensearch/indexed_function.hpp"
#include "evensearch/oracle.hpp"
#include "evensearch/register_pattern.hpp"
#include "evensearch/signed_index.hpp"

namespace evensearch {

/// Dense real state vector over all (n+1)-bit encodings. Amplitudes are
/// 1/sqrt(D) on exactly the members of a pattern's domain and 0 elsewhere;
/// no phases arise in this circuit.
class PreparedState {
public:
    PreparedState(std::size_t width, std::vector<double> amplitudes)
        : width_(width), amplitudes_(std::move(amplitudes)) {}

    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return amplitudes_.size(); }

    double amplitude(std::uint64_t encoding) const {
        if (encoding >= amplitudes_.size()) {
            throw RangeError("encoding " + std::to_string(encoding) + " outside state of size " +
                             std::to_string(amplitudes_.size()));
        }
        return amplitudes_[encoding];
    }

    double norm_squared() const noexcept {
        double total = 0.0;
        for (const double a : amplitudes_) total += a * a;
        return total;
    }

private:
    std::size_t width_;
    std::vector<double> amplitudes_;
};

/// Uniform superposition over domain(pattern). Materializes all 2^width
/// amplitudes, so the width is capped to keep memory bounded.
inline PreparedState prepare(const RegisterPattern& pattern) {
    if (pattern.width() > 24) {
        throw RangeError("state vector for width " + std::to_string(pattern.width()) +
                         " exceeds the dense-simulation cap of 24");
    }
    std::vector<double> amplitudes(std::size_t{1} << pattern.width(), 0.0);
    const std::uint64_t domain_size = pattern.domain_size();
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(domain_size));
    for (std::uint64_t rank = 0; rank < domain_size; ++rank) {
        amplitudes[pattern.domain_element(rank).encoding()] = amplitude;
    }
    return PreparedState(pattern.width(), std::move(amplitudes));
}

/// All x in domain(pattern) with f(x) != f(negate(x)), ascending.
inline std::vector<SignedIndex> violating_points(const IndexedFunction& f, const RegisterPattern& pattern) {
    if (f.input_width() != pattern.width()) {
        throw ContractError("function input width " + std::to_string(f.input_width()) +
                            " does not match pattern width " + std::to_string(pattern.width()));
    }
    std::vector<SignedIndex> violating;
    const std::uint64_t domain_size = pattern.domain_size();
    for (std::uint64_t rank = 0; rank < domain_size; ++rank) {
        const SignedIndex x = pattern.domain_element(rank);
        if (f(x) != f(negate(x))) violating.push_back(x);
    }
    return violating;
}

/// Per-shot probability of observing a non-zero output register when it
/// coherently records f(x) XOR f(negate(x)) over the prepared superposition:
/// exactly t/D with t the violation count.
inline double violation_probability(const IndexedFunction& f, const RegisterPattern& pattern) {
    const std::uint64_t t = violating_points(f, pattern).size();
    return static_cast<double>(t) / static_cast<double>(pattern.domain_size());
}

/// Shot-sampled detection with one-sided error: `shots` independent
/// Bernoulli draws at the violation probability. Any success yields Uneven
/// with a witness drawn uniformly from the violating set; an even domain
/// yields Even for every seed and shot count. The violation structure is
/// computed once per call at two evaluations per domain point.
inline Syndrome sample_even_or_not(const IndexedFunction& f, const RegisterPattern& pattern,
                                   std::uint64_t shots, std::uint64_t seed, QueryLedger& ledger) {
    if (shots == 0) throw ContractError("sampling requires at least one shot");
    const std::vector<SignedIndex> violating = violating_points(f, pattern);
    const std::uint64_t domain_size = pattern.domain_size();
    ledger.record_call();
    ledger.record_point_evaluations(2 * domain_size);
    ledger.record_shots(shots);

    const double probability =
        static_cast<double>(violating.size()) / static_cast<double>(domain_size);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    bool detected = false;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        if (unit(rng) < probability) detected = true;
    }
    if (!detected) return Syndrome::even();
    std::uniform_int_distribution<std::size_t> pick(0, violating.size() - 1);
    return Syndrome::uneven(violating[pick(rng)]);
}

/// EvennessOracle over sample_even_or_not. Each detect call draws its
/// sub-seed from a generator owned by the instance, so equal construction
/// arguments reproduce the full syndrome sequence.
class SampledOracle final : public EvennessOracle {
public:
    SampledOracle(std::uint64_t shots, std::uint64_t seed) : shots_(shots), rng_(seed) {
        if (shots == 0) throw ContractError("sampling requires at least one shot");
    }

    Syndrome detect(const IndexedFunction& f, const RegisterPattern& pattern, QueryLedger& ledger) override {
        return sample_even_or_not(f, pattern, shots_, rng_(), ledger);
    }
    std::string name() const override { return "sampled"; }
    bool exact() const override { return false; }

    std::uint64_t shots_per_call() const noexcept { return shots_; }

private:
    std::uint64_t shots_;
    std::mt19937_64 rng_;
};

inline std::unique_ptr<EvennessOracle> amplified_oracle(std::uint64_t shots, std::uint64_t seed) {
    return std::make_unique<SampledOracle>(shots, seed);
}

} // namespace evensearch
