#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>

#include "evensearch/bitstring.hpp"
#include "evensearch/errors.hpp"
#include "evensearch/signed_index.hpp"

namespace evensearch {

/// Black-box function from signed indices of a declared input width to bit
/// strings of a declared output width. Evaluators must be deterministic:
/// equal inputs give equal outputs.
class IndexedFunction {
public:
    using Evaluator = std::function<BitString(const SignedIndex&)>;

    IndexedFunction(std::size_t input_width, std::size_t output_width, Evaluator evaluator)
        : input_width_(input_width), output_width_(output_width), evaluator_(std::move(evaluator)) {
        if (input_width_ < 2) throw FormatError("indexed function input width must cover sign + magnitude");
        if (output_width_ == 0) throw FormatError("indexed function output width must be positive");
        if (!evaluator_) throw FormatError("indexed function needs an evaluator");
    }

    std::size_t input_width() const noexcept { return input_width_; }
    std::size_t output_width() const noexcept { return output_width_; }

    BitString operator()(const SignedIndex& x) const {
        if (x.width() != input_width_) {
            throw FormatError("indexed function expects width " + std::to_string(input_width_) +
                              ", got " + std::to_string(x.width()));
        }
        BitString out = evaluator_(x);
        if (out.width() != output_width_) {
            throw ContractError("evaluator produced width " + std::to_string(out.width()) +
                                ", declared " + std::to_string(output_width_));
        }
        return out;
    }

private:
    std::size_t input_width_;  // n+1
    std::size_t output_width_; // m1
    Evaluator evaluator_;
};

} // namespace evensearch
