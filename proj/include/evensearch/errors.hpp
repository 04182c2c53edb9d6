#pragma once

#include <stdexcept>
#include <string>

namespace evensearch {

/// A position, cell index, or magnitude lies outside the declared width.
class RangeError : public std::out_of_range {
public:
    explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

/// Malformed textual input, or a width mismatch between values that must agree.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Readout was requested on a register pattern that still has free cells.
class ReadoutError : public std::logic_error {
public:
    explicit ReadoutError(const std::string& what) : std::logic_error(what) {}
};

/// An oracle or evaluator broke its declared contract.
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// Instance generation could not satisfy the requested plant.
class GenerationError : public std::runtime_error {
public:
    explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace evensearch
