#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minpoly {

enum class Errc {
    division_by_zero,
    field_mismatch,
    invalid_modulus,
    zero_polynomial,
    index_out_of_range,
    parity_violation,
    invariant_violation,
    empty_sequence,
    budget_exceeded,
    infinite_field,
    not_monic,
    degree_underflow,
    invalid_argument,
    parse_error,
    empty_input,
};

inline const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::invalid_modulus: return "InvalidModulus";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::parity_violation: return "ParityViolation";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::empty_sequence: return "EmptySequence";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::infinite_field: return "InfiniteField";
    case Errc::not_monic: return "NotMonic";
    case Errc::degree_underflow: return "DegreeUnderflow";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::empty_input: return "EmptyInput";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

    /// Broken algorithm invariants, as opposed to bad input.
    bool is_internal() const noexcept {
        return code_ == Errc::parity_violation || code_ == Errc::invariant_violation;
    }

private:
    Errc code_;
};

/// Input text could not be parsed; `position` is the 1-based token index.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(Errc::parse_error, "token " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace minpoly
