#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace eigenlogic {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Formula text could not be parsed. Carries the byte offset of the offending
// token and the set of tokens that would have been accepted there.
class ParseError : public Error {
public:
    ParseError(std::size_t byte_offset, std::string detail,
               std::vector<std::string> expected = {});

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

// Operands (projectors, states, matrices) do not share a dimension.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// A formula mentions a variable absent from the supplied order or space.
class UnknownVariable : public Error {
public:
    using Error::Error;
};

// A vector or weight list that must have unit norm / unit sum does not.
class NormalizationError : public Error {
public:
    using Error::Error;
};

// Conditioning event has (numerically) zero probability.
class ZeroPrior : public Error {
public:
    using Error::Error;
};

// Interpolation denominator is (numerically) zero, e.g. alpha = 0 with P(A) = 0.
class ZeroDenominator : public Error {
public:
    using Error::Error;
};

// Catch-all for domain violations: bad angles, out-of-range indices,
// unknown state names, size caps.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace eigenlogic
