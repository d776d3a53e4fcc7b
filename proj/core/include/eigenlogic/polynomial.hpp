#pragma once

// Multilinear arithmetic form of a propositional formula, obtained by
// interpolation from its truth table: f = sum over variable subsets S of
// c_S * prod_{i in S} x_i. On 0/1 inputs the value equals the truth value;
// on probabilities in [0,1] it extends to the product-measure expectation.

#include <cstdint>
#include <map>
#include <string>

#include "eigenlogic/formula.hpp"

namespace eigenlogic {

class MultilinearPolynomial {
public:
    // Keys are variable-index bitmasks (bit i set = variable at position i of
    // `order` occurs in the monomial). Zero coefficients are dropped.
    MultilinearPolynomial(VariableOrder order, std::map<std::uint32_t, std::int64_t> coefficients);

    const VariableOrder& order() const noexcept { return order_; }
    const std::map<std::uint32_t, std::int64_t>& coefficients() const noexcept {
        return coefficients_;
    }

    std::int64_t coefficient(std::uint32_t monomial_mask) const noexcept;

    // Real-valued evaluation; every variable of the order must be assigned.
    // Throws UnknownVariable when one is missing.
    double evaluate(const std::map<std::string, double>& assignment) const;

    // Exact integer evaluation at a 0/1 assignment given as a bitmask
    // (bit i = value of variable at position i).
    std::int64_t evaluate_bits(std::uint32_t assignment_mask) const noexcept;

    // e.g. "1 - A + A*B"; terms ordered by degree then position.
    std::string to_string() const;

    bool operator==(const MultilinearPolynomial& other) const noexcept {
        return order_ == other.order_ && coefficients_ == other.coefficients_;
    }

private:
    VariableOrder order_;
    std::map<std::uint32_t, std::int64_t> coefficients_;
};

// Boole interpolation of the truth table of f over `order`: the unique
// multilinear polynomial with integer coefficients agreeing with f on all
// 2^n 0/1 assignments.
MultilinearPolynomial boole_polynomial(const Formula& f, const VariableOrder& order);

}  // namespace eigenlogic
