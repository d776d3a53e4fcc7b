#pragma once

// Shared test helpers: deterministic random generators for formulas, states
// and probability spaces, plus an independent brute-force evaluator used as
// the oracle side of the polynomial/compilation checks. The oracle reproduces
// the connective semantics on its own so it shares no code path with
// Formula::evaluate or truth_table.

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "eigenlogic/eigenlogic.hpp"

namespace testsupport {

using eigenlogic::Connective;
using eigenlogic::Formula;

// Independent reimplementation of the classical semantics.
inline bool oracle_eval(const Formula& f, const std::map<std::string, bool>& env) {
    switch (f.kind()) {
        case Connective::Var: return env.at(f.variable_name());
        case Connective::ConstTrue: return true;
        case Connective::ConstFalse: return false;
        case Connective::Not: return !oracle_eval(f.left(), env);
        default: break;
    }
    const bool l = oracle_eval(f.left(), env);
    const bool r = oracle_eval(f.right(), env);
    switch (f.kind()) {
        case Connective::And: return l && r;
        case Connective::Or: return l || r;
        case Connective::Implies: return !(l && !r);
        case Connective::ConverseImplies: return !(r && !l);
        case Connective::Iff: return l == r;
        case Connective::Xor: return l != r;
        default: return false;
    }
}

// Assignment of `order` encoded by truth-table row r (first variable most
// significant).
inline std::map<std::string, bool> row_assignment(const eigenlogic::VariableOrder& order,
                                                  std::size_t row) {
    std::map<std::string, bool> env;
    for (std::size_t j = 0; j < order.size(); ++j) env[order.name(j)] = order.bit(row, j);
    return env;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::size_t index(std::size_t bound) {  // [0, bound)
        return std::uniform_int_distribution<std::size_t>(0, bound - 1)(engine_);
    }
    double real(double lo = 0.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }
    double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

// Random formula over the first `variable_count` names of A..E with the
// given maximum depth. Leans toward leaves near the depth limit.
inline Formula random_formula(Rng& rng, std::size_t variable_count, std::size_t max_depth) {
    static const std::vector<std::string> names = {"A", "B", "C", "D", "E"};
    if (max_depth == 0 || rng.index(5) == 0) {
        const std::size_t pick = rng.index(variable_count + 2);
        if (pick < variable_count) return Formula::variable(names[pick]);
        return Formula::constant(pick == variable_count);
    }
    switch (rng.index(7)) {
        case 0: return Formula::negation(random_formula(rng, variable_count, max_depth - 1));
        case 1:
            return Formula::conjunction(random_formula(rng, variable_count, max_depth - 1),
                                        random_formula(rng, variable_count, max_depth - 1));
        case 2:
            return Formula::disjunction(random_formula(rng, variable_count, max_depth - 1),
                                        random_formula(rng, variable_count, max_depth - 1));
        case 3:
            return Formula::implication(random_formula(rng, variable_count, max_depth - 1),
                                        random_formula(rng, variable_count, max_depth - 1));
        case 4:
            return Formula::converse_implication(random_formula(rng, variable_count, max_depth - 1),
                                                 random_formula(rng, variable_count, max_depth - 1));
        case 5:
            return Formula::equivalence(random_formula(rng, variable_count, max_depth - 1),
                                        random_formula(rng, variable_count, max_depth - 1));
        default:
            return Formula::exclusive_or(random_formula(rng, variable_count, max_depth - 1),
                                         random_formula(rng, variable_count, max_depth - 1));
    }
}

// Haar-ish random unit state: gaussian amplitudes, normalized.
inline eigenlogic::StateVector random_state(Rng& rng, std::size_t qubit_count) {
    std::vector<std::complex<double>> amplitudes(std::size_t{1} << qubit_count);
    for (auto& a : amplitudes) a = {rng.gaussian(), rng.gaussian()};
    return eigenlogic::StateVector::from_amplitudes(std::move(amplitudes), true);
}

// Random probability space over the first `variable_count` names.
inline eigenlogic::ProbabilitySpace random_space(Rng& rng, std::size_t variable_count) {
    static const std::vector<std::string> names = {"A", "B", "C", "D", "E"};
    std::vector<std::string> order(names.begin(), names.begin() + variable_count);
    std::vector<double> weights(std::size_t{1} << variable_count);
    double total = 0.0;
    for (auto& w : weights) {
        w = rng.real(0.0, 1.0);
        total += w;
    }
    for (auto& w : weights) w /= total;
    return eigenlogic::ProbabilitySpace(eigenlogic::VariableOrder(std::move(order)),
                                        std::move(weights));
}

}  // namespace testsupport
