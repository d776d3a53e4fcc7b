#include "eigenlogic/bayes.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include "eigenlogic/errors.hpp"

namespace eigenlogic {

ProbabilitySpace::ProbabilitySpace(VariableOrder order, std::vector<double> weights)
    : order_(std::move(order)), weights_(std::move(weights)) {
    if (weights_.size() != order_.dimension())
        throw InvalidArgument("space needs " + std::to_string(order_.dimension()) +
                              " weights, got " + std::to_string(weights_.size()));
    double total = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0)) throw InvalidArgument("atom weights must be nonnegative");
        total += w;
    }
    if (std::abs(total - 1.0) > kProbabilityTol)
        throw NormalizationError("atom weights sum to " + std::to_string(total) + ", expected 1");
}

ProbabilitySpace ProbabilitySpace::uniform(VariableOrder order) {
    const std::size_t atoms = order.dimension();
    return ProbabilitySpace(std::move(order), std::vector<double>(atoms, 1.0 / double(atoms)));
}

double event_probability(const ProbabilitySpace& space, const Formula& f) {
    const TruthTable table = truth_table(f, space.order());
    double total = 0.0;
    for (std::size_t r = 0; r < table.rows(); ++r)
        if (table.column[r]) total += space.weights()[r];
    return total;
}

double conditional(const ProbabilitySpace& space, const Formula& given, const Formula& target) {
    const double p_given = event_probability(space, given);
    if (p_given <= kZeroProbabilityTol)
        throw ZeroPrior("conditioning event has zero probability");
    return event_probability(space, Formula::conjunction(given, target)) / p_given;
}

double implication_probability(const ProbabilitySpace& space, const Formula& a, const Formula& b) {
    return event_probability(space, Formula::implication(a, b));
}

AlphaParameter::AlphaParameter(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0))
        throw InvalidArgument("alpha must lie in [0, 1], got " + std::to_string(value));
}

double alpha_implication(double pA, double pAnd, const AlphaParameter& alpha) {
    if (pAnd > pA + kZeroProbabilityTol)
        throw InvalidArgument("P(A and B) cannot exceed P(A)");
    const double a = alpha.value();
    // closed-form endpoints, so the endpoint identities are exact
    if (a == 0.0) {
        if (pA <= kZeroProbabilityTol)
            throw ZeroDenominator("alpha = 0 with P(A) = 0: conditional undefined");
        return pAnd / pA;
    }
    if (a == 1.0) return 1.0 - pA + pAnd;
    const double shift = a * (1.0 - pA);
    const double denominator = pA + shift;
    if (denominator <= kZeroProbabilityTol)
        throw ZeroDenominator("interpolation denominator is zero");
    return (pAnd + shift) / denominator;
}

std::pair<double, double> linear_relation_residuals(const ProbabilityBundle& bundle) {
    return {bundle.pA + bundle.pImp - 1.0 - bundle.pAnd,
            bundle.pB + bundle.pConv - 1.0 - bundle.pAnd};
}

namespace {

// Truth columns of every event over the space's atoms, reused by the
// subset expansion.
std::vector<std::vector<std::uint8_t>> event_columns(const ProbabilitySpace& space,
                                                     std::span<const Formula> events) {
    std::vector<std::vector<std::uint8_t>> columns;
    columns.reserve(events.size());
    for (const Formula& f : events) columns.push_back(truth_table(f, space.order()).column);
    return columns;
}

double intersection_probability(const ProbabilitySpace& space,
                                const std::vector<std::vector<std::uint8_t>>& columns,
                                std::uint32_t subset) {
    double total = 0.0;
    for (std::size_t r = 0; r < space.atom_count(); ++r) {
        bool all = true;
        for (std::uint32_t m = subset; m != 0 && all; m &= m - 1) {
            const auto i = static_cast<std::size_t>(std::countr_zero(m));
            all = columns[i][r] != 0;
        }
        if (all) total += space.weights()[r];
    }
    return total;
}

void require_event_count(std::size_t count) {
    if (count == 0) throw InvalidArgument("need at least one event");
    if (count > kMaxUnionEvents)
        throw InvalidArgument("at most " + std::to_string(kMaxUnionEvents) + " events supported");
}

}  // namespace

double inclusion_exclusion(const ProbabilitySpace& space, std::span<const Formula> events) {
    require_event_count(events.size());
    const auto columns = event_columns(space, events);
    double total = 0.0;
    const std::uint32_t subsets = std::uint32_t{1} << events.size();
    for (std::uint32_t subset = 1; subset < subsets; ++subset) {
        const double term = intersection_probability(space, columns, subset);
        total += (std::popcount(subset) % 2 == 1) ? term : -term;
    }
    return total;
}

ProbabilityBounds probability_bounds(const ProbabilitySpace& space,
                                     std::span<const Formula> events) {
    require_event_count(events.size());
    const auto columns = event_columns(space, events);

    double boole = 0.0;
    for (std::size_t i = 0; i < events.size(); ++i)
        boole += intersection_probability(space, columns, std::uint32_t{1} << i);
    double bonferroni = boole;
    for (std::size_t i = 0; i < events.size(); ++i)
        for (std::size_t j = i + 1; j < events.size(); ++j)
            bonferroni -= intersection_probability(
                space, columns, (std::uint32_t{1} << i) | (std::uint32_t{1} << j));

    ProbabilityBounds bounds{inclusion_exclusion(space, events), boole, bonferroni, std::nullopt};

    if (bounds.union_probability > bounds.boole_upper + kProbabilityTol ||
        bounds.union_probability < bounds.bonferroni_lower - kProbabilityTol)
        throw Error("bound ordering violated");  // unreachable for valid spaces

    if (events.size() == 2) {
        const double pA = intersection_probability(space, columns, 0b01);
        const double pB = intersection_probability(space, columns, 0b10);
        const double value = implication_probability(space, events[0], events[1]);
        ImplicationBounds imp{pB, value, 1.0 - pA + pB};
        if (imp.value > imp.upper + kProbabilityTol || imp.value < imp.lower - kProbabilityTol)
            throw Error("implication bound ordering violated");
        bounds.implication = imp;
    }
    return bounds;
}

const char* to_string(BayesCase c) {
    switch (c) {
        case BayesCase::Case1: return "case1";
        case BayesCase::Case2: return "case2";
        case BayesCase::Case3: return "case3";
        case BayesCase::Case4: return "case4";
        case BayesCase::HoldsAOnly: return "holds_A_only";
        case BayesCase::HoldsBOnly: return "holds_B_only";
        case BayesCase::Fails: return "fails";
        case BayesCase::Degenerate: return "degenerate";
    }
    return "?";
}

BayesCase classify_case(const DecompositionWeights& w, double tol) {
    const double pA = w.w10 + w.w11;
    const double pB = w.w01 + w.w11;
    const double residualA = w.w10 * (1.0 - (w.w10 + w.w11));
    const double residualB = w.w01 * (1.0 - (w.w01 + w.w11));
    const bool vanishesA = std::abs(residualA) <= tol;
    const bool vanishesB = std::abs(residualB) <= tol;

    if (pA <= tol && pB <= tol) return BayesCase::Degenerate;

    // case4 first: w11 = 1 implies the weight equalities of all the others
    if (std::abs(w.w11 - 1.0) <= tol) return BayesCase::Case4;
    if (w.w10 <= tol && w.w01 <= tol && w.w11 > tol) return BayesCase::Case1;
    if (w.w10 <= tol && w.w00 <= tol && std::abs(w.w01 + w.w11 - 1.0) <= tol && w.w11 > tol)
        return BayesCase::Case2;
    if (w.w01 <= tol && w.w00 <= tol && std::abs(w.w10 + w.w11 - 1.0) <= tol && w.w11 > tol)
        return BayesCase::Case3;

    // One vanishing prior: if the other side's product relation also holds
    // there is nothing left to certify (the conditional is undefined);
    // otherwise the usual one-sided reading applies, the zero-prior side
    // holding trivially through its product form.
    if ((pA <= tol && vanishesB) || (pB <= tol && vanishesA)) return BayesCase::Degenerate;

    if (vanishesA && !vanishesB) return BayesCase::HoldsAOnly;
    if (vanishesB && !vanishesA) return BayesCase::HoldsBOnly;
    return BayesCase::Fails;
}

BayesReport quantum_bayes_check(const StateVector& s, const DiagonalProjector& a,
                                const DiagonalProjector& b, double tol) {
    const Decomposition dec = decompose(s, a, b);
    const DecompositionWeights& w = dec.weights;
    BayesReport report{
        probability_bundle(s, a, b),
        w,
        w.w10 * (1.0 - (w.w10 + w.w11)),
        w.w01 * (1.0 - (w.w01 + w.w11)),
        false,
        false,
        std::nullopt,
        std::nullopt,
        classify_case(w, tol),
    };
    report.condA_defined = report.bundle.pA > kZeroProbabilityTol;
    report.condB_defined = report.bundle.pB > kZeroProbabilityTol;
    if (report.condA_defined) report.conditionalBA = report.bundle.pAnd / report.bundle.pA;
    if (report.condB_defined) report.conditionalAB = report.bundle.pAnd / report.bundle.pB;
    return report;
}

}  // namespace eigenlogic
