#pragma once

// Classical probability-space computations (conditional probability, material
// implication, alpha-interpolation, inclusion-exclusion, Boole/Bonferroni and
// implication bounds) and the quantum-like Bayes condition checker with its
// four-case classifier.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eigenlogic/born.hpp"
#include "eigenlogic/formula.hpp"
#include "eigenlogic/tolerances.hpp"

namespace eigenlogic {

// Nonnegative weights over the 2^n classical atoms, summing to 1 within
// kProbabilityTol (NormalizationError otherwise).
class ProbabilitySpace {
public:
    ProbabilitySpace(VariableOrder order, std::vector<double> weights);

    static ProbabilitySpace uniform(VariableOrder order);

    const VariableOrder& order() const noexcept { return order_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    std::size_t atom_count() const noexcept { return weights_.size(); }

private:
    VariableOrder order_;
    std::vector<double> weights_;
};

// P(f): total weight of the atoms satisfying f. The free variables of f must
// all belong to the space.
double event_probability(const ProbabilitySpace& space, const Formula& f);

// P(target | given) = P(given & target) / P(given).
// Throws ZeroPrior when P(given) <= kZeroProbabilityTol.
double conditional(const ProbabilitySpace& space, const Formula& given, const Formula& target);

// P(a -> b) = 1 - P(a) + P(a & b).
double implication_probability(const ProbabilitySpace& space, const Formula& a, const Formula& b);

// Validated interpolation coefficient in [0, 1].
class AlphaParameter {
public:
    explicit AlphaParameter(double value);
    double value() const noexcept { return value_; }

private:
    double value_;
};

// (pAnd + alpha*(1-pA)) / (pA + alpha*(1-pA)).
// alpha = 0 is the conditional-probability endpoint pAnd/pA and alpha = 1 the
// material-implication endpoint 1-pA+pAnd; both endpoints are computed by
// their closed forms so the endpoint identities are exact.
// Requires pAnd <= pA; throws ZeroDenominator when the denominator vanishes.
double alpha_implication(double pA, double pAnd, const AlphaParameter& alpha);

// (pA + pImp - 1 - pAnd, pB + pConv - 1 - pAnd). No division: remains
// computable on zero-prior bundles.
std::pair<double, double> linear_relation_residuals(const ProbabilityBundle& bundle);

// P(union of events) by the alternating-sum expansion over nonempty subsets.
// 1..kMaxUnionEvents events.
double inclusion_exclusion(const ProbabilitySpace& space, std::span<const Formula> events);

// For exactly two events A, B: P(B) <= P(A -> B) <= 1 - P(A) + P(B).
struct ImplicationBounds {
    double lower;  // P(B)
    double value;  // P(A -> B)
    double upper;  // 1 - P(A) + P(B)
};

struct ProbabilityBounds {
    double union_probability;           // inclusion-exclusion value
    double boole_upper;                 // sum of P(A_i)
    double bonferroni_lower;            // sum P(A_i) - sum_{i<j} P(A_i & A_j)
    std::optional<ImplicationBounds> implication;  // set for event pairs
};

ProbabilityBounds probability_bounds(const ProbabilitySpace& space, std::span<const Formula> events);

enum class BayesCase {
    Case1,       // w10 = w01 = 0, w11 != 0
    Case2,       // w10 = w00 = 0, w01 + w11 = 1, w11 != 0
    Case3,       // w01 = w00 = 0, w10 + w11 = 1, w11 != 0
    Case4,       // w11 = 1
    HoldsAOnly,  // only the A-side product relation holds
    HoldsBOnly,  // only the B-side product relation holds
    Fails,       // neither side holds
    Degenerate,  // conditional(s) undefined and nothing further to check
};

// "case1" .. "case4", "holds_A_only", "holds_B_only", "fails", "degenerate".
const char* to_string(BayesCase c);

struct BayesReport {
    ProbabilityBundle bundle;
    DecompositionWeights weights;
    double residualA;  // w10 * (1 - (w10 + w11)) = pA*pImp - pAnd
    double residualB;  // w01 * (1 - (w01 + w11)) = pB*pConv - pAnd
    bool condA_defined;
    bool condB_defined;
    std::optional<double> conditionalBA;  // pAnd / pA when defined
    std::optional<double> conditionalAB;  // pAnd / pB when defined
    BayesCase classification;
};

// Classification of the decomposition weights against the four hypotheses,
// checked in the precedence order
//   degenerate > case4 > case1 > case2 > case3 > holds-one-side > fails.
// Degenerate means: both priors vanish, or exactly one prior vanishes while
// the other side's residual also vanishes (nothing left to certify). When one
// prior vanishes but the other side's residual is nonzero, the residual
// classification applies (the vanished side holds trivially through its
// product form).
BayesCase classify_case(const DecompositionWeights& w, double tol = kDefaultClassifyTol);

// Full quantum-like Bayes check: weights via decompose, residuals by the
// closed forms, conditionals where defined, classification per classify_case.
BayesReport quantum_bayes_check(const StateVector& s, const DiagonalProjector& a,
                                const DiagonalProjector& b, double tol = kDefaultClassifyTol);

}  // namespace eigenlogic
