#pragma once

// Born-rule measurement of logical projectors, the four-component orthogonal
// decomposition with respect to a projector pair, and the probability bundle
// of one state and one proposition pair.

#include <cstddef>

#include "eigenlogic/projector.hpp"
#include "eigenlogic/state.hpp"

namespace eigenlogic {

// The six probabilities attached to one (state, A, B) triple.
struct ProbabilityBundle {
    double pA;
    double pB;
    double pAnd;
    double pOr;
    double pImp;   // A -> B
    double pConv;  // B -> A
};

// Square moduli of the four decomposition components; sums to 1 for a unit
// state.
struct DecompositionWeights {
    double w00;
    double w01;
    double w10;
    double w11;

    double sum() const noexcept { return w00 + w01 + w10 + w11; }
};

// <psi|P|psi> = sum_r diag[r] |c_r|^2, summed in ascending row order.
// Throws DimensionMismatch when dimensions differ.
double born_mean(const StateVector& s, const DiagonalProjector& p);

// Born means of A, B and their conjunction, disjunction and both
// implications, each measured through the compiled connective projector.
ProbabilityBundle probability_bundle(const StateVector& s, const DiagonalProjector& a,
                                     const DiagonalProjector& b);

// psi = psi00 + psi01 + psi10 + psi11 with
//   psi00 = (I-A)(I-B) psi,  psi01 = (I-A)B psi,
//   psi10 = A(I-B) psi,      psi11 = AB psi.
// Components are returned unnormalized; weights are their squared norms.
struct Decomposition {
    StateVector c00;
    StateVector c01;
    StateVector c10;
    StateVector c11;
    DecompositionWeights weights;
};

Decomposition decompose(const StateVector& s, const DiagonalProjector& a,
                        const DiagonalProjector& b);

// Bundle from weights alone:
//   pA = w10+w11, pB = w01+w11, pAnd = w11,
//   pOr = 1-w00, pImp = 1-w10, pConv = 1-w01.
// Throws NormalizationError when the weights do not sum to 1 within
// kProbabilityTol.
ProbabilityBundle probabilities_from_weights(const DecompositionWeights& w);

}  // namespace eigenlogic
