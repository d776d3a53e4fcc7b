#include "eigenlogic/born.hpp"

#include <cmath>

#include "eigenlogic/errors.hpp"

namespace eigenlogic {

namespace {

void require_matching(const StateVector& s, const DiagonalProjector& p) {
    if (s.dimension() != p.dimension())
        throw DimensionMismatch("state dimension " + std::to_string(s.dimension()) +
                                " does not match projector dimension " +
                                std::to_string(p.dimension()));
}

}  // namespace

double born_mean(const StateVector& s, const DiagonalProjector& p) {
    require_matching(s, p);
    // fixed ascending summation order keeps results bit-reproducible
    double total = 0.0;
    for (std::size_t r = 0; r < s.dimension(); ++r)
        if (p.diagonal()[r]) total += std::norm(s.amplitudes()[r]);
    return total;
}

ProbabilityBundle probability_bundle(const StateVector& s, const DiagonalProjector& a,
                                     const DiagonalProjector& b) {
    require_matching(s, a);
    require_matching(s, b);
    return ProbabilityBundle{
        born_mean(s, a),
        born_mean(s, b),
        born_mean(s, meet(a, b)),
        born_mean(s, join(a, b)),
        born_mean(s, implies(a, b)),
        born_mean(s, implies(b, a)),
    };
}

Decomposition decompose(const StateVector& s, const DiagonalProjector& a,
                        const DiagonalProjector& b) {
    require_matching(s, a);
    require_matching(s, b);
    const std::size_t d = s.dimension();
    std::vector<std::complex<double>> c00(d), c01(d), c10(d), c11(d);
    for (std::size_t r = 0; r < d; ++r) {
        const bool in_a = a.diagonal()[r], in_b = b.diagonal()[r];
        (in_a ? (in_b ? c11 : c10) : (in_b ? c01 : c00))[r] = s.amplitudes()[r];
    }
    auto weight = [](const std::vector<std::complex<double>>& v) {
        double total = 0.0;
        for (const auto& x : v) total += std::norm(x);
        return total;
    };
    DecompositionWeights w{weight(c00), weight(c01), weight(c10), weight(c11)};
    return Decomposition{StateVector::unchecked(std::move(c00)),
                         StateVector::unchecked(std::move(c01)),
                         StateVector::unchecked(std::move(c10)),
                         StateVector::unchecked(std::move(c11)), w};
}

ProbabilityBundle probabilities_from_weights(const DecompositionWeights& w) {
    if (std::abs(w.sum() - 1.0) > kProbabilityTol)
        throw NormalizationError("decomposition weights sum to " + std::to_string(w.sum()) +
                                 ", expected 1");
    return ProbabilityBundle{
        w.w10 + w.w11,  // pA
        w.w01 + w.w11,  // pB
        w.w11,          // pAnd
        1.0 - w.w00,    // pOr
        1.0 - w.w10,    // pImp
        1.0 - w.w01,    // pConv
    };
}

}  // namespace eigenlogic
