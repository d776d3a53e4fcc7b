#pragma once

// Quantum state vectors used as probabilistic contexts: computational basis
// states, Bloch-parameterized product states, the uniform/x-basis family,
// Bell states and the cluster state.

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "eigenlogic/projector.hpp"
#include "eigenlogic/tolerances.hpp"

namespace eigenlogic {

// theta in [0, pi] (InvalidArgument otherwise), phi reduced into [0, 2*pi).
// sin^2(theta/2) is the probability of |1>.
struct BlochAngles {
    BlochAngles(double theta_radians, double phi_radians);

    double theta;
    double phi;

    double probability_of_one() const noexcept;
};

// Complex amplitude vector of length 2^n. Checked constructors require unit
// norm (or normalize on request); unchecked() exists for intermediate vectors
// such as decomposition components, which are deliberately unnormalized.
class StateVector {
public:
    // normalize = true: divide by the norm (zero vector is an error).
    // normalize = false: require |norm^2 - 1| <= kNormTol.
    static StateVector from_amplitudes(std::vector<std::complex<double>> amplitudes,
                                       bool normalize = false);

    // No validation beyond the power-of-two length.
    static StateVector unchecked(std::vector<std::complex<double>> amplitudes);

    std::size_t dimension() const noexcept { return amplitudes_.size(); }
    std::size_t qubit_count() const noexcept;
    const std::vector<std::complex<double>>& amplitudes() const noexcept { return amplitudes_; }
    std::complex<double> amplitude(std::size_t row) const { return amplitudes_.at(row); }

    double norm_squared() const noexcept;

    bool operator==(const StateVector& other) const noexcept {
        return amplitudes_ == other.amplitudes_;
    }

private:
    explicit StateVector(std::vector<std::complex<double>> amplitudes)
        : amplitudes_(std::move(amplitudes)) {}

    std::vector<std::complex<double>> amplitudes_;
};

// |b_0 b_1 ... b_{n-1}>, first bit most significant.
StateVector basis_state(const std::vector<int>& bits);

// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
StateVector single_qubit(const BlochAngles& angles);

// Tensor product, first factor most significant.
StateVector tensor(const StateVector& first, const StateVector& second);

// Built-in inventory: 2-bit basis names 00 01 10 11; x-basis products
// ++ +- -+ --; mixed products 0+ +0 1+ +1; Bell states phi+ phi- psi+ psi-;
// cluster. U+2212 minus is accepted as an alias for '-'.
StateVector named_state(std::string_view name);
const std::vector<std::string>& named_state_inventory();

// Rank-1 density matrix rho = |psi><psi|.
class DensityMatrix {
public:
    DensityMatrix(std::size_t dimension, std::vector<std::complex<double>> entries);

    std::size_t dimension() const noexcept { return dim_; }
    std::complex<double> at(std::size_t row, std::size_t col) const {
        return entries_.at(row * dim_ + col);
    }
    const std::vector<std::complex<double>>& entries() const noexcept { return entries_; }
    std::complex<double> trace() const;

private:
    std::size_t dim_;
    std::vector<std::complex<double>> entries_;
};

DensityMatrix density(const StateVector& s);

// Tr(rho * m); real for Hermitian m, the Born-rule oracle route.
std::complex<double> trace_product(const DensityMatrix& rho, const DenseOperator& m);

}  // namespace eigenlogic
