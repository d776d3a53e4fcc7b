#pragma once

// Logical projection operators. The canonical representation is the 0/1
// diagonal (the family of all compiled connectives over one variable order is
// simultaneously diagonal in the computational basis); a dense complex matrix
// form exists as an independent oracle built from Kronecker products.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eigenlogic/formula.hpp"
#include "eigenlogic/tolerances.hpp"

namespace eigenlogic {

// Diagonal 0/1 projector of dimension 2^n; diagonal entry r is the truth
// value of the represented proposition on row r.
class DiagonalProjector {
public:
    // Diagonal length must be a power of two (2^n with n <= kMaxDiagonalQubits)
    // and entries must be 0 or 1.
    explicit DiagonalProjector(std::vector<std::uint8_t> diagonal);

    static DiagonalProjector identity(std::size_t qubit_count);
    static DiagonalProjector zero(std::size_t qubit_count);

    std::size_t dimension() const noexcept { return diagonal_.size(); }
    std::size_t qubit_count() const noexcept;
    const std::vector<std::uint8_t>& diagonal() const noexcept { return diagonal_; }
    std::uint8_t entry(std::size_t row) const { return diagonal_.at(row); }

    // "dim=<d>;diag=<bitstring>", row 0 first.
    std::string serialize() const;
    static DiagonalProjector deserialize(std::string_view text);

    bool operator==(const DiagonalProjector& other) const noexcept {
        return diagonal_ == other.diagonal_;
    }

private:
    std::vector<std::uint8_t> diagonal_;
};

// Projector of the elementary proposition at `index` within an n-variable
// family: eigenvalue 1 exactly on basis states whose index-th bit is 1
// (bit 0 = most significant).
DiagonalProjector elementary(std::size_t index, std::size_t qubit_count);

// Compiles a formula: the diagonal is its truth-table column over `order`.
DiagonalProjector compile(const Formula& f, const VariableOrder& order);

// Lattice operations (entrywise on diagonals). All operands must share a
// dimension; DimensionMismatch otherwise.
DiagonalProjector meet(const DiagonalProjector& p, const DiagonalProjector& q);
DiagonalProjector join(const DiagonalProjector& p, const DiagonalProjector& q);
DiagonalProjector complement(const DiagonalProjector& p);
// Material implication: I - P + P*Q, entrywise 1 - p_r + p_r*q_r.
DiagonalProjector implies(const DiagonalProjector& p, const DiagonalProjector& q);

// Small dense complex matrix, row-major, always square.
class DenseOperator {
public:
    DenseOperator(std::size_t dimension, std::vector<std::complex<double>> entries);

    static DenseOperator identity(std::size_t dimension);
    static DenseOperator zeros(std::size_t dimension);

    std::size_t dimension() const noexcept { return dim_; }
    std::complex<double> at(std::size_t row, std::size_t col) const {
        return entries_.at(row * dim_ + col);
    }
    std::complex<double>& at(std::size_t row, std::size_t col) {
        return entries_.at(row * dim_ + col);
    }
    const std::vector<std::complex<double>>& entries() const noexcept { return entries_; }

    DenseOperator adjoint() const;
    std::complex<double> trace() const;

private:
    std::size_t dim_;
    std::vector<std::complex<double>> entries_;
};

DenseOperator multiply(const DenseOperator& a, const DenseOperator& b);
DenseOperator add(const DenseOperator& a, const DenseOperator& b);
DenseOperator subtract(const DenseOperator& a, const DenseOperator& b);
DenseOperator scale(std::complex<double> factor, const DenseOperator& a);
DenseOperator kron(const DenseOperator& a, const DenseOperator& b);
// Largest entrywise |a_ij - b_ij|.
double max_abs_difference(const DenseOperator& a, const DenseOperator& b);

// Dense form of a diagonal projector (dimension capped at 2^kMaxDenseQubits).
DenseOperator to_dense(const DiagonalProjector& p);

// Oracle route for elementary(index, n): I (x) ... (x) diag(0,1) (x) ... (x) I
// assembled with explicit Kronecker products, first factor most significant.
DenseOperator dense_kron_elementary(std::size_t index, std::size_t qubit_count);

// True iff m is Hermitian and idempotent within `tol` in max norm.
bool verify_projector(const DenseOperator& m, double tol = kOperatorTol);

}  // namespace eigenlogic
