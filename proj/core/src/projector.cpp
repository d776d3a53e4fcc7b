#include "eigenlogic/projector.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "eigenlogic/errors.hpp"

namespace eigenlogic {

namespace {

void require_same_dimension(std::size_t a, std::size_t b) {
    if (a != b)
        throw DimensionMismatch("projector dimensions differ: " + std::to_string(a) + " vs " +
                                std::to_string(b));
}

}  // namespace

DiagonalProjector::DiagonalProjector(std::vector<std::uint8_t> diagonal)
    : diagonal_(std::move(diagonal)) {
    if (diagonal_.empty() || !std::has_single_bit(diagonal_.size()))
        throw InvalidArgument("projector dimension must be a power of two, got " +
                              std::to_string(diagonal_.size()));
    if (diagonal_.size() > (std::size_t{1} << kMaxDiagonalQubits))
        throw InvalidArgument("projector dimension exceeds the 2^" +
                              std::to_string(kMaxDiagonalQubits) + " cap");
    for (std::uint8_t v : diagonal_)
        if (v > 1) throw InvalidArgument("projector diagonal entries must be 0 or 1");
}

DiagonalProjector DiagonalProjector::identity(std::size_t qubit_count) {
    return DiagonalProjector(std::vector<std::uint8_t>(std::size_t{1} << qubit_count, 1));
}

DiagonalProjector DiagonalProjector::zero(std::size_t qubit_count) {
    return DiagonalProjector(std::vector<std::uint8_t>(std::size_t{1} << qubit_count, 0));
}

std::size_t DiagonalProjector::qubit_count() const noexcept {
    return static_cast<std::size_t>(std::countr_zero(diagonal_.size()));
}

std::string DiagonalProjector::serialize() const {
    std::string out = "dim=" + std::to_string(dimension()) + ";diag=";
    for (std::uint8_t v : diagonal_) out += v ? '1' : '0';
    return out;
}

DiagonalProjector DiagonalProjector::deserialize(std::string_view text) {
    constexpr std::string_view dim_key = "dim=";
    constexpr std::string_view diag_key = ";diag=";
    if (text.substr(0, dim_key.size()) != dim_key)
        throw InvalidArgument("projector text must start with 'dim='");
    const std::size_t sep = text.find(diag_key);
    if (sep == std::string_view::npos)
        throw InvalidArgument("projector text missing ';diag=' section");
    const std::string_view dim_text = text.substr(dim_key.size(), sep - dim_key.size());
    std::size_t dim = 0;
    const auto [ptr, ec] = std::from_chars(dim_text.data(), dim_text.data() + dim_text.size(), dim);
    if (ec != std::errc{} || ptr != dim_text.data() + dim_text.size())
        throw InvalidArgument("bad projector dimension '" + std::string(dim_text) + "'");
    const std::string_view bits = text.substr(sep + diag_key.size());
    if (bits.size() != dim)
        throw InvalidArgument("projector bitstring length " + std::to_string(bits.size()) +
                              " does not match dim=" + std::to_string(dim));
    std::vector<std::uint8_t> diagonal(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (bits[i] != '0' && bits[i] != '1')
            throw InvalidArgument("projector bitstring must contain only 0/1");
        diagonal[i] = bits[i] == '1';
    }
    return DiagonalProjector(std::move(diagonal));
}

DiagonalProjector elementary(std::size_t index, std::size_t qubit_count) {
    if (qubit_count == 0 || qubit_count > kMaxDiagonalQubits)
        throw InvalidArgument("qubit count must be in [1, " +
                              std::to_string(kMaxDiagonalQubits) + "]");
    if (index >= qubit_count)
        throw InvalidArgument("variable index " + std::to_string(index) +
                              " out of range for " + std::to_string(qubit_count) + " qubits");
    const std::size_t dim = std::size_t{1} << qubit_count;
    std::vector<std::uint8_t> diagonal(dim);
    for (std::size_t r = 0; r < dim; ++r)
        diagonal[r] = (r >> (qubit_count - 1 - index)) & 1u;
    return DiagonalProjector(std::move(diagonal));
}

DiagonalProjector compile(const Formula& f, const VariableOrder& order) {
    return DiagonalProjector(truth_table(f, order).column);
}

DiagonalProjector meet(const DiagonalProjector& p, const DiagonalProjector& q) {
    require_same_dimension(p.dimension(), q.dimension());
    std::vector<std::uint8_t> diagonal(p.dimension());
    for (std::size_t r = 0; r < diagonal.size(); ++r)
        diagonal[r] = p.diagonal()[r] & q.diagonal()[r];
    return DiagonalProjector(std::move(diagonal));
}

DiagonalProjector join(const DiagonalProjector& p, const DiagonalProjector& q) {
    require_same_dimension(p.dimension(), q.dimension());
    std::vector<std::uint8_t> diagonal(p.dimension());
    for (std::size_t r = 0; r < diagonal.size(); ++r)
        diagonal[r] = p.diagonal()[r] | q.diagonal()[r];
    return DiagonalProjector(std::move(diagonal));
}

DiagonalProjector complement(const DiagonalProjector& p) {
    std::vector<std::uint8_t> diagonal(p.dimension());
    for (std::size_t r = 0; r < diagonal.size(); ++r)
        diagonal[r] = 1 - p.diagonal()[r];
    return DiagonalProjector(std::move(diagonal));
}

DiagonalProjector implies(const DiagonalProjector& p, const DiagonalProjector& q) {
    require_same_dimension(p.dimension(), q.dimension());
    std::vector<std::uint8_t> diagonal(p.dimension());
    for (std::size_t r = 0; r < diagonal.size(); ++r) {
        const std::uint8_t pr = p.diagonal()[r], qr = q.diagonal()[r];
        diagonal[r] = static_cast<std::uint8_t>(1 - pr + pr * qr);
    }
    return DiagonalProjector(std::move(diagonal));
}

// ── Dense oracle ─────────────────────────────────────────────────────────────

DenseOperator::DenseOperator(std::size_t dimension, std::vector<std::complex<double>> entries)
    : dim_(dimension), entries_(std::move(entries)) {
    if (dim_ == 0) throw InvalidArgument("dense operator dimension must be positive");
    if (entries_.size() != dim_ * dim_)
        throw InvalidArgument("dense operator needs " + std::to_string(dim_ * dim_) +
                              " entries, got " + std::to_string(entries_.size()));
}

DenseOperator DenseOperator::identity(std::size_t dimension) {
    DenseOperator m = zeros(dimension);
    for (std::size_t i = 0; i < dimension; ++i) m.at(i, i) = 1.0;
    return m;
}

DenseOperator DenseOperator::zeros(std::size_t dimension) {
    return DenseOperator(dimension, std::vector<std::complex<double>>(dimension * dimension));
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator out = zeros(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out.at(j, i) = std::conj(at(i, j));
    return out;
}

std::complex<double> DenseOperator::trace() const {
    std::complex<double> t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

DenseOperator multiply(const DenseOperator& a, const DenseOperator& b) {
    require_same_dimension(a.dimension(), b.dimension());
    const std::size_t d = a.dimension();
    DenseOperator out = DenseOperator::zeros(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const std::complex<double> aik = a.at(i, k);
            if (aik == std::complex<double>{}) continue;
            for (std::size_t j = 0; j < d; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

DenseOperator add(const DenseOperator& a, const DenseOperator& b) {
    require_same_dimension(a.dimension(), b.dimension());
    std::vector<std::complex<double>> entries(a.entries());
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += b.entries()[i];
    return DenseOperator(a.dimension(), std::move(entries));
}

DenseOperator subtract(const DenseOperator& a, const DenseOperator& b) {
    require_same_dimension(a.dimension(), b.dimension());
    std::vector<std::complex<double>> entries(a.entries());
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] -= b.entries()[i];
    return DenseOperator(a.dimension(), std::move(entries));
}

DenseOperator scale(std::complex<double> factor, const DenseOperator& a) {
    std::vector<std::complex<double>> entries(a.entries());
    for (auto& e : entries) e *= factor;
    return DenseOperator(a.dimension(), std::move(entries));
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
    const std::size_t da = a.dimension(), db = b.dimension();
    DenseOperator out = DenseOperator::zeros(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const std::complex<double> aij = a.at(i, j);
            if (aij == std::complex<double>{}) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out.at(i * db + k, j * db + l) = aij * b.at(k, l);
        }
    return out;
}

double max_abs_difference(const DenseOperator& a, const DenseOperator& b) {
    require_same_dimension(a.dimension(), b.dimension());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    return worst;
}

DenseOperator to_dense(const DiagonalProjector& p) {
    if (p.qubit_count() > kMaxDenseQubits)
        throw InvalidArgument("dense form capped at " + std::to_string(kMaxDenseQubits) +
                              " qubits");
    DenseOperator out = DenseOperator::zeros(p.dimension());
    for (std::size_t r = 0; r < p.dimension(); ++r) out.at(r, r) = p.diagonal()[r];
    return out;
}

DenseOperator dense_kron_elementary(std::size_t index, std::size_t qubit_count) {
    if (qubit_count == 0 || qubit_count > kMaxDenseQubits)
        throw InvalidArgument("qubit count must be in [1, " + std::to_string(kMaxDenseQubits) +
                              "] for the dense path");
    if (index >= qubit_count)
        throw InvalidArgument("variable index " + std::to_string(index) +
                              " out of range for " + std::to_string(qubit_count) + " qubits");
    const DenseOperator pi1(2, {0.0, 0.0, 0.0, 1.0});  // |1><1|
    DenseOperator out(1, {1.0});
    for (std::size_t j = 0; j < qubit_count; ++j)
        out = kron(out, j == index ? pi1 : DenseOperator::identity(2));
    return out;
}

bool verify_projector(const DenseOperator& m, double tol) {
    if (max_abs_difference(m, m.adjoint()) > tol) return false;
    return max_abs_difference(multiply(m, m), m) <= tol;
}

}  // namespace eigenlogic
