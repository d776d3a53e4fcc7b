#include "eigenlogic/state.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <numbers>

#include "eigenlogic/errors.hpp"

namespace eigenlogic {

BlochAngles::BlochAngles(double theta_radians, double phi_radians)
    : theta(theta_radians), phi(phi_radians) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw InvalidArgument("theta must lie in [0, pi], got " + std::to_string(theta_radians));
    constexpr double two_pi = 2.0 * std::numbers::pi;
    phi = std::fmod(phi, two_pi);
    if (phi < 0.0) phi += two_pi;
}

double BlochAngles::probability_of_one() const noexcept {
    const double s = std::sin(theta / 2.0);
    return s * s;
}

StateVector StateVector::from_amplitudes(std::vector<std::complex<double>> amplitudes,
                                         bool normalize) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size()))
        throw InvalidArgument("amplitude count must be a power of two, got " +
                              std::to_string(amplitudes.size()));
    if (amplitudes.size() > (std::size_t{1} << kMaxDiagonalQubits))
        throw InvalidArgument("state dimension exceeds the 2^" +
                              std::to_string(kMaxDiagonalQubits) + " cap");
    double norm_sq = 0.0;
    for (const auto& a : amplitudes) norm_sq += std::norm(a);
    if (normalize) {
        if (norm_sq <= 0.0) throw InvalidArgument("cannot normalize the zero vector");
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (auto& a : amplitudes) a *= inv;
    } else if (std::abs(norm_sq - 1.0) > kNormTol) {
        throw NormalizationError("state norm^2 = " + std::to_string(norm_sq) +
                                 " is not 1 within tolerance (pass normalize to rescale)");
    }
    return StateVector(std::move(amplitudes));
}

StateVector StateVector::unchecked(std::vector<std::complex<double>> amplitudes) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size()))
        throw InvalidArgument("amplitude count must be a power of two, got " +
                              std::to_string(amplitudes.size()));
    return StateVector(std::move(amplitudes));
}

std::size_t StateVector::qubit_count() const noexcept {
    return static_cast<std::size_t>(std::countr_zero(amplitudes_.size()));
}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (const auto& a : amplitudes_) total += std::norm(a);
    return total;
}

StateVector basis_state(const std::vector<int>& bits) {
    if (bits.empty()) throw InvalidArgument("basis state needs at least one bit");
    if (bits.size() > kMaxDiagonalQubits)
        throw InvalidArgument("basis state exceeds the " + std::to_string(kMaxDiagonalQubits) +
                              "-qubit cap");
    std::size_t row = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw InvalidArgument("basis state bits must be 0 or 1");
        row = (row << 1) | static_cast<std::size_t>(b);
    }
    std::vector<std::complex<double>> amplitudes(std::size_t{1} << bits.size());
    amplitudes[row] = 1.0;
    return StateVector::unchecked(std::move(amplitudes));
}

StateVector single_qubit(const BlochAngles& angles) {
    const double half = angles.theta / 2.0;
    return StateVector::unchecked(
        {std::cos(half), std::polar(std::sin(half), angles.phi)});
}

StateVector tensor(const StateVector& first, const StateVector& second) {
    const std::size_t d1 = first.dimension(), d2 = second.dimension();
    std::vector<std::complex<double>> amplitudes(d1 * d2);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            amplitudes[i * d2 + j] = first.amplitudes()[i] * second.amplitudes()[j];
    return StateVector::unchecked(std::move(amplitudes));
}

namespace {

// All named amplitudes are exact dyadic multiples of 1 and 1/sqrt(2); the
// x-basis states are written out literally rather than via Bloch angles so
// no sin(pi) residue leaks into the imaginary parts.
const std::map<std::string, std::vector<std::complex<double>>>& named_amplitudes() {
    static const double h = std::numbers::sqrt2 / 2.0;  // 1/sqrt(2)
    static const std::map<std::string, std::vector<std::complex<double>>> table = {
        {"00", {1, 0, 0, 0}},
        {"01", {0, 1, 0, 0}},
        {"10", {0, 0, 1, 0}},
        {"11", {0, 0, 0, 1}},
        {"++", {0.5, 0.5, 0.5, 0.5}},
        {"+-", {0.5, -0.5, 0.5, -0.5}},
        {"-+", {0.5, 0.5, -0.5, -0.5}},
        {"--", {0.5, -0.5, -0.5, 0.5}},
        {"0+", {h, h, 0, 0}},
        {"+0", {h, 0, h, 0}},
        {"1+", {0, 0, h, h}},
        {"+1", {0, h, 0, h}},
        {"phi+", {h, 0, 0, h}},
        {"phi-", {h, 0, 0, -h}},
        {"psi+", {0, h, h, 0}},
        {"psi-", {0, h, -h, 0}},
        {"cluster", {0.5, 0.5, 0.5, -0.5}},
    };
    return table;
}

// Replace U+2212 (minus sign) with ASCII '-'.
std::string normalize_name(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (std::size_t i = 0; i < name.size();) {
        if (name.substr(i, 3) == "\xe2\x88\x92") {
            out += '-';
            i += 3;
        } else {
            out += name[i];
            ++i;
        }
    }
    return out;
}

}  // namespace

StateVector named_state(std::string_view name) {
    const std::string key = normalize_name(name);
    const auto& table = named_amplitudes();
    auto it = table.find(key);
    if (it == table.end()) {
        std::string known;
        for (const auto& [k, _] : table) {
            if (!known.empty()) known += ", ";
            known += k;
        }
        throw InvalidArgument("unknown state name '" + std::string(name) + "' (known: " + known +
                              ")");
    }
    return StateVector::unchecked(it->second);
}

const std::vector<std::string>& named_state_inventory() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, _] : named_amplitudes()) out.push_back(k);
        return out;
    }();
    return names;
}

DensityMatrix::DensityMatrix(std::size_t dimension, std::vector<std::complex<double>> entries)
    : dim_(dimension), entries_(std::move(entries)) {
    if (dim_ == 0 || entries_.size() != dim_ * dim_)
        throw InvalidArgument("density matrix needs dim^2 entries");
}

std::complex<double> DensityMatrix::trace() const {
    std::complex<double> t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

DensityMatrix density(const StateVector& s) {
    const std::size_t d = s.dimension();
    std::vector<std::complex<double>> entries(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            entries[i * d + j] = s.amplitudes()[i] * std::conj(s.amplitudes()[j]);
    return DensityMatrix(d, std::move(entries));
}

std::complex<double> trace_product(const DensityMatrix& rho, const DenseOperator& m) {
    if (rho.dimension() != m.dimension())
        throw DimensionMismatch("density matrix and operator dimensions differ");
    std::complex<double> total = 0.0;
    for (std::size_t i = 0; i < rho.dimension(); ++i)
        for (std::size_t k = 0; k < rho.dimension(); ++k) total += rho.at(i, k) * m.at(k, i);
    return total;
}

}  // namespace eigenlogic
