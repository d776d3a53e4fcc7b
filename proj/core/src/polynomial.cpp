#include "eigenlogic/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <utility>
#include <vector>

namespace eigenlogic {

MultilinearPolynomial::MultilinearPolynomial(VariableOrder order,
                                             std::map<std::uint32_t, std::int64_t> coefficients)
    : order_(std::move(order)), coefficients_(std::move(coefficients)) {
    const std::uint32_t full_mask =
        order_.size() >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << order_.size()) - 1;
    for (auto it = coefficients_.begin(); it != coefficients_.end();) {
        if (it->first & ~full_mask)
            throw InvalidArgument("monomial mask mentions a variable outside the order");
        it = it->second == 0 ? coefficients_.erase(it) : std::next(it);
    }
}

std::int64_t MultilinearPolynomial::coefficient(std::uint32_t monomial_mask) const noexcept {
    auto it = coefficients_.find(monomial_mask);
    return it == coefficients_.end() ? 0 : it->second;
}

double MultilinearPolynomial::evaluate(const std::map<std::string, double>& assignment) const {
    std::vector<double> values(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
        auto it = assignment.find(order_.name(i));
        if (it == assignment.end())
            throw UnknownVariable("no assignment for variable '" + order_.name(i) + "'");
        values[i] = it->second;
    }
    double total = 0.0;
    for (const auto& [mask, coeff] : coefficients_) {
        double term = static_cast<double>(coeff);
        for (std::uint32_t m = mask; m != 0; m &= m - 1)
            term *= values[static_cast<std::size_t>(std::countr_zero(m))];
        total += term;
    }
    return total;
}

std::int64_t MultilinearPolynomial::evaluate_bits(std::uint32_t assignment_mask) const noexcept {
    std::int64_t total = 0;
    for (const auto& [mask, coeff] : coefficients_) {
        // the monomial is 1 exactly when all of its variables are set
        if ((mask & assignment_mask) == mask) total += coeff;
    }
    return total;
}

std::string MultilinearPolynomial::to_string() const {
    if (coefficients_.empty()) return "0";
    // degree first, then mask, so "1 - A + A*B" comes out in reading order
    std::vector<std::pair<std::uint32_t, std::int64_t>> terms(coefficients_.begin(),
                                                              coefficients_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const int da = std::popcount(a.first), db = std::popcount(b.first);
        return da != db ? da < db : a.first < b.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [mask, coeff] : terms) {
        const std::int64_t magnitude = coeff < 0 ? -coeff : coeff;
        if (first) {
            if (coeff < 0) out += "-";
            first = false;
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        std::string monomial;
        for (std::uint32_t m = mask; m != 0; m &= m - 1) {
            if (!monomial.empty()) monomial += "*";
            monomial += order_.name(static_cast<std::size_t>(std::countr_zero(m)));
        }
        if (monomial.empty()) {
            out += std::to_string(magnitude);
        } else {
            if (magnitude != 1) out += std::to_string(magnitude) + "*";
            out += monomial;
        }
    }
    return out;
}

MultilinearPolynomial boole_polynomial(const Formula& f, const VariableOrder& order) {
    const TruthTable table = truth_table(f, order);
    const std::size_t n = order.size();
    const std::size_t size = table.rows();

    // Reindex: truth-table row r has variable j at bit (n-1-j); the working
    // array is indexed by assignment masks with variable j at bit j.
    std::vector<std::int64_t> work(size);
    for (std::size_t r = 0; r < size; ++r) {
        std::size_t mask = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (order.bit(r, j)) mask |= std::size_t{1} << j;
        work[mask] = table.column[r];
    }

    // Moebius transform over the subset lattice turns point values into
    // monomial coefficients.
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t bit = std::size_t{1} << j;
        for (std::size_t mask = 0; mask < size; ++mask)
            if (mask & bit) work[mask] -= work[mask ^ bit];
    }

    std::map<std::uint32_t, std::int64_t> coefficients;
    for (std::size_t mask = 0; mask < size; ++mask)
        if (work[mask] != 0) coefficients.emplace(static_cast<std::uint32_t>(mask), work[mask]);
    return MultilinearPolynomial(order, std::move(coefficients));
}

}  // namespace eigenlogic
