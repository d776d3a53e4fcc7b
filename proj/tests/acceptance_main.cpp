// Acceptance suite: every reference table and property the library promises,
// checked at pinned tolerances, one pass/fail line per criterion. Exits
// nonzero when any criterion fails.

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "eigenlogic/eigenlogic.hpp"
#include "support.hpp"

using namespace eigenlogic;
using testsupport::Rng;

namespace {

int failures_in_current = 0;

void expect(bool ok, const std::string& detail) {
    if (!ok) {
        ++failures_in_current;
        std::cout << "    FAILED: " << detail << "\n";
    }
}

void expect_near(double actual, double wanted, double tol, const std::string& detail) {
    expect(std::abs(actual - wanted) <= tol,
           detail + ": got " + std::to_string(actual) + ", wanted " + std::to_string(wanted));
}

// Seven derived columns of the probability tables:
// P(A), P(B), P(A->B), P(B->A), P(A)P(A->B), P(B)P(B->A), P(A&B).
std::array<double, 7> seven_columns(const ProbabilityBundle& b) {
    return {b.pA, b.pB, b.pImp, b.pConv, b.pA * b.pImp, b.pB * b.pConv, b.pAnd};
}

ProbabilityBundle bundle_of(const std::string& name) {
    return probability_bundle(named_state(name), elementary(0, 2), elementary(1, 2));
}

// ── criteria ─────────────────────────────────────────────────────────────────

// 40 truth-table cells, zero tolerance.
void criterion_truth_tables() {
    const VariableOrder ab({"A", "B"});
    const std::map<std::string, std::array<int, 4>> wanted = {
        {"A", {0, 0, 1, 1}},      {"B", {0, 1, 0, 1}},    {"!A", {1, 1, 0, 0}},
        {"!B", {1, 0, 1, 0}},     {"A&B", {0, 0, 0, 1}},  {"A|B", {0, 1, 1, 1}},
        {"A->B", {1, 1, 0, 1}},   {"B->A", {1, 0, 1, 1}}, {"!A|B", {1, 1, 0, 1}},
        {"A|!B", {1, 0, 1, 1}},
    };
    for (const auto& [text, cells] : wanted) {
        const auto column = truth_table(parse_formula(text), ab).column;
        for (std::size_t r = 0; r < 4; ++r)
            expect(int(column[r]) == cells[r],
                   text + " row " + std::to_string(r) + ": got " + std::to_string(column[r]) +
                       ", wanted " + std::to_string(cells[r]));
    }
}

// Basis states: all seven columns exact 0/1 within 1e-12.
void criterion_basis_states() {
    const std::map<std::string, std::array<double, 7>> wanted = {
        {"00", {0, 0, 1, 1, 0, 0, 0}},
        {"01", {0, 1, 1, 0, 0, 0, 0}},
        {"10", {1, 0, 0, 1, 0, 0, 0}},
        {"11", {1, 1, 1, 1, 1, 1, 1}},
    };
    for (const auto& [name, cells] : wanted) {
        const auto got = seven_columns(bundle_of(name));
        for (std::size_t c = 0; c < 7; ++c)
            expect_near(got[c], cells[c], 1e-12, name + " column " + std::to_string(c));
    }
}

// Uniform family: bundle (1/2, 1/2, 3/4, 3/4, 3/8, 3/8, 1/4) and both
// residuals exactly 1/8, within 1e-10.
void criterion_uniform_family() {
    const std::array<double, 7> wanted = {0.5, 0.5, 0.75, 0.75, 0.375, 0.375, 0.25};
    const auto a = elementary(0, 2);
    const auto b = elementary(1, 2);
    for (const char* name : {"++", "+-", "-+", "--", "cluster"}) {
        const auto got = seven_columns(bundle_of(name));
        for (std::size_t c = 0; c < 7; ++c)
            expect_near(got[c], wanted[c], 1e-10, std::string(name) + " column " + std::to_string(c));
        const auto report = quantum_bayes_check(named_state(name), a, b);
        expect_near(report.residualA, 0.125, 1e-10, std::string(name) + " residualA");
        expect_near(report.residualB, 0.125, 1e-10, std::string(name) + " residualB");
    }
}

// Mixed-basis products: rows within 1e-10 plus the classifier labels.
void criterion_mixed_basis() {
    const std::map<std::string, std::array<double, 7>> wanted = {
        {"0+", {0, 0.5, 1, 0.5, 0, 0.25, 0}},
        {"+0", {0.5, 0, 0.5, 1, 0.25, 0, 0}},
        {"1+", {1, 0.5, 0.5, 1, 0.5, 0.5, 0.5}},
        {"+1", {0.5, 1, 1, 0.5, 0.5, 0.5, 0.5}},
    };
    for (const auto& [name, cells] : wanted) {
        const auto got = seven_columns(bundle_of(name));
        for (std::size_t c = 0; c < 7; ++c)
            expect_near(got[c], cells[c], 1e-10, name + " column " + std::to_string(c));
    }
    const auto a = elementary(0, 2);
    const auto b = elementary(1, 2);
    const std::map<std::string, BayesCase> labels = {
        {"0+", BayesCase::HoldsAOnly},
        {"+0", BayesCase::HoldsBOnly},
        {"1+", BayesCase::Case3},
        {"+1", BayesCase::Case2},
    };
    for (const auto& [name, label] : labels) {
        const auto got = quantum_bayes_check(named_state(name), a, b).classification;
        expect(got == label, name + " classified " + to_string(got) + ", wanted " +
                                 to_string(label));
    }
}

// Bell states: rows within 1e-10; phi+- satisfy both equalities, psi+- fail
// with residuals 1/4.
void criterion_bell_states() {
    const std::map<std::string, std::array<double, 7>> wanted = {
        {"phi+", {0.5, 0.5, 1, 1, 0.5, 0.5, 0.5}},
        {"phi-", {0.5, 0.5, 1, 1, 0.5, 0.5, 0.5}},
        {"psi+", {0.5, 0.5, 0.5, 0.5, 0.25, 0.25, 0}},
        {"psi-", {0.5, 0.5, 0.5, 0.5, 0.25, 0.25, 0}},
    };
    for (const auto& [name, cells] : wanted) {
        const auto got = seven_columns(bundle_of(name));
        for (std::size_t c = 0; c < 7; ++c)
            expect_near(got[c], cells[c], 1e-10, name + " column " + std::to_string(c));
    }
    const auto a = elementary(0, 2);
    const auto b = elementary(1, 2);
    for (const char* name : {"phi+", "phi-"}) {
        const auto report = quantum_bayes_check(named_state(name), a, b);
        expect_near(report.residualA, 0.0, 1e-10, std::string(name) + " residualA");
        expect_near(report.residualB, 0.0, 1e-10, std::string(name) + " residualB");
        expect(report.classification == BayesCase::Case1,
               std::string(name) + " classified " + to_string(report.classification));
        expect(report.conditionalBA && std::abs(*report.conditionalBA - report.bundle.pImp) <= 1e-10,
               std::string(name) + " conditional(B|A) equals P(A->B)");
        expect(report.conditionalAB && std::abs(*report.conditionalAB - report.bundle.pConv) <= 1e-10,
               std::string(name) + " conditional(A|B) equals P(B->A)");
    }
    for (const char* name : {"psi+", "psi-"}) {
        const auto report = quantum_bayes_check(named_state(name), a, b);
        expect_near(report.residualA, 0.25, 1e-10, std::string(name) + " residualA");
        expect_near(report.residualB, 0.25, 1e-10, std::string(name) + " residualB");
        expect(report.classification == BayesCase::Fails,
               std::string(name) + " classified " + to_string(report.classification));
    }
}

// All 16 binary connectives: Bayes identity, idempotence and commutativity
// exact on diagonals; dense Kronecker oracle within 1e-12.
void criterion_operator_identities() {
    const VariableOrder ab({"A", "B"});
    const std::vector<std::string> sixteen = {
        "0",      "A&B",   "A&!B", "A",    "!A&B", "B",    "A^B",    "A|B",
        "!(A|B)", "A<->B", "!B",   "A|!B", "!A",   "A->B", "!(A&B)", "1",
    };
    std::vector<DiagonalProjector> compiled;
    for (const auto& text : sixteen) compiled.push_back(compile(parse_formula(text), ab));

    for (std::size_t i = 0; i < compiled.size(); ++i)
        for (std::size_t j = i + 1; j < compiled.size(); ++j)
            expect(compiled[i].diagonal() != compiled[j].diagonal(),
                   "all sixteen columns distinct");

    for (std::size_t i = 0; i < compiled.size(); ++i)
        for (std::size_t j = 0; j < compiled.size(); ++j) {
            const auto& p = compiled[i];
            const auto& q = compiled[j];
            expect(meet(p, implies(p, q)) == meet(p, q),
                   "A*F(A->B) == A*B for " + sixteen[i] + ", " + sixteen[j]);
            expect(meet(q, implies(q, p)) == meet(p, q),
                   "B*F(B->A) == A*B for " + sixteen[i] + ", " + sixteen[j]);
            expect(meet(p, q) == meet(q, p), "commutativity");
        }
    for (std::size_t i = 0; i < compiled.size(); ++i)
        expect(meet(compiled[i], compiled[i]) == compiled[i], "idempotence of " + sixteen[i]);

    // dense oracle route: assemble each connective from the Kronecker
    // elementary operators through its multilinear form
    for (const auto& text : sixteen) {
        const Formula f = parse_formula(text);
        const auto poly = boole_polynomial(f, ab);
        DenseOperator assembled = DenseOperator::zeros(4);
        for (const auto& [mask, coeff] : poly.coefficients()) {
            DenseOperator term = DenseOperator::identity(4);
            for (std::size_t j = 0; j < 2; ++j)
                if (mask & (1u << j)) term = multiply(term, dense_kron_elementary(j, 2));
            assembled = add(assembled, scale(double(coeff), term));
        }
        expect(max_abs_difference(assembled, to_dense(compile(f, ab))) <= 1e-12,
               "dense oracle equivalence for " + text);
        expect(verify_projector(assembled, 1e-12), "dense projector check for " + text);
    }
}

// 500 random formulas: polynomial vs truth table exact, and real evaluation
// at marginals vs the Born mean on the tensor Bloch state within 1e-10.
void criterion_polynomial_oracle() {
    Rng rng(20240501);
    const std::vector<std::string> names = {"A", "B", "C", "D"};
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t variable_count = 1 + rng.index(4);
        const VariableOrder order({names.begin(), names.begin() + variable_count});
        const Formula f = testsupport::random_formula(rng, variable_count, 6);
        const auto poly = boole_polynomial(f, order);
        const auto table = truth_table(f, order);

        for (std::size_t r = 0; r < table.rows(); ++r) {
            std::uint32_t mask = 0;
            for (std::size_t j = 0; j < order.size(); ++j)
                if (order.bit(r, j)) mask |= 1u << j;
            if (poly.evaluate_bits(mask) != table.column[r]) {
                expect(false, "polynomial/table mismatch, trial " + std::to_string(trial));
                return;
            }
        }

        std::map<std::string, double> marginals;
        StateVector state = single_qubit(BlochAngles(0.0, 0.0));
        for (std::size_t j = 0; j < variable_count; ++j) {
            const double p = rng.real();
            marginals[order.name(j)] = p;
            const StateVector qubit = single_qubit(
                BlochAngles(2.0 * std::asin(std::sqrt(p)), rng.real(0.0, 6.28)));
            state = (j == 0) ? qubit : tensor(state, qubit);
        }
        const double via_polynomial = poly.evaluate(marginals);
        const double via_born = born_mean(state, compile(f, order));
        if (std::abs(via_polynomial - via_born) > 1e-10) {
            expect(false, "marginal evaluation mismatch, trial " + std::to_string(trial) +
                              ": poly " + std::to_string(via_polynomial) + " vs born " +
                              std::to_string(via_born));
            return;
        }
    }
}

// 1000 random unit states (n = 2..4): reconstruction, weight normalization,
// eigen-actions, and the closed-form residual, all within 1e-10.
void criterion_decomposition() {
    Rng rng(20240502);
    const std::vector<std::string> names = {"A", "B", "C", "D"};
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + rng.index(3);
        const VariableOrder order({names.begin(), names.begin() + n});
        const StateVector s = testsupport::random_state(rng, n);
        const DiagonalProjector a = (trial % 2 == 0)
                                        ? elementary(0, n)
                                        : compile(testsupport::random_formula(rng, n, 3), order);
        const DiagonalProjector b = (trial % 2 == 0)
                                        ? elementary(1, n)
                                        : compile(testsupport::random_formula(rng, n, 3), order);
        const Decomposition dec = decompose(s, a, b);

        double worst = 0.0;
        for (std::size_t r = 0; r < s.dimension(); ++r) {
            const auto sum = dec.c00.amplitudes()[r] + dec.c01.amplitudes()[r] +
                             dec.c10.amplitudes()[r] + dec.c11.amplitudes()[r];
            worst = std::max(worst, std::abs(sum - s.amplitudes()[r]));
        }
        if (worst > 1e-10) {
            expect(false, "reconstruction error " + std::to_string(worst));
            return;
        }
        if (std::abs(dec.weights.sum() - 1.0) > 1e-10) {
            expect(false, "weights sum to " + std::to_string(dec.weights.sum()));
            return;
        }

        // eigen-action equations
        auto action_ok = [&](const StateVector& component, const DiagonalProjector& p,
                             bool keeps) {
            for (std::size_t r = 0; r < component.dimension(); ++r) {
                const auto projected =
                    p.diagonal()[r] ? component.amplitudes()[r] : std::complex<double>{};
                const auto wanted = keeps ? component.amplitudes()[r] : std::complex<double>{};
                if (std::abs(projected - wanted) > 1e-10) return false;
            }
            return true;
        };
        const bool actions =
            action_ok(dec.c00, a, false) && action_ok(dec.c00, b, false) &&
            action_ok(dec.c01, a, false) && action_ok(dec.c01, b, true) &&
            action_ok(dec.c10, a, true) && action_ok(dec.c10, b, false) &&
            action_ok(dec.c11, a, true) && action_ok(dec.c11, b, true);
        if (!actions) {
            expect(false, "eigen-action equations violated, trial " + std::to_string(trial));
            return;
        }

        const auto bundle = probability_bundle(s, a, b);
        const double closed = dec.weights.w10 * (1.0 - dec.weights.w10 - dec.weights.w11);
        const double direct = bundle.pA * bundle.pImp - bundle.pAnd;
        if (std::abs(closed - direct) > 1e-10) {
            expect(false, "closed-form residual " + std::to_string(closed) + " vs direct " +
                              std::to_string(direct));
            return;
        }
    }
}

// pA + pImp = pB + pConv = 1 + pAnd on every named state and 1000 random
// states, including zero-prior states, within 1e-10.
void criterion_linear_relation() {
    const auto a2 = elementary(0, 2);
    const auto b2 = elementary(1, 2);
    for (const auto& name : named_state_inventory()) {
        const auto bundle = probability_bundle(named_state(name), a2, b2);
        const auto [ra, rb] = linear_relation_residuals(bundle);
        expect(std::abs(ra) <= 1e-10, name + " A-side linear relation");
        expect(std::abs(rb) <= 1e-10, name + " B-side linear relation");
    }
    // explicitly exercise the zero-prior rows
    for (const char* name : {"00", "01", "0+"}) {
        const auto bundle = probability_bundle(named_state(name), a2, b2);
        const auto [ra, rb] = linear_relation_residuals(bundle);
        expect(std::abs(ra) <= 1e-10 && std::abs(rb) <= 1e-10,
               std::string(name) + " zero-prior robustness");
    }

    Rng rng(20240503);
    const std::vector<std::string> names = {"A", "B", "C", "D"};
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + rng.index(3);
        const VariableOrder order({names.begin(), names.begin() + n});
        const StateVector s = testsupport::random_state(rng, n);
        const auto a = compile(testsupport::random_formula(rng, n, 3), order);
        const auto b = compile(testsupport::random_formula(rng, n, 3), order);
        const auto [ra, rb] = linear_relation_residuals(probability_bundle(s, a, b));
        if (std::abs(ra) > 1e-10 || std::abs(rb) > 1e-10) {
            expect(false, "linear relation violated, trial " + std::to_string(trial));
            return;
        }
    }
}

// 200 random (pA, pAnd): endpoints within 1e-12 and monotonicity in alpha.
void criterion_alpha_endpoints() {
    Rng rng(20240504);
    for (int trial = 0; trial < 200; ++trial) {
        const double pA = rng.real(0.01, 1.0);
        const double pAnd = rng.real(0.0, pA);
        const double bayes_end = alpha_implication(pA, pAnd, AlphaParameter(0.0));
        const double material_end = alpha_implication(pA, pAnd, AlphaParameter(1.0));
        expect(std::abs(bayes_end - pAnd / pA) <= 1e-12, "alpha = 0 endpoint");
        expect(std::abs(material_end - (1.0 - pA + pAnd)) <= 1e-12, "alpha = 1 endpoint");
        double previous = bayes_end;
        for (int step = 1; step <= 20; ++step) {
            const double value = alpha_implication(pA, pAnd, AlphaParameter(step / 20.0));
            if (value < previous - 1e-12) {
                expect(false, "monotonicity violated at alpha = " + std::to_string(step / 20.0));
                return;
            }
            previous = value;
        }
    }
}

// 200 random spaces, up to 5 events: Bonferroni <= union <= Boole, and the
// pairwise implication bounds, within 1e-10.
void criterion_bounds() {
    Rng rng(20240505);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng.index(4);  // up to 5 variables
        const auto space = testsupport::random_space(rng, n);
        std::vector<Formula> events;
        const std::size_t count = 1 + rng.index(5);
        for (std::size_t k = 0; k < count; ++k)
            events.push_back(testsupport::random_formula(rng, n, 3));
        const auto bounds = probability_bounds(space, events);
        if (bounds.bonferroni_lower > bounds.union_probability + 1e-10 ||
            bounds.union_probability > bounds.boole_upper + 1e-10) {
            expect(false, "bound ordering violated, trial " + std::to_string(trial));
            return;
        }
        if (count == 2) {
            if (!bounds.implication) {
                expect(false, "pair bounds missing");
                return;
            }
            if (bounds.implication->lower > bounds.implication->value + 1e-10 ||
                bounds.implication->value > bounds.implication->upper + 1e-10) {
                expect(false, "implication bounds violated, trial " + std::to_string(trial));
                return;
            }
        }
    }
}

// 200 random spaces: the diagonal sqrt-weight state reproduces every
// classical event probability through the Born rule, within 1e-10.
void criterion_classical_reduction() {
    Rng rng(20240506);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.index(4);
        const auto space = testsupport::random_space(rng, n);
        std::vector<std::complex<double>> amplitudes;
        amplitudes.reserve(space.atom_count());
        for (double w : space.weights()) amplitudes.emplace_back(std::sqrt(w), 0.0);
        const auto s = StateVector::from_amplitudes(std::move(amplitudes));
        const Formula f = testsupport::random_formula(rng, n, 4);
        const double quantum = born_mean(s, compile(f, space.order()));
        const double classical = event_probability(space, f);
        if (std::abs(quantum - classical) > 1e-10) {
            expect(false, "reduction mismatch, trial " + std::to_string(trial) + ": " +
                              std::to_string(quantum) + " vs " + std::to_string(classical));
            return;
        }
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria = {
        {"truth-table reproduction (40 cells, exact)", criterion_truth_tables},
        {"basis-state probabilities (tol 1e-12)", criterion_basis_states},
        {"uniform-family bundle and 1/8 residuals (tol 1e-10)", criterion_uniform_family},
        {"mixed-basis rows and classifier labels (tol 1e-10)", criterion_mixed_basis},
        {"Bell rows, equalities and 1/4 residuals (tol 1e-10)", criterion_bell_states},
        {"operator identities over all 16 connectives (oracle tol 1e-12)",
         criterion_operator_identities},
        {"polynomial oracle, 500 random formulas (tol 1e-10)", criterion_polynomial_oracle},
        {"decomposition properties, 1000 random states (tol 1e-10)", criterion_decomposition},
        {"linear relation universality, zero-prior safe (tol 1e-10)", criterion_linear_relation},
        {"alpha-interpolation endpoints, 200 draws (tol 1e-12)", criterion_alpha_endpoints},
        {"Boole/Bonferroni/implication bounds, 200 spaces (tol 1e-10)", criterion_bounds},
        {"classical-quantum reduction, 200 spaces (tol 1e-10)", criterion_classical_reduction},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        failures_in_current = 0;
        criteria[i].run();
        const bool ok = failures_in_current == 0;
        std::printf("%s  criterion %2zu: %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name);
        if (!ok) ++failed;
    }
    if (failed != 0) std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
