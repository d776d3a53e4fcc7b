#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "eigenlogic/eigenlogic.hpp"

namespace elcli {

namespace {

using namespace eigenlogic;
using ordered_json = nlohmann::ordered_json;

// Mapped to exit code 4 (invalid state/space source).
class SourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SourceError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

StateVector load_state(const std::string& source) {
    try {
        if (!source.empty() && source.front() == '@')
            return parse_state_json(read_file(source.substr(1)));
        return named_state(source);
    } catch (const SourceError&) {
        throw;
    } catch (const Error& e) {
        throw SourceError(e.what());
    }
}

ProbabilitySpace load_space(const std::string& source) {
    try {
        const std::string path = source.front() == '@' ? source.substr(1) : source;
        return parse_space_json(read_file(path));
    } catch (const SourceError&) {
        throw;
    } catch (const Error& e) {
        throw SourceError(e.what());
    }
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : csv) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

std::vector<Formula> parse_all(const std::vector<std::string>& texts) {
    std::vector<Formula> formulas;
    formulas.reserve(texts.size());
    for (const auto& text : texts) formulas.push_back(parse_formula(text));
    return formulas;
}

VariableOrder resolve_order(const CommonOptions& opts, const std::vector<Formula>& formulas) {
    if (opts.order_csv) return VariableOrder(split_csv(*opts.order_csv));
    return VariableOrder::for_formulas(formulas);
}

std::string row_label(std::size_t row, std::size_t bits) {
    std::string label(bits, '0');
    for (std::size_t j = 0; j < bits; ++j)
        if ((row >> (bits - 1 - j)) & 1u) label[j] = '1';
    return label;
}

// Column-aligned rendering: cells padded with spaces to the widest entry,
// two-space separators, no trailing whitespace.
void render_table(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
    std::vector<std::size_t> widths(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    auto emit = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            line += cells[c];
            if (c + 1 < cells.size())
                line += std::string(widths[c] - cells[c].size() + 2, ' ');
        }
        out << line << "\n";
    };
    emit(header);
    for (const auto& row : rows) emit(row);
}

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const SourceError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

// ── truthtable ───────────────────────────────────────────────────────────────

int cmd_truthtable(const std::vector<std::string>& texts, const CommonOptions& opts,
                   std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto formulas = parse_all(texts);
        const VariableOrder order = resolve_order(opts, formulas);

        std::vector<std::vector<std::uint8_t>> columns;
        for (const auto& f : formulas) columns.push_back(truth_table(f, order).column);
        const std::size_t rows = order.dimension();

        std::vector<std::pair<std::string, std::string>> equivalent;
        std::vector<std::string> tautologies, contradictions;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            for (std::size_t j = i + 1; j < columns.size(); ++j)
                if (columns[i] == columns[j]) equivalent.emplace_back(texts[i], texts[j]);
            if (std::all_of(columns[i].begin(), columns[i].end(), [](auto v) { return v == 1; }))
                tautologies.push_back(texts[i]);
            if (std::all_of(columns[i].begin(), columns[i].end(), [](auto v) { return v == 0; }))
                contradictions.push_back(texts[i]);
        }

        if (opts.json) {
            ordered_json doc;
            doc["order"] = order.names();
            ordered_json row_names = ordered_json::array();
            for (std::size_t r = 0; r < rows; ++r) row_names.push_back(row_label(r, order.size()));
            doc["rows"] = row_names;
            doc["columns"] = ordered_json::array();
            for (std::size_t i = 0; i < columns.size(); ++i) {
                ordered_json column;
                column["formula"] = texts[i];
                column["values"] = columns[i];
                doc["columns"].push_back(column);
            }
            doc["equivalent"] = ordered_json::array();
            for (const auto& [x, y] : equivalent) doc["equivalent"].push_back({x, y});
            doc["tautologies"] = tautologies;
            doc["contradictions"] = contradictions;
            out << doc.dump(2) << "\n";
            return 0;
        }

        std::vector<std::string> header = {"row"};
        header.insert(header.end(), texts.begin(), texts.end());
        std::vector<std::vector<std::string>> body;
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<std::string> cells = {row_label(r, order.size())};
            for (const auto& column : columns) cells.push_back(column[r] ? "1" : "0");
            body.push_back(std::move(cells));
        }
        render_table(header, body, out);
        for (const auto& [x, y] : equivalent) out << "EQUIVALENT: " << x << " == " << y << "\n";
        for (const auto& f : tautologies) out << "TAUTOLOGY: " << f << "\n";
        for (const auto& f : contradictions) out << "CONTRADICTION: " << f << "\n";
        return 0;
    });
}

// ── compile ──────────────────────────────────────────────────────────────────

int cmd_compile(const std::string& text, const CommonOptions& opts, std::ostream& out,
                std::ostream& err) {
    return guarded(err, [&] {
        const Formula f = parse_formula(text);
        const VariableOrder order = resolve_order(opts, {f});
        const DiagonalProjector projector = compile(f, order);
        const MultilinearPolynomial poly = boole_polynomial(f, order);

        if (opts.json) {
            ordered_json doc;
            doc["formula"] = text;
            doc["order"] = order.names();
            doc["dim"] = projector.dimension();
            std::string bits;
            for (auto v : projector.diagonal()) bits += v ? '1' : '0';
            doc["diag"] = bits;
            doc["polynomial"] = poly.to_string();
            out << doc.dump(2) << "\n";
            return 0;
        }

        std::string joined;
        for (const auto& name : order.names()) {
            if (!joined.empty()) joined += ",";
            joined += name;
        }
        out << "formula: " << text << "\n";
        out << "order: " << joined << "\n";
        out << projector.serialize() << "\n";
        out << "polynomial: " << poly.to_string() << "\n";
        return 0;
    });
}

// ── measure ──────────────────────────────────────────────────────────────────

int cmd_measure(const std::string& state_source, const std::vector<std::string>& texts,
                const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const StateVector state = load_state(state_source);
        const auto formulas = parse_all(texts);
        const VariableOrder order = resolve_order(opts, formulas);
        if (order.dimension() != state.dimension())
            throw DimensionMismatch("order of " + std::to_string(order.size()) +
                                    " variable(s) (dim " + std::to_string(order.dimension()) +
                                    ") does not match state dimension " +
                                    std::to_string(state.dimension()));

        std::vector<double> means;
        for (const auto& f : formulas) means.push_back(born_mean(state, compile(f, order)));

        const bool with_bundle = order.size() >= 2;
        std::optional<ProbabilityBundle> bundle;
        std::optional<DecompositionWeights> weights;
        if (with_bundle) {
            const auto a = elementary(0, order.size());
            const auto b = elementary(1, order.size());
            bundle = probability_bundle(state, a, b);
            weights = decompose(state, a, b).weights;
        }

        if (opts.json) {
            ordered_json doc;
            doc["state"] = state_source;
            doc["order"] = order.names();
            ordered_json mean_obj;
            for (std::size_t i = 0; i < texts.size(); ++i)
                mean_obj[texts[i]] = round_to_12_digits(means[i]);
            doc["means"] = mean_obj;
            if (with_bundle) {
                doc["pA"] = round_to_12_digits(bundle->pA);
                doc["pB"] = round_to_12_digits(bundle->pB);
                doc["pAnd"] = round_to_12_digits(bundle->pAnd);
                doc["pOr"] = round_to_12_digits(bundle->pOr);
                doc["pImp"] = round_to_12_digits(bundle->pImp);
                doc["pConv"] = round_to_12_digits(bundle->pConv);
                doc["weights"] = {round_to_12_digits(weights->w00), round_to_12_digits(weights->w01),
                                  round_to_12_digits(weights->w10), round_to_12_digits(weights->w11)};
            }
            out << doc.dump(2) << "\n";
            return 0;
        }

        out << "state: " << state_source << "\n";
        for (std::size_t i = 0; i < texts.size(); ++i)
            out << "P(" << texts[i] << ") = " << format_probability(means[i]) << "\n";
        if (with_bundle) {
            out << "bundle for A = " << order.name(0) << ", B = " << order.name(1) << ":\n";
            out << "  pA = " << format_probability(bundle->pA) << "\n";
            out << "  pB = " << format_probability(bundle->pB) << "\n";
            out << "  pAnd = " << format_probability(bundle->pAnd) << "\n";
            out << "  pOr = " << format_probability(bundle->pOr) << "\n";
            out << "  pImp = " << format_probability(bundle->pImp) << "\n";
            out << "  pConv = " << format_probability(bundle->pConv) << "\n";
            out << "  weights = [" << format_probability(weights->w00) << ", "
                << format_probability(weights->w01) << ", " << format_probability(weights->w10)
                << ", " << format_probability(weights->w11) << "]\n";
        }
        return 0;
    });
}

// ── bayes ────────────────────────────────────────────────────────────────────

int cmd_bayes(const std::string& state_source, const std::string& text_a,
              const std::string& text_b, double tol, std::optional<double> alpha,
              const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const StateVector state = load_state(state_source);
        const Formula fa = parse_formula(text_a);
        const Formula fb = parse_formula(text_b);
        const VariableOrder order = resolve_order(opts, {fa, fb});
        if (order.dimension() != state.dimension())
            throw DimensionMismatch("order of " + std::to_string(order.size()) +
                                    " variable(s) (dim " + std::to_string(order.dimension()) +
                                    ") does not match state dimension " +
                                    std::to_string(state.dimension()));

        const auto a = compile(fa, order);
        const auto b = compile(fb, order);
        const BayesReport report = quantum_bayes_check(state, a, b, tol);

        std::optional<double> alpha_value;
        std::string alpha_note;
        if (alpha) {
            try {
                alpha_value =
                    alpha_implication(report.bundle.pA, report.bundle.pAnd, AlphaParameter(*alpha));
            } catch (const Error& e) {
                alpha_note = e.what();
            }
        }

        const auto c = report.classification;
        const bool rule_holds = c == BayesCase::Case1 || c == BayesCase::Case2 ||
                                c == BayesCase::Case3 || c == BayesCase::Case4;

        if (opts.json) {
            // the flat serialized report plus the command context
            ordered_json doc = ordered_json::parse(bayes_report_json(state_source, report));
            doc["A"] = text_a;
            doc["B"] = text_b;
            if (alpha) {
                doc["alpha"] = *alpha;
                if (alpha_value)
                    doc["alphaImplication"] = round_to_12_digits(*alpha_value);
                else
                    doc["alphaImplication"] = nullptr;
            }
            out << doc.dump(2) << "\n";
            return rule_holds ? 0 : 1;
        }

        out << "state: " << state_source << "\n";
        out << "A: " << text_a << "\n";
        out << "B: " << text_b << "\n";
        out << "pA = " << format_probability(report.bundle.pA)
            << "  pB = " << format_probability(report.bundle.pB)
            << "  pAnd = " << format_probability(report.bundle.pAnd)
            << "  pOr = " << format_probability(report.bundle.pOr)
            << "  pImp = " << format_probability(report.bundle.pImp)
            << "  pConv = " << format_probability(report.bundle.pConv) << "\n";
        out << "weights: w00 = " << format_probability(report.weights.w00)
            << "  w01 = " << format_probability(report.weights.w01)
            << "  w10 = " << format_probability(report.weights.w10)
            << "  w11 = " << format_probability(report.weights.w11) << "\n";
        out << "residualA = " << format_probability(report.residualA) << "\n";
        out << "residualB = " << format_probability(report.residualB) << "\n";
        out << "conditionalBA = "
            << (report.conditionalBA ? format_probability(*report.conditionalBA) : "undefined")
            << "\n";
        out << "conditionalAB = "
            << (report.conditionalAB ? format_probability(*report.conditionalAB) : "undefined")
            << "\n";
        if (alpha) {
            out << "alphaImplication(alpha = " << format_probability(*alpha) << ") = "
                << (alpha_value ? format_probability(*alpha_value) : "undefined") << "\n";
            if (!alpha_note.empty()) out << "  note: " << alpha_note << "\n";
        }
        out << "case: " << to_string(c) << "\n";
        return rule_holds ? 0 : 1;
    });
}

// ── tables ───────────────────────────────────────────────────────────────────

namespace {

const std::vector<std::string>& probability_headers() {
    static const std::vector<std::string> headers = {
        "P(A)",        "P(B)",        "P(A->B)", "P(B->A)",
        "P(A)P(A->B)", "P(B)P(B->A)", "P(A&B)",
    };
    return headers;
}

std::vector<std::string> probability_cells(const std::string& state_name) {
    const StateVector state = named_state(state_name);
    const auto bundle = probability_bundle(state, elementary(0, 2), elementary(1, 2));
    return {
        rational_or_decimal(bundle.pA),
        rational_or_decimal(bundle.pB),
        rational_or_decimal(bundle.pImp),
        rational_or_decimal(bundle.pConv),
        rational_or_decimal(bundle.pA * bundle.pImp),
        rational_or_decimal(bundle.pB * bundle.pConv),
        rational_or_decimal(bundle.pAnd),
    };
}

struct TableSpec {
    std::string caption;
    std::vector<std::string> states;  // row labels; row values via probability_cells
};

ordered_json probability_table_json(const TableSpec& spec,
                                    const std::vector<std::vector<std::string>>& rows) {
    ordered_json doc;
    doc["caption"] = spec.caption;
    doc["columns"] = probability_headers();
    doc["rows"] = ordered_json::array();
    for (std::size_t i = 0; i < spec.states.size(); ++i) {
        ordered_json row;
        row["state"] = spec.states[i];
        row["values"] = rows[i];
        doc["rows"].push_back(row);
    }
    return doc;
}

}  // namespace

int cmd_tables(bool json, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const VariableOrder ab({"A", "B"});
        const std::vector<std::string> connectives = {"A",  "B",  "A&B", "A|B",  "A->B",
                                                      "B->A", "!A", "!B",  "!A|B", "A|!B"};
        std::vector<std::vector<std::uint8_t>> truth_columns;
        for (const auto& text : connectives)
            truth_columns.push_back(truth_table(parse_formula(text), ab).column);

        // the x-basis family and the cluster state share one row; verify
        // before printing it once
        const std::vector<std::string> uniform_family = {"++", "+-", "-+", "--", "cluster"};
        const auto uniform_row = probability_cells("++");
        for (const auto& name : uniform_family)
            if (probability_cells(name) != uniform_row)
                throw Error("uniform-family states disagree; refusing to print table 3");

        const TableSpec table2{"computational basis states", {"00", "01", "10", "11"}};
        const TableSpec table3{"uniform superposition states (++, +-, -+, --, cluster)",
                               {"uniform"}};
        const TableSpec table4{"mixed-basis product states", {"0+", "+0", "1+", "+1"}};
        const TableSpec table5{"Bell states", {"phi+", "phi-", "psi+", "psi-"}};

        auto rows_for = [&](const TableSpec& spec) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& name : spec.states)
                rows.push_back(name == "uniform" ? uniform_row : probability_cells(name));
            return rows;
        };

        if (json) {
            ordered_json doc;
            ordered_json table1;
            table1["caption"] = "truth tables for the primitive connectives";
            table1["rows"] = {"00", "01", "10", "11"};
            table1["columns"] = ordered_json::array();
            for (std::size_t i = 0; i < connectives.size(); ++i) {
                ordered_json column;
                column["formula"] = connectives[i];
                column["values"] = truth_columns[i];
                table1["columns"].push_back(column);
            }
            doc["table1"] = table1;
            doc["table2"] = probability_table_json(table2, rows_for(table2));
            doc["table3"] = probability_table_json(table3, rows_for(table3));
            doc["table4"] = probability_table_json(table4, rows_for(table4));
            doc["table5"] = probability_table_json(table5, rows_for(table5));
            out << doc.dump(2) << "\n";
            return 0;
        }

        out << "Table 1: truth tables for the primitive connectives\n";
        {
            std::vector<std::string> header = {"row"};
            header.insert(header.end(), connectives.begin(), connectives.end());
            std::vector<std::vector<std::string>> body;
            for (std::size_t r = 0; r < 4; ++r) {
                std::vector<std::string> cells = {row_label(r, 2)};
                for (const auto& column : truth_columns) cells.push_back(column[r] ? "1" : "0");
                body.push_back(std::move(cells));
            }
            render_table(header, body, out);
        }
        int index = 2;
        for (const TableSpec* spec : {&table2, &table3, &table4, &table5}) {
            out << "\nTable " << index++ << ": " << spec->caption << "\n";
            std::vector<std::string> header = {"state"};
            const auto& columns = probability_headers();
            header.insert(header.end(), columns.begin(), columns.end());
            std::vector<std::vector<std::string>> body;
            const auto rows = rows_for(*spec);
            for (std::size_t i = 0; i < spec->states.size(); ++i) {
                std::vector<std::string> cells = {spec->states[i]};
                cells.insert(cells.end(), rows[i].begin(), rows[i].end());
                body.push_back(std::move(cells));
            }
            render_table(header, body, out);
        }
        return 0;
    });
}

// ── bounds ───────────────────────────────────────────────────────────────────

int cmd_bounds(const std::optional<std::string>& space_source,
               const std::vector<std::string>& texts, const CommonOptions& opts,
               std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto events = parse_all(texts);
        std::optional<ProbabilitySpace> space;
        std::string space_label;
        if (space_source) {
            space = load_space(*space_source);
            space_label = *space_source;
        } else {
            const VariableOrder order = VariableOrder::for_formulas(events);
            space = ProbabilitySpace::uniform(order);
            std::string joined;
            for (const auto& name : order.names()) {
                if (!joined.empty()) joined += ",";
                joined += name;
            }
            space_label = "uniform over " + joined;
        }

        const ProbabilityBounds bounds = probability_bounds(*space, events);

        if (opts.json) {
            ordered_json doc;
            doc["space"] = space_label;
            doc["events"] = texts;
            doc["union"] = round_to_12_digits(bounds.union_probability);
            doc["boole_upper"] = round_to_12_digits(bounds.boole_upper);
            doc["bonferroni_lower"] = round_to_12_digits(bounds.bonferroni_lower);
            if (bounds.implication) {
                doc["implication"] = {
                    {"lower", round_to_12_digits(bounds.implication->lower)},
                    {"value", round_to_12_digits(bounds.implication->value)},
                    {"upper", round_to_12_digits(bounds.implication->upper)},
                };
            }
            out << doc.dump(2) << "\n";
            return 0;
        }

        out << "space: " << space_label << "\n";
        std::string joined;
        for (const auto& text : texts) {
            if (!joined.empty()) joined += ", ";
            joined += text;
        }
        out << "events: " << joined << "\n";
        out << "union = " << format_probability(bounds.union_probability) << "\n";
        out << "boole_upper = " << format_probability(bounds.boole_upper) << "\n";
        out << "bonferroni_lower = " << format_probability(bounds.bonferroni_lower) << "\n";
        if (bounds.implication) {
            out << "implication bounds: P(B) = " << format_probability(bounds.implication->lower)
                << " <= P(A->B) = " << format_probability(bounds.implication->value)
                << " <= 1 - P(A) + P(B) = " << format_probability(bounds.implication->upper)
                << "\n";
        }
        return 0;
    });
}

}  // namespace elcli
