#include "eigenlogic/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>

#include <json.hpp>

#include "eigenlogic/errors.hpp"

namespace eigenlogic {

namespace {

nlohmann::json parse_or_throw(std::string_view text, const char* what) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw InvalidArgument(std::string(what) + ": not valid JSON");
    return doc;
}

std::vector<std::complex<double>> read_amplitudes(const nlohmann::json& node) {
    if (!node.is_array()) throw InvalidArgument("state file: \"amplitudes\" must be an array");
    std::vector<std::complex<double>> amplitudes;
    amplitudes.reserve(node.size());
    for (const auto& entry : node) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number())
            throw InvalidArgument("state file: each amplitude must be a [re, im] pair");
        amplitudes.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return amplitudes;
}

}  // namespace

StateVector parse_state_json(std::string_view text) {
    const nlohmann::json doc = parse_or_throw(text, "state file");
    if (!doc.is_object()) throw InvalidArgument("state file: top level must be an object");

    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw InvalidArgument("state file: \"name\" must be a string");
        return named_state(doc["name"].get<std::string>());
    }
    if (!doc.contains("amplitudes"))
        throw InvalidArgument("state file: need \"amplitudes\" or \"name\"");

    auto amplitudes = read_amplitudes(doc["amplitudes"]);
    if (doc.contains("n")) {
        if (!doc["n"].is_number_unsigned())
            throw InvalidArgument("state file: \"n\" must be a nonnegative integer");
        const auto n = doc["n"].get<std::size_t>();
        if (n == 0 || n > kMaxDiagonalQubits ||
            amplitudes.size() != (std::size_t{1} << n))
            throw InvalidArgument("state file: \"n\" does not match the amplitude count");
    }
    const bool normalize = doc.value("normalize", false);
    return StateVector::from_amplitudes(std::move(amplitudes), normalize);
}

ProbabilitySpace parse_space_json(std::string_view text) {
    const nlohmann::json doc = parse_or_throw(text, "space file");
    if (!doc.is_object() || !doc.contains("variables") || !doc.contains("weights"))
        throw InvalidArgument("space file: need \"variables\" and \"weights\"");
    if (!doc["variables"].is_array())
        throw InvalidArgument("space file: \"variables\" must be an array of names");
    std::vector<std::string> variables;
    for (const auto& v : doc["variables"]) {
        if (!v.is_string()) throw InvalidArgument("space file: variable names must be strings");
        variables.push_back(v.get<std::string>());
    }
    if (!doc["weights"].is_array())
        throw InvalidArgument("space file: \"weights\" must be an array of numbers");
    std::vector<double> weights;
    for (const auto& w : doc["weights"]) {
        if (!w.is_number()) throw InvalidArgument("space file: weights must be numbers");
        weights.push_back(w.get<double>());
    }
    return ProbabilitySpace(VariableOrder(std::move(variables)), std::move(weights));
}

std::string format_probability(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

double round_to_12_digits(double value) {
    return std::strtod(format_probability(value).c_str(), nullptr);
}

std::string rational_or_decimal(double value) {
    for (long den = 1; den <= 16; ++den) {
        const double scaled = value * static_cast<double>(den);
        const long num = std::lround(scaled);
        if (std::abs(scaled - static_cast<double>(num)) <= 1e-12 * static_cast<double>(den)) {
            if (den == 1) return std::to_string(num);
            const long g = std::gcd(num, den);
            if (den / g == 1) return std::to_string(num / g);
            return std::to_string(num / g) + "/" + std::to_string(den / g);
        }
    }
    return format_probability(value);
}

std::string bundle_report_json(const std::string& state_label, const ProbabilityBundle& bundle,
                               const DecompositionWeights& weights) {
    nlohmann::ordered_json doc;
    doc["state"] = state_label;
    doc["pA"] = round_to_12_digits(bundle.pA);
    doc["pB"] = round_to_12_digits(bundle.pB);
    doc["pAnd"] = round_to_12_digits(bundle.pAnd);
    doc["pOr"] = round_to_12_digits(bundle.pOr);
    doc["pImp"] = round_to_12_digits(bundle.pImp);
    doc["pConv"] = round_to_12_digits(bundle.pConv);
    doc["weights"] = {round_to_12_digits(weights.w00), round_to_12_digits(weights.w01),
                      round_to_12_digits(weights.w10), round_to_12_digits(weights.w11)};
    return doc.dump(2) + "\n";
}

std::string bayes_report_json(const std::string& state_label, const BayesReport& report) {
    nlohmann::ordered_json doc;
    doc["state"] = state_label;
    doc["pA"] = round_to_12_digits(report.bundle.pA);
    doc["pB"] = round_to_12_digits(report.bundle.pB);
    doc["pAnd"] = round_to_12_digits(report.bundle.pAnd);
    doc["pOr"] = round_to_12_digits(report.bundle.pOr);
    doc["pImp"] = round_to_12_digits(report.bundle.pImp);
    doc["pConv"] = round_to_12_digits(report.bundle.pConv);
    doc["w00"] = round_to_12_digits(report.weights.w00);
    doc["w01"] = round_to_12_digits(report.weights.w01);
    doc["w10"] = round_to_12_digits(report.weights.w10);
    doc["w11"] = round_to_12_digits(report.weights.w11);
    doc["residualA"] = round_to_12_digits(report.residualA);
    doc["residualB"] = round_to_12_digits(report.residualB);
    if (report.conditionalBA)
        doc["conditionalBA"] = round_to_12_digits(*report.conditionalBA);
    else
        doc["conditionalBA"] = nullptr;
    if (report.conditionalAB)
        doc["conditionalAB"] = round_to_12_digits(*report.conditionalAB);
    else
        doc["conditionalAB"] = nullptr;
    doc["case"] = to_string(report.classification);
    return doc.dump(2) + "\n";
}

}  // namespace eigenlogic
