#include <doctest.h>

#include <cmath>

#include "eigenlogic/io.hpp"
#include "support.hpp"

using namespace eigenlogic;

TEST_CASE("state files") {
    const auto named = parse_state_json(R"({"name": "phi+"})");
    CHECK(named.amplitudes() == named_state("phi+").amplitudes());

    const auto explicit_state = parse_state_json(
        R"({"n": 2, "amplitudes": [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]})");
    CHECK(explicit_state.amplitude(0) == std::complex<double>(1.0));

    const auto rescaled =
        parse_state_json(R"({"amplitudes": [[1, 0], [1, 0]], "normalize": true})");
    CHECK(std::abs(rescaled.norm_squared() - 1.0) <= kNormTol);

    CHECK_THROWS_AS(parse_state_json("not json"), InvalidArgument);
    CHECK_THROWS_AS(parse_state_json(R"({"name": "bogus"})"), InvalidArgument);
    CHECK_THROWS_AS(parse_state_json(R"({"amplitudes": [[1, 0], [1, 0]]})"), NormalizationError);
    CHECK_THROWS_AS(parse_state_json(R"({"n": 3, "amplitudes": [[1, 0], [0, 0]]})"),
                    InvalidArgument);
    CHECK_THROWS_AS(parse_state_json(R"({"amplitudes": [[1, 0], [0, 0], [0, 0]]})"),
                    InvalidArgument);
    CHECK_THROWS_AS(parse_state_json(R"({})"), InvalidArgument);
}

TEST_CASE("space files") {
    const auto space = parse_space_json(
        R"({"variables": ["A", "B"], "weights": [0.25, 0.25, 0.25, 0.25]})");
    CHECK(space.order().names() == std::vector<std::string>{"A", "B"});
    CHECK(space.weights()[0] == 0.25);

    CHECK_THROWS_AS(parse_space_json(R"({"variables": ["A"], "weights": [0.3, 0.3]})"),
                    NormalizationError);
    CHECK_THROWS_AS(parse_space_json(R"({"weights": [1.0]})"), InvalidArgument);
    CHECK_THROWS_AS(parse_space_json(R"({"variables": ["A", "A"], "weights": [1, 0, 0, 0]})"),
                    InvalidArgument);
}

TEST_CASE("probability formatting") {
    CHECK(format_probability(0.25) == "0.25");
    CHECK(format_probability(1.0) == "1");
    CHECK(format_probability(1.0 / 3.0) == "0.333333333333");
    CHECK(round_to_12_digits(1.0 / 3.0) == 0.333333333333);

    CHECK(rational_or_decimal(0.5) == "1/2");
    CHECK(rational_or_decimal(0.375) == "3/8");
    CHECK(rational_or_decimal(0.75) == "3/4");
    CHECK(rational_or_decimal(1.0) == "1");
    CHECK(rational_or_decimal(0.0) == "0");
    CHECK(rational_or_decimal(-0.5) == "-1/2");
    CHECK(rational_or_decimal(0.1234567) == "0.1234567");
}

TEST_CASE("reports are stable and carry the exact keys") {
    const auto a = elementary(0, 2);
    const auto b = elementary(1, 2);
    const auto s = named_state("1+");

    const auto bundle = probability_bundle(s, a, b);
    const auto weights = decompose(s, a, b).weights;
    const std::string bundle_json = bundle_report_json("1+", bundle, weights);
    CHECK(bundle_json.find("\"state\": \"1+\"") != std::string::npos);
    CHECK(bundle_json.find("\"pA\": 1.0") != std::string::npos);
    CHECK(bundle_json.find("\"pImp\": 0.5") != std::string::npos);
    CHECK(bundle_json.find("\"weights\"") != std::string::npos);
    CHECK(bundle_json == bundle_report_json("1+", bundle, weights));  // deterministic

    const auto report = quantum_bayes_check(named_state("0+"), a, b);
    const std::string report_json = bayes_report_json("0+", report);
    CHECK(report_json.find("\"case\": \"holds_A_only\"") != std::string::npos);
    CHECK(report_json.find("\"conditionalBA\": null") != std::string::npos);
    CHECK(report_json.find("\"residualB\": 0.25") != std::string::npos);
    for (const char* key : {"pA", "pB", "pAnd", "pOr", "pImp", "pConv", "w00", "w01", "w10",
                            "w11", "residualA", "residualB", "conditionalBA", "conditionalAB",
                            "case"}) {
        CAPTURE(key);
        CHECK(report_json.find("\"" + std::string(key) + "\":") != std::string::npos);
    }
}
