#pragma once

// JSON file formats and report serialization.
//
// State file:  {"n": 2, "amplitudes": [[re, im], ...]}   (row order 00, 01, ...)
//          or  {"name": "phi+"}
//          optional "normalize": true requests renormalization.
// Space file:  {"variables": ["A", "B"], "weights": [w00, w01, w10, w11]}
//
// Reports are emitted with probabilities rounded to 12 significant digits so
// repeated runs are byte-identical.

#include <optional>
#include <string>
#include <string_view>

#include "eigenlogic/bayes.hpp"
#include "eigenlogic/born.hpp"
#include "eigenlogic/state.hpp"

namespace eigenlogic {

// Parse a state file body. Throws InvalidArgument / NormalizationError on
// malformed content.
StateVector parse_state_json(std::string_view text);

// Parse a probability-space file body.
ProbabilitySpace parse_space_json(std::string_view text);

// "%.12g" rendering used for all probability output.
std::string format_probability(double value);

// Value rounded to 12 significant digits (via its decimal rendering), used
// before embedding numbers in JSON reports.
double round_to_12_digits(double value);

// If value is within 1e-12 of a fraction with denominator <= 16, renders it
// as "p/q" (or the bare integer); otherwise falls back to format_probability.
std::string rational_or_decimal(double value);

// {"state": <label>, "pA": ..., "pB": ..., "pAnd": ..., "pOr": ...,
//  "pImp": ..., "pConv": ..., "weights": [w00, w01, w10, w11]}
// state_label is emitted verbatim as a JSON string.
std::string bundle_report_json(const std::string& state_label, const ProbabilityBundle& bundle,
                               const DecompositionWeights& weights);

// Flat object with keys pA pB pAnd pOr pImp pConv w00 w01 w10 w11
// residualA residualB conditionalBA conditionalAB case; undefined
// conditionals are null.
std::string bayes_report_json(const std::string& state_label, const BayesReport& report);

}  // namespace eigenlogic
