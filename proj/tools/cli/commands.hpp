#pragma once

// Subcommand implementations behind the eigenlogic binary. Each returns the
// process exit code and writes only to the supplied streams:
//   0  success (for bayes: the quantum-like rule holds, case1..case4)
//   1  bayes reporting outcome: rule fails / partial / degenerate
//   2  formula parse error (diagnostics carry a byte offset)
//   3  dimension mismatch between state and variable order
//   4  invalid state or space source (file or name)

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace elcli {

struct CommonOptions {
    std::optional<std::string> order_csv;  // e.g. "A,B"
    bool json = false;
};

int cmd_truthtable(const std::vector<std::string>& formulas, const CommonOptions& opts,
                   std::ostream& out, std::ostream& err);

int cmd_compile(const std::string& formula, const CommonOptions& opts, std::ostream& out,
                std::ostream& err);

int cmd_measure(const std::string& state_source, const std::vector<std::string>& formulas,
                const CommonOptions& opts, std::ostream& out, std::ostream& err);

int cmd_bayes(const std::string& state_source, const std::string& formula_a,
              const std::string& formula_b, double tol, std::optional<double> alpha,
              const CommonOptions& opts, std::ostream& out, std::ostream& err);

int cmd_tables(bool json, std::ostream& out, std::ostream& err);

int cmd_bounds(const std::optional<std::string>& space_source,
               const std::vector<std::string>& events, const CommonOptions& opts,
               std::ostream& out, std::ostream& err);

}  // namespace elcli
