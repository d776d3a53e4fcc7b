#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "eigenlogic/tolerances.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Compile propositional formulas into projection operators, measure them "
                 "against quantum states, and check Bayes-like inference identities."};
    app.require_subcommand(1);

    elcli::CommonOptions opts;
    std::string order_csv;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order", order_csv,
                        "Comma-separated variable order (first = most significant bit); "
                        "defaults to the sorted free variables");
        sub->add_flag("--json", opts.json, "Emit JSON instead of text");
    };

    std::vector<std::string> formulas;
    std::string formula;
    std::string state_source;
    std::string formula_a, formula_b;
    double tol = eigenlogic::kDefaultClassifyTol;
    std::optional<double> alpha;
    std::optional<std::string> space_source;

    CLI::App* truthtable = app.add_subcommand("truthtable", "Print truth-table columns");
    truthtable->add_option("formula", formulas, "Formula(s) to tabulate")->required();
    add_common(truthtable);

    CLI::App* compile_cmd = app.add_subcommand("compile", "Compile a formula to its projector");
    compile_cmd->add_option("formula", formula, "Formula to compile")->required();
    add_common(compile_cmd);

    CLI::App* measure = app.add_subcommand("measure", "Born means against a state");
    measure->add_option("--state", state_source, "State name or @file (JSON)")->required();
    measure->add_option("formula", formulas, "Formula(s) to measure")->required();
    add_common(measure);

    CLI::App* bayes = app.add_subcommand("bayes", "Quantum-like Bayes check for a state and "
                                                  "a proposition pair");
    bayes->add_option("--state", state_source, "State name or @file (JSON)")->required();
    bayes->add_option("A", formula_a, "Antecedent proposition")->required();
    bayes->add_option("B", formula_b, "Consequent proposition")->required();
    bayes->add_option("--tol", tol, "Classification tolerance");
    bayes->add_option("--alpha", alpha,
                      "Also report the alpha-interpolated implication probability");
    add_common(bayes);

    CLI::App* tables = app.add_subcommand("tables", "Print the reference truth and "
                                                    "probability tables");
    tables->add_flag("--json", opts.json, "Emit JSON instead of text");

    CLI::App* bounds = app.add_subcommand("bounds", "Union probability with Boole/Bonferroni "
                                                    "and implication bounds");
    bounds->add_option("--space", space_source,
                       "Probability-space @file (JSON); defaults to the uniform space over "
                       "the events' variables");
    bounds->add_option("event", formulas, "Event formula(s)")->required();
    add_common(bounds);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;  // usage error, distinct from the bayes reporting exit 1
    }

    if (truthtable->count("--order") || compile_cmd->count("--order") ||
        measure->count("--order") || bayes->count("--order") || bounds->count("--order"))
        opts.order_csv = order_csv;

    if (*truthtable) return elcli::cmd_truthtable(formulas, opts, std::cout, std::cerr);
    if (*compile_cmd) return elcli::cmd_compile(formula, opts, std::cout, std::cerr);
    if (*measure) return elcli::cmd_measure(state_source, formulas, opts, std::cout, std::cerr);
    if (*bayes)
        return elcli::cmd_bayes(state_source, formula_a, formula_b, tol, alpha, opts, std::cout,
                                std::cerr);
    if (*tables) return elcli::cmd_tables(opts.json, std::cout, std::cerr);
    if (*bounds) return elcli::cmd_bounds(space_source, formulas, opts, std::cout, std::cerr);
    return 64;
}
