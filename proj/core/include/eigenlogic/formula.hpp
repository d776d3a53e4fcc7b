#pragma once

// Propositional formulas: immutable AST, recursive-descent parser,
// pretty-printer and truth-table evaluation.
//
// Grammar (ASCII tokens, Unicode aliases in parentheses):
//
//   formula := iff
//   iff     := impl ("<->" impl)*            (<->  also U+2194)
//   impl    := or ("->" impl | "<-" or)?     (->   also U+2192)
//   or      := xor ("|" xor)*                (|    also U+2228)
//   xor     := and ("^" and)*
//   and     := unary ("&" unary)*            (&    also U+2227)
//   unary   := "!" unary | atom              (!    also U+00AC)
//   atom    := IDENT | "0" | "1" | "(" formula ")"
//
// "->" chains associate to the right. Mixing "->" and "<-" at one level
// without parentheses is rejected as ambiguous.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "eigenlogic/errors.hpp"

namespace eigenlogic {

enum class Connective : std::uint8_t {
    Var,
    Not,
    And,
    Or,
    Implies,
    ConverseImplies,
    Iff,
    Xor,
    ConstTrue,
    ConstFalse,
};

// Immutable formula tree with value semantics; copies share structure.
class Formula {
public:
    static Formula variable(std::string name);
    static Formula constant(bool value);
    static Formula negation(Formula child);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula disjunction(Formula lhs, Formula rhs);
    static Formula implication(Formula lhs, Formula rhs);
    static Formula converse_implication(Formula lhs, Formula rhs);
    static Formula equivalence(Formula lhs, Formula rhs);
    static Formula exclusive_or(Formula lhs, Formula rhs);

    Connective kind() const noexcept;

    // Var nodes only.
    const std::string& variable_name() const;

    // First child (the only child of Not). Throws on leaves.
    Formula left() const;
    // Second child. Throws on leaves and Not.
    Formula right() const;

    // Sorted, deduplicated free variables.
    std::vector<std::string> free_variables() const;

    // Classical evaluation under a total assignment.
    bool evaluate(const std::map<std::string, bool>& assignment) const;

    // Structural equality.
    bool operator==(const Formula& other) const noexcept;
    bool operator!=(const Formula& other) const noexcept { return !(*this == other); }

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// Parses UTF-8 text under the grammar above. Throws ParseError with the
// byte offset of the problem and the expected-token set.
Formula parse_formula(std::string_view text);

// Minimal-parentheses rendering; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

// Ordered list of distinct variable names. The variable at position 0 is the
// most significant bit of a truth-table row index, so rows ascend
// 00, 01, 10, 11 for a two-variable order.
class VariableOrder {
public:
    explicit VariableOrder(std::vector<std::string> names);

    // Sorted free variables of a formula.
    static VariableOrder for_formula(const Formula& f);
    // Sorted union of free variables over several formulas.
    static VariableOrder for_formulas(const std::vector<Formula>& fs);

    std::size_t size() const noexcept { return names_.size(); }
    std::size_t dimension() const noexcept { return std::size_t{1} << names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t position) const { return names_.at(position); }

    bool contains(std::string_view name) const noexcept;
    // Position of a variable; throws UnknownVariable if absent.
    std::size_t index_of(std::string_view name) const;

    // Assignment encoded by a row index: variable at position j holds
    // bit (n-1-j) of row.
    bool bit(std::size_t row, std::size_t position) const noexcept;

    bool operator==(const VariableOrder& other) const noexcept { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

// One column of truth values, row r = formula evaluated on the assignment
// encoded by r under `order`.
struct TruthTable {
    VariableOrder order;
    std::vector<std::uint8_t> column;

    std::size_t rows() const noexcept { return column.size(); }
};

// Evaluates f on every assignment of `order`. Every free variable of f must
// appear in the order; extra order variables are allowed (f is constant in
// them). Throws UnknownVariable otherwise.
TruthTable truth_table(const Formula& f, const VariableOrder& order);

}  // namespace eigenlogic
