#include "eigenlogic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "eigenlogic/tolerances.hpp"

namespace eigenlogic {

// ── AST ──────────────────────────────────────────────────────────────────────

struct Formula::Node {
    Connective kind;
    std::string name;  // Var only
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

bool valid_variable_name(std::string_view name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name.front()))) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

Formula Formula::variable(std::string name) {
    if (!valid_variable_name(name))
        throw InvalidArgument("invalid variable name: '" + name + "'");
    return Formula(std::make_shared<const Node>(Node{Connective::Var, std::move(name), nullptr, nullptr}));
}

Formula Formula::constant(bool value) {
    return Formula(std::make_shared<const Node>(
        Node{value ? Connective::ConstTrue : Connective::ConstFalse, {}, nullptr, nullptr}));
}

Formula Formula::negation(Formula child) {
    return Formula(
        std::make_shared<const Node>(Node{Connective::Not, {}, std::move(child.node_), nullptr}));
}

#define EIGENLOGIC_BINARY_FACTORY(fn, kind)                                          \
    Formula Formula::fn(Formula lhs, Formula rhs) {                                  \
        return Formula(std::make_shared<const Node>(                                 \
            Node{Connective::kind, {}, std::move(lhs.node_), std::move(rhs.node_)})); \
    }

EIGENLOGIC_BINARY_FACTORY(conjunction, And)
EIGENLOGIC_BINARY_FACTORY(disjunction, Or)
EIGENLOGIC_BINARY_FACTORY(implication, Implies)
EIGENLOGIC_BINARY_FACTORY(converse_implication, ConverseImplies)
EIGENLOGIC_BINARY_FACTORY(equivalence, Iff)
EIGENLOGIC_BINARY_FACTORY(exclusive_or, Xor)

#undef EIGENLOGIC_BINARY_FACTORY

Connective Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::variable_name() const {
    if (node_->kind != Connective::Var) throw InvalidArgument("not a variable node");
    return node_->name;
}

Formula Formula::left() const {
    if (!node_->lhs) throw InvalidArgument("node has no children");
    return Formula(node_->lhs);
}

Formula Formula::right() const {
    if (!node_->rhs) throw InvalidArgument("node has no right child");
    return Formula(node_->rhs);
}

namespace {

void collect_variables(const Formula& f, std::set<std::string>& out) {
    switch (f.kind()) {
        case Connective::Var:
            out.insert(f.variable_name());
            return;
        case Connective::ConstTrue:
        case Connective::ConstFalse:
            return;
        case Connective::Not:
            collect_variables(f.left(), out);
            return;
        default:
            collect_variables(f.left(), out);
            collect_variables(f.right(), out);
            return;
    }
}

}  // namespace

std::vector<std::string> Formula::free_variables() const {
    std::set<std::string> vars;
    collect_variables(*this, vars);
    return {vars.begin(), vars.end()};
}

bool Formula::evaluate(const std::map<std::string, bool>& assignment) const {
    switch (node_->kind) {
        case Connective::Var: {
            auto it = assignment.find(node_->name);
            if (it == assignment.end())
                throw UnknownVariable("no assignment for variable '" + node_->name + "'");
            return it->second;
        }
        case Connective::ConstTrue:
            return true;
        case Connective::ConstFalse:
            return false;
        case Connective::Not:
            return !left().evaluate(assignment);
        case Connective::And:
            return left().evaluate(assignment) && right().evaluate(assignment);
        case Connective::Or:
            return left().evaluate(assignment) || right().evaluate(assignment);
        case Connective::Implies:
            return !left().evaluate(assignment) || right().evaluate(assignment);
        case Connective::ConverseImplies:
            return left().evaluate(assignment) || !right().evaluate(assignment);
        case Connective::Iff:
            return left().evaluate(assignment) == right().evaluate(assignment);
        case Connective::Xor:
            return left().evaluate(assignment) != right().evaluate(assignment);
    }
    throw InvalidArgument("corrupt formula node");
}

bool Formula::operator==(const Formula& other) const noexcept {
    if (node_ == other.node_) return true;
    if (node_->kind != other.node_->kind) return false;
    switch (node_->kind) {
        case Connective::Var:
            return node_->name == other.node_->name;
        case Connective::ConstTrue:
        case Connective::ConstFalse:
            return true;
        case Connective::Not:
            return left() == other.left();
        default:
            return left() == other.left() && right() == other.right();
    }
}

// ── Lexer ────────────────────────────────────────────────────────────────────

namespace {

enum class TokenKind {
    Ident,
    True,
    False,
    Not,
    And,
    Or,
    Xor,
    Arrow,
    ConverseArrow,
    DoubleArrow,
    LParen,
    RParen,
    End,
};

struct Token {
    TokenKind kind;
    std::size_t offset;  // byte offset into the input
    std::string text;
};

const char* token_name(TokenKind k) {
    switch (k) {
        case TokenKind::Ident: return "identifier";
        case TokenKind::True: return "'1'";
        case TokenKind::False: return "'0'";
        case TokenKind::Not: return "'!'";
        case TokenKind::And: return "'&'";
        case TokenKind::Or: return "'|'";
        case TokenKind::Xor: return "'^'";
        case TokenKind::Arrow: return "'->'";
        case TokenKind::ConverseArrow: return "'<-'";
        case TokenKind::DoubleArrow: return "'<->'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::End: return "end of input";
    }
    return "?";
}

// Unicode aliases, matched byte-wise: U+00AC not, U+2227 and, U+2228 or,
// U+2192 arrow, U+2194 double arrow.
struct UnicodeAlias {
    std::string_view bytes;
    TokenKind kind;
};

constexpr UnicodeAlias kUnicodeAliases[] = {
    {"\xc2\xac", TokenKind::Not},         // ¬
    {"\xe2\x88\xa7", TokenKind::And},     // ∧
    {"\xe2\x88\xa8", TokenKind::Or},      // ∨
    {"\xe2\x86\x92", TokenKind::Arrow},   // →
    {"\xe2\x86\x94", TokenKind::DoubleArrow},  // ↔
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i + 1;
            while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            tokens.push_back({TokenKind::Ident, start, std::string(text.substr(i, j - i))});
            i = j;
            continue;
        }
        switch (c) {
            case '0': tokens.push_back({TokenKind::False, start, "0"}); ++i; continue;
            case '1': tokens.push_back({TokenKind::True, start, "1"}); ++i; continue;
            case '!': tokens.push_back({TokenKind::Not, start, "!"}); ++i; continue;
            case '&': tokens.push_back({TokenKind::And, start, "&"}); ++i; continue;
            case '|': tokens.push_back({TokenKind::Or, start, "|"}); ++i; continue;
            case '^': tokens.push_back({TokenKind::Xor, start, "^"}); ++i; continue;
            case '(': tokens.push_back({TokenKind::LParen, start, "("}); ++i; continue;
            case ')': tokens.push_back({TokenKind::RParen, start, ")"}); ++i; continue;
            case '-':
                if (i + 1 < n && text[i + 1] == '>') {
                    tokens.push_back({TokenKind::Arrow, start, "->"});
                    i += 2;
                    continue;
                }
                throw ParseError(start, "stray '-'", {"'->'"});
            case '<':
                if (text.substr(i, 3) == "<->") {
                    tokens.push_back({TokenKind::DoubleArrow, start, "<->"});
                    i += 3;
                    continue;
                }
                if (text.substr(i, 2) == "<-") {
                    tokens.push_back({TokenKind::ConverseArrow, start, "<-"});
                    i += 2;
                    continue;
                }
                throw ParseError(start, "stray '<'", {"'<-'", "'<->'"});
            default:
                break;
        }
        bool matched = false;
        for (const auto& alias : kUnicodeAliases) {
            if (text.substr(i, alias.bytes.size()) == alias.bytes) {
                tokens.push_back({alias.kind, start, std::string(alias.bytes)});
                i += alias.bytes.size();
                matched = true;
                break;
            }
        }
        if (matched) continue;
        throw ParseError(start, "unexpected character '" + std::string(1, c) + "'");
    }
    tokens.push_back({TokenKind::End, n, ""});
    return tokens;
}

// ── Parser ───────────────────────────────────────────────────────────────────

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {
        if (tokens_.front().kind == TokenKind::End)
            throw ParseError(0, "empty formula",
                             {"identifier", "'0'", "'1'", "'!'", "'('"});
    }

    Formula parse() {
        Formula f = parse_iff();
        const Token& t = peek();
        if (t.kind != TokenKind::End)
            throw ParseError(t.offset, "unexpected " + describe(t),
                             {"operator", "end of input"});
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    static std::string describe(const Token& t) {
        if (t.kind == TokenKind::End) return "end of input";
        return "'" + t.text + "'";
    }

    Formula parse_iff() {
        Formula lhs = parse_impl();
        while (peek().kind == TokenKind::DoubleArrow) {
            advance();
            lhs = Formula::equivalence(std::move(lhs), parse_impl());
        }
        return lhs;
    }

    // Collects the whole "->"/"<-" chain at this level, then insists it is
    // unambiguous: all "->" (right-associated) or a single "<-".
    Formula parse_impl() {
        std::vector<Formula> operands;
        std::vector<Token> ops;
        operands.push_back(parse_or());
        while (peek().kind == TokenKind::Arrow || peek().kind == TokenKind::ConverseArrow) {
            ops.push_back(advance());
            operands.push_back(parse_or());
        }
        if (ops.empty()) return std::move(operands.front());
        const bool all_forward = std::all_of(ops.begin(), ops.end(), [](const Token& t) {
            return t.kind == TokenKind::Arrow;
        });
        if (all_forward) {
            Formula result = std::move(operands.back());
            for (std::size_t i = operands.size() - 1; i-- > 0;)
                result = Formula::implication(std::move(operands[i]), std::move(result));
            return result;
        }
        if (ops.size() == 1)
            return Formula::converse_implication(std::move(operands[0]), std::move(operands[1]));
        throw ParseError(ops[1].offset,
                         "ambiguous implication chain; parenthesize",
                         {"'('", "')'"});
    }

    Formula parse_or() {
        Formula lhs = parse_xor();
        while (peek().kind == TokenKind::Or) {
            advance();
            lhs = Formula::disjunction(std::move(lhs), parse_xor());
        }
        return lhs;
    }

    Formula parse_xor() {
        Formula lhs = parse_and();
        while (peek().kind == TokenKind::Xor) {
            advance();
            lhs = Formula::exclusive_or(std::move(lhs), parse_and());
        }
        return lhs;
    }

    Formula parse_and() {
        Formula lhs = parse_unary();
        while (peek().kind == TokenKind::And) {
            advance();
            lhs = Formula::conjunction(std::move(lhs), parse_unary());
        }
        return lhs;
    }

    Formula parse_unary() {
        if (peek().kind == TokenKind::Not) {
            advance();
            return Formula::negation(parse_unary());
        }
        return parse_atom();
    }

    Formula parse_atom() {
        const Token& t = advance();
        switch (t.kind) {
            case TokenKind::Ident:
                return Formula::variable(t.text);
            case TokenKind::True:
                return Formula::constant(true);
            case TokenKind::False:
                return Formula::constant(false);
            case TokenKind::LParen: {
                Formula inner = parse_iff();
                const Token& close = advance();
                if (close.kind != TokenKind::RParen)
                    throw ParseError(close.offset,
                                     "unbalanced parentheses: expected ')', found " + describe(close),
                                     {"')'"});
                return inner;
            }
            case TokenKind::RParen:
                throw ParseError(t.offset, "unbalanced parentheses: unexpected ')'",
                                 {"identifier", "'0'", "'1'", "'!'", "'('"});
            default:
                throw ParseError(t.offset, "unexpected " + describe(t),
                                 {"identifier", "'0'", "'1'", "'!'", "'('"});
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t byte_offset, std::string detail,
                       std::vector<std::string> expected)
    : Error([&] {
          std::ostringstream msg;
          msg << "syntax error at byte " << byte_offset << ": " << detail;
          if (!expected.empty()) {
              msg << " (expected ";
              for (std::size_t i = 0; i < expected.size(); ++i) {
                  if (i) msg << ", ";
                  msg << expected[i];
              }
              msg << ")";
          }
          return msg.str();
      }()),
      offset_(byte_offset),
      expected_(std::move(expected)) {}

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

// ── Printer ──────────────────────────────────────────────────────────────────

namespace {

// Binding strength, loosest first; parenthesize a child whose level is below
// what its context requires.
int level_of(Connective k) {
    switch (k) {
        case Connective::Iff: return 0;
        case Connective::Implies:
        case Connective::ConverseImplies: return 1;
        case Connective::Or: return 2;
        case Connective::Xor: return 3;
        case Connective::And: return 4;
        case Connective::Not: return 5;
        default: return 6;
    }
}

void print_node(const Formula& f, int required_level, std::string& out) {
    const int level = level_of(f.kind());
    const bool parens = level < required_level;
    if (parens) out += '(';
    switch (f.kind()) {
        case Connective::Var:
            out += f.variable_name();
            break;
        case Connective::ConstTrue:
            out += '1';
            break;
        case Connective::ConstFalse:
            out += '0';
            break;
        case Connective::Not:
            out += '!';
            print_node(f.left(), 5, out);
            break;
        case Connective::And:
            print_node(f.left(), 4, out);
            out += " & ";
            print_node(f.right(), 5, out);
            break;
        case Connective::Xor:
            print_node(f.left(), 3, out);
            out += " ^ ";
            print_node(f.right(), 4, out);
            break;
        case Connective::Or:
            print_node(f.left(), 2, out);
            out += " | ";
            print_node(f.right(), 3, out);
            break;
        case Connective::Implies:
            print_node(f.left(), 2, out);
            out += " -> ";
            // right-associative: a nested Implies needs no parentheses, a
            // converse arrow always does (mixed chains are rejected on input)
            if (f.right().kind() == Connective::Implies)
                print_node(f.right(), 1, out);
            else
                print_node(f.right(), 2, out);
            break;
        case Connective::ConverseImplies:
            print_node(f.left(), 2, out);
            out += " <- ";
            print_node(f.right(), 2, out);
            break;
        case Connective::Iff:
            print_node(f.left(), 0, out);
            out += " <-> ";
            print_node(f.right(), 1, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
    std::string out;
    print_node(f, 0, out);
    return out;
}

// ── VariableOrder / truth tables ─────────────────────────────────────────────

VariableOrder::VariableOrder(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InvalidArgument("variable order must not be empty");
    if (names_.size() > kMaxDiagonalQubits)
        throw InvalidArgument("variable order exceeds the " +
                              std::to_string(kMaxDiagonalQubits) + "-variable cap");
    std::set<std::string> seen;
    for (const auto& name : names_) {
        if (!valid_variable_name(name))
            throw InvalidArgument("invalid variable name: '" + name + "'");
        if (!seen.insert(name).second)
            throw InvalidArgument("duplicate variable in order: '" + name + "'");
    }
}

VariableOrder VariableOrder::for_formula(const Formula& f) {
    return VariableOrder(f.free_variables());
}

VariableOrder VariableOrder::for_formulas(const std::vector<Formula>& fs) {
    std::set<std::string> vars;
    for (const auto& f : fs) {
        auto fv = f.free_variables();
        vars.insert(fv.begin(), fv.end());
    }
    return VariableOrder(std::vector<std::string>(vars.begin(), vars.end()));
}

bool VariableOrder::contains(std::string_view name) const noexcept {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t VariableOrder::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw UnknownVariable("variable '" + std::string(name) + "' not in order");
    return static_cast<std::size_t>(it - names_.begin());
}

bool VariableOrder::bit(std::size_t row, std::size_t position) const noexcept {
    return (row >> (names_.size() - 1 - position)) & 1u;
}

TruthTable truth_table(const Formula& f, const VariableOrder& order) {
    for (const auto& var : f.free_variables()) {
        if (!order.contains(var))
            throw UnknownVariable("variable '" + var + "' not in order");
    }
    const std::size_t rows = order.dimension();
    std::vector<std::uint8_t> column(rows);
    std::map<std::string, bool> assignment;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < order.size(); ++j)
            assignment[order.name(j)] = order.bit(r, j);
        column[r] = f.evaluate(assignment) ? 1 : 0;
    }
    return TruthTable{order, std::move(column)};
}

}  // namespace eigenlogic
