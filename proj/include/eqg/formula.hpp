// eqg/formula.hpp — first-order formula AST over a function-free language.
//
// The language has constants, variables, predicates, decidable equality and
// the connectives top, bot, &, v, ->, forall, exists.  There is no negation
// node: `not f` is stored as Implies(f, Bot) and re-sugared by the printer.

#ifndef EQG_FORMULA_HPP
#define EQG_FORMULA_HPP

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqg {

// ── Errors ──────────────────────────────────────────────────────────────────

/// Syntax error with 1-based source position.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col);
    int line;
    int col;
};

/// A predicate was used with two different arities.
struct ArityError : std::runtime_error {
    explicit ArityError(const std::string& pred, int a, int b);
    std::string pred;
};

// ── Terms ───────────────────────────────────────────────────────────────────

/// A term is either a constant (lowercase/digit initial) or a variable
/// (uppercase initial).  There are no function symbols.
struct Term {
    enum class Kind { Constant, Variable };

    Kind kind = Kind::Constant;
    std::string name;

    static Term constant(std::string name) { return {Kind::Constant, std::move(name)}; }
    static Term variable(std::string name) { return {Kind::Variable, std::move(name)}; }

    bool is_constant() const { return kind == Kind::Constant; }
    bool is_variable() const { return kind == Kind::Variable; }

    bool operator==(const Term&) const = default;
    auto operator<=>(const Term&) const = default;
};

// ── Formulas ────────────────────────────────────────────────────────────────

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// How an Implies(f, Bot) node is rendered by the printer.  Purely a
/// presentation hint: structural equality and all semantics ignore it.
///   Auto  — `not f` / `a != b` when f needs no parentheses, else `f -> bot`
///   Not   — always `not f` (or `a != b` for equalities)
///   Arrow — always `f -> bot`
enum class NegSugar { Auto, Not, Arrow };

/// Immutable formula node; build with the factory functions below and share
/// freely.  `terms` holds the argument list for Atom and exactly {lhs, rhs}
/// for Eq.  Quantifiers store the bound variable in `name` and the body in
/// `rhs`.
class Formula {
public:
    enum class Kind { Top, Bot, Atom, Eq, And, Or, Implies, Forall, Exists };

    Kind kind = Kind::Top;
    std::string name;         // Atom: predicate; Forall/Exists: variable
    std::vector<Term> terms;  // Atom: arguments; Eq: {lhs, rhs}
    FormulaPtr lhs;           // And/Or/Implies
    FormulaPtr rhs;           // And/Or/Implies; Forall/Exists: body
    NegSugar sugar = NegSugar::Auto;

    bool is(Kind k) const { return kind == k; }
    const FormulaPtr& body() const { return rhs; }
};

FormulaPtr top();
FormulaPtr bot();
FormulaPtr atom(std::string pred, std::vector<Term> args = {});
FormulaPtr eq(Term lhs, Term rhs);
FormulaPtr conj(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr disj(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs, NegSugar sugar = NegSugar::Auto);
FormulaPtr forall(std::string var, FormulaPtr body);
FormulaPtr exists(std::string var, FormulaPtr body);

/// not f, abbreviation for Implies(f, Bot); prints as `not f` / `a != b`.
FormulaPtr neg(FormulaPtr f);

/// Structural equality; the NegSugar print hint is ignored.
bool equal(const FormulaPtr& a, const FormulaPtr& b);

// ── Signature ───────────────────────────────────────────────────────────────

/// Herbrand signature: the constant symbols (sorted, the domain D) and the
/// predicate symbols with their arities.
struct Signature {
    std::vector<std::string> constants;
    std::map<std::string, int> predicates;

    bool operator==(const Signature&) const = default;
};

// ── Operations ──────────────────────────────────────────────────────────────

/// Parse the textual formula syntax:
///
///   formula  := impl
///   impl     := disj [ "->" impl ]                  ; right-associative
///   disj     := conj { "v" conj }
///   conj     := unary { "&" unary }
///   unary    := "not" unary | "top" | "bot" | quant | atom | "(" formula ")"
///   quant    := ("forall" | "exists") VAR+ body     ; body is "(" formula ")",
///                                                   ; another quant, or a unary
///   atom     := IDENT [ "(" term { "," term } ")" ] | term ("=" | "!=") term
///   term     := VAR | CONST
///
/// A quantifier binds tightly: `forall X p(X) -> q` reads as
/// `(forall X (p(X))) -> q`.  VAR = [A-Z][A-Za-z0-9_]*,
/// CONST = [a-z0-9][A-Za-z0-9_]*; `;` starts a comment running to end of
/// line.  `forall exists not top bot v` are reserved.
/// Throws ParseError / ArityError.
FormulaPtr parse_formula(std::string_view text);

/// Canonical text form; parse_formula(print_formula(f)) is structurally
/// equal to f.  Precedence: not > & > v > -> with minimal parentheses.
std::string print_formula(const FormulaPtr& f);

/// Free variables of f (quantifiers bind).
std::set<std::string> free_vars(const FormulaPtr& f);

/// Constants occurring in f plus `extra_constants`, sorted and deduplicated,
/// together with the predicate arity map.  Throws ArityError on conflict.
Signature signature_of(const FormulaPtr& f,
                       const std::vector<std::string>& extra_constants = {});

}  // namespace eqg

#endif  // EQG_FORMULA_HPP
