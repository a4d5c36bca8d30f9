// eqg/diagram.hpp — data model for equilibrium existential graphs.
//
// A diagram is a tree of regions.  The root region is the page; a
// conditional element carries an antecedent region (the inside of its
// ellipse) and any number of consequent regions (rectangles).  Identity
// lines are named declarations owned by the region where the line starts
// (its home region); argument positions refer to lines by name.

#ifndef EQG_DIAGRAM_HPP
#define EQG_DIAGRAM_HPP

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eqg/formula.hpp"

namespace eqg {

// ── Model ───────────────────────────────────────────────────────────────────

/// Argument position: a reference to an identity line (uppercase initial)
/// or a constant (lowercase/digit initial).  The two namespaces are
/// lexically disjoint.
struct ArgRef {
    enum class Kind { Line, Const };

    Kind kind = Kind::Const;
    std::string name;

    static ArgRef line(std::string name) { return {Kind::Line, std::move(name)}; }
    static ArgRef constant(std::string name) { return {Kind::Const, std::move(name)}; }

    bool is_line() const { return kind == Kind::Line; }

    bool operator==(const ArgRef&) const = default;
};

struct PredApp {
    std::string pred;
    std::vector<ArgRef> args;

    bool operator==(const PredApp&) const = default;
};

/// Equality link between two argument places (a piece of identity line).
struct EqLink {
    ArgRef lhs;
    ArgRef rhs;

    bool operator==(const EqLink&) const = default;
};

struct Conditional;
using CondPtr = std::shared_ptr<const Conditional>;

class Element {
public:
    Element(PredApp p) : node_(std::move(p)) {}
    Element(EqLink e) : node_(std::move(e)) {}
    Element(CondPtr c) : node_(std::move(c)) {}

    bool is_pred() const { return std::holds_alternative<PredApp>(node_); }
    bool is_eq() const { return std::holds_alternative<EqLink>(node_); }
    bool is_cond() const { return std::holds_alternative<CondPtr>(node_); }

    const PredApp& pred() const { return std::get<PredApp>(node_); }
    const EqLink& eq() const { return std::get<EqLink>(node_); }
    const Conditional& cond() const { return *std::get<CondPtr>(node_); }

    bool operator==(const Element& o) const;

private:
    std::variant<PredApp, EqLink, CondPtr> node_;
};

struct Region {
    enum class Kind { Page, Antecedent, Consequent };

    Kind kind = Kind::Page;
    std::vector<std::string> lines;  // identity lines declared here
    std::vector<Element> elements;

    bool operator==(const Region&) const = default;
};

/// Conditional: ellipse whose interior is the antecedent; each consequent
/// is a rectangle inside it.  Zero consequents read as a negation;
/// `from_not` records that the diagram was written with the `(not ...)`
/// sugar, which only affects printing.
struct Conditional {
    Region antecedent;                // kind == Antecedent
    std::vector<Region> consequents;  // kind == Consequent

    bool from_not = false;

    bool operator==(const Conditional& o) const {
        return antecedent == o.antecedent && consequents == o.consequents &&
               from_not == o.from_not;
    }
};

struct Diagram {
    Region page;  // kind == Page

    bool operator==(const Diagram&) const = default;
};

// ── Well-formedness ─────────────────────────────────────────────────────────

struct Violation {
    enum class Kind { UnboundLine, DuplicateLine, ArityConflict };

    Kind kind;
    std::string name;     // offending line or predicate
    std::string message;
};

/// All structural violations: duplicate line names, references to lines
/// that are not in scope, predicates used with conflicting arities.
/// An empty result means the diagram is well-formed.
std::vector<Violation> validate(const Diagram& d);

/// Thrown when a parsed diagram fails validation.
struct ValidationError : std::runtime_error {
    explicit ValidationError(std::vector<Violation> violations);
    std::vector<Violation> violations;
};

// ── Serialization ───────────────────────────────────────────────────────────

/// Parse the s-expression diagram DSL:
///
///   file     := item*                          ; top-level items live on the page
///   item     := linedecl | pred | eq | neq | cond | not
///   linedecl := "(" "line" VAR ")"
///   pred     := "(" IDENT arg* ")"             ; IDENT not a keyword
///   eq       := "(" "eq" arg arg ")"
///   neq      := "(" "neq" arg arg ")"          ; sugar: eq inside a zero-consequent cond
///   not      := "(" "not" item* ")"            ; sugar: zero-consequent cond
///   cond     := "(" "cond" (item | thenblk)* ")"
///   thenblk  := "(" "then" item* ")"           ; one consequent rectangle
///   arg      := VAR | CONST
///
/// `;` comments run to end of line.  Keywords: line cond then eq neq not.
/// Throws ParseError on bad syntax and ValidationError when the parsed
/// diagram is not well-formed.
Diagram parse_diagram(std::string_view text);

/// As parse_diagram but without the validation step.
Diagram parse_diagram_unchecked(std::string_view text);

/// Canonical DSL text: single line, line declarations first inside each
/// region, then elements in order, `then` blocks last.
/// parse_diagram(print_diagram(d)) == d for well-formed d.
std::string print_diagram(const Diagram& d);

}  // namespace eqg

#endif  // EQG_DIAGRAM_HPP
