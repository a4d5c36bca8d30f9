#include "eqg/corpus.hpp"

#include <stdexcept>

namespace eqg {

namespace {

struct RawEntry {
    const char* name;
    const char* dsl;
    const char* expected;
};

// Diagram sources use the cut style (not ...) where the original figure is a
// plain existential graph and rectangles where it uses consequents.
const RawEntry kRaw[] = {
    {"alpha/empty-page", "", "top"},
    {"alpha/rain-cut", "(not (rains) (not (umbrella)) (not (wet)))",
     "not (rains & not umbrella & not wet)"},
    {"alpha/implication", "(not (p) (not (q)))", "not (p & not q)"},
    {"alpha/disjunction-cuts", "(not (not (p)) (not (q)))", "not (not p & not q)"},

    {"beta/parked-car", "(line X) (line Y) (car X) (red X) (parkedAt X Y) (street Y)",
     "exists X Y (car(X) & red(X) & parkedAt(X,Y) & street(Y))"},
    {"beta/self-love", "(line X) (person X) (loves X X)", "exists X (person(X) & loves(X,X))"},
    {"beta/all-men-mortal-cut", "(cond (line X) (man X) (not (mortal X)))",
     "forall X (man(X) & not mortal(X) -> bot)"},
    {"beta/adored-woman",
     "(line X) (woman X) (cond (line Y) (catholic Y) (then (adores Y X)))",
     "exists X (woman(X) & forall Y (catholic(Y) -> adores(Y,X)))"},

    {"god/unique-god", "(line X) (god X) (cond (line Y) (god Y) (cond (eq X Y)))",
     "exists X (god(X) & forall Y (god(Y) & X != Y -> bot))"},

    {"basic/toss", "(cond (toss) (then (head)) (then (tails)))", "toss -> head v tails"},
    {"basic/rain-rule", "(cond (rains) (not (umbrella)) (then (wet)))",
     "rains & not umbrella -> wet"},
    {"basic/traffic-light", "(cond (then (red)) (then (orange)) (then (green)))",
     "red v orange v green"},

    {"or-encoding/p-or-q",
     "(cond (cond (p) (then (q))) (then (q))) (cond (cond (q) (then (p))) (then (p)))",
     "((p -> q) -> q) & ((q -> p) -> p)"},

    {"choice/even-cycle", "(cond (not (q)) (then (p))) (cond (not (p)) (then (q)))",
     "(not q -> p) & (not p -> q)"},
    {"choice/p-or-not-p", "(cond (then (p)) (then (not (p))))", "p v not p"},

    {"penguin/rule", "(cond (bird) (not (abnormal)) (then (flies)))",
     "bird & not abnormal -> flies"},
    {"penguin/abnormal", "(cond (penguin) (then (abnormal) (bird)))",
     "penguin -> abnormal & bird"},
    {"penguin/program",
     "(bird) (penguin) (cond (bird) (not (abnormal)) (then (flies))) "
     "(cond (penguin) (then (abnormal) (bird)))",
     "bird & penguin & (bird & not abnormal -> flies) & (penguin -> abnormal & bird)"},

    {"idline/forall-rule", "(cond (line X) (man X) (then (mortal X)))",
     "forall X (man(X) -> mortal(X))"},
    {"idline/exists-cond", "(line X) (cond (man X) (then (mortal X)))",
     "exists X (man(X) -> mortal(X))"},
    {"idline/forall-prop", "(cond (line X) (man X) (then (mortal)))",
     "forall X (man(X) -> mortal)"},

    {"hamiltonian/edge-nodes", "(cond (line X) (line Y) (edge X Y) (then (node X) (node Y)))",
     "forall X Y (edge(X,Y) -> node(X) & node(Y))"},
    {"hamiltonian/choice",
     "(cond (line X) (line Y) (edge X Y) (then (in X Y)) (then (not (in X Y))))",
     "forall X Y (edge(X,Y) -> in(X,Y) v not in(X,Y))"},
    {"hamiltonian/no-branch-out",
     "(cond (line X) (line Y) (line Z) (in X Y) (in X Z) (not (eq Y Z)))",
     "forall X Y Z (in(X,Y) & in(X,Z) & Y != Z -> bot)"},
    {"hamiltonian/no-branch-in",
     "(cond (line X) (line Y) (line Z) (not (eq X Y)) (in X Z) (in Y Z))",
     "forall X Y Z (X != Y & in(X,Z) & in(Y,Z) -> bot)"},
    {"hamiltonian/reach-base", "(cond (line X) (line Y) (in X Y) (then (reach X Y)))",
     "forall X Y (in(X,Y) -> reach(X,Y))"},
    {"hamiltonian/reach-closure",
     "(cond (line X) (line Y) (line Z) (reach X Y) (in Y Z) (then (reach X Z)))",
     "forall X Y Z (reach(X,Y) & in(Y,Z) -> reach(X,Z))"},
    {"hamiltonian/reach-total",
     "(cond (line X) (line Y) (node X) (node Y) (not (reach X Y)))",
     "forall X Y (node(X) & node(Y) & not reach(X,Y) -> bot)"},
};

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;
    for (const RawEntry& raw : kRaw) {
        CorpusEntry e;
        e.name = raw.name;
        e.dsl = raw.dsl;
        e.expected_text = raw.expected;
        e.diagram = parse_diagram(raw.dsl);
        e.expected = parse_formula(raw.expected);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build_corpus();
    return entries;
}

const std::vector<FormulaPtr>& hamiltonian_rules() {
    static const std::vector<FormulaPtr> rules = {
        parse_formula("forall X Y (edge(X,Y) -> node(X) & node(Y))"),
        parse_formula("forall X Y (edge(X,Y) -> in(X,Y) v not in(X,Y))"),
        parse_formula("not (exists X Y Z (in(X,Y) & in(X,Z) & Y != Z))"),
        parse_formula("not (exists X Y Z (X != Y & in(X,Z) & in(Y,Z)))"),
        parse_formula("forall X Y (in(X,Y) -> reach(X,Y))"),
        parse_formula("forall X Y Z (reach(X,Y) & in(Y,Z) -> reach(X,Z))"),
        parse_formula("not (exists X Y (node(X) & node(Y) & not reach(X,Y)))"),
    };
    return rules;
}

FormulaPtr hamiltonian_program() {
    const auto& rules = hamiltonian_rules();
    FormulaPtr f = rules.front();
    for (std::size_t i = 1; i < rules.size(); ++i) f = conj(f, rules[i]);
    return f;
}

FormulaPtr hamiltonian_instance(const std::vector<std::pair<std::string, std::string>>& edges) {
    if (edges.empty()) throw std::invalid_argument("hamiltonian_instance: empty edge list");
    FormulaPtr f = hamiltonian_program();
    for (const auto& [from, to] : edges)
        f = conj(f, atom("edge", {Term::constant(from), Term::constant(to)}));
    return f;
}

}  // namespace eqg
