#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqg/semantics.hpp"
#include "eqg/translate.hpp"
#include "gen.hpp"

using namespace eqg;

namespace {

std::string qel(const std::string& dsl) { return print_formula(to_formula(parse_diagram(dsl))); }
std::string cls(const std::string& dsl) {
    return print_formula(to_classical_formula(parse_diagram(dsl)));
}

}  // namespace

TEST_CASE("equilibrium reading: rules, constraints, existentials") {
    CHECK(qel("(cond (line X) (man X) (then (mortal X)))") == "forall X (man(X) -> mortal(X))");
    CHECK(qel("(line X) (cond (man X) (then (mortal X)))") == "exists X (man(X) -> mortal(X))");
    CHECK(qel("(cond (line X) (man X) (cond (mortal X)))") ==
          "forall X (man(X) & not mortal(X) -> bot)");
    CHECK(qel("(cond (rains) (not (umbrella)) (then (wet)))") == "rains & not umbrella -> wet");
    CHECK(qel("(line X) (god X) (cond (line Y) (god Y) (cond (eq X Y)))") ==
          "exists X (god(X) & forall Y (god(Y) & X != Y -> bot))");
}

TEST_CASE("equilibrium reading: empty page and empty regions") {
    CHECK(qel("") == "top");
    CHECK(qel("(not)") == "bot");               // empty cut is falsity
    CHECK(qel("(line X) (p X)") == "exists X (p(X))");
    CHECK(qel("(cond (line X) (then (p X)))") == "forall X (p(X))");  // top -> psi simplifies
}

TEST_CASE("equilibrium reading: zero consequents have implication-to-bot shape") {
    FormulaPtr f = to_formula(parse_diagram("(cond (p) (q))"));
    REQUIRE(f->kind == Formula::Kind::Implies);
    CHECK(f->rhs->kind == Formula::Kind::Bot);
}

TEST_CASE("equilibrium reading: antecedent-free conditional is the bare disjunction") {
    CHECK(qel("(cond (then (red)) (then (orange)) (then (green)))") == "red v orange v green");
    FormulaPtr f = to_formula(parse_diagram("(cond (then (p)) (then (q)))"));
    CHECK(f->kind == Formula::Kind::Or);
}

TEST_CASE("quantifiers come out in lexicographic order per region") {
    CHECK(qel("(line Y) (line X) (q X Y)") == "exists X Y (q(X,Y))");
    CHECK(qel("(cond (line Z) (line Y) (q Y Z) (then (q Z Y)))") ==
          "forall Y Z (q(Y,Z) -> q(Z,Y))");
}

TEST_CASE("classical reading: rectangles become cuts") {
    CHECK(cls("(cond (line X) (man X) (then (mortal X)))") ==
          "not (exists X (man(X) & not mortal(X)))");
    CHECK(cls("") == "top");
    CHECK(cls("(cond (toss) (then (head)) (then (tails)))") ==
          "not (toss & not head & not tails)");
    CHECK(cls("(line X) (god X) (cond (line Y) (god Y) (cond (eq X Y)))") ==
          "exists X (god(X) & not (exists Y (god(Y) & X != Y)))");
    CHECK(cls("(not)") == "not top");
}

TEST_CASE("validation failures surface as errors") {
    Diagram bad = parse_diagram_unchecked("(man Y)");
    CHECK_THROWS_AS(to_formula(bad), ValidationError);
    CHECK_THROWS_AS(to_classical_formula(bad), ValidationError);
}

TEST_CASE("translation is deterministic") {
    Diagram d = parse_diagram("(cond (line B) (line A) (q A B) (then (p A)))");
    CHECK(equal(to_formula(d), to_formula(d)));
    CHECK(print_formula(to_formula(d)) == print_formula(to_formula(d)));
}

namespace {

// Exhaustive comparison of the classical model sets of the two readings
// over the two-constant domain.
bool classically_equivalent(const Diagram& d) {
    FormulaPtr f = to_formula(d);
    FormulaPtr g = to_classical_formula(d);
    Signature sig = signature_of(conj(f, g), {"a", "b"});
    EnumOptions opts;
    opts.atom_guard = 16;
    return models_classical(f, sig, opts) == models_classical(g, sig, opts);
}

}  // namespace

TEST_CASE("property: both readings are classically equivalent (random diagrams)") {
    eqg_test::Rng rng(424242);
    for (int i = 0; i < 250; ++i) {
        Diagram d = eqg_test::gen_diagram(rng, 2, 3);
        CAPTURE(print_diagram(d));
        CHECK(classically_equivalent(d));
    }
}

TEST_CASE("property: line declared in antecedent, unused in consequents, still reads forall") {
    // the equivalent exists-in-antecedent reading must agree in QHT
    FormulaPtr ours = to_formula(parse_diagram("(cond (line X) (man X) (then (mortal)))"));
    FormulaPtr alt = parse_formula("(exists X (man(X))) -> mortal");
    Signature sig = signature_of(ours, {"a", "b"});
    CHECK(ht_equivalent(ours, alt, sig));
}
