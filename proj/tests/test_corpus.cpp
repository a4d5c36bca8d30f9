#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "eqg/corpus.hpp"
#include "eqg/semantics.hpp"
#include "eqg/translate.hpp"

using namespace eqg;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: " << path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string chomp(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

}  // namespace

TEST_CASE("corpus entries are unique, well-formed and canonical") {
    std::set<std::string> names;
    for (const CorpusEntry& e : corpus()) {
        CAPTURE(e.name);
        CHECK(names.insert(e.name).second);
        CHECK(validate(e.diagram).empty());
        CHECK(print_diagram(e.diagram) == e.dsl);
        CHECK(print_formula(e.expected) == e.expected_text);
    }
    CHECK(corpus().size() >= 26);
}

TEST_CASE("every corpus diagram reads as its expected formula") {
    for (const CorpusEntry& e : corpus()) {
        CAPTURE(e.name);
        FormulaPtr got = to_formula(e.diagram);
        CHECK(equal(got, e.expected));
        CHECK(print_formula(got) == e.expected_text);
    }
}

TEST_CASE("corpus directory mirrors the bundled entries") {
    const std::string dir = EQG_CORPUS_DIR;
    for (const CorpusEntry& e : corpus()) {
        CAPTURE(e.name);
        CHECK(chomp(slurp(dir + "/" + e.name + ".eg")) == e.dsl);
        CHECK(chomp(slurp(dir + "/" + e.name + ".qel.golden")) == e.expected_text);
    }
}

TEST_CASE("constraint-shaped entries match their negated-existential captions in QHT") {
    struct Pair {
        const char* entry;
        const char* caption;
    };
    // the bundled reading uses the forall...-> bot shape; the figure captions
    // state the not-exists shape; the two must coincide over small domains
    const Pair pairs[] = {
        {"beta/all-men-mortal-cut", "not (exists X (man(X) & not mortal(X)))"},
        {"god/unique-god", "exists X (god(X) & not (exists Y (god(Y) & X != Y)))"},
        {"hamiltonian/no-branch-out", "not (exists X Y Z (in(X,Y) & in(X,Z) & Y != Z))"},
        {"hamiltonian/no-branch-in", "not (exists X Y Z (X != Y & in(X,Z) & in(Y,Z)))"},
        {"hamiltonian/reach-total", "not (exists X Y (node(X) & node(Y) & not reach(X,Y)))"},
    };
    for (const auto& [name, caption] : pairs) {
        CAPTURE(name);
        const CorpusEntry* entry = nullptr;
        for (const CorpusEntry& e : corpus())
            if (e.name == name) entry = &e;
        REQUIRE(entry != nullptr);
        FormulaPtr ours = to_formula(entry->diagram);
        FormulaPtr theirs = parse_formula(caption);
        Signature sig = signature_of(conj(ours, theirs), {"a", "b"});
        CHECK(ht_equivalent(ours, theirs, sig));
    }
}

TEST_CASE("hamiltonian rules print exactly") {
    const auto& rules = hamiltonian_rules();
    REQUIRE(rules.size() == 7);
    CHECK(print_formula(rules[2]) == "not (exists X Y Z (in(X,Y) & in(X,Z) & Y != Z))");
    CHECK(print_formula(rules[4]) == "forall X Y (in(X,Y) -> reach(X,Y))");
    CHECK(print_formula(rules[6]) == "not (exists X Y (node(X) & node(Y) & not reach(X,Y)))");
}

TEST_CASE("hamiltonian corpus diagrams are QHT-equivalent to the program rules") {
    const char* names[] = {
        "hamiltonian/edge-nodes",   "hamiltonian/choice",       "hamiltonian/no-branch-out",
        "hamiltonian/no-branch-in", "hamiltonian/reach-base",   "hamiltonian/reach-closure",
        "hamiltonian/reach-total",
    };
    const auto& rules = hamiltonian_rules();
    for (std::size_t i = 0; i < 7; ++i) {
        CAPTURE(names[i]);
        const CorpusEntry* entry = nullptr;
        for (const CorpusEntry& e : corpus())
            if (e.name == names[i]) entry = &e;
        REQUIRE(entry != nullptr);
        FormulaPtr ours = to_formula(entry->diagram);
        Signature sig = signature_of(conj(ours, rules[i]), {"a", "b"});
        CHECK(ht_equivalent(ours, rules[i], sig));
    }
}

TEST_CASE("hamiltonian_program is the conjunction of the rules") {
    FormulaPtr prog = hamiltonian_program();
    std::vector<FormulaPtr> conjuncts;
    const Formula* cur = prog.get();
    while (cur->kind == Formula::Kind::And) {
        conjuncts.push_back(cur->rhs);
        cur = cur->lhs.get();
    }
    conjuncts.push_back(FormulaPtr(prog, cur));
    CHECK(conjuncts.size() == 7);
}

TEST_CASE("hamiltonian_instance appends edge facts") {
    FormulaPtr inst = hamiltonian_instance({{"a", "b"}, {"b", "a"}});
    std::string text = print_formula(inst);
    CHECK(text.find("edge(a,b)") != std::string::npos);
    CHECK(text.find("edge(b,a)") != std::string::npos);
    CHECK_THROWS_AS(hamiltonian_instance({}), std::invalid_argument);
}
