#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqg/semantics.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace eqg;
using eqg_test::AtomSet;

namespace {

Interpretation interp(std::vector<std::string> atoms) {
    std::vector<GroundAtom> gs;
    for (auto& a : atoms) {
        auto open = a.find('(');
        if (open == std::string::npos) {
            gs.push_back({a, {}});
            continue;
        }
        GroundAtom g{a.substr(0, open), {}};
        std::string args = a.substr(open + 1, a.size() - open - 2);
        std::size_t start = 0;
        while (start <= args.size()) {
            auto comma = args.find(',', start);
            if (comma == std::string::npos) {
                g.args.push_back(args.substr(start));
                break;
            }
            g.args.push_back(args.substr(start, comma - start));
            start = comma + 1;
        }
        gs.push_back(std::move(g));
    }
    return Interpretation(std::move(gs));
}

std::vector<AtomSet> to_sets(const std::vector<Interpretation>& ms) {
    std::vector<AtomSet> out;
    for (const auto& m : ms) out.push_back(eqg_test::to_atom_set(m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AtomSet> sorted(std::vector<AtomSet> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("ground: quantifiers unfold over the sorted domain") {
    Signature s{{"a", "b"}, {{"man", 1}, {"mortal", 1}}};
    CHECK(print_formula(ground(parse_formula("forall X (man(X) -> mortal(X))"), s)) ==
          "(man(a) -> mortal(a)) & (man(b) -> mortal(b))");
    Signature one{{"a"}, {{"p", 1}}};
    CHECK(print_formula(ground(parse_formula("exists X (p(X))"), one)) == "p(a)");
    Signature none{{}, {{"p", 0}, {"q", 0}}};
    CHECK(print_formula(ground(parse_formula("p -> q"), none)) == "p -> q");
}

TEST_CASE("ground: errors") {
    Signature empty{{}, {{"p", 1}}};
    CHECK_THROWS_AS(ground(parse_formula("forall X (p(X))"), empty), EmptyDomainError);
    Signature s{{"a"}, {{"man", 1}}};
    CHECK_THROWS_AS(ground(parse_formula("man(X)"), s), FreeVariableError);
}

TEST_CASE("eval_classical") {
    CHECK(eval_classical(interp({"p"}), parse_formula("p v not p")));
    CHECK(eval_classical(interp({}), parse_formula("a = a")));
    CHECK_FALSE(eval_classical(interp({}), parse_formula("a = b")));
    CHECK(eval_classical(interp({}), parse_formula("a != b")));
}

TEST_CASE("HTStructure enforces here subset of there") {
    CHECK_NOTHROW(HTStructure(interp({}), interp({"p"})));
    CHECK_THROWS_AS(HTStructure(interp({"p"}), interp({})), std::invalid_argument);
}

TEST_CASE("eval_ht: the choice counter-model") {
    HTStructure gap(interp({}), interp({"p"}));
    FormulaPtr f = parse_formula("p v not p");
    CHECK_FALSE(eval_ht(gap, World::Here, f));   // not an HT tautology
    CHECK(eval_ht(gap, World::There, f));        // there-world is classical on I_t
    HTStructure total(interp({"p"}), interp({"p"}));
    CHECK(eval_ht(total, World::Here, parse_formula("p")));
}

TEST_CASE("models_classical: small examples in bitmask order") {
    Signature pq{{}, {{"p", 0}, {"q", 0}}};
    CHECK(models_classical(parse_formula("p & q"), pq) ==
          std::vector<Interpretation>{interp({"p", "q"})});
    CHECK(models_classical(parse_formula("p v q"), pq) ==
          std::vector<Interpretation>{interp({"p"}), interp({"q"}), interp({"p", "q"})});
    CHECK(models_classical(parse_formula("bot"), pq).empty());
}

TEST_CASE("equilibrium_models: frozen oracle values") {
    // every expected set below was produced by the brute-force oracle in
    // oracle.hpp and is re-checked against it here
    FormulaPtr choice = parse_formula("p v not p");
    Signature sp = signature_of(choice);
    auto got = equilibrium_models(choice, sp);
    CHECK(got == std::vector<Interpretation>{interp({}), interp({"p"})});
    CHECK(to_sets(got) == sorted(eqg_test::equilibrium_oracle(choice, sp)));

    FormulaPtr cycle = parse_formula("(not q -> p) & (not p -> q)");
    Signature spq = signature_of(cycle);
    auto got2 = equilibrium_models(cycle, spq);
    CHECK(got2 == std::vector<Interpretation>{interp({"p"}), interp({"q"})});
    CHECK(to_sets(got2) == sorted(eqg_test::equilibrium_oracle(cycle, spq)));

    FormulaPtr rule = parse_formula("man(a) & forall X (man(X) -> mortal(X))");
    Signature sa = signature_of(rule);
    auto got3 = equilibrium_models(rule, sa);
    CHECK(got3 == std::vector<Interpretation>{interp({"man(a)", "mortal(a)"})});
    CHECK(to_sets(got3) == sorted(eqg_test::equilibrium_oracle(rule, sa)));

    FormulaPtr constraint = parse_formula("man(a) & forall X (man(X) & not mortal(X) -> bot)");
    CHECK(equilibrium_models(constraint, signature_of(constraint)).empty());
    CHECK(eqg_test::equilibrium_oracle(constraint, signature_of(constraint)).empty());
}

TEST_CASE("ht_models: small examples") {
    Signature sp{{}, {{"p", 0}}};
    auto one = ht_models(parse_formula("p"), sp);
    CHECK(one == std::vector<std::pair<Interpretation, Interpretation>>{
                     {interp({"p"}), interp({"p"})}});
    auto notp = ht_models(parse_formula("not p"), sp);
    CHECK(notp == std::vector<std::pair<Interpretation, Interpretation>>{
                      {interp({}), interp({})}});
    auto all = ht_models(parse_formula("top"), sp);
    CHECK(all.size() == 3);  // ({},{}), ({},{p}), ({p},{p})
    CHECK(all[0] == std::pair{interp({}), interp({})});
    CHECK(all[1] == std::pair{interp({}), interp({"p"})});
    CHECK(all[2] == std::pair{interp({"p"}), interp({"p"})});
}

TEST_CASE("ht_equivalent: disjunction encoding and HT non-tautology") {
    Signature pq{{}, {{"p", 0}, {"q", 0}}};
    CHECK(ht_equivalent(parse_formula("p v q"),
                        parse_formula("((p -> q) -> q) & ((q -> p) -> p)"), pq));
    Signature sp{{}, {{"p", 0}}};
    CHECK_FALSE(ht_equivalent(parse_formula("p v not p"), parse_formula("top"), sp));
}

TEST_CASE("ht_equivalent: existential quantifier from universals") {
    FormulaPtr ex = parse_formula("exists X p(X)");
    // the antecedent-scoped encoding; the flat forall X forall Y variant is
    // not equivalent once |D| > 1, see below
    FormulaPtr uni = parse_formula("forall Y ((forall X (p(X) -> p(Y))) -> p(Y))");
    for (std::vector<std::string> d :
         {std::vector<std::string>{"a"}, {"a", "b"}, {"a", "b", "c"}}) {
        Signature s{d, {{"p", 1}}};
        CAPTURE(d.size());
        CHECK(ht_equivalent(ex, uni, s));
    }

    FormulaPtr flat = parse_formula("forall X (forall Y ((p(X) -> p(Y)) -> p(Y)))");
    Signature two{{"a", "b"}, {{"p", 1}}};
    CHECK_FALSE(ht_equivalent(ex, flat, two));
    // concrete witness: the total structure {p(a)} separates them
    Interpretation pa = interp({"p(a)"});
    CHECK(eval_classical(pa, ground(ex, two)));
    CHECK_FALSE(eval_classical(pa, ground(flat, two)));
}

TEST_CASE("intuitionistic De Morgan over a finite domain") {
    Signature s{{"a", "b"}, {{"p", 1}}};
    CHECK(ht_equivalent(parse_formula("not (exists X p(X))"), parse_formula("forall X (not p(X))"),
                        s));
}

TEST_CASE("guard") {
    Signature big{{"a", "b", "c"}, {{"q", 2}}};  // 9 atoms
    EnumOptions tight;
    tight.atom_guard = 8;
    CHECK_THROWS_AS(models_classical(parse_formula("forall X (q(X,X))"), big, tight),
                    GuardExceeded);
    try {
        models_classical(parse_formula("forall X (q(X,X))"), big, tight);
    } catch (const GuardExceeded& e) {
        CHECK(e.atom_count == 9);
        CHECK(e.guard == 8);
    }
}

TEST_CASE("property: persistence, coincidence, there-world classicality") {
    eqg_test::Rng rng(555);
    std::vector<std::string> props{"p", "q", "r"};
    std::vector<Interpretation> interps;
    for (unsigned m = 0; m < 8; ++m) {
        std::vector<std::string> atoms;
        for (unsigned i = 0; i < 3; ++i)
            if ((m >> i) & 1) atoms.push_back(props[i]);
        interps.push_back(interp(atoms));
    }
    for (int i = 0; i < 400; ++i) {
        FormulaPtr f = eqg_test::gen_ground_formula(rng, 4, props);
        CAPTURE(print_formula(f));
        for (const auto& ih : interps)
            for (const auto& it : interps) {
                if (!ih.subset_of(it)) continue;
                HTStructure m(ih, it);
                bool here = eval_ht(m, World::Here, f);
                bool there = eval_ht(m, World::There, f);
                if (here) CHECK(there);                       // persistence
                CHECK(there == eval_classical(it, f));        // t-world is classical
                if (ih == it) CHECK(here == eval_classical(it, f));  // total coincidence
            }
    }
}

TEST_CASE("property: grounding agrees with direct quantifier evaluation") {
    eqg_test::Rng rng(909090);
    Signature s{{"a", "b"}, {{"p", 1}, {"q", 2}, {"r", 0}}};
    auto universe = eqg_test::universe_keys(s);
    auto interps = eqg_test::all_interpretations(s);
    for (int i = 0; i < 150; ++i) {
        FormulaPtr f = eqg_test::gen_sentence(rng, 3);
        if (!free_vars(f).empty()) continue;
        FormulaPtr g = ground(f, s);
        CAPTURE(print_formula(f));
        int checked = 0;
        for (const auto& t : interps) {
            for (const auto& h : interps) {
                if (!eqg_test::subset(h, t)) continue;
                HTStructure m(eqg_test::to_interpretation(h), eqg_test::to_interpretation(t));
                bool direct_h = eqg_test::ht_sat_direct(s, h, t, World::Here, f);
                bool direct_t = eqg_test::ht_sat_direct(s, h, t, World::There, f);
                CHECK(eval_ht(m, World::Here, g) == direct_h);
                CHECK(eval_ht(m, World::There, g) == direct_t);
                ++checked;
            }
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("property: enumerators agree with the naive oracle") {
    eqg_test::Rng rng(24601);
    for (int i = 0; i < 60; ++i) {
        FormulaPtr f = eqg_test::gen_sentence(rng, 2);
        Signature s = signature_of(f, {"a", "b"});
        if (atom_universe(s).size() > 7) continue;
        CAPTURE(print_formula(f));
        CHECK(to_sets(equilibrium_models(f, s)) == sorted(eqg_test::equilibrium_oracle(f, s)));
        CHECK(to_sets(models_classical(f, s)) == sorted(eqg_test::classical_models_oracle(f, s)));

        auto got_pairs = ht_models(f, s);
        std::vector<std::pair<AtomSet, AtomSet>> got;
        for (const auto& [h, t] : got_pairs)
            got.emplace_back(eqg_test::to_atom_set(h), eqg_test::to_atom_set(t));
        auto want = eqg_test::ht_models_oracle(f, s);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
}

TEST_CASE("property: fact pruning never changes any result set") {
    eqg_test::Rng rng(1812);
    std::vector<std::string> props{"p", "q", "r", "s"};
    for (int i = 0; i < 120; ++i) {
        // build formulas with top-level conjunct facts so pruning has bite
        FormulaPtr f = eqg_test::gen_ground_formula(rng, 3, props);
        if (rng.coin()) f = conj(atom("p"), f);
        if (rng.coin()) f = conj(f, atom("q"));
        Signature s = signature_of(f);
        for (const auto& name : props)
            if (!s.predicates.count(name)) s.predicates.emplace(name, 0);
        EnumOptions plain, pruned;
        pruned.prune_facts = true;
        CAPTURE(print_formula(f));
        CHECK(equilibrium_models(f, s, plain) == equilibrium_models(f, s, pruned));
        CHECK(models_classical(f, s, plain) == models_classical(f, s, pruned));
        CHECK(ht_models(f, s, plain) == ht_models(f, s, pruned));
    }
}

TEST_CASE("every equilibrium model is a classical model") {
    eqg_test::Rng rng(3333);
    for (int i = 0; i < 80; ++i) {
        FormulaPtr f = eqg_test::gen_sentence(rng, 2);
        Signature s = signature_of(f, {"a", "b"});
        if (atom_universe(s).size() > 8) continue;
        auto stable = equilibrium_models(f, s);
        auto classical = models_classical(f, s);
        for (const auto& m : stable)
            CHECK(std::find(classical.begin(), classical.end(), m) != classical.end());
    }
}
