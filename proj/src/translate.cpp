#include "eqg/translate.hpp"

#include <algorithm>

namespace eqg {

namespace {

Term term_of(const ArgRef& a) {
    return a.is_line() ? Term::variable(a.name) : Term::constant(a.name);
}

FormulaPtr conj_all(const std::vector<FormulaPtr>& parts) {
    if (parts.empty()) return top();
    FormulaPtr f = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) f = conj(f, parts[i]);
    return f;
}

FormulaPtr disj_all(const std::vector<FormulaPtr>& parts) {
    if (parts.empty()) return bot();
    FormulaPtr f = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) f = disj(f, parts[i]);
    return f;
}

std::vector<std::string> sorted_lines(const Region& r) {
    std::vector<std::string> ls = r.lines;
    std::sort(ls.begin(), ls.end());
    return ls;
}

template <typename F>
FormulaPtr quantify(F&& make, const Region& r, FormulaPtr body) {
    std::vector<std::string> ls = sorted_lines(r);
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) body = make(*it, body);
    return body;
}

FormulaPtr atom_of(const PredApp& p) {
    std::vector<Term> args;
    args.reserve(p.args.size());
    for (const ArgRef& a : p.args) args.push_back(term_of(a));
    return atom(p.pred, std::move(args));
}

// ── Equilibrium reading ─────────────────────────────────────────────────────

FormulaPtr element_qel(const Element& e);

FormulaPtr region_qel(const Region& r) {
    std::vector<FormulaPtr> parts;
    for (const Element& e : r.elements) parts.push_back(element_qel(e));
    return quantify([](const std::string& v, FormulaPtr b) { return exists(v, b); }, r,
                    conj_all(parts));
}

FormulaPtr element_qel(const Element& e) {
    if (e.is_pred()) return atom_of(e.pred());
    if (e.is_eq()) return eq(term_of(e.eq().lhs), term_of(e.eq().rhs));
    const Conditional& c = e.cond();
    std::vector<FormulaPtr> ant;
    for (const Element& inner : c.antecedent.elements) ant.push_back(element_qel(inner));
    std::vector<FormulaPtr> cons;
    for (const Region& reg : c.consequents) cons.push_back(region_qel(reg));
    FormulaPtr rhs = disj_all(cons);
    // a cut written with the (not ...) sugar keeps the `not` rendering; a
    // bare zero-consequent cond renders `... -> bot` for compound bodies
    NegSugar sugar = c.from_not ? NegSugar::Not : NegSugar::Auto;
    FormulaPtr body = ant.empty() ? rhs : implies(conj_all(ant), rhs, sugar);
    return quantify([](const std::string& v, FormulaPtr b) { return forall(v, b); }, c.antecedent,
                    body);
}

// ── Peirce reading (all rectangles become cuts) ─────────────────────────────

FormulaPtr element_cls(const Element& e);

FormulaPtr region_cls(const Region& r) {
    std::vector<FormulaPtr> parts;
    for (const Element& e : r.elements) parts.push_back(element_cls(e));
    return quantify([](const std::string& v, FormulaPtr b) { return exists(v, b); }, r,
                    conj_all(parts));
}

FormulaPtr element_cls(const Element& e) {
    if (e.is_pred()) return atom_of(e.pred());
    if (e.is_eq()) return eq(term_of(e.eq().lhs), term_of(e.eq().rhs));
    const Conditional& c = e.cond();
    std::vector<FormulaPtr> parts;
    for (const Element& inner : c.antecedent.elements) parts.push_back(element_cls(inner));
    for (const Region& reg : c.consequents) parts.push_back(neg(region_cls(reg)));
    FormulaPtr body = quantify([](const std::string& v, FormulaPtr b) { return exists(v, b); },
                               c.antecedent, conj_all(parts));
    return neg(body);
}

void ensure_valid(const Diagram& d) {
    std::vector<Violation> vs = validate(d);
    if (!vs.empty()) throw ValidationError(std::move(vs));
}

}  // namespace

FormulaPtr to_formula(const Diagram& d) {
    ensure_valid(d);
    return region_qel(d.page);
}

FormulaPtr to_classical_formula(const Diagram& d) {
    ensure_valid(d);
    return region_cls(d.page);
}

}  // namespace eqg
