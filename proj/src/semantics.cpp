#include "eqg/semantics.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>

namespace eqg {

// ── Interpretations ─────────────────────────────────────────────────────────

std::string GroundAtom::to_string() const {
    std::string s = pred;
    if (!args.empty()) {
        s += '(';
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i) s += ',';
            s += args[i];
        }
        s += ')';
    }
    return s;
}

Interpretation::Interpretation(std::vector<GroundAtom> atoms) : atoms_(std::move(atoms)) {
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

bool Interpretation::contains(const GroundAtom& a) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

bool Interpretation::subset_of(const Interpretation& o) const {
    return std::includes(o.atoms_.begin(), o.atoms_.end(), atoms_.begin(), atoms_.end());
}

std::string Interpretation::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i) s += ", ";
        s += atoms_[i].to_string();
    }
    return s + "}";
}

HTStructure::HTStructure(Interpretation h, Interpretation t)
    : here(std::move(h)), there(std::move(t)) {
    if (!here.subset_of(there))
        throw std::invalid_argument("here-and-there structure requires I_h to be a subset of I_t");
}

// ── Grounding ───────────────────────────────────────────────────────────────

namespace {

using Env = std::map<std::string, std::string>;

std::string subst(const Term& t, const Env& env) {
    if (t.is_constant()) return t.name;
    auto it = env.find(t.name);
    if (it == env.end()) throw FreeVariableError(t.name);
    return it->second;
}

FormulaPtr ground_rec(const Formula& f, const Signature& sig, Env& env) {
    switch (f.kind) {
        case Formula::Kind::Top: return top();
        case Formula::Kind::Bot: return bot();
        case Formula::Kind::Atom: {
            std::vector<Term> args;
            args.reserve(f.terms.size());
            for (const Term& t : f.terms) args.push_back(Term::constant(subst(t, env)));
            return atom(f.name, std::move(args));
        }
        case Formula::Kind::Eq:
            return eq(Term::constant(subst(f.terms[0], env)),
                      Term::constant(subst(f.terms[1], env)));
        case Formula::Kind::And:
            return conj(ground_rec(*f.lhs, sig, env), ground_rec(*f.rhs, sig, env));
        case Formula::Kind::Or:
            return disj(ground_rec(*f.lhs, sig, env), ground_rec(*f.rhs, sig, env));
        case Formula::Kind::Implies:
            return implies(ground_rec(*f.lhs, sig, env), ground_rec(*f.rhs, sig, env), f.sugar);
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            if (sig.constants.empty()) throw EmptyDomainError();
            bool universal = f.kind == Formula::Kind::Forall;
            std::optional<std::string> previous;
            if (auto it = env.find(f.name); it != env.end()) previous = it->second;
            FormulaPtr acc;
            for (const std::string& c : sig.constants) {
                env[f.name] = c;
                FormulaPtr inst = ground_rec(*f.rhs, sig, env);
                acc = !acc ? inst : (universal ? conj(acc, inst) : disj(acc, inst));
            }
            if (previous) env[f.name] = *previous;
            else env.erase(f.name);
            return acc;
        }
    }
    return top();
}

}  // namespace

FormulaPtr ground(const FormulaPtr& f, const Signature& sig) {
    Env env;
    return ground_rec(*f, sig, env);
}

// ── Direct evaluation ───────────────────────────────────────────────────────

namespace {

GroundAtom ground_atom_of(const Formula& f) {
    GroundAtom a;
    a.pred = f.name;
    a.args.reserve(f.terms.size());
    for (const Term& t : f.terms) {
        if (t.is_variable()) throw FreeVariableError(t.name);
        a.args.push_back(t.name);
    }
    return a;
}

const std::string& constant_of(const Term& t) {
    if (t.is_variable()) throw FreeVariableError(t.name);
    return t.name;
}

}  // namespace

bool eval_classical(const Interpretation& interp, const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::Top: return true;
        case Formula::Kind::Bot: return false;
        case Formula::Kind::Atom: return interp.contains(ground_atom_of(*f));
        case Formula::Kind::Eq: return constant_of(f->terms[0]) == constant_of(f->terms[1]);
        case Formula::Kind::And: return eval_classical(interp, f->lhs) && eval_classical(interp, f->rhs);
        case Formula::Kind::Or: return eval_classical(interp, f->lhs) || eval_classical(interp, f->rhs);
        case Formula::Kind::Implies:
            return !eval_classical(interp, f->lhs) || eval_classical(interp, f->rhs);
        default:
            throw std::logic_error("eval_classical requires a ground formula");
    }
}

bool eval_ht(const HTStructure& m, World w, const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::Top: return true;
        case Formula::Kind::Bot: return false;
        case Formula::Kind::Atom: {
            const Interpretation& iw = w == World::Here ? m.here : m.there;
            return iw.contains(ground_atom_of(*f));
        }
        case Formula::Kind::Eq: return constant_of(f->terms[0]) == constant_of(f->terms[1]);
        case Formula::Kind::And: return eval_ht(m, w, f->lhs) && eval_ht(m, w, f->rhs);
        case Formula::Kind::Or: return eval_ht(m, w, f->lhs) || eval_ht(m, w, f->rhs);
        case Formula::Kind::Implies: {
            bool at_there = !eval_ht(m, World::There, f->lhs) || eval_ht(m, World::There, f->rhs);
            if (w == World::There) return at_there;
            return at_there && (!eval_ht(m, World::Here, f->lhs) || eval_ht(m, World::Here, f->rhs));
        }
        default:
            throw std::logic_error("eval_ht requires a ground formula");
    }
}

// ── Atom universe ───────────────────────────────────────────────────────────

std::vector<GroundAtom> atom_universe(const Signature& sig) {
    std::vector<GroundAtom> out;
    for (const auto& [pred, arity] : sig.predicates) {
        if (arity == 0) {
            out.push_back({pred, {}});
            continue;
        }
        if (sig.constants.empty()) continue;  // no ground instances
        std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
        while (true) {
            GroundAtom a{pred, {}};
            for (std::size_t i : idx) a.args.push_back(sig.constants[i]);
            out.push_back(std::move(a));
            int pos = arity - 1;
            while (pos >= 0) {
                if (++idx[static_cast<std::size_t>(pos)] < sig.constants.size()) break;
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ── Compiled evaluator ──────────────────────────────────────────────────────
//
// The enumerators flatten the grounded sentence into an index-based node
// array evaluated over bitmask interpretations, with a per-I_t memo of
// there-world values for the h-world implication clause.

namespace {

using Mask = std::uint64_t;

struct CNode {
    enum class Op : std::uint8_t { False, True, Atom, And, Or, Implies };
    Op op;
    std::int32_t a = -1;  // left child, or atom bit index
    std::int32_t b = -1;  // right child
};

struct Compiled {
    std::vector<CNode> nodes;
    std::int32_t root = -1;
    std::vector<GroundAtom> universe;
    Mask fact_mask = 0;
};

std::int32_t compile_rec(const Formula& f, const std::vector<GroundAtom>& universe,
                         std::vector<CNode>& nodes) {
    auto push = [&](CNode n) {
        nodes.push_back(n);
        return static_cast<std::int32_t>(nodes.size() - 1);
    };
    switch (f.kind) {
        case Formula::Kind::Top: return push({CNode::Op::True});
        case Formula::Kind::Bot: return push({CNode::Op::False});
        case Formula::Kind::Eq:
            return push({constant_of(f.terms[0]) == constant_of(f.terms[1]) ? CNode::Op::True
                                                                            : CNode::Op::False});
        case Formula::Kind::Atom: {
            GroundAtom a = ground_atom_of(f);
            auto it = std::lower_bound(universe.begin(), universe.end(), a);
            if (it == universe.end() || !(*it == a))
                throw std::logic_error("atom outside the universe: " + a.to_string());
            return push({CNode::Op::Atom, static_cast<std::int32_t>(it - universe.begin())});
        }
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies: {
            std::int32_t l = compile_rec(*f.lhs, universe, nodes);
            std::int32_t r = compile_rec(*f.rhs, universe, nodes);
            CNode::Op op = f.kind == Formula::Kind::And   ? CNode::Op::And
                           : f.kind == Formula::Kind::Or ? CNode::Op::Or
                                                         : CNode::Op::Implies;
            return push({op, l, r});
        }
        default:
            throw std::logic_error("cannot compile a quantified formula");
    }
}

void collect_facts(const Formula& f, const std::vector<GroundAtom>& universe, Mask& mask) {
    if (f.kind == Formula::Kind::And) {
        collect_facts(*f.lhs, universe, mask);
        collect_facts(*f.rhs, universe, mask);
    } else if (f.kind == Formula::Kind::Atom) {
        GroundAtom a = ground_atom_of(f);
        auto it = std::lower_bound(universe.begin(), universe.end(), a);
        if (it != universe.end() && *it == a)
            mask |= Mask{1} << static_cast<unsigned>(it - universe.begin());
    }
}

Compiled compile(const FormulaPtr& f, const Signature& sig, const EnumOptions& opts) {
    Compiled c;
    c.universe = atom_universe(sig);
    if (c.universe.size() > opts.atom_guard || c.universe.size() > 62)
        throw GuardExceeded(c.universe.size(), opts.atom_guard);
    FormulaPtr g = ground(f, sig);
    c.root = compile_rec(*g, c.universe, c.nodes);
    if (opts.prune_facts) collect_facts(*g, c.universe, c.fact_mask);
    return c;
}

bool eval_mask(const Compiled& c, std::int32_t n, Mask interp) {
    const CNode& node = c.nodes[static_cast<std::size_t>(n)];
    switch (node.op) {
        case CNode::Op::False: return false;
        case CNode::Op::True: return true;
        case CNode::Op::Atom: return (interp >> node.a) & 1;
        case CNode::Op::And: return eval_mask(c, node.a, interp) && eval_mask(c, node.b, interp);
        case CNode::Op::Or: return eval_mask(c, node.a, interp) || eval_mask(c, node.b, interp);
        case CNode::Op::Implies:
            return !eval_mask(c, node.a, interp) || eval_mask(c, node.b, interp);
    }
    return false;
}

// There-world truth with a per-I_t memo (the h clause for -> consults it).
bool eval_there(const Compiled& c, std::int32_t n, Mask there, std::vector<std::int8_t>& memo) {
    std::int8_t& m = memo[static_cast<std::size_t>(n)];
    if (m >= 0) return m != 0;
    const CNode& node = c.nodes[static_cast<std::size_t>(n)];
    bool v = false;
    switch (node.op) {
        case CNode::Op::False: v = false; break;
        case CNode::Op::True: v = true; break;
        case CNode::Op::Atom: v = (there >> node.a) & 1; break;
        case CNode::Op::And:
            v = eval_there(c, node.a, there, memo) && eval_there(c, node.b, there, memo);
            break;
        case CNode::Op::Or:
            v = eval_there(c, node.a, there, memo) || eval_there(c, node.b, there, memo);
            break;
        case CNode::Op::Implies:
            v = !eval_there(c, node.a, there, memo) || eval_there(c, node.b, there, memo);
            break;
    }
    m = v ? 1 : 0;
    return v;
}

bool eval_here(const Compiled& c, std::int32_t n, Mask here, Mask there,
               std::vector<std::int8_t>& tmemo) {
    const CNode& node = c.nodes[static_cast<std::size_t>(n)];
    switch (node.op) {
        case CNode::Op::False: return false;
        case CNode::Op::True: return true;
        case CNode::Op::Atom: return (here >> node.a) & 1;
        case CNode::Op::And:
            return eval_here(c, node.a, here, there, tmemo) &&
                   eval_here(c, node.b, here, there, tmemo);
        case CNode::Op::Or:
            return eval_here(c, node.a, here, there, tmemo) ||
                   eval_here(c, node.b, here, there, tmemo);
        case CNode::Op::Implies:
            if (!eval_there(c, n, there, tmemo)) return false;
            return !eval_here(c, node.a, here, there, tmemo) ||
                   eval_here(c, node.b, here, there, tmemo);
    }
    return false;
}

Interpretation interp_of(const Compiled& c, Mask m) {
    std::vector<GroundAtom> atoms;
    for (std::size_t i = 0; i < c.universe.size(); ++i)
        if ((m >> i) & 1) atoms.push_back(c.universe[i]);
    return Interpretation(std::move(atoms));
}

// Positions of the bits the enumeration actually varies.
std::vector<unsigned> free_positions(const Compiled& c) {
    std::vector<unsigned> pos;
    for (unsigned i = 0; i < c.universe.size(); ++i)
        if (!((c.fact_mask >> i) & 1)) pos.push_back(i);
    return pos;
}

Mask spread(Mask packed, const std::vector<unsigned>& positions) {
    Mask m = 0;
    for (std::size_t i = 0; i < positions.size(); ++i)
        if ((packed >> i) & 1) m |= Mask{1} << positions[i];
    return m;
}

}  // namespace

std::vector<Interpretation> models_classical(const FormulaPtr& f, const Signature& sig,
                                             const EnumOptions& opts) {
    Compiled c = compile(f, sig, opts);
    std::vector<unsigned> pos = free_positions(c);
    std::vector<Interpretation> out;
    Mask limit = Mask{1} << pos.size();
    for (Mask packed = 0; packed < limit; ++packed) {
        Mask interp = c.fact_mask | spread(packed, pos);
        if (eval_mask(c, c.root, interp)) out.push_back(interp_of(c, interp));
    }
    return out;
}

std::vector<std::pair<Interpretation, Interpretation>> ht_models(const FormulaPtr& f,
                                                                 const Signature& sig,
                                                                 const EnumOptions& opts) {
    Compiled c = compile(f, sig, opts);
    std::vector<unsigned> pos = free_positions(c);
    std::vector<std::pair<Interpretation, Interpretation>> out;
    std::vector<std::int8_t> tmemo;
    Mask limit = Mask{1} << pos.size();
    for (Mask packed = 0; packed < limit; ++packed) {
        Mask there = c.fact_mask | spread(packed, pos);
        // persistence: an h-model at I_t requires I_t to be a classical model
        if (!eval_mask(c, c.root, there)) continue;
        tmemo.assign(c.nodes.size(), -1);
        Mask tfree = there & ~c.fact_mask;
        Mask sub = 0;
        while (true) {  // ascending submask walk
            Mask here = c.fact_mask | sub;
            if (eval_here(c, c.root, here, there, tmemo))
                out.emplace_back(interp_of(c, here), interp_of(c, there));
            if (sub == tfree) break;
            sub = (sub - tfree) & tfree;
        }
    }
    return out;
}

std::vector<Interpretation> equilibrium_models(const FormulaPtr& f, const Signature& sig,
                                               const EnumOptions& opts) {
    Compiled c = compile(f, sig, opts);
    std::vector<unsigned> pos = free_positions(c);
    std::vector<Interpretation> out;
    std::vector<std::int8_t> tmemo;
    Mask limit = Mask{1} << pos.size();
    for (Mask packed = 0; packed < limit; ++packed) {
        Mask there = c.fact_mask | spread(packed, pos);
        // total models coincide with classical models of I_t
        if (!eval_mask(c, c.root, there)) continue;
        tmemo.assign(c.nodes.size(), -1);
        Mask tfree = there & ~c.fact_mask;
        bool minimal = true;
        // single-atom removals first: they witness most non-minimal candidates
        for (Mask rest = tfree; rest && minimal; rest &= rest - 1) {
            Mask bit = rest & ~(rest - 1);
            if (eval_here(c, c.root, there & ~bit, there, tmemo)) minimal = false;
        }
        if (minimal && std::popcount(tfree) >= 2) {
            Mask sub = 0;
            while (true) {
                if (sub == tfree) break;  // proper subsets only
                if (std::popcount(sub) != std::popcount(tfree) - 1 &&
                    eval_here(c, c.root, c.fact_mask | sub, there, tmemo)) {
                    minimal = false;
                    break;
                }
                sub = (sub - tfree) & tfree;
            }
        }
        if (minimal) out.push_back(interp_of(c, there));
    }
    return out;
}

bool ht_equivalent(const FormulaPtr& f, const FormulaPtr& g, const Signature& sig,
                   const EnumOptions& opts) {
    EnumOptions plain = opts;
    plain.prune_facts = false;  // pruning is per-formula and would skew the comparison
    return ht_models(f, sig, plain) == ht_models(g, sig, plain);
}

}  // namespace eqg
