// eqg/semantics.hpp — grounding, classical and here-and-there evaluation,
// and model enumeration over finite Herbrand domains.
//
// Interpretations are subsets of the ground atom universe At(D,P).  A
// here-and-there structure is a pair I_h ⊆ I_t of interpretations; a total
// structure (I_t, I_t) that is a model with no smaller h-part is an
// equilibrium model, and its I_t is a stable model.

#ifndef EQG_SEMANTICS_HPP
#define EQG_SEMANTICS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eqg/formula.hpp"

namespace eqg {

// ── Errors ──────────────────────────────────────────────────────────────────

/// A quantifier was grounded over an empty domain.
struct EmptyDomainError : std::runtime_error {
    EmptyDomainError() : std::runtime_error("quantifier over an empty domain") {}
};

/// The formula is not a sentence (or a ground operation met a variable).
struct FreeVariableError : std::runtime_error {
    explicit FreeVariableError(const std::string& var)
        : std::runtime_error("free variable '" + var + "'"), var(var) {}
    std::string var;
};

/// |At(D,P)| exceeds the enumeration guard.
struct GuardExceeded : std::runtime_error {
    GuardExceeded(std::size_t atom_count, std::size_t guard)
        : std::runtime_error("atom universe has " + std::to_string(atom_count) +
                             " atoms, guard is " + std::to_string(guard)),
          atom_count(atom_count),
          guard(guard) {}
    std::size_t atom_count;
    std::size_t guard;
};

// ── Interpretations ─────────────────────────────────────────────────────────

struct GroundAtom {
    std::string pred;
    std::vector<std::string> args;

    std::string to_string() const;

    bool operator==(const GroundAtom&) const = default;
    auto operator<=>(const GroundAtom&) const = default;
};

/// A set of ground atoms, kept sorted and duplicate-free.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::vector<GroundAtom> atoms);

    const std::vector<GroundAtom>& atoms() const { return atoms_; }
    bool contains(const GroundAtom& a) const;
    bool subset_of(const Interpretation& o) const;
    std::size_t size() const { return atoms_.size(); }

    /// "{}" or "{p, q(a,b)}" with atoms in sorted order.
    std::string to_string() const;

    bool operator==(const Interpretation&) const = default;
    auto operator<=>(const Interpretation&) const = default;

private:
    std::vector<GroundAtom> atoms_;
};

enum class World { Here, There };

/// Pair of interpretations with I_h ⊆ I_t (checked at construction).
struct HTStructure {
    HTStructure(Interpretation here, Interpretation there);

    Interpretation here;
    Interpretation there;
};

// ── Evaluation ──────────────────────────────────────────────────────────────

/// Replace every quantifier by a finite conjunction/disjunction over the
/// domain constants (in sorted order): forall x f becomes f[x:=d1] & ... &
/// f[x:=dn], exists the disjunction.  Equalities stay as atoms.  Throws
/// EmptyDomainError when a quantifier meets an empty domain and
/// FreeVariableError when f is not a sentence.
FormulaPtr ground(const FormulaPtr& f, const Signature& sig);

/// Classical truth of a ground formula; c = d holds iff the two constants
/// are identical.
bool eval_classical(const Interpretation& interp, const FormulaPtr& f);

/// Here-and-there satisfaction of a ground formula at a world:
///   M,w |= p          iff p in I_w
///   M,w |= c = d      iff c and d are the same constant
///   M,t |= f -> g     iff M,t |/= f or M,t |= g
///   M,h |= f -> g     iff M,t |= f -> g and (M,h |/= f or M,h |= g)
/// with top/bot fixed and &, v pointwise.
bool eval_ht(const HTStructure& m, World w, const FormulaPtr& f);

/// All ground atoms of the signature, sorted.
std::vector<GroundAtom> atom_universe(const Signature& sig);

// ── Enumeration ─────────────────────────────────────────────────────────────

struct EnumOptions {
    /// Maximum |At(D,P)| the enumerators accept.
    std::size_t atom_guard = 16;
    /// Force atoms that occur as top-level conjuncts of the grounded
    /// sentence (facts) into every candidate interpretation.  Sound, and
    /// verified against the unpruned search in the test suite.
    bool prune_facts = false;
};

/// All classical models of the sentence, as ascending bitmasks over the
/// sorted atom universe.
std::vector<Interpretation> models_classical(const FormulaPtr& f, const Signature& sig,
                                             const EnumOptions& opts = {});

/// All HT models (I_h, I_t) of the sentence, ordered by ascending I_t then
/// ascending I_h.
std::vector<std::pair<Interpretation, Interpretation>> ht_models(const FormulaPtr& f,
                                                                 const Signature& sig,
                                                                 const EnumOptions& opts = {});

/// The stable models: every I_t whose total structure satisfies f at h
/// while no proper subset I_h of I_t does.
std::vector<Interpretation> equilibrium_models(const FormulaPtr& f, const Signature& sig,
                                               const EnumOptions& opts = {});

/// True iff f and g have exactly the same HT models over the signature.
bool ht_equivalent(const FormulaPtr& f, const FormulaPtr& g, const Signature& sig,
                   const EnumOptions& opts = {});

}  // namespace eqg

#endif  // EQG_SEMANTICS_HPP
