// eqg/translate.hpp — reading functions from diagrams to formulas.

#ifndef EQG_TRANSLATE_HPP
#define EQG_TRANSLATE_HPP

#include "eqg/diagram.hpp"
#include "eqg/formula.hpp"

namespace eqg {

/// Equilibrium reading.  A page or consequent region with lines L and
/// elements E reads as exists L (E1 & ... & En), the empty conjunction
/// being top.  A conditional with antecedent lines LA, antecedent elements
/// EA and consequents C1..Cn reads as
///     forall LA (EA1 & ... & EAm -> C1 v ... v Cn)
/// where the empty disjunction is bot and an empty antecedent conjunction
/// (top -> psi) simplifies to psi.  Quantifiers of one region are emitted
/// in lexicographic variable order.  Throws ValidationError when the
/// diagram is not well-formed.
FormulaPtr to_formula(const Diagram& d);

/// Peirce (classical cut) reading of the same diagram with every rectangle
/// replaced by a cut: a conditional reads as
///     not (exists LA (EA1 & ... & EAm & not C1 & ... & not Cn))
/// with each consequent read existentially over its own lines.  Classically
/// equivalent to to_formula(d).
FormulaPtr to_classical_formula(const Diagram& d);

}  // namespace eqg

#endif  // EQG_TRANSLATE_HPP
