// eqg/corpus.hpp — bundled example diagrams with their expected readings,
// and the Hamiltonian-cycle program builders.

#ifndef EQG_CORPUS_HPP
#define EQG_CORPUS_HPP

#include <string>
#include <utility>
#include <vector>

#include "eqg/diagram.hpp"
#include "eqg/formula.hpp"

namespace eqg {

/// One bundled example: the diagram source, the parsed diagram, and the
/// formula its equilibrium reading must equal (as text and parsed).
struct CorpusEntry {
    std::string name;           // e.g. "idline/forall-rule"
    std::string dsl;            // canonical diagram text
    std::string expected_text;  // canonical formula text of the reading
    Diagram diagram;
    FormulaPtr expected;
};

/// The bundled corpus.  The same entries ship as files under corpus/
/// (<name>.eg with a <name>.qel.golden sidecar).
const std::vector<CorpusEntry>& corpus();

/// The seven rules of the Hamiltonian cycle encoding, in order: edge
/// endpoints are nodes; choice of in(x,y) per edge; no two out-edges from
/// one node; no two in-edges into one node; in implies reach; reach is
/// transitively closed under in; every node pair must be reached.
const std::vector<FormulaPtr>& hamiltonian_rules();

/// Conjunction of the seven rules.
FormulaPtr hamiltonian_program();

/// Program plus one edge fact per pair, e.g. {{"a","b"},{"b","a"}}.
/// Throws std::invalid_argument on an empty edge list.
FormulaPtr hamiltonian_instance(const std::vector<std::pair<std::string, std::string>>& edges);

}  // namespace eqg

#endif  // EQG_CORPUS_HPP
