#ifndef RAAGCOH_CHORDAL_HPP
#define RAAGCOH_CHORDAL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "raagcoh/complex.hpp"

namespace raagcoh {

// Elimination order: order[0] is eliminated first.  Valid iff for every
// vertex the neighbours eliminated later form a clique.
struct PerfectEliminationOrder {
    std::vector<int> order;
};

// Cyclic vertex sequence of length >= 4: consecutive vertices adjacent,
// non-consecutive ones not.
struct InducedCycleWitness {
    std::vector<int> cycle;
};

struct ChordalResult {
    bool chordal = false;
    std::optional<PerfectEliminationOrder> peo;
    std::optional<InducedCycleWitness> witness;
};

// Lexicographic BFS + verification; on failure extracts an induced cycle.
ChordalResult is_chordal(const Graph& g);

bool verify_peo(const Graph& g, const PerfectEliminationOrder& peo);
bool verify_cycle_witness(const Graph& g, const InducedCycleWitness& w);

struct SeparatorList {
    std::vector<VertexSet> separators; // canonical order
    bool truncated = false;
};

// All inclusion-minimal vertex sets whose removal increases the number of
// components, up to `budget` of them.
SeparatorList minimal_separators(const Graph& g, int budget);

// Decomposition tree for membership in the class of "trees of simplices":
// leaves are simplices, inner nodes glue two pieces over a separator that is
// itself a simplex (or empty).
struct T1Node {
    enum class Kind { Leaf, Glue };
    Kind kind = Kind::Leaf;
    VertexSet verts;
    VertexSet separator; // Glue only; empty allowed
    std::shared_ptr<const T1Node> left, right;
};
using T1NodePtr = std::shared_ptr<const T1Node>;

struct T1Certificate {
    T1NodePtr root;
};

struct T1Result {
    bool certified = false;
    std::optional<T1Certificate> cert;
    std::optional<InducedCycleWitness> witness;
};

// Certifies that a flag complex decomposes into simplices glued along
// simplex separators; refutation is an induced cycle in the 1-skeleton.
T1Result t1_certify(const SimplicialComplex& l);

// Re-checks every node of the tree against the complex.
bool verify_t1_certificate(const T1Certificate& cert, const SimplicialComplex& l,
                           std::string* diagnostic = nullptr);

nlohmann::json t1_certificate_to_json(const T1Certificate& cert);
T1Certificate t1_certificate_from_json(const nlohmann::json& j);

} // namespace raagcoh

#endif
