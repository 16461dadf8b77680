#ifndef RAAGCOH_TN_HPP
#define RAAGCOH_TN_HPP

#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "raagcoh/chordal.hpp"
#include "raagcoh/complex.hpp"

namespace raagcoh {

struct SearchBudget {
    int max_depth = 64;
    int max_separators = 64;
    bool exhaustive_separators = false;
};

// Derivation tree for class membership.  Leaves discharge a full
// subcomplex directly: a simplex, a complex of dimension <= n-1, or a
// complex of dimension n whose top rational homology vanishes.  Inner nodes
// peel a cone point or glue two pieces over a separator certified to be a
// tree of simplices.
struct TnNode {
    enum class Kind { Simplex, LowDim, TopBettiZero, Cone, Gluing };
    Kind kind = Kind::Simplex;
    VertexSet verts;
    int apex = -1;                           // Cone
    VertexSet separator;                     // Gluing; empty allowed
    std::optional<T1Certificate> separator_cert; // Gluing, when separator nonempty
    std::shared_ptr<const TnNode> child;     // Cone
    std::shared_ptr<const TnNode> left, right; // Gluing
};
using TnNodePtr = std::shared_ptr<const TnNode>;

struct TnCertificate {
    int n = 2;
    TnNodePtr root;
};

enum class TnOutcome { Certified, Exhausted, BudgetExceeded };

struct TnResult {
    TnOutcome outcome = TnOutcome::Exhausted;
    std::optional<TnCertificate> cert;
    long nodes_explored = 0;
};

inline const char* tn_outcome_name(TnOutcome o) {
    switch (o) {
    case TnOutcome::Certified: return "certified";
    case TnOutcome::Exhausted: return "exhausted";
    default: return "budget-exceeded";
    }
}

// Sound search for a membership derivation: Certified implies membership;
// Exhausted means the strategy's whole search space was covered without
// success; BudgetExceeded marks truncation.  n >= 2 and a flag complex are
// required.  Memoised by vertex subset.
TnResult certify_tn(const SimplicialComplex& l, int n, const SearchBudget& budget = {},
                    bool memoize = true);

// Independent re-check of every rule application in the tree.
bool verify_tn_certificate(const TnCertificate& cert, const SimplicialComplex& l, int n,
                           std::string* diagnostic = nullptr);

nlohmann::json tn_certificate_to_json(const TnCertificate& cert);
TnCertificate tn_certificate_from_json(const nlohmann::json& j);

} // namespace raagcoh

#endif
