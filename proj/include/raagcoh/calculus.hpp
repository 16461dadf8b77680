#ifndef RAAGCOH_CALCULUS_HPP
#define RAAGCOH_CALCULUS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "raagcoh/bb_scan.hpp"
#include "raagcoh/chordal.hpp"
#include "raagcoh/complex.hpp"
#include "raagcoh/homology.hpp"
#include "raagcoh/tn.hpp"

namespace raagcoh {

// Natural number or infinity, with the decrement convention inf - 1 = inf.
class ExtendedNat {
public:
    constexpr ExtendedNat() = default;
    constexpr explicit ExtendedNat(long v) : value_(v) {
        if (v < 0) value_ = 0;
    }
    static constexpr ExtendedNat inf() {
        ExtendedNat e;
        e.infinite_ = true;
        return e;
    }

    constexpr bool is_inf() const { return infinite_; }
    constexpr long value() const { return value_; }

    friend constexpr bool operator==(ExtendedNat a, ExtendedNat b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr bool operator!=(ExtendedNat a, ExtendedNat b) { return !(a == b); }
    friend constexpr bool operator<(ExtendedNat a, ExtendedNat b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend constexpr bool operator<=(ExtendedNat a, ExtendedNat b) { return a < b || a == b; }
    friend constexpr bool operator>(ExtendedNat a, ExtendedNat b) { return b < a; }
    friend constexpr bool operator>=(ExtendedNat a, ExtendedNat b) { return b <= a; }

    constexpr ExtendedNat pred() const { // inf - 1 = inf; clamps at 0
        if (infinite_) return *this;
        return ExtendedNat(value_ > 0 ? value_ - 1 : 0);
    }
    constexpr ExtendedNat succ() const {
        if (infinite_) return *this;
        return ExtendedNat(value_ + 1);
    }

    std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }
    static std::optional<ExtendedNat> parse(const std::string& s);

private:
    long value_ = 0;
    bool infinite_ = false;
};

ExtendedNat min_en(ExtendedNat a, ExtendedNat b);
ExtendedNat max_en(ExtendedNat a, ExtendedNat b);

// (n, m) with n < m: every subgroup of type F_n is of type F_m.
struct CoherencePair {
    ExtendedNat n, m;
    friend bool operator==(const CoherencePair& a, const CoherencePair& b) {
        return a.n == b.n && a.m == b.m;
    }
    std::string str() const { return "(" + n.str() + "," + m.str() + ")"; }
};

// A positive pair (a,b) implies every (n,m) with a <= n < m <= b; a negative
// pair refutes every (n,m) whose implication cone contains it.
struct Fact {
    CoherencePair pair;
    int trace = -1; // index into the derivation trace
};

struct FactSet {
    std::vector<Fact> positive; // generators
    std::vector<Fact> negative;
    ExtendedNat finiteness;     // certified type-F lower bound for the group itself
    bool incomplete = false;

    bool covers_positive(const CoherencePair& p) const;
    bool implies_negative(const CoherencePair& p) const;
    // Returns the trace of a generator witnessing coverage, or -1.
    int positive_witness(const CoherencePair& p) const;
    int negative_witness(const CoherencePair& p) const;
};

struct TraceEntry {
    std::string node;   // path in the expression tree, "" for the root
    bool positive = true;
    CoherencePair pair;
    std::string rule;
    std::vector<int> premises; // indices into the trace
    std::string note;
};

struct Contradiction {
    CoherencePair pair;
    int positive_trace = -1;
    int negative_trace = -1;
};

std::optional<Contradiction> check_consistency(const FactSet& f, const std::vector<TraceEntry>& trace);

// Symbolic group expression.
struct GroupExpr {
    enum class Kind {
        Trivial,
        FreeAbelian,   // Z^k
        Free,          // F(k)
        Raag,          // A_L for a flag complex L
        DirectProduct,
        Amalgam,       // children[0] *_{A_edge} children[1]
        GraphOfGroups, // children = vertex groups, edges = edge groups
        Extension,     // children[0] = kernel, children[1] = quotient
        Assumed,
    };
    Kind kind = Kind::Trivial;
    long k = 0;                      // FreeAbelian / Free
    std::optional<SimplicialComplex> complex; // Raag / Amalgam edge
    std::string complex_name;        // file the complex was loaded from
    std::vector<std::shared_ptr<GroupExpr>> children;
    std::vector<std::shared_ptr<GroupExpr>> edges; // GraphOfGroups
    std::string label;               // Assumed
    FactSet assumed;

    std::string describe() const;
};
using GroupExprPtr = std::shared_ptr<GroupExpr>;

// Grammar:  Z^k | F(k) | raag(file) | prod(e1,...) |
//           amalgam(e1,e2,over=file) | ext(N,Q) |
//           assume(name,{pos(n,m),neg(n,m),fin(n)}) | 1
// Complex files resolve relative to `base_dir` when relative.
GroupExprPtr parse_expr(const std::string& text, const std::string& base_dir = ".");

// Artifacts gathered while analysing one associated-group node.
struct RaagArtifacts {
    ChordalResult chordal;
    std::optional<T1Result> t1;
    HomologySummary homology;
    std::map<int, TnResult> tn;       // class index -> search result
    std::map<int, ScanReport> scans;  // n -> obstruction scan
};

struct AnalysisOptions {
    int max_n = -1; // default: dim L + 1 per complex
    SearchBudget tn_budget;
    ScanLimits scan_limits;
    long pi1_budget = 10000;
    int threads = 1;
    int max_passes = 64;
};

struct Derivation {
    FactSet root;
    std::vector<TraceEntry> trace;
    std::map<std::string, FactSet> node_facts;      // by node path
    std::map<std::string, RaagArtifacts> artifacts; // by node path
    bool complete = true;
};

// Forward-chains the rule set to a fixpoint and returns the root fact set
// with its proof trace.
Derivation derive_facts(const GroupExprPtr& expr, const AnalysisOptions& opts = {});

// Re-checks a derivation: premises present, rule hypotheses recomputed.
bool check_trace(const GroupExprPtr& expr, const Derivation& d, std::string* diagnostic = nullptr);

} // namespace raagcoh

#endif
