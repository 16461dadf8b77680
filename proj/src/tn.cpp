#include "raagcoh/tn.hpp"

#include <algorithm>
#include <unordered_map>

#include "raagcoh/homology.hpp"

namespace raagcoh {

namespace {

struct SearchState {
    const SimplicialComplex& l;
    int n;
    SearchBudget budget;
    bool memoize;
    long nodes = 0;
    bool truncated = false; // any budget truncation anywhere in the search
    // Subset -> certified subtree, or nullptr for a fully exhausted subset.
    std::unordered_map<std::uint64_t, TnNodePtr> memo_certified;
    std::unordered_map<std::uint64_t, bool> memo_exhausted;
};

TnNodePtr make_leaf(TnNode::Kind kind, VertexSet w) {
    auto node = std::make_shared<TnNode>();
    node->kind = kind;
    node->verts = w;
    return node;
}

struct NodeOutcome {
    TnNodePtr node;     // non-null iff certified
    bool exhausted = false; // fully explored without truncation
};

// Candidate separators for the gluing rule: subsets S of W such that the
// skeleton minus S is disconnected and the full subcomplex on S has a
// chordal 1-skeleton.  Default strategy restricts to inclusion-minimal
// separators; exhaustive mode enumerates all subsets (small W only).
std::vector<VertexSet> gluing_candidates(SearchState& st, const Graph& skel, VertexSet w) {
    std::vector<VertexSet> out;
    if (st.budget.exhaustive_separators) {
        if (w.size() > 25) {
            st.truncated = true;
            return out;
        }
        auto vs = w.to_vector();
        const std::uint64_t total = std::uint64_t{1} << vs.size();
        for (std::uint64_t mask = 1; mask + 1 < total; ++mask) {
            VertexSet s;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                if ((mask >> i) & 1u) s.add(vs[static_cast<std::size_t>(i)]);
            }
            if (skel.induced(w - s).components().size() < 2) continue;
            if (!is_chordal(skel.induced(s)).chordal) continue;
            out.push_back(s);
        }
        std::sort(out.begin(), out.end(), VertexSet::lex_less);
        return out;
    }

    const int enum_budget = std::max(st.budget.max_separators * 4, 256);
    SeparatorList seps = minimal_separators(skel.induced(w), enum_budget);
    if (seps.truncated) st.truncated = true;
    for (VertexSet s : seps.separators) {
        if (is_chordal(skel.induced(s)).chordal) out.push_back(s);
    }
    if (static_cast<int>(out.size()) > st.budget.max_separators) {
        out.resize(static_cast<std::size_t>(st.budget.max_separators));
        st.truncated = true;
    }
    return out;
}

NodeOutcome certify_rec(SearchState& st, VertexSet w, int depth) {
    if (st.memoize) {
        auto hit = st.memo_certified.find(w.bits());
        if (hit != st.memo_certified.end()) return {hit->second, false};
        auto ex = st.memo_exhausted.find(w.bits());
        if (ex != st.memo_exhausted.end()) return {nullptr, true};
    }
    ++st.nodes;

    SimplicialComplex sub = st.l.full_subcomplex(w);
    Graph skel = sub.one_skeleton();

    auto done = [&](TnNodePtr node) {
        if (st.memoize) st.memo_certified[w.bits()] = node;
        return NodeOutcome{node, false};
    };

    // Simplex leaf.
    if (sub.is_single_simplex()) return done(make_leaf(TnNode::Kind::Simplex, w));
    // Dimension leaf.
    if (sub.dimension() <= st.n - 1) return done(make_leaf(TnNode::Kind::LowDim, w));
    // Vanishing top homology leaf.
    if (sub.dimension() == st.n && betti_q_degree(sub, st.n) == 0) {
        return done(make_leaf(TnNode::Kind::TopBettiZero, w));
    }

    if (depth >= st.budget.max_depth) {
        st.truncated = true;
        return {nullptr, false};
    }

    bool all_exhausted = true;

    // Cone peeling: the least dominating vertex, if any.
    auto dom = sub.dominating_vertices();
    if (!dom.empty()) {
        int apex = dom[0];
        NodeOutcome sub_out = certify_rec(st, w - VertexSet::single(apex), depth + 1);
        if (sub_out.node) {
            auto node = std::make_shared<TnNode>();
            node->kind = TnNode::Kind::Cone;
            node->verts = w;
            node->apex = apex;
            node->child = sub_out.node;
            return done(node);
        }
        all_exhausted = all_exhausted && sub_out.exhausted;
    }

    auto try_glue = [&](VertexSet sep, VertexSet wl, VertexSet wr) -> TnNodePtr {
        NodeOutcome lo = certify_rec(st, wl, depth + 1);
        if (!lo.node) {
            all_exhausted = all_exhausted && lo.exhausted;
            return nullptr;
        }
        NodeOutcome ro = certify_rec(st, wr, depth + 1);
        if (!ro.node) {
            all_exhausted = all_exhausted && ro.exhausted;
            return nullptr;
        }
        auto node = std::make_shared<TnNode>();
        node->kind = TnNode::Kind::Gluing;
        node->verts = w;
        node->separator = sep;
        if (!sep.empty()) {
            T1Result t1 = t1_certify(st.l.full_subcomplex(sep));
            if (!t1.certified) return nullptr; // candidates are pre-filtered chordal
            node->separator_cert = std::move(t1.cert);
        }
        node->left = lo.node;
        node->right = ro.node;
        return node;
    };

    auto comps = skel.components();
    if (comps.size() >= 2) {
        // Disconnected: gluing over the empty separator, least component first.
        VertexSet c0 = comps[0];
        if (TnNodePtr node = try_glue({}, c0, w - c0)) return done(node);
    } else {
        for (VertexSet sep : gluing_candidates(st, skel, w)) {
            VertexSet c0 = skel.induced(w - sep).components()[0];
            if (TnNodePtr node = try_glue(sep, sep | c0, w - c0)) return done(node);
        }
    }

    if (all_exhausted && !st.truncated) {
        if (st.memoize) st.memo_exhausted[w.bits()] = true;
        return {nullptr, true};
    }
    return {nullptr, all_exhausted};
}

} // namespace

TnResult certify_tn(const SimplicialComplex& l, int n, const SearchBudget& budget,
                    bool memoize) {
    if (!l.is_flag()) throw InputError("class membership requires a flag complex");
    if (n < 2) throw InputError("class index must be >= 2");
    SearchState st{l, n, budget, memoize};
    NodeOutcome out = certify_rec(st, l.verts(), 0);
    TnResult res;
    res.nodes_explored = st.nodes;
    if (out.node) {
        res.outcome = TnOutcome::Certified;
        res.cert = TnCertificate{n, out.node};
    } else if (out.exhausted && !st.truncated) {
        res.outcome = TnOutcome::Exhausted;
    } else {
        res.outcome = TnOutcome::BudgetExceeded;
    }
    return res;
}

namespace {

bool tn_verify_node(const TnNodePtr& node, const SimplicialComplex& l, int n,
                    VertexSet expect, std::string* diag) {
    auto fail = [&](const std::string& msg) {
        if (diag) *diag = msg;
        return false;
    };
    if (!node) return fail("missing node");
    if (node->verts != expect) return fail("node vertex set does not match its position in the tree");
    if (!node->verts.subset_of(l.verts())) return fail("node references absent vertices");
    SimplicialComplex sub = l.full_subcomplex(node->verts);

    switch (node->kind) {
    case TnNode::Kind::Simplex:
        if (!sub.is_single_simplex()) return fail("simplex leaf is not a simplex");
        return true;
    case TnNode::Kind::LowDim:
        if (sub.dimension() > n - 1) return fail("dimension leaf exceeds n-1");
        return true;
    case TnNode::Kind::TopBettiZero:
        if (sub.dimension() != n) return fail("top-homology leaf must have dimension n");
        if (betti_q_degree(sub, n) != 0) return fail("top rational homology does not vanish");
        return true;
    case TnNode::Kind::Cone: {
        if (node->apex < 0 || !node->verts.contains(node->apex)) return fail("cone apex not in node");
        auto dom = sub.dominating_vertices();
        if (std::find(dom.begin(), dom.end(), node->apex) == dom.end()) {
            return fail("cone apex is not dominating");
        }
        return tn_verify_node(node->child, l, n, node->verts - VertexSet::single(node->apex), diag);
    }
    case TnNode::Kind::Gluing: {
        if (!node->left || !node->right) return fail("gluing node missing a child");
        VertexSet wl = node->left->verts, wr = node->right->verts;
        if ((wl | wr) != node->verts) return fail("children do not cover the gluing node");
        if ((wl & wr) != node->separator) return fail("separator is not the intersection of the sides");
        if (wl == node->verts || wr == node->verts) return fail("degenerate gluing");
        bool cross = false;
        (wl - node->separator).for_each([&](int u) {
            (wr - node->separator).for_each([&](int v) {
                if (l.edge(u, v)) cross = true;
            });
        });
        if (cross) return fail("edge crossing the separator");
        if (!node->separator.empty()) {
            if (!node->separator_cert) return fail("nonempty separator lacks its certificate");
            std::string sub_diag;
            if (!verify_t1_certificate(*node->separator_cert, l.full_subcomplex(node->separator),
                                       &sub_diag)) {
                return fail("separator certificate rejected: " + sub_diag);
            }
        }
        return tn_verify_node(node->left, l, n, wl, diag) &&
               tn_verify_node(node->right, l, n, wr, diag);
    }
    }
    return fail("unknown node kind");
}

} // namespace

bool verify_tn_certificate(const TnCertificate& cert, const SimplicialComplex& l, int n,
                           std::string* diagnostic) {
    if (cert.n != n) {
        if (diagnostic) *diagnostic = "certificate index differs from the queried one";
        return false;
    }
    if (n < 2) {
        if (diagnostic) *diagnostic = "class index must be >= 2";
        return false;
    }
    if (!l.is_flag()) {
        if (diagnostic) *diagnostic = "complex is not flag";
        return false;
    }
    return tn_verify_node(cert.root, l, n, l.verts(), diagnostic);
}

namespace {

nlohmann::json tn_node_to_json(const TnNodePtr& node) {
    nlohmann::json j;
    j["vertices"] = node->verts.to_vector();
    switch (node->kind) {
    case TnNode::Kind::Simplex:
        j["kind"] = "simplex";
        break;
    case TnNode::Kind::LowDim:
        j["kind"] = "low-dim";
        break;
    case TnNode::Kind::TopBettiZero:
        j["kind"] = "top-betti-zero";
        break;
    case TnNode::Kind::Cone:
        j["kind"] = "cone";
        j["apex"] = node->apex;
        j["child"] = tn_node_to_json(node->child);
        break;
    case TnNode::Kind::Gluing:
        j["kind"] = "gluing";
        j["separator"] = node->separator.to_vector();
        if (node->separator_cert) {
            j["separator_cert"] = t1_certificate_to_json(*node->separator_cert);
        }
        j["left"] = tn_node_to_json(node->left);
        j["right"] = tn_node_to_json(node->right);
        break;
    }
    return j;
}

VertexSet set_from_json(const nlohmann::json& j) {
    VertexSet s;
    for (const auto& v : j) {
        int i = v.get<int>();
        if (i < 0 || i >= kMaxVertices) throw InputError("vertex index out of range");
        s.add(i);
    }
    return s;
}

TnNodePtr tn_node_from_json(const nlohmann::json& j) {
    auto node = std::make_shared<TnNode>();
    node->verts = set_from_json(j.at("vertices"));
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "simplex") {
        node->kind = TnNode::Kind::Simplex;
    } else if (kind == "low-dim") {
        node->kind = TnNode::Kind::LowDim;
    } else if (kind == "top-betti-zero") {
        node->kind = TnNode::Kind::TopBettiZero;
    } else if (kind == "cone") {
        node->kind = TnNode::Kind::Cone;
        node->apex = j.at("apex").get<int>();
        node->child = tn_node_from_json(j.at("child"));
    } else if (kind == "gluing") {
        node->kind = TnNode::Kind::Gluing;
        node->separator = set_from_json(j.at("separator"));
        if (j.contains("separator_cert")) {
            node->separator_cert = t1_certificate_from_json(j.at("separator_cert"));
        }
        node->left = tn_node_from_json(j.at("left"));
        node->right = tn_node_from_json(j.at("right"));
    } else {
        throw InputError("unknown certificate node kind '" + kind + "'");
    }
    return node;
}

} // namespace

nlohmann::json tn_certificate_to_json(const TnCertificate& cert) {
    nlohmann::json j;
    j["n"] = cert.n;
    j["tree"] = tn_node_to_json(cert.root);
    return j;
}

TnCertificate tn_certificate_from_json(const nlohmann::json& j) {
    TnCertificate cert;
    cert.n = j.at("n").get<int>();
    cert.root = tn_node_from_json(j.at("tree"));
    return cert;
}

} // namespace raagcoh
