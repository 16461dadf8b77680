#include "raagcoh/chordal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace raagcoh {

namespace {

// Lexicographic BFS.  Returns the visit order; its reverse is a perfect
// elimination order whenever the graph is chordal.
std::vector<int> lex_bfs(const Graph& g) {
    std::vector<int> order;
    const auto vs = g.verts().to_vector();
    // label[v] = visit ranks of already-visited neighbours, descending.
    std::vector<std::vector<int>> label(static_cast<std::size_t>(g.ambient_size()));
    VertexSet unvisited = g.verts();
    for (std::size_t step = 0; step < vs.size(); ++step) {
        int best = -1;
        unvisited.for_each([&](int v) {
            if (best < 0 || label[static_cast<std::size_t>(v)] > label[static_cast<std::size_t>(best)]) {
                best = v;
            }
        });
        order.push_back(best);
        unvisited.remove(best);
        const int rank = static_cast<int>(vs.size() - step); // descending ranks
        (g.neighbors(best) & unvisited).for_each([&](int u) {
            label[static_cast<std::size_t>(u)].push_back(rank);
        });
    }
    return order;
}

// Search for an induced cycle of length >= 4: for some vertex v with two
// non-adjacent neighbours x, y, a shortest x-y path avoiding N[v] \ {x,y}
// closes up with v to a chordless cycle.
std::optional<InducedCycleWitness> find_induced_cycle(const Graph& g) {
    auto verts = g.verts().to_vector();
    for (int v : verts) {
        auto nb = (g.neighbors(v)).to_vector();
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int x = nb[i], y = nb[j];
                if (g.adjacent(x, y)) continue;
                VertexSet allowed = g.verts() - g.closed_neighbors(v);
                allowed.add(x);
                allowed.add(y);
                // BFS from x to y inside `allowed`.
                std::vector<int> parent(static_cast<std::size_t>(g.ambient_size()), -1);
                std::deque<int> q{x};
                VertexSet seen = VertexSet::single(x);
                bool reached = false;
                while (!q.empty() && !reached) {
                    int u = q.front();
                    q.pop_front();
                    ((g.neighbors(u) & allowed) - seen).for_each([&](int w) {
                        seen.add(w);
                        parent[static_cast<std::size_t>(w)] = u;
                        if (w == y) reached = true;
                        q.push_back(w);
                    });
                }
                if (!reached) continue;
                std::vector<int> path; // y back to x
                for (int u = y; u != -1; u = parent[static_cast<std::size_t>(u)]) path.push_back(u);
                std::reverse(path.begin(), path.end()); // x .. y
                path.push_back(v);
                return InducedCycleWitness{std::move(path)};
            }
        }
    }
    return std::nullopt;
}

} // namespace

bool verify_peo(const Graph& g, const PerfectEliminationOrder& peo) {
    if (static_cast<int>(peo.order.size()) != g.vertex_count()) return false;
    VertexSet seen;
    for (int v : peo.order) {
        if (!g.verts().contains(v) || seen.contains(v)) return false;
        seen.add(v);
    }
    VertexSet eliminated;
    for (int v : peo.order) {
        eliminated.add(v);
        VertexSet later = g.neighbors(v) - eliminated;
        bool clique = true;
        later.for_each([&](int u) {
            if (!(later - VertexSet::single(u)).subset_of(g.neighbors(u))) clique = false;
        });
        if (!clique) return false;
    }
    return true;
}

bool verify_cycle_witness(const Graph& g, const InducedCycleWitness& w) {
    const auto& c = w.cycle;
    const std::size_t n = c.size();
    if (n < 4) return false;
    std::unordered_set<int> distinct(c.begin(), c.end());
    if (distinct.size() != n) return false;
    for (int v : c) {
        if (!g.verts().contains(v)) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
            if (g.adjacent(c[i], c[j]) != consecutive) return false;
        }
    }
    return true;
}

ChordalResult is_chordal(const Graph& g) {
    std::vector<int> visit = lex_bfs(g);
    PerfectEliminationOrder peo;
    peo.order.assign(visit.rbegin(), visit.rend());
    if (verify_peo(g, peo)) {
        return ChordalResult{true, std::move(peo), std::nullopt};
    }
    auto witness = find_induced_cycle(g);
    if (!witness) {
        // LexBFS yields a valid elimination order exactly on chordal graphs,
        // so a failed order implies an induced cycle exists.
        throw std::logic_error("elimination order rejected but no induced cycle found");
    }
    return ChordalResult{false, std::nullopt, std::move(witness)};
}

SeparatorList minimal_separators(const Graph& g, int budget) {
    if (budget < 1) throw InputError("separator budget must be >= 1");
    SeparatorList out;
    std::unordered_set<std::uint64_t> seen;
    std::deque<VertexSet> queue;

    auto offer = [&](VertexSet s) {
        if (s.empty()) return;
        if (seen.insert(s.bits()).second) queue.push_back(s);
    };

    for (VertexSet compVerts : g.components()) {
        Graph h = g.induced(compVerts);
        compVerts.for_each([&](int v) {
            VertexSet rest = compVerts - h.closed_neighbors(v);
            for (VertexSet c : h.induced(rest).components()) {
                VertexSet nb;
                c.for_each([&](int u) { nb = nb | h.neighbors(u); });
                offer(nb - c);
            }
        });
        while (!queue.empty()) {
            VertexSet s = queue.front();
            queue.pop_front();
            out.separators.push_back(s);
            if (static_cast<int>(out.separators.size()) > budget) {
                out.separators.pop_back();
                out.truncated = true;
                queue.clear();
                break;
            }
            s.for_each([&](int x) {
                VertexSet rest = compVerts - s - h.closed_neighbors(x);
                for (VertexSet c : h.induced(rest).components()) {
                    VertexSet nb;
                    c.for_each([&](int u) { nb = nb | h.neighbors(u); });
                    offer(nb - c);
                }
            });
        }
        if (out.truncated) break;
    }
    std::sort(out.separators.begin(), out.separators.end(), VertexSet::lex_less);
    return out;
}

namespace {

T1NodePtr t1_leaf(VertexSet verts) {
    auto node = std::make_shared<T1Node>();
    node->kind = T1Node::Kind::Leaf;
    node->verts = verts;
    return node;
}

T1NodePtr t1_glue(VertexSet verts, VertexSet sep, T1NodePtr l, T1NodePtr r) {
    auto node = std::make_shared<T1Node>();
    node->kind = T1Node::Kind::Glue;
    node->verts = verts;
    node->separator = sep;
    node->left = std::move(l);
    node->right = std::move(r);
    return node;
}

// Recursive clique-separator decomposition of a chordal-skeleton flag
// complex; every minimal separator of a chordal graph is a clique, so the
// lexicographically least clique separator always exists below.
T1NodePtr t1_build(const Graph& g, VertexSet w) {
    Graph h = g.induced(w);
    if (w.empty() || h.is_clique(w)) return t1_leaf(w);

    auto comps = h.components();
    if (comps.size() >= 2) {
        VertexSet c0 = comps[0];
        return t1_glue(w, {}, t1_build(g, c0), t1_build(g, w - c0));
    }

    // A chordal graph on k vertices has fewer than k minimal separators.
    SeparatorList seps = minimal_separators(h, std::max(1, w.size()));
    VertexSet chosen;
    bool found = false;
    for (VertexSet s : seps.separators) {
        if (h.is_clique(s)) {
            chosen = s;
            found = true;
            break; // canonical order, first hit is lexicographically least
        }
    }
    if (!found) throw std::logic_error("no clique separator in a chordal non-complete graph");
    VertexSet c0 = h.induced(w - chosen).components()[0];
    return t1_glue(w, chosen, t1_build(g, chosen | c0), t1_build(g, w - c0));
}

} // namespace

T1Result t1_certify(const SimplicialComplex& l) {
    if (!l.is_flag()) throw InputError("t1 certification requires a flag complex");
    Graph g = l.one_skeleton();
    ChordalResult c = is_chordal(g);
    if (!c.chordal) {
        return T1Result{false, std::nullopt, std::move(c.witness)};
    }
    T1Certificate cert{t1_build(g, l.verts())};
    return T1Result{true, std::move(cert), std::nullopt};
}

namespace {

bool t1_verify_node(const T1NodePtr& node, const SimplicialComplex& l, VertexSet expect,
                    std::string* diag) {
    auto fail = [&](const std::string& msg) {
        if (diag) *diag = msg;
        return false;
    };
    if (!node) return fail("missing node");
    if (node->verts != expect) return fail("node vertex set does not match its position in the tree");
    if (!node->verts.subset_of(l.verts())) return fail("node references absent vertices");
    if (node->kind == T1Node::Kind::Leaf) {
        if (!node->verts.empty() && !l.is_simplex(node->verts)) {
            return fail("leaf vertex set is not a simplex");
        }
        return true;
    }
    if (!node->left || !node->right) return fail("gluing node missing a child");
    VertexSet wl = node->left->verts, wr = node->right->verts;
    if ((wl | wr) != node->verts) return fail("children do not cover the gluing node");
    if ((wl & wr) != node->separator) return fail("separator is not the intersection of the sides");
    if (wl == node->verts || wr == node->verts) return fail("degenerate gluing");
    if (!node->separator.empty() && !l.is_simplex(node->separator)) {
        return fail("separator is not a simplex");
    }
    // No simplex may straddle the two sides away from the separator.
    bool cross = false;
    (wl - node->separator).for_each([&](int u) {
        (wr - node->separator).for_each([&](int v) {
            if (l.edge(u, v)) cross = true;
        });
    });
    if (cross) return fail("edge crossing the separator");
    return t1_verify_node(node->left, l, wl, diag) && t1_verify_node(node->right, l, wr, diag);
}

} // namespace

bool verify_t1_certificate(const T1Certificate& cert, const SimplicialComplex& l,
                           std::string* diagnostic) {
    return t1_verify_node(cert.root, l, l.verts(), diagnostic);
}

namespace {

nlohmann::json t1_node_to_json(const T1NodePtr& node) {
    nlohmann::json j;
    j["vertices"] = node->verts.to_vector();
    if (node->kind == T1Node::Kind::Leaf) {
        j["kind"] = "simplex";
    } else {
        j["kind"] = "glue";
        j["separator"] = node->separator.to_vector();
        j["left"] = t1_node_to_json(node->left);
        j["right"] = t1_node_to_json(node->right);
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

T1NodePtr t1_node_from_json(const nlohmann::json& j) {
    auto node = std::make_shared<T1Node>();
    node->verts = set_from_json(j.at("vertices"));
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "simplex") {
        node->kind = T1Node::Kind::Leaf;
    } else if (kind == "glue") {
        node->kind = T1Node::Kind::Glue;
        node->separator = set_from_json(j.at("separator"));
        node->left = t1_node_from_json(j.at("left"));
        node->right = t1_node_from_json(j.at("right"));
    } else {
        throw InputError("unknown certificate node kind '" + kind + "'");
    }
    return node;
}

} // namespace

nlohmann::json t1_certificate_to_json(const T1Certificate& cert) {
    return t1_node_to_json(cert.root);
}

T1Certificate t1_certificate_from_json(const nlohmann::json& j) {
    return T1Certificate{t1_node_from_json(j)};
}

} // namespace raagcoh
