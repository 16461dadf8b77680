#include "raagcoh/complex.hpp"

#include <algorithm>
#include <unordered_set>

namespace raagcoh {

namespace {

std::shared_ptr<const std::vector<std::string>> make_labels(std::vector<std::string> labels) {
    if (labels.size() > static_cast<std::size_t>(kMaxVertices)) {
        throw InputError("too many vertices: " + std::to_string(labels.size()) +
                         " (maximum is " + std::to_string(kMaxVertices) + ")");
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw InputError("duplicate vertex label '" + l + "'");
        }
    }
    return std::make_shared<const std::vector<std::string>>(std::move(labels));
}

void sort_canonical(std::vector<VertexSet>& sets) {
    std::sort(sets.begin(), sets.end(), VertexSet::lex_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

// Keep only inclusion-maximal sets.
void keep_maximal(std::vector<VertexSet>& sets) {
    std::vector<VertexSet> out;
    for (VertexSet s : sets) {
        bool contained = false;
        for (VertexSet t : sets) {
            if (s != t && s.subset_of(t)) {
                contained = true;
                break;
            }
        }
        if (!contained) out.push_back(s);
    }
    sets = std::move(out);
    sort_canonical(sets);
}

} // namespace

Graph::Graph()
    : labels_(std::make_shared<const std::vector<std::string>>()) {}

Graph::Graph(std::vector<std::string> labels)
    : labels_(make_labels(std::move(labels))) {
    verts_ = VertexSet::first_n(ambient_size());
    adj_.assign(static_cast<std::size_t>(ambient_size()), VertexSet{});
}

Graph Graph::from_edges(std::vector<std::string> labels,
                        const std::vector<std::pair<int, int>>& edges) {
    Graph g(std::move(labels));
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= ambient_size() || v >= ambient_size() ||
        !verts_.contains(u) || !verts_.contains(v)) {
        throw InputError("edge endpoint out of range");
    }
    if (u == v) throw InputError("self-loop on vertex '" + label(u) + "'");
    adj_[static_cast<std::size_t>(u)].add(v);
    adj_[static_cast<std::size_t>(v)].add(u);
}

bool Graph::is_clique(VertexSet s) const {
    bool ok = true;
    s.for_each([&](int v) {
        if (!(s - VertexSet::single(v)).subset_of(adj_[static_cast<std::size_t>(v)])) ok = false;
    });
    return ok;
}

Graph Graph::induced(VertexSet s) const {
    if (!s.subset_of(verts_)) throw InputError("induced subgraph: subset contains absent vertices");
    Graph g;
    g.labels_ = labels_;
    g.verts_ = s;
    g.adj_.assign(adj_.size(), VertexSet{});
    s.for_each([&](int v) { g.adj_[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)] & s; });
    return g;
}

std::vector<VertexSet> Graph::components() const {
    std::vector<VertexSet> comps;
    VertexSet todo = verts_;
    while (!todo.empty()) {
        int start = todo.least();
        VertexSet comp = VertexSet::single(start);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](int v) { next = next | adj_[static_cast<std::size_t>(v)]; });
            frontier = next - comp;
            comp = comp | frontier;
        }
        comps.push_back(comp);
        todo = todo - comp;
    }
    return comps;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.verts_ != b.verts_) return false;
    std::vector<int> vs = a.verts_.to_vector();
    for (int v : vs) {
        if (a.label(v) != b.label(v)) return false;
        if ((a.adj_[static_cast<std::size_t>(v)] & a.verts_) !=
            (b.adj_[static_cast<std::size_t>(v)] & b.verts_)) return false;
    }
    return true;
}

SimplicialComplex::SimplicialComplex()
    : labels_(std::make_shared<const std::vector<std::string>>()) {}

void SimplicialComplex::recompute_dim() {
    dim_ = -1;
    for (VertexSet f : facets_) dim_ = std::max(dim_, f.size() - 1);
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> labels,
                                                 const std::vector<std::vector<int>>& facets) {
    SimplicialComplex c;
    c.labels_ = make_labels(std::move(labels));
    const int n = c.ambient_size();
    c.verts_ = VertexSet::first_n(n);

    std::vector<VertexSet> fs;
    for (const auto& f : facets) {
        if (f.empty()) throw InputError("empty facet");
        VertexSet s;
        for (int v : f) {
            if (v < 0 || v >= n) throw InputError("facet vertex index out of range");
            if (s.contains(v)) throw InputError("repeated vertex in facet");
            s.add(v);
        }
        fs.push_back(s);
    }
    // Vertices not covered by any facet are still part of the complex.
    VertexSet covered;
    for (VertexSet f : fs) covered = covered | f;
    (c.verts_ - covered).for_each([&](int v) { fs.push_back(VertexSet::single(v)); });

    keep_maximal(fs);
    c.facets_ = std::move(fs);
    c.recompute_dim();
    c.flag_ = c.check_flag();
    return c;
}

namespace {

// Bron-Kerbosch with pivoting; reports maximal cliques of the present
// vertex set, including singletons for isolated vertices.
void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        if (!r.empty()) out.push_back(r);
        return;
    }
    int pivot = -1, best = -1;
    (p | x).for_each([&](int u) {
        int deg = (p & g.neighbors(u)).size();
        if (deg > best) {
            best = deg;
            pivot = u;
        }
    });
    VertexSet cand = p - g.neighbors(pivot);
    cand.for_each([&](int v) {
        bron_kerbosch(g, r | VertexSet::single(v), p & g.neighbors(v), x & g.neighbors(v), out);
        p.remove(v);
        x.add(v);
    });
}

} // namespace

SimplicialComplex SimplicialComplex::from_graph(const Graph& g) {
    SimplicialComplex c;
    c.labels_ = g.labels_ptr();
    c.verts_ = g.verts();
    if (!c.verts_.empty()) {
        bron_kerbosch(g, {}, g.verts(), {}, c.facets_);
        sort_canonical(c.facets_);
    }
    c.recompute_dim();
    c.flag_ = true;
    return c;
}

bool SimplicialComplex::is_simplex(VertexSet s) const {
    if (s.empty()) return false;
    for (VertexSet f : facets_) {
        if (s.subset_of(f)) return true;
    }
    return false;
}

bool SimplicialComplex::is_single_simplex() const {
    if (verts_.empty()) return true;
    return facets_.size() == 1 && facets_[0] == verts_;
}

Graph SimplicialComplex::one_skeleton() const {
    Graph g(*labels_);
    for (VertexSet f : facets_) {
        auto vs = f.to_vector();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                g.add_edge(vs[i], vs[j]);
    }
    return g.induced(verts_);
}

bool SimplicialComplex::edge(int u, int v) const {
    return u != v && is_simplex(VertexSet::single(u) | VertexSet::single(v));
}

std::vector<VertexSet> SimplicialComplex::simplices_of_dim(int k) const {
    std::vector<VertexSet> out;
    if (k < 0 || k > dim_) return out;
    const int size = k + 1;
    for (VertexSet f : facets_) {
        auto vs = f.to_vector();
        const int m = static_cast<int>(vs.size());
        if (m < size) continue;
        // Enumerate all `size`-subsets of the facet.
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            VertexSet s;
            for (int i : idx) s.add(vs[static_cast<std::size_t>(i)]);
            out.push_back(s);
            int pos = size - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - size + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < size; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    sort_canonical(out);
    return out;
}

std::vector<long> SimplicialComplex::simplex_counts() const {
    std::vector<long> counts(static_cast<std::size_t>(dim_ + 1), 0);
    for (int k = 0; k <= dim_; ++k)
        counts[static_cast<std::size_t>(k)] = static_cast<long>(simplices_of_dim(k).size());
    return counts;
}

SimplicialComplex SimplicialComplex::full_subcomplex(VertexSet s) const {
    if (!s.subset_of(verts_)) {
        throw InputError("full subcomplex: subset contains absent vertices");
    }
    SimplicialComplex c;
    c.labels_ = labels_;
    c.verts_ = s;
    std::vector<VertexSet> fs;
    for (VertexSet f : facets_) {
        VertexSet g = f & s;
        if (!g.empty()) fs.push_back(g);
    }
    keep_maximal(fs);
    c.facets_ = std::move(fs);
    c.recompute_dim();
    c.flag_ = flag_; // full subcomplexes of flag complexes are flag
    return c;
}

std::vector<int> SimplicialComplex::dominating_vertices() const {
    std::vector<int> out;
    if (verts_.size() < 1) return out;
    Graph g = one_skeleton();
    verts_.for_each([&](int v) {
        if (g.neighbors(v) == (verts_ - VertexSet::single(v))) out.push_back(v);
    });
    return out;
}

std::vector<VertexSet> SimplicialComplex::components() const {
    return one_skeleton().components();
}

SimplicialComplex SimplicialComplex::compacted() const {
    std::vector<std::string> labels;
    std::vector<int> map(static_cast<std::size_t>(ambient_size()), -1);
    verts_.for_each([&](int v) {
        map[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
        labels.push_back(label(v));
    });
    SimplicialComplex c;
    c.labels_ = make_labels(std::move(labels));
    c.verts_ = VertexSet::first_n(verts_.size());
    for (VertexSet f : facets_) {
        VertexSet g;
        f.for_each([&](int v) { g.add(map[static_cast<std::size_t>(v)]); });
        c.facets_.push_back(g);
    }
    sort_canonical(c.facets_);
    c.dim_ = dim_;
    c.flag_ = flag_;
    return c;
}

bool SimplicialComplex::check_flag() const {
    SimplicialComplex clique = from_graph(one_skeleton());
    return clique.facets_ == facets_;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    SimplicialComplex ca = a.compacted();
    SimplicialComplex cb = b.compacted();
    return *ca.labels_ == *cb.labels_ && ca.facets_ == cb.facets_;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    SimplicialComplex ca = a.compacted();
    SimplicialComplex cb = b.compacted();
    std::vector<std::string> labels = *ca.labels_;
    const int offset = static_cast<int>(labels.size());
    for (const auto& l : *cb.labels_) labels.push_back(l);

    SimplicialComplex c;
    c.labels_ = make_labels(std::move(labels)); // throws on label collision
    c.verts_ = VertexSet::first_n(static_cast<int>(c.labels_->size()));
    for (VertexSet fa : ca.facets_) {
        for (VertexSet fb : cb.facets_) {
            c.facets_.push_back(fa | VertexSet::from_bits(fb.bits() << offset));
        }
    }
    sort_canonical(c.facets_);
    c.recompute_dim();
    c.flag_ = a.flag_ && b.flag_;
    return c;
}

SimplicialComplex cone(const SimplicialComplex& l, const std::string& apex_label) {
    return join(l, simplex_on({apex_label}));
}

SimplicialComplex suspend(const SimplicialComplex& l,
                          const std::string& north_label,
                          const std::string& south_label) {
    return join(l, two_points(north_label, south_label));
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    SimplicialComplex ca = a.compacted();
    SimplicialComplex cb = b.compacted();
    std::vector<std::string> labels = *ca.labels_;
    const int offset = static_cast<int>(labels.size());
    for (const auto& l : *cb.labels_) labels.push_back(l);

    SimplicialComplex c;
    c.labels_ = make_labels(std::move(labels));
    c.verts_ = VertexSet::first_n(static_cast<int>(c.labels_->size()));
    c.facets_ = ca.facets_;
    for (VertexSet fb : cb.facets_) c.facets_.push_back(VertexSet::from_bits(fb.bits() << offset));
    sort_canonical(c.facets_);
    c.recompute_dim();
    c.flag_ = a.flag_ && b.flag_;
    return c;
}

SimplicialComplex two_points(const std::string& a, const std::string& b) {
    return SimplicialComplex::from_facets({a, b}, {{0}, {1}});
}

SimplicialComplex simplex_on(std::vector<std::string> labels) {
    if (labels.empty()) return {};
    std::vector<int> all(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) all[i] = static_cast<int>(i);
    return SimplicialComplex::from_facets(std::move(labels), {all});
}

} // namespace raagcoh
