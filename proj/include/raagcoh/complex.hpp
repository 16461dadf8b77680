#ifndef RAAGCOH_COMPLEX_HPP
#define RAAGCOH_COMPLEX_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "raagcoh/vertex_set.hpp"

namespace raagcoh {

// Raised on malformed or out-of-contract input (files, labels, subsets).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite simple graph over an ambient index space shared with the complexes
// built from it.  `verts()` selects the vertices that are present; induced
// subgraphs keep the ambient indexing so subsets stay comparable.
class Graph {
public:
    Graph();
    explicit Graph(std::vector<std::string> labels);

    // Labels must be unique; edges reference positions in `labels`.
    static Graph from_edges(std::vector<std::string> labels,
                            const std::vector<std::pair<int, int>>& edges);

    int ambient_size() const { return static_cast<int>(labels_->size()); }
    VertexSet verts() const { return verts_; }
    int vertex_count() const { return verts_.size(); }

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    void add_edge(int u, int v);

    // Open/closed neighbourhood within the present vertex set.
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet closed_neighbors(int v) const { return adj_[static_cast<std::size_t>(v)] | VertexSet::single(v); }

    bool is_clique(VertexSet s) const;

    Graph induced(VertexSet s) const;

    // Connected components of the present vertices, ordered by least index.
    std::vector<VertexSet> components() const;
    bool connected() const { return components().size() <= 1; }

    const std::string& label(int v) const { return (*labels_)[static_cast<std::size_t>(v)]; }
    const std::shared_ptr<const std::vector<std::string>>& labels_ptr() const { return labels_; }

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
    VertexSet verts_;
    std::vector<VertexSet> adj_;
};

// Finite simplicial complex stored by its facets (maximal simplices), over
// the same ambient index space idea as Graph.  Immutable after construction.
class SimplicialComplex {
public:
    SimplicialComplex();

    // Ambient = all labels; vertices not covered by a facet become
    // singleton facets.  Facets are deduplicated, reduced to maximal ones
    // and sorted canonically.  Flagness is computed.
    static SimplicialComplex from_facets(std::vector<std::string> labels,
                                         const std::vector<std::vector<int>>& facets);

    // Clique (flag) complex of g: facets are the maximal cliques.
    static SimplicialComplex from_graph(const Graph& g);

    int ambient_size() const { return static_cast<int>(labels_->size()); }
    VertexSet verts() const { return verts_; }
    int vertex_count() const { return verts_.size(); }
    int dimension() const { return dim_; }
    bool is_flag() const { return flag_; }
    bool is_empty() const { return verts_.empty(); }

    const std::vector<VertexSet>& facets() const { return facets_; }

    // s is a nonempty simplex of the complex.
    bool is_simplex(VertexSet s) const;
    // The whole complex is a single simplex (or empty).
    bool is_single_simplex() const;

    Graph one_skeleton() const;
    bool edge(int u, int v) const;

    // All k-simplices in canonical order.
    std::vector<VertexSet> simplices_of_dim(int k) const;
    // f-vector: counts[k] = number of k-simplices, k = 0..dim.
    std::vector<long> simplex_counts() const;

    SimplicialComplex full_subcomplex(VertexSet s) const;

    // Vertices adjacent to every other present vertex, ascending.
    std::vector<int> dominating_vertices() const;

    std::vector<VertexSet> components() const;
    bool connected() const { return components().size() <= 1; }

    // Rebase the ambient space to the present vertices (labels in order).
    SimplicialComplex compacted() const;

    const std::string& label(int v) const { return (*labels_)[static_cast<std::size_t>(v)]; }
    const std::shared_ptr<const std::vector<std::string>>& labels_ptr() const { return labels_; }

    // Recompute flagness against the 1-skeleton's clique complex.
    bool check_flag() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);
    friend SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
    friend SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
    VertexSet verts_;
    std::vector<VertexSet> facets_; // canonically sorted, pairwise non-contained
    int dim_ = -1;
    bool flag_ = false;

    void recompute_dim();
};

// Join: simplices are unions of simplices of the two sides.  Labels must be
// disjoint.  join(L, empty) == L.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

SimplicialComplex cone(const SimplicialComplex& l, const std::string& apex_label);
SimplicialComplex suspend(const SimplicialComplex& l,
                          const std::string& north_label,
                          const std::string& south_label);
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

// Two-point complex with no edge.
SimplicialComplex two_points(const std::string& a, const std::string& b);
// Solid simplex on the given labels.
SimplicialComplex simplex_on(std::vector<std::string> labels);

} // namespace raagcoh

#endif
