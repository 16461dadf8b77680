#include "raagcoh/bb_scan.hpp"

#include <omp.h>

#include <algorithm>
#include <optional>

namespace raagcoh {

namespace {

// Subsets of the present vertices by decreasing size, lexicographic within a
// size, up to `cap` of them (the empty set is enumerated and counted).
std::vector<VertexSet> enumerate_subsets(const SimplicialComplex& l, std::uint64_t cap) {
    std::vector<VertexSet> out;
    auto vs = l.verts().to_vector();
    const int n = static_cast<int>(vs.size());
    for (int size = n; size >= 0 && out.size() < cap; --size) {
        if (size == 0) {
            out.push_back({});
            break;
        }
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (out.size() < cap) {
            VertexSet s;
            for (int i : idx) s.add(vs[static_cast<std::size_t>(i)]);
            out.push_back(s);
            int pos = size - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < size; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return out;
}

struct Classified {
    std::size_t rank; // enumeration index, for the deterministic merge
    bool obstruction = false;
    Obstruction obs;
    bool candidate = false;
    VertexSet subset;
};

// Classification of one subset; pure, shared by both scan variants.
// Subsets with fewer than n+2 vertices cannot carry nonzero homology in
// degree n, so they can never violate the connectivity step.
std::optional<Classified> classify(const SimplicialComplex& l, int n, VertexSet w,
                                   long pi1_budget, std::size_t rank) {
    if (static_cast<int>(w.size()) < n + 2) return std::nullopt;
    SimplicialComplex sub = l.full_subcomplex(w);
    TriStatus below = connectivity_status(sub, n - 1, pi1_budget);
    if (below.value == Tri::No) return std::nullopt;
    if (below.value == Tri::Unknown) {
        Classified c;
        c.rank = rank;
        c.candidate = true;
        c.subset = w;
        return c;
    }
    TriStatus at = connectivity_status(sub, n, pi1_budget);
    if (at.value == Tri::Yes) return std::nullopt;
    Classified c;
    c.rank = rank;
    c.subset = w;
    if (at.value == Tri::No) {
        c.obstruction = true;
        c.obs = Obstruction{w, n, below, at};
    } else {
        c.candidate = true;
    }
    return c;
}

ScanReport assemble(const SimplicialComplex& l, int n, const ScanLimits& limits,
                    std::vector<Classified> hits, std::uint64_t scanned) {
    std::sort(hits.begin(), hits.end(),
              [](const Classified& a, const Classified& b) { return a.rank < b.rank; });
    ScanReport report;
    report.n = n;
    report.scanned = scanned;
    const int v = l.vertex_count();
    report.total_subsets = v >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v);
    report.exhaustive = scanned == report.total_subsets;
    for (auto& c : hits) {
        if (c.obstruction) {
            report.obstructions.push_back(std::move(c.obs));
        } else if (c.candidate) {
            report.candidates.push_back(c.subset);
        }
    }
    (void)limits;
    return report;
}

void validate_scan_inputs(const SimplicialComplex& l, int n) {
    if (!l.is_flag()) throw InputError("obstruction scan requires a flag complex");
    if (n < 1) throw InputError("obstruction scan requires n >= 1");
}

} // namespace

ScanReport scan_obstructions_serial(const SimplicialComplex& l, int n,
                                    const ScanLimits& limits) {
    validate_scan_inputs(l, n);
    std::vector<VertexSet> subsets = enumerate_subsets(l, limits.max_subsets);
    std::vector<Classified> hits;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        if (auto c = classify(l, n, subsets[i], limits.pi1_budget, i)) hits.push_back(*c);
    }
    return assemble(l, n, limits, std::move(hits), subsets.size());
}

ScanReport scan_obstructions(const SimplicialComplex& l, int n, const ScanLimits& limits,
                             int threads) {
    validate_scan_inputs(l, n);
    if (threads <= 1) return scan_obstructions_serial(l, n, limits);

    std::vector<VertexSet> subsets = enumerate_subsets(l, limits.max_subsets);
    std::vector<std::vector<Classified>> sink(static_cast<std::size_t>(threads));
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (long i = 0; i < static_cast<long>(subsets.size()); ++i) {
        int t = omp_in_parallel() ? omp_get_thread_num() : 0;
        if (auto c = classify(l, n, subsets[static_cast<std::size_t>(i)], limits.pi1_budget,
                              static_cast<std::size_t>(i))) {
            sink[static_cast<std::size_t>(t)].push_back(*c);
        }
    }
    std::vector<Classified> hits;
    for (auto& s : sink) hits.insert(hits.end(), s.begin(), s.end());
    return assemble(l, n, limits, std::move(hits), subsets.size());
}

} // namespace raagcoh
