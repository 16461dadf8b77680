#include "raagcoh/connectivity.hpp"

#include "raagcoh/homology.hpp"

namespace raagcoh {

TriStatus connectivity_status(const SimplicialComplex& l, int k, long pi1_budget) {
    if (k < -1) throw InputError("connectivity degree must be >= -1");
    if (l.is_empty()) return {Tri::No, "empty", -1};
    if (k == -1) return {Tri::Yes, "nonempty", -1};

    if (!l.connected()) return {Tri::No, "disconnected", 0};
    if (k == 0) return {Tri::Yes, "connected", 0};

    // A complex with a dominating vertex is a cone, hence contractible.
    if (!l.dominating_vertices().empty()) return {Tri::Yes, "cone", -1};

    HomologySummary h = homology_z(l);
    for (int i = 1; i <= k && i <= h.dim; ++i) {
        bool nonzero = h.reduced_betti[static_cast<std::size_t>(i)] != 0 ||
                       !h.torsion[static_cast<std::size_t>(i)].empty();
        if (nonzero) return {Tri::No, "homology-nonzero", i};
    }

    Pi1Status pi = pi1_trivial(l, pi1_budget);
    if (pi.value == Tri::No) return {Tri::No, "pi1-nontrivial", 1};
    if (pi.value == Tri::Unknown) return {Tri::Unknown, "pi1-budget", pi1_budget};
    return {Tri::Yes, "hurewicz", k};
}

std::vector<FinitenessEntry> bb_finiteness(const SimplicialComplex& l, int max_n,
                                           long pi1_budget) {
    if (max_n < 1) throw InputError("max_n must be >= 1");
    std::vector<FinitenessEntry> out;
    for (int n = 1; n <= max_n; ++n) {
        out.push_back({n, connectivity_status(l, n - 1, pi1_budget)});
    }
    return out;
}

} // namespace raagcoh
