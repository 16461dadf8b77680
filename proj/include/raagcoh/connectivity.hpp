#ifndef RAAGCOH_CONNECTIVITY_HPP
#define RAAGCOH_CONNECTIVITY_HPP

#include <string>
#include <vector>

#include "raagcoh/complex.hpp"
#include "raagcoh/pi1.hpp"

namespace raagcoh {

struct TriStatus {
    Tri value = Tri::Unknown;
    std::string evidence; // witness kind ("cone", "homology-nonzero", ...)
    long detail = -1;     // degree or budget where meaningful
};

// Is the complex k-connected?  k = -1 asks for nonemptiness, k = 0 for
// connectedness.  For k >= 1 the answer combines integral homology with the
// sound fundamental-group check: No on homological evidence, Yes through
// the Hurewicz route, Unknown when the group check runs out of budget.
TriStatus connectivity_status(const SimplicialComplex& l, int k, long pi1_budget = 10000);

struct FinitenessEntry {
    int n = 0;
    TriStatus status; // type F_n status of the kernel group
};

// Finiteness interval of the kernel of the map sending every generator of
// the associated right-angled Artin group to 1: type F_n exactly when the
// complex is (n-1)-connected.
std::vector<FinitenessEntry> bb_finiteness(const SimplicialComplex& l, int max_n,
                                           long pi1_budget = 10000);

} // namespace raagcoh

#endif
