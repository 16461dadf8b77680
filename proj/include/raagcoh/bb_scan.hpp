#ifndef RAAGCOH_BB_SCAN_HPP
#define RAAGCOH_BB_SCAN_HPP

#include <cstdint>
#include <vector>

#include "raagcoh/complex.hpp"
#include "raagcoh/connectivity.hpp"

namespace raagcoh {

// A full subcomplex that is (n-1)-connected but not n-connected, with the
// certified statuses as evidence.
struct Obstruction {
    VertexSet subset;
    int n = 1;
    TriStatus status_below; // (n-1)-connectivity: Yes
    TriStatus status_at;    // n-connectivity: No
};

struct ScanLimits {
    std::uint64_t max_subsets = std::uint64_t{1} << 20;
    long pi1_budget = 10000;
};

struct ScanReport {
    int n = 1;
    std::vector<Obstruction> obstructions; // enumeration order
    std::vector<VertexSet> candidates;     // classification blocked on an Unknown
    std::uint64_t scanned = 0;
    std::uint64_t total_subsets = 0;
    bool exhaustive = false;
};

// Enumerates full subcomplexes (whole vertex set first: decreasing size,
// then lexicographic) and classifies each against the connectivity pair
// (n-1, n).  Every reported obstruction re-verifies under fresh
// connectivity computation.  Deterministic for any worker count.
ScanReport scan_obstructions(const SimplicialComplex& l, int n, const ScanLimits& limits = {},
                             int threads = 1);

// Plain single-loop reference used by the tests and the benchmark.
ScanReport scan_obstructions_serial(const SimplicialComplex& l, int n,
                                    const ScanLimits& limits = {});

} // namespace raagcoh

#endif
