#ifndef RAAGCOH_HOMOLOGY_HPP
#define RAAGCOH_HOMOLOGY_HPP

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "raagcoh/complex.hpp"

namespace raagcoh {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>; // row-major

// Rank over the rationals, fraction-free (Bareiss) elimination.
long matrix_rank(IntMatrix m);

struct SmithForm {
    long rank = 0;
    std::vector<BigInt> factors; // positive diagonal, each divides the next
};

// Diagonalisation by unimodular row/column operations, pivoting on the
// smallest nonzero magnitude.
SmithForm smith_normal_form(IntMatrix m);

// Ordered simplex lists per degree plus signed boundary matrices.
struct ChainComplexData {
    std::vector<std::vector<VertexSet>> simplices; // [k] canonical order
    int dim() const { return static_cast<int>(simplices.size()) - 1; }
};

ChainComplexData chain_complex(const SimplicialComplex& l);

// Boundary map from k-simplices (columns) to (k-1)-simplices (rows);
// entries are +-1.  k = 0 gives a 0 x (#vertices) matrix.
IntMatrix boundary_matrix(const ChainComplexData& c, int k);

struct HomologySummary {
    int dim = -1;
    std::vector<long> simplex_counts;               // [k], k = 0..dim
    std::vector<long> betti;                        // unreduced, over Q
    std::vector<long> reduced_betti;
    std::vector<std::vector<BigInt>> torsion;       // invariant factors > 1 per degree
    bool has_integral = false;

    long euler_characteristic() const;
    bool reduced_trivial() const; // all reduced Betti numbers and torsion vanish
};

// Rational Betti numbers in all degrees 0..dim.
HomologySummary homology_q(const SimplicialComplex& l, int threads = 1);
// Integral homology: ranks coincide with the rational Betti numbers,
// torsion comes from the Smith normal forms.
HomologySummary homology_z(const SimplicialComplex& l, int threads = 1);

// Single-degree rational Betti number (unreduced).
long betti_q_degree(const SimplicialComplex& l, int degree);

} // namespace raagcoh

#endif
