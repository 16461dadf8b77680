#include "raagcoh/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace raagcoh {

long matrix_rank(IntMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    long rank = 0;
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++rank;
        ++r;
    }
    return rank;
}

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

} // namespace

SmithForm smith_normal_form(IntMatrix m) {
    SmithForm out;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Pivot: smallest nonzero magnitude in the trailing submatrix.
        std::size_t pi = 0, pj = 0;
        bool found = false;
        BigInt best;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                BigInt a = abs_big(m[i][j]);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (!found) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                if (abs_big(m[i][t]) < abs_big(m[t][t])) std::swap(m[t], m[i]);
                BigInt q = m[i][t] / m[t][t];
                if (q != 0) {
                    for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                }
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                BigInt q = m[t][j] / m[t][t];
                if (q != 0) {
                    for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                }
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Divisibility: the pivot must divide the trailing submatrix.
            for (std::size_t i = t + 1; i < rows && clean; ++i) {
                for (std::size_t j = t + 1; j < cols && clean; ++j) {
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                        clean = false;
                    }
                }
            }
        }
        if (m[t][t] < 0) {
            for (std::size_t j = t; j < cols; ++j) m[t][j] = -m[t][j];
        }
        out.factors.push_back(m[t][t]);
        ++t;
    }
    out.rank = static_cast<long>(out.factors.size());
    return out;
}

ChainComplexData chain_complex(const SimplicialComplex& l) {
    ChainComplexData c;
    for (int k = 0; k <= l.dimension(); ++k) c.simplices.push_back(l.simplices_of_dim(k));
    return c;
}

IntMatrix boundary_matrix(const ChainComplexData& c, int k) {
    if (k <= 0 || k > c.dim()) {
        std::size_t cols = (k == 0 && c.dim() >= 0) ? c.simplices[0].size() : 0;
        return IntMatrix(0, std::vector<BigInt>(cols));
    }
    const auto& rows_s = c.simplices[static_cast<std::size_t>(k - 1)];
    const auto& cols_s = c.simplices[static_cast<std::size_t>(k)];
    IntMatrix m(rows_s.size(), std::vector<BigInt>(cols_s.size(), 0));
    auto row_of = [&](VertexSet s) {
        auto it = std::lower_bound(rows_s.begin(), rows_s.end(), s, VertexSet::lex_less);
        if (it == rows_s.end() || *it != s) throw std::logic_error("face missing from chain complex");
        return static_cast<std::size_t>(it - rows_s.begin());
    };
    for (std::size_t j = 0; j < cols_s.size(); ++j) {
        auto vs = cols_s[j].to_vector(); // ascending
        for (std::size_t i = 0; i < vs.size(); ++i) {
            VertexSet face = cols_s[j] - VertexSet::single(vs[i]);
            m[row_of(face)][j] = (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

namespace {

// d_{k} . d_{k+1} = 0, checked once per complex.
void assert_boundary_squares_to_zero(const ChainComplexData& c) {
    for (int k = 2; k <= c.dim(); ++k) {
        IntMatrix a = boundary_matrix(c, k - 1);
        IntMatrix b = boundary_matrix(c, k);
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < (b.empty() ? 0 : b[0].size()); ++j) {
                BigInt sum = 0;
                for (std::size_t t = 0; t < b.size(); ++t) sum += a[i][t] * b[t][j];
                if (sum != 0) throw std::logic_error("boundary composition is nonzero");
            }
        }
    }
}

} // namespace

long HomologySummary::euler_characteristic() const {
    long chi = 0;
    for (std::size_t k = 0; k < simplex_counts.size(); ++k) {
        chi += (k % 2 == 0 ? 1 : -1) * simplex_counts[k];
    }
    return chi;
}

bool HomologySummary::reduced_trivial() const {
    for (long b : reduced_betti) {
        if (b != 0) return false;
    }
    for (const auto& t : torsion) {
        if (!t.empty()) return false;
    }
    return true;
}

namespace {

HomologySummary homology_impl(const SimplicialComplex& l, bool integral, int threads) {
    HomologySummary out;
    out.dim = l.dimension();
    out.has_integral = integral;
    if (out.dim < 0) return out;

    ChainComplexData c = chain_complex(l);
    assert_boundary_squares_to_zero(c);
    const int dim = out.dim;
    out.simplex_counts.assign(static_cast<std::size_t>(dim + 1), 0);
    for (int k = 0; k <= dim; ++k) {
        out.simplex_counts[static_cast<std::size_t>(k)] =
            static_cast<long>(c.simplices[static_cast<std::size_t>(k)].size());
    }

    // ranks[k] = rank of the boundary map leaving degree k; independent per
    // degree, so the batch parallelises cleanly.
    std::vector<long> ranks(static_cast<std::size_t>(dim + 1), 0);
    std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(dim + 1));
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
    for (int k = 1; k <= dim; ++k) {
        IntMatrix m = boundary_matrix(c, k);
        if (integral) {
            SmithForm s = smith_normal_form(std::move(m));
            ranks[static_cast<std::size_t>(k)] = s.rank;
            for (const BigInt& f : s.factors) {
                if (f > 1) factors[static_cast<std::size_t>(k)].push_back(f);
            }
        } else {
            ranks[static_cast<std::size_t>(k)] = matrix_rank(std::move(m));
        }
    }

    out.betti.assign(static_cast<std::size_t>(dim + 1), 0);
    out.reduced_betti.assign(static_cast<std::size_t>(dim + 1), 0);
    out.torsion.assign(static_cast<std::size_t>(dim + 1), {});
    for (int k = 0; k <= dim; ++k) {
        long kernel = out.simplex_counts[static_cast<std::size_t>(k)] -
                      ranks[static_cast<std::size_t>(k)];
        long image = (k + 1 <= dim) ? ranks[static_cast<std::size_t>(k + 1)] : 0;
        out.betti[static_cast<std::size_t>(k)] = kernel - image;
        out.reduced_betti[static_cast<std::size_t>(k)] = kernel - image;
        if (integral && k + 1 <= dim) {
            out.torsion[static_cast<std::size_t>(k)] = factors[static_cast<std::size_t>(k + 1)];
        }
    }
    out.reduced_betti[0] -= 1; // complex is nonempty here
    return out;
}

} // namespace

HomologySummary homology_q(const SimplicialComplex& l, int threads) {
    return homology_impl(l, false, threads);
}

HomologySummary homology_z(const SimplicialComplex& l, int threads) {
    return homology_impl(l, true, threads);
}

long betti_q_degree(const SimplicialComplex& l, int degree) {
    if (degree < 0 || degree > l.dimension()) return 0;
    ChainComplexData c = chain_complex(l);
    long count = static_cast<long>(c.simplices[static_cast<std::size_t>(degree)].size());
    long rank_out = matrix_rank(boundary_matrix(c, degree));
    long rank_in = degree + 1 <= c.dim() ? matrix_rank(boundary_matrix(c, degree + 1)) : 0;
    return count - rank_out - rank_in;
}

} // namespace raagcoh
