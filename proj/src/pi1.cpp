#include "raagcoh/pi1.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "raagcoh/homology.hpp"

namespace raagcoh {

namespace {

std::vector<int> inverse_word(const std::vector<int>& w) {
    std::vector<int> out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

std::vector<int> rotate_word(const std::vector<int>& w, int r) {
    if (w.empty()) return w;
    r = ((r % static_cast<int>(w.size())) + static_cast<int>(w.size())) % static_cast<int>(w.size());
    std::vector<int> out(w.begin() + r, w.end());
    out.insert(out.end(), w.begin(), w.begin() + r);
    return out;
}

void free_reduce(std::vector<int>& w) {
    std::vector<int> out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x) {
            out.pop_back();
        } else {
            out.push_back(x);
        }
    }
    w = std::move(out);
}

void cyclic_reduce(std::vector<int>& w) {
    free_reduce(w);
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
        free_reduce(w);
    }
}

int gen_of(int symbol) { return std::abs(symbol) - 1; }

} // namespace

bool Presentation::trivial() const {
    return alive_count() == 0 && relators.empty();
}

long Presentation::total_length() const {
    long n = 0;
    for (const auto& r : relators) n += static_cast<long>(r.word.size());
    return n;
}

int Presentation::alive_count() const {
    return static_cast<int>(std::count(alive.begin(), alive.end(), true));
}

void Presentation::normalize() {
    for (auto& r : relators) cyclic_reduce(r.word);
    relators.erase(std::remove_if(relators.begin(), relators.end(),
                                  [](const Relator& r) { return r.word.empty(); }),
                   relators.end());
}

Presentation edge_path_presentation(const SimplicialComplex& l) {
    if (l.is_empty()) throw InputError("fundamental group of the empty complex");
    if (!l.connected()) throw InputError("fundamental group requires a connected complex");

    Graph g = l.one_skeleton();
    // Breadth-first spanning tree from the least vertex, neighbours ascending.
    const int root = l.verts().least();
    std::vector<int> parent(static_cast<std::size_t>(l.ambient_size()), -1);
    VertexSet visited = VertexSet::single(root);
    std::deque<int> q{root};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        (g.neighbors(v) - visited).for_each([&](int u) {
            visited.add(u);
            parent[static_cast<std::size_t>(u)] = v;
            q.push_back(u);
        });
    }

    auto is_tree_edge = [&](int u, int v) {
        return parent[static_cast<std::size_t>(u)] == v || parent[static_cast<std::size_t>(v)] == u;
    };

    // Generators: non-tree edges in canonical order.
    std::map<std::pair<int, int>, int> gen_of_edge;
    auto verts = l.verts().to_vector();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            int u = verts[i], v = verts[j];
            if (!g.adjacent(u, v) || is_tree_edge(u, v)) continue;
            int id = static_cast<int>(gen_of_edge.size());
            gen_of_edge[{u, v}] = id;
        }
    }

    Presentation p;
    p.generator_count = static_cast<int>(gen_of_edge.size());
    p.alive.assign(static_cast<std::size_t>(p.generator_count), true);

    auto symbol = [&](int u, int v) -> int { // 0 when (u,v) is a tree edge
        if (is_tree_edge(u, v)) return 0;
        return gen_of_edge.at({std::min(u, v), std::max(u, v)}) + 1;
    };

    int next_id = 0;
    for (VertexSet tri : l.simplices_of_dim(2)) {
        auto t = tri.to_vector(); // a < b < c
        std::vector<int> word;
        if (int s = symbol(t[0], t[1])) word.push_back(s);
        if (int s = symbol(t[1], t[2])) word.push_back(s);
        if (int s = symbol(t[0], t[2])) word.push_back(-s);
        Relator r;
        r.id = next_id++;
        r.word = std::move(word);
        p.relators.push_back(std::move(r));
    }
    p.normalize();
    return p;
}

namespace {

Relator* find_relator(Presentation& p, int id) {
    for (auto& r : p.relators) {
        if (r.id == id) return &r;
    }
    return nullptr;
}

void substitute_generator(Presentation& p, int gen, const std::vector<int>& rep) {
    for (auto& r : p.relators) {
        std::vector<int> out;
        for (int x : r.word) {
            if (gen_of(x) != gen) {
                out.push_back(x);
            } else if (x > 0) {
                out.insert(out.end(), rep.begin(), rep.end());
            } else {
                auto inv = inverse_word(rep);
                out.insert(out.end(), inv.begin(), inv.end());
            }
        }
        r.word = std::move(out);
    }
}

bool apply_eliminate(Presentation& p, const TietzeMove& m, std::string* diag) {
    auto fail = [&](const char* msg) {
        if (diag) *diag = msg;
        return false;
    };
    if (m.gen < 0 || m.gen >= p.generator_count || !p.alive[static_cast<std::size_t>(m.gen)]) {
        return fail("eliminate: generator not alive");
    }
    Relator* r = find_relator(p, m.relator);
    if (!r) return fail("eliminate: relator id not found");
    int count = 0;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < r->word.size(); ++i) {
        if (gen_of(r->word[i]) == m.gen) {
            ++count;
            pos = i;
        }
    }
    if (count != 1) return fail("eliminate: generator does not occur exactly once");

    // r = u g^e v = 1, so g^e = (v u)^-1.
    std::vector<int> vu(r->word.begin() + static_cast<long>(pos) + 1, r->word.end());
    vu.insert(vu.end(), r->word.begin(), r->word.begin() + static_cast<long>(pos));
    std::vector<int> rep = (r->word[pos] > 0) ? inverse_word(vu) : vu;

    const int rid = r->id;
    p.relators.erase(std::remove_if(p.relators.begin(), p.relators.end(),
                                    [&](const Relator& x) { return x.id == rid; }),
                     p.relators.end());
    substitute_generator(p, m.gen, rep);
    p.alive[static_cast<std::size_t>(m.gen)] = false;
    p.normalize();
    return true;
}

bool apply_substitute(Presentation& p, const TietzeMove& m, std::string* diag) {
    auto fail = [&](const char* msg) {
        if (diag) *diag = msg;
        return false;
    };
    Relator* target = find_relator(p, m.relator);
    Relator* source = find_relator(p, m.source);
    if (!target || !source || m.relator == m.source) return fail("substitute: bad relator ids");
    std::vector<int> w = m.inverted ? inverse_word(source->word) : source->word;
    w = rotate_word(w, m.rotation);
    const int len = static_cast<int>(w.size());
    if (m.match_len <= 0 || m.match_len > len || 2 * m.match_len <= len) {
        return fail("substitute: match must cover more than half the source");
    }
    if (m.position < 0 ||
        m.position + m.match_len > static_cast<int>(target->word.size())) {
        return fail("substitute: match out of range");
    }
    for (int i = 0; i < m.match_len; ++i) {
        if (target->word[static_cast<std::size_t>(m.position + i)] != w[static_cast<std::size_t>(i)]) {
            return fail("substitute: source prefix does not occur at the stated position");
        }
    }
    std::vector<int> q(w.begin() + m.match_len, w.end());
    std::vector<int> replacement = inverse_word(q);
    std::vector<int> out(target->word.begin(), target->word.begin() + m.position);
    out.insert(out.end(), replacement.begin(), replacement.end());
    out.insert(out.end(), target->word.begin() + m.position + m.match_len, target->word.end());
    target->word = std::move(out);
    p.normalize();
    return true;
}

bool apply_move(Presentation& p, const TietzeMove& m, std::string* diag) {
    return m.kind == TietzeMove::Kind::EliminateGen ? apply_eliminate(p, m, diag)
                                                    : apply_substitute(p, m, diag);
}

// Deterministic choice of the next elimination: shortest relator first,
// then least relator id, then least generator.
std::optional<TietzeMove> pick_elimination(const Presentation& p) {
    const Relator* best = nullptr;
    int best_gen = -1;
    for (const auto& r : p.relators) {
        if (best && (r.word.size() > best->word.size() ||
                     (r.word.size() == best->word.size() && r.id > best->id))) {
            continue;
        }
        std::map<int, int> counts;
        for (int x : r.word) counts[gen_of(x)]++;
        int gen = -1;
        for (auto [g, c] : counts) {
            if (c == 1) {
                gen = g;
                break;
            }
        }
        if (gen < 0) continue;
        if (!best || r.word.size() < best->word.size() ||
            (r.word.size() == best->word.size() && r.id < best->id)) {
            best = &r;
            best_gen = gen;
        }
    }
    if (!best) return std::nullopt;
    TietzeMove m;
    m.kind = TietzeMove::Kind::EliminateGen;
    m.gen = best_gen;
    m.relator = best->id;
    return m;
}

std::optional<TietzeMove> pick_substitution(const Presentation& p) {
    for (const auto& target : p.relators) {
        for (const auto& source : p.relators) {
            if (source.id == target.id) continue;
            const int len = static_cast<int>(source.word.size());
            for (int inverted = 0; inverted < 2; ++inverted) {
                std::vector<int> w = inverted ? inverse_word(source.word) : source.word;
                for (int rot = 0; rot < len; ++rot) {
                    std::vector<int> rw = rotate_word(w, rot);
                    for (int match = len - 1; 2 * match > len; --match) {
                        const int max_pos = static_cast<int>(target.word.size()) - match;
                        for (int pos = 0; pos <= max_pos; ++pos) {
                            bool hit = true;
                            for (int i = 0; i < match && hit; ++i) {
                                hit = target.word[static_cast<std::size_t>(pos + i)] ==
                                      rw[static_cast<std::size_t>(i)];
                            }
                            if (!hit) continue;
                            TietzeMove m;
                            m.kind = TietzeMove::Kind::SubstituteSubword;
                            m.relator = target.id;
                            m.source = source.id;
                            m.rotation = rot;
                            m.inverted = inverted != 0;
                            m.position = pos;
                            m.match_len = match;
                            return m;
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

SimplifyResult tietze_simplify(Presentation p, long budget) {
    SimplifyResult out;
    p.normalize();
    while (out.moves_used < budget) {
        std::optional<TietzeMove> m = pick_elimination(p);
        if (!m) m = pick_substitution(p);
        if (!m) break;
        std::string diag;
        if (!apply_move(p, *m, &diag)) {
            throw std::logic_error("tietze move rejected by its own applier: " + diag);
        }
        out.transcript.push_back(*m);
        ++out.moves_used;
        if (p.trivial()) break;
    }
    out.trivialized = p.trivial();
    out.final = std::move(p);
    return out;
}

std::optional<Presentation> replay_transcript(Presentation p,
                                              const std::vector<TietzeMove>& transcript,
                                              std::string* diagnostic) {
    p.normalize();
    for (const auto& m : transcript) {
        if (!apply_move(p, m, diagnostic)) return std::nullopt;
    }
    return p;
}

Pi1Status pi1_trivial(const SimplicialComplex& l, long budget) {
    Presentation p = edge_path_presentation(l);
    if (p.alive_count() == 0 && p.relators.empty()) {
        return Pi1Status{Tri::Yes, "no-generators", 0, {}};
    }

    // Abelianisation first: a nontrivial H_1 refutes triviality outright.
    IntMatrix m(p.relators.size(), std::vector<BigInt>(static_cast<std::size_t>(p.generator_count), 0));
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        for (int x : p.relators[i].word) {
            m[i][static_cast<std::size_t>(gen_of(x))] += (x > 0) ? 1 : -1;
        }
    }
    SmithForm s = smith_normal_form(std::move(m));
    bool h1_trivial = s.rank == p.generator_count;
    for (const BigInt& f : s.factors) {
        if (f > 1) h1_trivial = false;
    }
    if (!h1_trivial) {
        return Pi1Status{Tri::No, "abelianisation-nontrivial", p.generator_count - s.rank, {}};
    }

    SimplifyResult r = tietze_simplify(std::move(p), budget);
    if (r.trivialized) {
        return Pi1Status{Tri::Yes, "transcript", r.moves_used, std::move(r.transcript)};
    }
    if (r.final.relators.empty() && r.final.alive_count() > 0) {
        return Pi1Status{Tri::No, "free-of-positive-rank", r.final.alive_count(), {}};
    }
    return Pi1Status{Tri::Unknown, "budget-exhausted", budget, {}};
}

} // namespace raagcoh
