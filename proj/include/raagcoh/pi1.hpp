#ifndef RAAGCOH_PI1_HPP
#define RAAGCOH_PI1_HPP

#include <optional>
#include <string>
#include <vector>

#include "raagcoh/complex.hpp"

namespace raagcoh {

// Group presentation with stable relator ids.  Words are sequences of
// signed generator references: +(g+1) for g, -(g+1) for its inverse.
struct Relator {
    int id = 0;
    std::vector<int> word;
};

struct Presentation {
    int generator_count = 0;
    std::vector<bool> alive;
    std::vector<Relator> relators;

    bool trivial() const;
    long total_length() const;
    int alive_count() const;
    void normalize(); // free + cyclic reduction, drop empty relators
};

// Edge-path presentation: generators are the 1-skeleton edges outside a
// breadth-first spanning tree, relators come from the 2-simplices.
// Requires a nonempty connected complex.
Presentation edge_path_presentation(const SimplicialComplex& l);

struct TietzeMove {
    enum class Kind { EliminateGen, SubstituteSubword };
    Kind kind = Kind::EliminateGen;
    int gen = -1;        // EliminateGen
    int relator = -1;    // EliminateGen: defining relator id; Substitute: target id
    int source = -1;     // Substitute: source relator id
    int rotation = 0;    // Substitute
    bool inverted = false;
    int position = 0;    // Substitute: match offset in the target word
    int match_len = 0;   // Substitute: length of the matched prefix
};

struct SimplifyResult {
    bool trivialized = false;
    std::vector<TietzeMove> transcript;
    long moves_used = 0;
    Presentation final;
};

// Budgeted simplification: generator eliminations plus strictly shortening
// subword substitutions.  Deterministic.
SimplifyResult tietze_simplify(Presentation p, long budget);

// Re-applies a transcript, checking each move's hypothesis; returns the
// resulting presentation or nullopt with a diagnostic.
std::optional<Presentation> replay_transcript(Presentation p,
                                              const std::vector<TietzeMove>& transcript,
                                              std::string* diagnostic = nullptr);

enum class Tri { Yes, No, Unknown };

struct Pi1Status {
    Tri value = Tri::Unknown;
    std::string evidence;             // witness kind
    long detail = -1;                 // degree / budget, where meaningful
    std::vector<TietzeMove> transcript; // for evidence "transcript"
};

// Sound triviality check: No only on nonvanishing abelianisation (or a free
// presentation of positive rank), Yes only with a replayable transcript.
Pi1Status pi1_trivial(const SimplicialComplex& l, long budget);

inline const char* tri_name(Tri t) {
    switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "unknown";
    }
}

} // namespace raagcoh

#endif
