#ifndef RAAGCOH_IO_HPP
#define RAAGCOH_IO_HPP

#include <string>

#include <json.hpp>

#include "raagcoh/complex.hpp"

namespace raagcoh {

// Accepted input shapes:
//   {"format":"flag-graph","vertices":[...],"edges":[["u","v"],...]}
//   {"format":"complex","vertices":[...],"facets":[["a","b","c"],...]}
// Labels are strings; edges/facets reference labels.
SimplicialComplex complex_from_json(const nlohmann::json& j);
SimplicialComplex load_complex_file(const std::string& path);

// Canonical form: format "complex", vertices in input order, facets as
// label lists sorted lexicographically by index lists.
nlohmann::json complex_to_json(const SimplicialComplex& c);

nlohmann::json vertex_set_to_json(const SimplicialComplex& c, VertexSet s);

} // namespace raagcoh

#endif
