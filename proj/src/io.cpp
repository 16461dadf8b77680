#include "raagcoh/io.hpp"

#include <fstream>
#include <unordered_map>

namespace raagcoh {

namespace {

std::vector<std::string> parse_labels(const nlohmann::json& j) {
    if (!j.contains("vertices") || !j["vertices"].is_array()) {
        throw InputError("missing or non-array \"vertices\"");
    }
    std::vector<std::string> labels;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw InputError("vertex labels must be strings");
        labels.push_back(v.get<std::string>());
    }
    return labels;
}

std::unordered_map<std::string, int> label_index(const std::vector<std::string>& labels) {
    std::unordered_map<std::string, int> idx;
    for (std::size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = static_cast<int>(i);
    return idx;
}

int lookup(const std::unordered_map<std::string, int>& idx, const nlohmann::json& j,
           const char* where) {
    if (!j.is_string()) throw InputError(std::string(where) + ": labels must be strings");
    auto it = idx.find(j.get<std::string>());
    if (it == idx.end()) {
        throw InputError(std::string(where) + ": unknown vertex label '" + j.get<std::string>() + "'");
    }
    return it->second;
}

} // namespace

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("top-level value must be an object");
    if (!j.contains("format") || !j["format"].is_string()) {
        throw InputError("missing \"format\" (expected \"flag-graph\" or \"complex\")");
    }
    const std::string format = j["format"].get<std::string>();
    std::vector<std::string> labels = parse_labels(j);
    auto idx = label_index(labels);

    if (format == "flag-graph") {
        if (!j.contains("edges") || !j["edges"].is_array()) {
            throw InputError("flag-graph: missing or non-array \"edges\"");
        }
        std::vector<std::pair<int, int>> edges;
        for (std::size_t e = 0; e < j["edges"].size(); ++e) {
            const auto& pair = j["edges"][e];
            std::string where = "edges[" + std::to_string(e) + "]";
            if (!pair.is_array() || pair.size() != 2) {
                throw InputError(where + ": expected a pair of labels");
            }
            edges.emplace_back(lookup(idx, pair[0], where.c_str()),
                               lookup(idx, pair[1], where.c_str()));
        }
        return SimplicialComplex::from_graph(Graph::from_edges(std::move(labels), edges));
    }
    if (format == "complex") {
        if (!j.contains("facets") || !j["facets"].is_array()) {
            throw InputError("complex: missing or non-array \"facets\"");
        }
        std::vector<std::vector<int>> facets;
        for (std::size_t f = 0; f < j["facets"].size(); ++f) {
            const auto& face = j["facets"][f];
            std::string where = "facets[" + std::to_string(f) + "]";
            if (!face.is_array()) throw InputError(where + ": expected an array of labels");
            std::vector<int> vs;
            for (const auto& v : face) vs.push_back(lookup(idx, v, where.c_str()));
            facets.push_back(std::move(vs));
        }
        return SimplicialComplex::from_facets(std::move(labels), facets);
    }
    throw InputError("unknown format '" + format + "' (expected \"flag-graph\" or \"complex\")");
}

SimplicialComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    try {
        return complex_from_json(j);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

nlohmann::json complex_to_json(const SimplicialComplex& c) {
    SimplicialComplex k = c.compacted();
    nlohmann::json j;
    j["format"] = "complex";
    j["vertices"] = nlohmann::json::array();
    k.verts().for_each([&](int v) { j["vertices"].push_back(k.label(v)); });
    j["facets"] = nlohmann::json::array();
    for (VertexSet f : k.facets()) {
        nlohmann::json face = nlohmann::json::array();
        f.for_each([&](int v) { face.push_back(k.label(v)); });
        j["facets"].push_back(face);
    }
    return j;
}

nlohmann::json vertex_set_to_json(const SimplicialComplex& c, VertexSet s) {
    nlohmann::json a = nlohmann::json::array();
    s.for_each([&](int v) { a.push_back(c.label(v)); });
    return a;
}

} // namespace raagcoh
