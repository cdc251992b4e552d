#include "expanse/io.hpp"

#include <fstream>

#include "expanse/error.hpp"

namespace expanse::io {

namespace {

std::vector<std::string> string_list(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_array())
        throw Error(ErrorCode::InvalidInput, std::string("expected an array field '") + key + "'");
    std::vector<std::string> out;
    for (const auto& item : doc.at(key)) {
        if (!item.is_string())
            throw Error(ErrorCode::InvalidInput, std::string("'") + key + "' must hold strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::vector<std::vector<std::string>> nested_list(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_array())
        throw Error(ErrorCode::InvalidInput, std::string("expected an array field '") + key + "'");
    std::vector<std::vector<std::string>> out;
    for (const auto& item : doc.at(key)) {
        if (!item.is_array())
            throw Error(ErrorCode::InvalidInput, std::string("'") + key + "' must hold arrays of names");
        std::vector<std::string> names;
        for (const auto& name : item) {
            if (!name.is_string())
                throw Error(ErrorCode::InvalidInput, std::string("'") + key + "' must hold arrays of names");
            names.push_back(name.get<std::string>());
        }
        out.push_back(std::move(names));
    }
    return out;
}

}  // namespace

json faces_to_json(const std::vector<std::string>& universe, std::span<const Face> faces) {
    json out = json::array();
    for (Face f : faces) {
        json names = json::array();
        f.for_each([&](int v) { names.push_back(universe.at(v)); });
        out.push_back(std::move(names));
    }
    return out;
}

json complex_to_json(const SimplicialComplex& complex) {
    return {{"vertices", complex.universe()}, {"facets", faces_to_json(complex.universe(), complex.facets())}};
}

SimplicialComplex complex_from_json(const json& doc) {
    return SimplicialComplex::from_facets(string_list(doc, "vertices"), nested_list(doc, "facets"));
}

json hypergraph_to_json(const Hypergraph& h) {
    return {{"vertices", h.universe()}, {"edges", faces_to_json(h.universe(), h.edges())}};
}

Hypergraph hypergraph_from_json(const json& doc, bool permissive, std::vector<std::string>* warnings) {
    auto universe = string_list(doc, "vertices");
    const auto named = nested_list(doc, "edges");
    const auto lookup = SimplicialComplex::void_complex(universe);
    std::vector<Face> edges;
    edges.reserve(named.size());
    for (const auto& e : named)
        edges.push_back(lookup.face(e));
    if (permissive)
        return Hypergraph::minimalized(std::move(universe), std::move(edges), warnings);
    return Hypergraph(std::move(universe), std::move(edges));
}

json ideal_to_json(const SquarefreeMonomialIdeal& ideal) {
    json gens = faces_to_json(ideal.variables(), ideal.generators());
    json monomials = json::array();
    for (Face g : ideal.generators())
        monomials.push_back(ideal.monomial_string(g));
    return {{"variables", ideal.variables()}, {"generators", std::move(gens)}, {"monomials", std::move(monomials)}};
}

json betti_to_json(const BettiTable& table) {
    json out = json::object();
    for (const auto& [key, rank] : table.entries())
        out[std::to_string(key.first) + "," + std::to_string(key.second)] = rank;
    return out;
}

json shedding_tree_to_json(const SimplicialComplex& complex, const SheddingTree& tree) {
    if (tree.vertex < 0) {
        json names = json::array();
        tree.simplex.for_each([&](int v) { names.push_back(complex.universe().at(v)); });
        return {{"simplex", std::move(names)}};
    }
    return {{"shedding_vertex", complex.universe().at(tree.vertex)},
            {"link", shedding_tree_to_json(complex, *tree.link)},
            {"deletion", shedding_tree_to_json(complex, *tree.deletion)}};
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidInput, "cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, path.string() + ": " + e.what());
    }
}

}  // namespace expanse::io
