#pragma once

#include <json.hpp>
#include <filesystem>
#include <string>
#include <vector>

#include "expanse/complex.hpp"
#include "expanse/hypergraph.hpp"
#include "expanse/ideal.hpp"
#include "expanse/structure.hpp"

namespace expanse::io {

using nlohmann::json;

/// {"vertices": [...], "facets": [[...], ...]}; facets in canonical order.
json complex_to_json(const SimplicialComplex& complex);
/// Facet lists need not be maximal. Throws InvalidInput on malformed JSON.
SimplicialComplex complex_from_json(const json& doc);

/// {"vertices": [...], "edges": [[...], ...]}
json hypergraph_to_json(const Hypergraph& h);
/// Strict unless `permissive`, in which case repeated and non-minimal
/// edges are dropped and reported in `warnings`.
Hypergraph hypergraph_from_json(const json& doc, bool permissive = false, std::vector<std::string>* warnings = nullptr);

/// {"variables": [...], "generators": [[...], ...]}
json ideal_to_json(const SquarefreeMonomialIdeal& ideal);

/// {"i,j": rank, ...}
json betti_to_json(const BettiTable& table);

json faces_to_json(const std::vector<std::string>& universe, std::span<const Face> faces);

json shedding_tree_to_json(const SimplicialComplex& complex, const SheddingTree& tree);

json read_json_file(const std::filesystem::path& path);

}  // namespace expanse::io
