#include "expanse/hypergraph.hpp"

#include <algorithm>

#include "expanse/error.hpp"

namespace expanse {

namespace {

void check_edges_in_universe(const std::vector<std::string>& universe, std::span<const Face> edges) {
    const Face all = Face::range(static_cast<int>(universe.size()));
    for (Face e : edges) {
        if (!e.subset_of(all))
            throw Error(ErrorCode::UnknownVertex, "edge mentions an ordinal outside the universe");
        if (e.size() < 2)
            throw Error(ErrorCode::InvalidHypergraph, "edges must have at least two vertices");
    }
}

}  // namespace

Hypergraph::Hypergraph(std::vector<std::string> universe, std::vector<Face> edges)
    : universe_(std::move(universe)), edges_(std::move(edges)) {
    validate_universe(universe_);
    check_edges_in_universe(universe_, edges_);
    for (std::size_t a = 0; a < edges_.size(); ++a)
        for (std::size_t b = 0; b < edges_.size(); ++b)
            if (a != b && edges_[a].subset_of(edges_[b]))
                throw Error(ErrorCode::InvalidHypergraph, "edges must be distinct and pairwise incomparable");
    std::sort(edges_.begin(), edges_.end());
}

Hypergraph Hypergraph::minimalized(std::vector<std::string> universe, std::vector<Face> edges,
                                   std::vector<std::string>* warnings) {
    validate_universe(universe);
    check_edges_in_universe(universe, edges);
    const std::size_t before = edges.size();
    facets::minimalize(edges);
    if (warnings != nullptr && edges.size() != before)
        warnings->push_back("dropped " + std::to_string(before - edges.size()) +
                            " repeated or non-minimal edge(s)");
    return Hypergraph(std::move(universe), std::move(edges));
}

Hypergraph Hypergraph::from_named_edges(std::vector<std::string> universe,
                                        const std::vector<std::vector<std::string>>& edges) {
    auto complex = SimplicialComplex::void_complex(universe);
    std::vector<Face> faces;
    faces.reserve(edges.size());
    for (const auto& e : edges)
        faces.push_back(complex.face(e));
    return Hypergraph(std::move(universe), std::move(faces));
}

std::vector<std::string> Hypergraph::names(Face face) const {
    std::vector<std::string> out;
    face.for_each([&](int v) { out.push_back(universe_[v]); });
    return out;
}

bool Hypergraph::is_graph() const {
    return std::all_of(edges_.begin(), edges_.end(), [](Face e) { return e.size() == 2; });
}

bool Hypergraph::has_edge(Face edge) const {
    return std::binary_search(edges_.begin(), edges_.end(), edge);
}

SimplicialComplex independence_complex(const Hypergraph& h) {
    return SimplicialComplex::from_faces(h.universe(), facets::from_minimal_nonfaces(h.edges(), h.universe_face()));
}

SquarefreeMonomialIdeal edge_ideal(const Hypergraph& g) {
    return SquarefreeMonomialIdeal(g.universe(), std::vector<Face>(g.edges().begin(), g.edges().end()));
}

std::vector<int> maximum_cardinality_order(const Hypergraph& g) {
    if (!g.is_graph())
        throw Error(ErrorCode::InvalidInput, "maximum cardinality search needs a graph");
    const int n = g.vertex_count();
    std::vector<Face> adjacent(n);
    for (Face e : g.edges()) {
        const int a = e.min();
        const int b = e.without(a).min();
        adjacent[a] = adjacent[a].with(b);
        adjacent[b] = adjacent[b].with(a);
    }
    std::vector<int> weight(n, 0);
    std::vector<int> order;
    order.reserve(n);
    Face unnumbered = g.universe_face();
    while (!unnumbered.empty()) {
        int pick = -1;
        unnumbered.for_each([&](int v) {
            if (pick < 0 || weight[v] > weight[pick])
                pick = v;
        });
        order.push_back(pick);
        unnumbered = unnumbered.without(pick);
        (adjacent[pick] & unnumbered).for_each([&](int v) { ++weight[v]; });
    }
    return order;
}

bool is_chordal(const Hypergraph& g) {
    const auto order = maximum_cardinality_order(g);
    const int n = g.vertex_count();
    std::vector<Face> adjacent(n);
    for (Face e : g.edges()) {
        const int a = e.min();
        const int b = e.without(a).min();
        adjacent[a] = adjacent[a].with(b);
        adjacent[b] = adjacent[b].with(a);
    }
    // Reverse MCS order is a perfect elimination ordering iff G is chordal:
    // for each v, its neighbours numbered before it must form a clique. It
    // suffices that they all lie in the neighbourhood of the latest of them.
    std::vector<int> position(n);
    for (int k = 0; k < n; ++k)
        position[order[k]] = k;
    for (int k = 0; k < n; ++k) {
        const int v = order[k];
        Face earlier;
        adjacent[v].for_each([&](int u) {
            if (position[u] < k)
                earlier = earlier.with(u);
        });
        if (earlier.empty())
            continue;
        int parent = -1;
        earlier.for_each([&](int u) {
            if (parent < 0 || position[u] > position[parent])
                parent = u;
        });
        if (!(earlier.without(parent)).subset_of(adjacent[parent]))
            return false;
    }
    return true;
}

}  // namespace expanse
