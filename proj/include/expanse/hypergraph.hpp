#pragma once

#include <string>
#include <vector>

#include "expanse/complex.hpp"
#include "expanse/ideal.hpp"

namespace expanse {

/**
 * A simple hypergraph: every edge has at least two vertices and no edge
 * contains another. A graph is a hypergraph whose edges all have size two.
 */
class Hypergraph {
public:
    /// Strict constructor: throws InvalidHypergraph on an edge of size < 2,
    /// a repeated edge, or two comparable edges.
    Hypergraph(std::vector<std::string> universe, std::vector<Face> edges);

    /// Permissive loader: drops repeated and non-minimal edges and reports
    /// what was dropped in `warnings`. Edges of size < 2 still throw.
    static Hypergraph minimalized(std::vector<std::string> universe, std::vector<Face> edges,
                                  std::vector<std::string>* warnings = nullptr);

    static Hypergraph from_named_edges(std::vector<std::string> universe,
                                       const std::vector<std::vector<std::string>>& edges);

    const std::vector<std::string>& universe() const { return universe_; }
    int vertex_count() const { return static_cast<int>(universe_.size()); }
    Face universe_face() const { return Face::range(vertex_count()); }
    std::span<const Face> edges() const { return edges_; }
    std::vector<std::string> names(Face face) const;

    bool is_graph() const;
    bool has_edge(Face edge) const;

    bool operator==(const Hypergraph&) const = default;

private:
    std::vector<std::string> universe_;
    std::vector<Face> edges_;
};

/// Complex of all subsets containing no edge.
SimplicialComplex independence_complex(const Hypergraph& h);

/// (x_i x_j : {x_i, x_j} ∈ E); valid for hypergraphs too (edge supports).
SquarefreeMonomialIdeal edge_ideal(const Hypergraph& g);

/// No induced cycle of length ≥ 4, decided by maximum cardinality search
/// followed by a perfect-elimination check. Throws InvalidInput on a
/// hypergraph that is not a graph.
bool is_chordal(const Hypergraph& g);

/// The maximum-cardinality-search order whose reverse is checked as a
/// perfect elimination ordering.
std::vector<int> maximum_cardinality_order(const Hypergraph& g);

}  // namespace expanse
