#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "expanse/face.hpp"

namespace expanse {

/// A named vertex and its position in the universe's total order.
struct Vertex {
    std::string name;
    int ordinal = 0;
};

/**
 * A finite simplicial complex stored by its facets.
 *
 * The universe is an ordered list of distinct vertex names; faces are bit
 * sets over universe ordinals. Facets are kept pairwise incomparable and
 * sorted lexicographically, so two complexes are equal iff their universes
 * and facet lists are equal. The complex {∅} has the single facet ∅; the
 * void complex (no faces at all) has no facets and is a distinct state.
 */
class SimplicialComplex {
public:
    /// The complex generated by `candidates`; non-maximal and repeated
    /// candidates are dropped. An empty candidate list yields the void complex.
    static SimplicialComplex from_faces(std::vector<std::string> universe, std::vector<Face> candidates);

    /// Same, with faces given by vertex names.
    static SimplicialComplex from_facets(std::vector<std::string> universe,
                                         const std::vector<std::vector<std::string>>& candidates);

    /// Takes `facets` as the facet list without minimalizing; throws
    /// TheoremViolation if two of them are comparable or repeated.
    static SimplicialComplex from_incomparable_faces(std::vector<std::string> universe, std::vector<Face> facets);

    static SimplicialComplex void_complex(std::vector<std::string> universe);

    /// The full simplex on `universe`.
    static SimplicialComplex simplex(std::vector<std::string> universe);

    /// Universe of `n` vertices named "1", ..., "n".
    static std::vector<std::string> numbered_universe(int n, std::string_view prefix = "");

    const std::vector<std::string>& universe() const { return universe_; }
    int vertex_count() const { return static_cast<int>(universe_.size()); }
    Face universe_face() const { return Face::range(vertex_count()); }

    std::span<const Face> facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }
    bool is_void() const { return facets_.empty(); }

    /// Vertices lying in at least one face.
    Face vertex_support() const { return facets::support(facets_); }

    bool contains(Face face) const { return facets::contains_face(facets_, face); }

    int ordinal(std::string_view name) const;
    Vertex vertex(int ordinal) const { return {universe_.at(ordinal), ordinal}; }
    Face face(const std::vector<std::string>& names) const;
    std::vector<std::string> names(Face face) const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    SimplicialComplex(std::vector<std::string> universe, std::vector<Face> facets)
        : universe_(std::move(universe)), facets_(std::move(facets)) {}

    std::vector<std::string> universe_;
    std::vector<Face> facets_;
};

/// Throws TooManyVertices or InvalidInput (duplicate names) on a bad universe.
void validate_universe(const std::vector<std::string>& universe);

/// Faces G with G ∩ F = ∅ and G ∪ F ∈ Δ, over the universe minus F.
SimplicialComplex link(const SimplicialComplex& complex, Face face);

/// Faces G ∈ Δ with G ∩ F = ∅, over the same universe.
SimplicialComplex deletion(const SimplicialComplex& complex, Face face);

/// Restriction Δ_W, over the universe W (in ordinal order).
SimplicialComplex induced(const SimplicialComplex& complex, Face w);

int dim(const SimplicialComplex& complex);
bool is_pure(const SimplicialComplex& complex);
bool is_simplex(const SimplicialComplex& complex);
bool is_connected(const SimplicialComplex& complex);

/// {X ∖ F : F ∉ Δ}. Returns the void complex when Δ is the full simplex.
SimplicialComplex alexander_dual(const SimplicialComplex& complex);

/// Number of faces of each dimension -1, 0, ..., dim.
std::vector<std::uint64_t> f_vector(const SimplicialComplex& complex);

/// Σ_d (-1)^d f_d over all faces including ∅ (dimension -1).
std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex);

/// Same facets after renaming vertices: compares facets as sets of names,
/// ignoring universe order and vertices that lie in no face.
bool same_faces_by_name(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace expanse
