#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "expanse/complex.hpp"
#include "expanse/expansion.hpp"
#include "expanse/homology.hpp"

namespace expanse {

/// Outcome of a budgeted exact search.
enum class Decision { Yes, No, Unknown };

const char* to_string(Decision d);

/// An ordering of the facets of a complex.
struct ShellingOrder {
    std::vector<Face> facets;
    bool operator==(const ShellingOrder&) const = default;
};

/**
 * Witness that a complex is vertex decomposable. A leaf (`vertex < 0`) is a
 * simplex with facet `simplex`; an inner node names the shedding vertex and
 * the witnesses for its link and deletion. Ordinals refer to the universe of
 * the complex the decision was made on.
 */
struct SheddingTree {
    int vertex = -1;
    Face simplex;
    std::shared_ptr<const SheddingTree> link;
    std::shared_ptr<const SheddingTree> deletion;
};

struct VertexDecomposition {
    Decision decision = Decision::Unknown;
    std::shared_ptr<const SheddingTree> witness;  ///< set when decision is Yes
    std::size_t nodes = 0;                        ///< recursion nodes visited
};

struct SearchBudget {
    std::size_t max_nodes = 1'000'000;
    std::size_t max_facets = 10;  ///< find_shelling refuses larger inputs
};

/// No facet of lk(x) is a facet of del(x).
bool is_shedding_vertex(const SimplicialComplex& complex, int vertex);

/// Every facet of del(x) is a facet of Δ (equivalent to the link form).
bool is_shedding_vertex_by_deletion(const SimplicialComplex& complex, int vertex);

/**
 * Exact recursive decision, memoized on facet lists, trying shedding
 * candidates in ordinal order. Returns Unknown once `budget.max_nodes`
 * recursion nodes have been spent.
 */
VertexDecomposition decide_vertex_decomposable(const SimplicialComplex& complex, const SearchBudget& budget = {});

/// Throws BudgetExceeded instead of returning Unknown.
bool is_vertex_decomposable(const SimplicialComplex& complex, const SearchBudget& budget = {});

/// For all i < j there are v ∈ F_j ∖ F_i and ℓ < j with F_j ∖ F_ℓ = {v}.
/// Throws NotAPermutation unless `order` lists every facet exactly once.
bool is_shelling(const SimplicialComplex& complex, const ShellingOrder& order);

struct ShellingSearch {
    Decision decision = Decision::Unknown;
    std::optional<ShellingOrder> order;
    std::size_t nodes = 0;
};

/// Backtracking over facet orders in canonical order, pruning any prefix
/// whose newest facet fails against the earlier ones and any prefix set
/// already known to be a dead end. Throws TooLarge above `budget.max_facets`.
ShellingSearch search_shelling(const SimplicialComplex& complex, const SearchBudget& budget = {});

/// Throws BudgetExceeded instead of returning Unknown.
std::optional<ShellingOrder> find_shelling(const SimplicialComplex& complex, const SearchBudget& budget = {});

/**
 * The shelling of Δ^(s) induced by a shelling of Δ: parent facet position
 * first, then copy tuples lexicographically. Throws NotAShelling if `order`
 * is not a shelling of Δ and TheoremViolation if the result fails
 * is_shelling on the expansion.
 */
ShellingOrder expansion_shelling(const SimplicialComplex& complex, const ShellingOrder& order,
                                 const ExpansionVector& s);

struct OneDimensionalFlags {
    bool connected = false;
    bool vertex_decomposable = false;
    bool shellable = false;
    bool cohen_macaulay = false;

    bool all_equal() const {
        return connected == vertex_decomposable && vertex_decomposable == shellable &&
               shellable == cohen_macaulay;
    }
};

/// Each flag from its own decider. Throws NotPureOneDimensional.
OneDimensionalFlags one_dim_equivalences(const SimplicialComplex& complex, FieldChoice field = FieldChoice::rationals(),
                                         const SearchBudget& budget = {.max_nodes = 1'000'000, .max_facets = 64});

}  // namespace expanse
