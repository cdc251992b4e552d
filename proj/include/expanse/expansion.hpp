#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "expanse/complex.hpp"
#include "expanse/hypergraph.hpp"

namespace expanse {

/// Copy (base, copy) of a base vertex; copies are numbered from 1.
struct ExpandedVertex {
    int base = 0;
    int copy = 1;
    auto operator<=>(const ExpandedVertex&) const = default;
};

/**
 * Copy counts s_i ≥ 1, one per base vertex in universe order.
 *
 * The expanded universe lists (base, copy) pairs in lexicographic order, so
 * x_{i1} precedes x_{i2} and every copy of x_i precedes every copy of
 * x_{i+1}. Expanded names are "<base name>_<copy>".
 */
class ExpansionVector {
public:
    /// Throws InvalidExpansionVector if some entry is < 1.
    explicit ExpansionVector(std::vector<int> counts);

    static ExpansionVector ones(int n) { return ExpansionVector(std::vector<int>(n, 1)); }
    /// Parses "1,2,1,1,2".
    static ExpansionVector parse(std::string_view text);

    int size() const { return static_cast<int>(counts_.size()); }
    int operator[](int base) const { return counts_[base]; }
    const std::vector<int>& counts() const { return counts_; }
    int total() const { return offsets_.back(); }

    int ordinal(ExpandedVertex v) const { return offsets_[v.base] + v.copy - 1; }
    int ordinal(int base, int copy) const { return offsets_[base] + copy - 1; }
    ExpandedVertex vertex(int ordinal) const;
    /// All copies of `base` as a face of the expanded universe.
    Face copies_of(int base) const;

    /// Names of the expanded universe.
    std::vector<std::string> expanded_universe(const std::vector<std::string>& base_names) const;

    /// The expanded face F^{r_1,...,r_k}: `copies[t]` is the copy of the t-th
    /// smallest vertex of `face`.
    Face expanded_face(Face face, std::span<const int> copies) const;

    /// Copy tuples of `face` in lexicographic order (aligned with ascending
    /// base ordinals).
    std::vector<std::vector<int>> copy_tuples(Face face) const;

    /// Base face of an expanded face.
    Face base_of(Face expanded) const;

    std::string to_string() const;

    bool operator==(const ExpansionVector&) const = default;

private:
    std::vector<int> counts_;
    std::vector<int> offsets_;
};

/// Δ^(s): every facet replaced by all of its copy-choice facets.
SimplicialComplex expand_complex(const SimplicialComplex& complex, const ExpansionVector& s);

/// H^(s): copy tuples of every edge plus every pair of copies of one vertex.
Hypergraph expand_hypergraph(const Hypergraph& h, const ExpansionVector& s);

/**
 * lk_{Δ^(s)}(x_{i1}) = (lk_Δ(x_i))^(s without s_i).
 *
 * Both sides are computed independently and compared after mapping expanded
 * vertices back to (base, copy) pairs. Throws VertexNotInComplex when x_i
 * lies in no face.
 */
bool link_identity_check(const SimplicialComplex& complex, const ExpansionVector& s, int base = 0);

/**
 * del_{Δ^(s)}(x_{i1}) = Δ^(s with s_i - 1) when s_i > 1, and
 * (del_Δ(x_i))^(s without s_i) when s_i = 1, after relabelling copies
 * x_{ir} ↦ x_{i,r-1}.
 */
bool deletion_identity_check(const SimplicialComplex& complex, const ExpansionVector& s, int base = 0);

}  // namespace expanse
