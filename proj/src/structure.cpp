#include "expanse/structure.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>
#include <unordered_set>

#include "expanse/error.hpp"

namespace expanse {

const char* to_string(Decision d) {
    switch (d) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    case Decision::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

struct OutOfBudget {};

bool is_facet_of(std::span<const Face> sorted_facets, Face face) {
    return std::binary_search(sorted_facets.begin(), sorted_facets.end(), face);
}

bool shedding_by_link(std::span<const Face> facets, int vertex) {
    const Face x = Face{}.with(vertex);
    const auto lk = facets::link(facets, x);
    const auto del = facets::deletion(facets, x);
    return std::none_of(lk.begin(), lk.end(), [&](Face f) { return is_facet_of(del, f); });
}

bool shedding_by_deletion(std::span<const Face> facets, int vertex) {
    const auto del = facets::deletion(facets, Face{}.with(vertex));
    return std::all_of(del.begin(), del.end(), [&](Face f) { return is_facet_of(facets, f); });
}

class VdSolver {
public:
    explicit VdSolver(std::size_t max_nodes) : max_nodes_(max_nodes) {}

    /// nullptr when not vertex decomposable.
    std::shared_ptr<const SheddingTree> solve(const std::vector<Face>& facets) {
        if (facets.size() == 1) {
            auto leaf = std::make_shared<SheddingTree>();
            leaf->simplex = facets.front();
            return leaf;
        }
        if (auto it = memo_.find(facets); it != memo_.end())
            return it->second;
        if (++nodes_ > max_nodes_)
            throw OutOfBudget{};

        std::shared_ptr<const SheddingTree> result;
        const Face support = facets::support(facets);
        for (int v : support.elements()) {
            if (!shedding_by_deletion(facets, v))
                continue;
            const Face x = Face{}.with(v);
            auto link_tree = solve(facets::link(facets, x));
            if (!link_tree)
                continue;
            auto deletion_tree = solve(facets::deletion(facets, x));
            if (!deletion_tree)
                continue;
            auto node = std::make_shared<SheddingTree>();
            node->vertex = v;
            node->link = std::move(link_tree);
            node->deletion = std::move(deletion_tree);
            result = std::move(node);
            break;
        }
        memo_.emplace(facets, result);
        return result;
    }

    std::size_t nodes() const { return nodes_; }

private:
    std::size_t max_nodes_;
    std::size_t nodes_ = 0;
    std::unordered_map<std::vector<Face>, std::shared_ptr<const SheddingTree>, FaceListHash> memo_;
};

void require_permutation(const SimplicialComplex& complex, const ShellingOrder& order) {
    std::vector<Face> sorted = order.facets;
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), complex.facets().begin(), complex.facets().end()))
        throw Error(ErrorCode::NotAPermutation, "order must list every facet exactly once");
}

/// Whether `next` may follow the facets listed in `prefix`.
bool extends_shelling(std::span<const Face> prefix, Face next) {
    Face shared_ridges;  // vertices v with next ∖ F_ℓ = {v} for some earlier ℓ
    for (Face earlier : prefix) {
        const Face diff = next - earlier;
        if (diff.size() == 1)
            shared_ridges = shared_ridges | diff;
    }
    return std::all_of(prefix.begin(), prefix.end(),
                       [&](Face earlier) { return (next - earlier).intersects(shared_ridges); });
}

class ShellingSolver {
public:
    ShellingSolver(std::span<const Face> facets, std::size_t max_nodes) : facets_(facets), max_nodes_(max_nodes) {}

    bool solve() {
        order_.clear();
        return extend(0);
    }

    const std::vector<Face>& order() const { return order_; }
    std::size_t nodes() const { return nodes_; }

private:
    bool extend(std::uint64_t placed) {
        if (order_.size() == facets_.size())
            return true;
        if (dead_.contains(placed))
            return false;
        if (++nodes_ > max_nodes_)
            throw OutOfBudget{};
        for (std::size_t k = 0; k < facets_.size(); ++k) {
            if ((placed >> k) & 1U)
                continue;
            if (!extends_shelling(order_, facets_[k]))
                continue;
            order_.push_back(facets_[k]);
            if (extend(placed | (std::uint64_t{1} << k)))
                return true;
            order_.pop_back();
        }
        dead_.insert(placed);
        return false;
    }

    std::span<const Face> facets_;
    std::size_t max_nodes_;
    std::size_t nodes_ = 0;
    std::vector<Face> order_;
    std::unordered_set<std::uint64_t> dead_;
};

}  // namespace

bool is_shedding_vertex(const SimplicialComplex& complex, int vertex) {
    if (complex.is_void() || vertex < 0 || vertex >= complex.vertex_count() ||
        !complex.vertex_support().contains(vertex))
        throw Error(ErrorCode::VertexNotInComplex, "vertex lies in no face");
    const bool by_link = shedding_by_link(complex.facets(), vertex);
    assert(by_link == shedding_by_deletion(complex.facets(), vertex));
    return by_link;
}

bool is_shedding_vertex_by_deletion(const SimplicialComplex& complex, int vertex) {
    if (complex.is_void() || vertex < 0 || vertex >= complex.vertex_count() ||
        !complex.vertex_support().contains(vertex))
        throw Error(ErrorCode::VertexNotInComplex, "vertex lies in no face");
    return shedding_by_deletion(complex.facets(), vertex);
}

VertexDecomposition decide_vertex_decomposable(const SimplicialComplex& complex, const SearchBudget& budget) {
    if (complex.is_void())
        throw Error(ErrorCode::VoidComplex, "vertex decomposability of the void complex");
    VdSolver solver(budget.max_nodes);
    VertexDecomposition out;
    try {
        out.witness = solver.solve(std::vector<Face>(complex.facets().begin(), complex.facets().end()));
        out.decision = out.witness ? Decision::Yes : Decision::No;
    } catch (const OutOfBudget&) {
        out.decision = Decision::Unknown;
    }
    out.nodes = solver.nodes();
    return out;
}

bool is_vertex_decomposable(const SimplicialComplex& complex, const SearchBudget& budget) {
    const auto result = decide_vertex_decomposable(complex, budget);
    if (result.decision == Decision::Unknown)
        throw Error(ErrorCode::BudgetExceeded, "vertex decomposability search exceeded " +
                                                   std::to_string(budget.max_nodes) + " nodes");
    return result.decision == Decision::Yes;
}

bool is_shelling(const SimplicialComplex& complex, const ShellingOrder& order) {
    require_permutation(complex, order);
    const std::span<const Face> all(order.facets);
    for (std::size_t j = 1; j < all.size(); ++j)
        if (!extends_shelling(all.first(j), all[j]))
            return false;
    return true;
}

ShellingSearch search_shelling(const SimplicialComplex& complex, const SearchBudget& budget) {
    if (complex.is_void())
        throw Error(ErrorCode::VoidComplex, "shelling of the void complex");
    if (complex.facet_count() > budget.max_facets || complex.facet_count() > 64)
        throw Error(ErrorCode::TooLarge, std::to_string(complex.facet_count()) + " facets exceed the shelling cap of " +
                                             std::to_string(budget.max_facets));
    ShellingSolver solver(complex.facets(), budget.max_nodes);
    ShellingSearch out;
    try {
        if (solver.solve()) {
            out.decision = Decision::Yes;
            out.order = ShellingOrder{solver.order()};
        } else {
            out.decision = Decision::No;
        }
    } catch (const OutOfBudget&) {
        out.decision = Decision::Unknown;
    }
    out.nodes = solver.nodes();
    return out;
}

std::optional<ShellingOrder> find_shelling(const SimplicialComplex& complex, const SearchBudget& budget) {
    auto result = search_shelling(complex, budget);
    if (result.decision == Decision::Unknown)
        throw Error(ErrorCode::BudgetExceeded, "shelling search exceeded " + std::to_string(budget.max_nodes) +
                                                   " nodes");
    return result.order;
}

ShellingOrder expansion_shelling(const SimplicialComplex& complex, const ShellingOrder& order,
                                 const ExpansionVector& s) {
    bool valid = false;
    try {
        valid = is_shelling(complex, order);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotAPermutation)
            throw;
    }
    if (!valid)
        throw Error(ErrorCode::NotAShelling, "input order is not a shelling");
    const auto expanded = expand_complex(complex, s);
    ShellingOrder out;
    out.facets.reserve(expanded.facet_count());
    for (Face f : order.facets)
        for (const auto& tuple : s.copy_tuples(f))
            out.facets.push_back(s.expanded_face(f, tuple));
    if (!is_shelling(expanded, out))
        throw Error(ErrorCode::TheoremViolation, "induced order on the expansion is not a shelling");
    return out;
}

OneDimensionalFlags one_dim_equivalences(const SimplicialComplex& complex, FieldChoice field,
                                         const SearchBudget& budget) {
    if (complex.is_void() || dim(complex) != 1 || !is_pure(complex))
        throw Error(ErrorCode::NotPureOneDimensional, "expected a pure one-dimensional complex");
    OneDimensionalFlags flags;
    flags.connected = is_connected(complex);
    flags.vertex_decomposable = is_vertex_decomposable(complex, budget);
    flags.shellable = find_shelling(complex, budget).has_value();
    flags.cohen_macaulay = is_cohen_macaulay(complex, field);
    return flags;
}

}  // namespace expanse
