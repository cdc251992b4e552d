#include "expanse/random.hpp"

#include <algorithm>
#include <numeric>

namespace expanse::random {

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32U)};
    return Rng(seq);
}

int uniform(Rng& rng, int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(rng() % span);
}

Face random_subset(Rng& rng, int n, int size) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    Face out;
    for (int k = 0; k < size && k < n; ++k) {
        const int pick = uniform(rng, k, n - 1);
        std::swap(pool[k], pool[pick]);
        out = out.with(pool[k]);
    }
    return out;
}

SimplicialComplex random_complex(Rng& rng, int n, int facet_count, int min_size, int max_size) {
    std::vector<Face> candidates;
    candidates.reserve(facet_count);
    for (int k = 0; k < facet_count; ++k)
        candidates.push_back(random_subset(rng, n, uniform(rng, min_size, max_size)));
    return SimplicialComplex::from_faces(SimplicialComplex::numbered_universe(n, "x"), std::move(candidates));
}

SimplicialComplex random_pure_complex(Rng& rng, int n, int facet_count, int size) {
    return random_complex(rng, n, facet_count, size, size);
}

SimplicialComplex random_small_complex(Rng& rng, int n) {
    const int facets = uniform(rng, 1, std::max(1, std::min(6, n + 1)));
    const int lo = uniform(rng, 1, std::max(1, n - 1));
    const int hi = uniform(rng, lo, std::max(lo, std::min(n, lo + 2)));
    if (uniform(rng, 0, 2) == 0)
        return random_pure_complex(rng, n, facets, lo);
    return random_complex(rng, n, facets, lo, hi);
}

Hypergraph random_graph(Rng& rng, int n, int edge_percent) {
    std::vector<Face> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (uniform(rng, 0, 99) < edge_percent)
                edges.push_back(Face{}.with(a).with(b));
    return Hypergraph(SimplicialComplex::numbered_universe(n, "x"), std::move(edges));
}

Hypergraph random_hypergraph(Rng& rng, int n, int edge_count, int max_edge_size) {
    std::vector<Face> edges;
    const int top = std::max(2, std::min(max_edge_size, n));
    for (int k = 0; k < edge_count && n >= 2; ++k)
        edges.push_back(random_subset(rng, n, uniform(rng, 2, top)));
    return Hypergraph::minimalized(SimplicialComplex::numbered_universe(n, "x"), std::move(edges));
}

ExpansionVector random_expansion_vector(Rng& rng, int n, int s_max) {
    std::vector<int> counts(n);
    for (int& c : counts)
        c = uniform(rng, 1, s_max);
    return ExpansionVector(std::move(counts));
}

}  // namespace expanse::random
