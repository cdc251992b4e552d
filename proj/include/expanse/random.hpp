#pragma once

#include <cstdint>
#include <random>

#include "expanse/complex.hpp"
#include "expanse/expansion.hpp"
#include "expanse/hypergraph.hpp"

namespace expanse::random {

using Rng = std::mt19937_64;

/// Generator for trial `index` of a run seeded with `seed`.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [lo, hi], identical on every platform.
int uniform(Rng& rng, int lo, int hi);

/// Uniform random subset of {0..n-1} of the given size.
Face random_subset(Rng& rng, int n, int size);

/// `facet_count` candidate faces with sizes uniform in [min_size, max_size],
/// minimalized. Universe "x1".."xn".
SimplicialComplex random_complex(Rng& rng, int n, int facet_count, int min_size, int max_size);

/// `facet_count` candidate faces of exactly `size` vertices.
SimplicialComplex random_pure_complex(Rng& rng, int n, int facet_count, int size);

/// Random complex with parameters drawn from small default ranges.
SimplicialComplex random_small_complex(Rng& rng, int n);

/// Each pair is an edge with probability `edge_percent` / 100.
Hypergraph random_graph(Rng& rng, int n, int edge_percent);

/// Random simple hypergraph with edges of size 2..max_edge_size.
Hypergraph random_hypergraph(Rng& rng, int n, int edge_count, int max_edge_size);

/// Entries uniform in [1, s_max].
ExpansionVector random_expansion_vector(Rng& rng, int n, int s_max);

}  // namespace expanse::random
