#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "expanse/complex.hpp"
#include "expanse/ideal.hpp"

namespace expanse {

/// Coefficient field: ℚ, or GF(p) for a prime p < 2^31.
class FieldChoice {
public:
    enum class Kind { Rationals, PrimeField };

    static FieldChoice rationals() { return FieldChoice(Kind::Rationals, 0); }
    /// Throws InvalidInput unless p is a prime below 2^31.
    static FieldChoice prime_field(std::uint32_t p);
    /// "q" or "gf:<p>".
    static FieldChoice parse(std::string_view text);

    Kind kind() const { return kind_; }
    std::uint32_t characteristic() const { return p_; }
    std::string to_string() const;

    bool operator==(const FieldChoice&) const = default;

private:
    FieldChoice(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

/// Ranks of reduced homology H̃_d for d = -1, ..., dim.
class HomologyRanks {
public:
    HomologyRanks() = default;
    explicit HomologyRanks(std::vector<std::uint64_t> by_dim) : ranks_(std::move(by_dim)) {}

    /// dim_K H̃_d; zero outside the stored range.
    std::uint64_t operator[](int d) const {
        const int k = d + 1;
        return (k < 0 || k >= static_cast<int>(ranks_.size())) ? 0 : ranks_[k];
    }
    int top_dimension() const { return static_cast<int>(ranks_.size()) - 2; }
    bool acyclic() const;
    /// Σ_d (-1)^d rank H̃_d
    std::int64_t euler_characteristic() const;
    const std::vector<std::uint64_t>& raw() const { return ranks_; }

    bool operator==(const HomologyRanks&) const = default;

private:
    std::vector<std::uint64_t> ranks_;
};

struct HomologyOptions {
    std::size_t face_cap = std::size_t{1} << 18;
};

/// Sparse column of an integer matrix: (row, coefficient), rows ascending.
using SparseColumn = std::vector<std::pair<std::int32_t, std::int64_t>>;

/// Exact rank over the field. Over ℚ this is fraction-free elimination on
/// checked 64-bit integers, redone with GMP integers on overflow.
std::size_t matrix_rank(std::vector<SparseColumn> columns, FieldChoice field);

/// Reduced homology of the complex generated by `facets` (nonempty list).
HomologyRanks reduced_homology(std::span<const Face> facets, FieldChoice field,
                               const HomologyOptions& options = {});

HomologyRanks reduced_homology(const SimplicialComplex& complex, FieldChoice field,
                               const HomologyOptions& options = {});

/// Reisner's criterion: H̃_i(lk F) = 0 for every face F and i < dim lk F.
/// Faces are visited by increasing size, stopping at the first failure.
bool is_cohen_macaulay(const SimplicialComplex& complex, FieldChoice field, const HomologyOptions& options = {});

struct HochsterOptions {
    int max_variables = 14;
    HomologyOptions homology;
};

/**
 * Graded Betti numbers of the ideal I_Δ by Hochster's formula,
 * β_{i,j}(I_Δ) = Σ_{|W| = j} dim H̃_{j-i-2}(Δ_W).
 *
 * The sum over the 2^n subsets W runs in parallel with a per-thread cache
 * of restriction homology; the result does not depend on thread count.
 */
BettiTable betti_numbers_hochster(const SimplicialComplex& complex, FieldChoice field,
                                  const HochsterOptions& options = {});

/// Same table for the ideal, via the complex whose Stanley–Reisner ideal it is.
BettiTable betti_numbers_hochster(const SquarefreeMonomialIdeal& ideal, FieldChoice field,
                                  const HochsterOptions& options = {});

/// Single-threaded, uncached reference for betti_numbers_hochster.
BettiTable betti_numbers_hochster_serial(const SimplicialComplex& complex, FieldChoice field,
                                         const HochsterOptions& options = {});

/// Homological invariants of R/I_Δ with R = K[universe].
struct QuotientInvariants {
    BettiTable quotient_betti;  ///< β_{i,j}(R/I_Δ)
    int projective_dimension = 0;
    int regularity = 0;         ///< reg(R/I_Δ); reg(I_Δ) = this + 1 when I_Δ ≠ 0
    int depth = 0;              ///< variables − pd (Auslander–Buchsbaum)
    int krull_dimension = 0;    ///< dim Δ + 1
};

QuotientInvariants quotient_invariants(const SimplicialComplex& complex, FieldChoice field,
                                       const HochsterOptions& options = {});

/// reg(I) from reg(R/I); I must be nonzero.
inline int ideal_regularity_from_quotient(int quotient_regularity) { return quotient_regularity + 1; }

}  // namespace expanse
