#pragma once

#include <optional>
#include <vector>

#include "expanse/complex.hpp"
#include "expanse/expansion.hpp"
#include "expanse/homology.hpp"
#include "expanse/ideal.hpp"
#include "expanse/structure.hpp"

namespace expanse {

/// Generated by the minimal nonfaces of Δ.
SquarefreeMonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

/// The complex whose Stanley–Reisner ideal is `ideal`; void for the unit ideal.
SimplicialComplex stanley_reisner_complex(const SquarefreeMonomialIdeal& ideal);

/// (I_Δ)^∨ = (x^{F^c} : F a facet of Δ).
SquarefreeMonomialIdeal alexander_dual_ideal(const SimplicialComplex& complex);

/// I^∨ for I = I_Δ. Throws InvalidInput on the zero or unit ideal.
SquarefreeMonomialIdeal alexander_dual_ideal(const SquarefreeMonomialIdeal& ideal);

/// Minimal generators of (prefix) : f, as supports g ∖ f.
std::vector<Face> colon_by_monomial(std::span<const Face> prefix, Face f);

/**
 * An order on the minimal generators together with set(f_t), the variables
 * generating (f_1, ..., f_{t-1}) : f_t. `sets[0]` is empty.
 */
struct LinearQuotientsCertificate {
    std::vector<Face> order;
    std::vector<Face> sets;
};

/// Certificate if every colon of `order` is generated by variables.
/// Throws NotAPermutation unless `order` lists the generators exactly once.
std::optional<LinearQuotientsCertificate> check_linear_quotients(const SquarefreeMonomialIdeal& ideal,
                                                                 std::span<const Face> order);

struct LinearQuotientsSearchOptions {
    std::size_t max_generators = 12;
    std::size_t max_nodes = 1'000'000;
};

/// Greedy by generator index with backtracking. Throws TooLarge above the
/// generator cap and BudgetExceeded when the node budget runs out.
std::optional<LinearQuotientsCertificate> find_linear_quotients_order(const SquarefreeMonomialIdeal& ideal,
                                                                      const LinearQuotientsSearchOptions& options = {});

/// β_{i,j}(I) = Σ_{deg f_t = j - i} C(|set(f_t)|, i).
BettiTable betti_from_linear_quotients(const LinearQuotientsCertificate& certificate);

/// Generators x^{F^c} of (I_Δ)^∨ in the order of a shelling of Δ.
std::vector<Face> complement_order(const SimplicialComplex& complex, const ShellingOrder& shelling);

/// n − min facet size.
int bight(const SimplicialComplex& complex);

/// Largest minimal vertex cover of the generator supports (the definition).
int bight_by_covers(const SquarefreeMonomialIdeal& ideal);

/**
 * Right-hand side of the set identity for the expanded facet F_i^{r}:
 * {x_{i_ℓ r_ℓ} : x_{i_ℓ} ∈ set(x^{F_i^c})} ∪ {x_{i_t r_t} : r_t > 1}, where
 * the base sets come from the dual of Δ in the shelling's complement order.
 * `facet_index` is the position of F_i in `shelling`. Throws
 * TheoremViolation when it differs from the set computed directly on the
 * dual of Δ^(s) in the expansion-shelling order.
 */
Face set_identity_expansion(const SimplicialComplex& complex, const ShellingOrder& shelling,
                            const ExpansionVector& s, std::size_t facet_index, std::span<const int> copies);

/// Same identity for every expanded facet; returns the number checked.
std::size_t check_set_identity_all(const SimplicialComplex& complex, const ShellingOrder& shelling,
                                   const ExpansionVector& s);

struct ExpansionPdDepth {
    int pd = 0;                ///< pd(R/I_Δ), Hochster
    int depth = 0;             ///< depth(R/I_Δ)
    int expanded_pd = 0;       ///< pd(R'/I_{Δ^(s)}), Hochster
    int expanded_depth = 0;
    int bight = 0;             ///< n − k
    int expanded_bight = 0;    ///< Σ s_i − k
    bool pd_formula_holds = false;     ///< expanded_pd = pd + Σ s_i − n
    bool depth_formula_holds = false;  ///< expanded_depth = depth
    bool bight_matches = false;        ///< pd = bight on both sides
};

/// Throws NotShellable when no shelling of Δ exists.
ExpansionPdDepth expansion_pd_depth(const SimplicialComplex& complex, const ExpansionVector& s,
                                    FieldChoice field = FieldChoice::rationals(), const HochsterOptions& options = {},
                                    const SearchBudget& budget = {});

struct ExpansionReg {
    int reg = 0;               ///< reg(R'/I_{Δ^(s)}) via Terai and linear quotients
    int reg_hochster = 0;      ///< the same read off the Hochster table
    int base_reg = 0;          ///< reg(R/I_Δ) via Terai and linear quotients
    int max_lambda = 0;        ///< max_i |{x_ℓ ∈ F_i : s_ℓ > 1}|
    int bound = 0;             ///< base_reg + max_lambda
    bool all_copies_above_one = false;
    bool equality_case = false;        ///< all s_i > 1 and reg = dim Δ + 1
    bool routes_agree = false;         ///< reg == reg_hochster
    bool bound_holds = false;          ///< reg ≤ bound
};

/// Throws NotShellable when no shelling of Δ exists.
ExpansionReg expansion_reg(const SimplicialComplex& complex, const ExpansionVector& s,
                           FieldChoice field = FieldChoice::rationals(), const HochsterOptions& options = {},
                           const SearchBudget& budget = {});

}  // namespace expanse
