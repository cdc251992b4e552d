#include "expanse/ideals.hpp"

#include <algorithm>
#include <unordered_set>

#include "expanse/error.hpp"

namespace expanse {

SquarefreeMonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
    if (complex.is_void())
        throw Error(ErrorCode::VoidComplex, "the void complex has no Stanley-Reisner ideal");
    const Face all = complex.universe_face();
    std::vector<Face> complements;
    complements.reserve(complex.facet_count());
    for (Face f : complex.facets())
        complements.push_back(all - f);
    // N is a nonface iff it meets the complement of every facet.
    return SquarefreeMonomialIdeal(complex.universe(), facets::minimal_transversals(complements));
}

SimplicialComplex stanley_reisner_complex(const SquarefreeMonomialIdeal& ideal) {
    auto facets = facets::from_minimal_nonfaces(ideal.generators(), ideal.variables_face());
    if (facets.empty())
        return SimplicialComplex::void_complex(ideal.variables());
    return SimplicialComplex::from_faces(ideal.variables(), std::move(facets));
}

SquarefreeMonomialIdeal alexander_dual_ideal(const SimplicialComplex& complex) {
    if (complex.is_void())
        throw Error(ErrorCode::VoidComplex, "the void complex has no Alexander dual ideal");
    const Face all = complex.universe_face();
    std::vector<Face> generators;
    generators.reserve(complex.facet_count());
    for (Face f : complex.facets())
        generators.push_back(all - f);
    SquarefreeMonomialIdeal dual(complex.universe(), generators);
    if (dual.generator_count() != generators.size())
        throw Error(ErrorCode::TheoremViolation, "facet complements are not minimal generators");
    return dual;
}

SquarefreeMonomialIdeal alexander_dual_ideal(const SquarefreeMonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit())
        throw Error(ErrorCode::InvalidInput, "Alexander duality needs a proper nonzero ideal");
    return alexander_dual_ideal(stanley_reisner_complex(ideal));
}

std::vector<Face> colon_by_monomial(std::span<const Face> prefix, Face f) {
    std::vector<Face> out;
    out.reserve(prefix.size());
    for (Face g : prefix)
        out.push_back(g - f);
    facets::minimalize(out);
    return out;
}

namespace {

/// Variables generating the colon, or nullopt if some minimal generator
/// of the colon is not a variable.
std::optional<Face> linear_colon(std::span<const Face> prefix, Face f) {
    Face vars;
    for (Face g : colon_by_monomial(prefix, f)) {
        if (g.size() != 1)
            return std::nullopt;
        vars = vars | g;
    }
    return vars;
}

struct OutOfBudget {};

class LinearQuotientsSolver {
public:
    LinearQuotientsSolver(std::span<const Face> generators, std::size_t max_nodes)
        : generators_(generators), max_nodes_(max_nodes) {}

    bool solve() { return extend(0); }

    LinearQuotientsCertificate certificate() const { return {order_, sets_}; }

private:
    bool extend(std::uint64_t placed) {
        if (order_.size() == generators_.size())
            return true;
        if (dead_.contains(placed))
            return false;
        if (++nodes_ > max_nodes_)
            throw OutOfBudget{};
        for (std::size_t k = 0; k < generators_.size(); ++k) {
            if ((placed >> k) & 1U)
                continue;
            const auto vars = linear_colon(order_, generators_[k]);
            if (!vars)
                continue;
            order_.push_back(generators_[k]);
            sets_.push_back(*vars);
            if (extend(placed | (std::uint64_t{1} << k)))
                return true;
            order_.pop_back();
            sets_.pop_back();
        }
        dead_.insert(placed);
        return false;
    }

    std::span<const Face> generators_;
    std::size_t max_nodes_;
    std::size_t nodes_ = 0;
    std::vector<Face> order_;
    std::vector<Face> sets_;
    std::unordered_set<std::uint64_t> dead_;
};

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    std::uint64_t r = 1;
    for (int t = 1; t <= k; ++t)
        r = r * static_cast<std::uint64_t>(n - k + t) / static_cast<std::uint64_t>(t);
    return r;
}

ShellingOrder require_shelling(const SimplicialComplex& complex, const SearchBudget& budget) {
    auto shelling = find_shelling(complex, budget);
    if (!shelling)
        throw Error(ErrorCode::NotShellable, "the formula is only claimed for shellable complexes");
    return *shelling;
}

/// pd of the dual of Δ^(s) from the expansion shelling, i.e. reg(R'/I_{Δ^(s)}).
int dual_pd_via_linear_quotients(const SimplicialComplex& complex, const ShellingOrder& shelling) {
    const auto dual = alexander_dual_ideal(complex);
    const auto cert = check_linear_quotients(dual, complement_order(complex, shelling));
    if (!cert)
        throw Error(ErrorCode::TheoremViolation, "shelling complement order has no linear quotients");
    return std::max(0, betti_from_linear_quotients(*cert).projective_dimension());
}

}  // namespace

std::optional<LinearQuotientsCertificate> check_linear_quotients(const SquarefreeMonomialIdeal& ideal,
                                                                 std::span<const Face> order) {
    std::vector<Face> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), ideal.generators().begin(), ideal.generators().end()))
        throw Error(ErrorCode::NotAPermutation, "order must list every generator exactly once");
    LinearQuotientsCertificate cert;
    cert.order.assign(order.begin(), order.end());
    cert.sets.reserve(order.size());
    for (std::size_t t = 0; t < order.size(); ++t) {
        const auto vars = linear_colon(order.first(t), order[t]);
        if (!vars)
            return std::nullopt;
        cert.sets.push_back(*vars);
    }
    return cert;
}

std::optional<LinearQuotientsCertificate> find_linear_quotients_order(const SquarefreeMonomialIdeal& ideal,
                                                                      const LinearQuotientsSearchOptions& options) {
    if (ideal.generator_count() > options.max_generators || ideal.generator_count() > 64)
        throw Error(ErrorCode::TooLarge, std::to_string(ideal.generator_count()) +
                                             " generators exceed the search cap of " +
                                             std::to_string(options.max_generators));
    LinearQuotientsSolver solver(ideal.generators(), options.max_nodes);
    try {
        if (solver.solve())
            return solver.certificate();
        return std::nullopt;
    } catch (const OutOfBudget&) {
        throw Error(ErrorCode::BudgetExceeded, "linear quotients search exceeded " +
                                                   std::to_string(options.max_nodes) + " nodes");
    }
}

BettiTable betti_from_linear_quotients(const LinearQuotientsCertificate& certificate) {
    BettiTable table;
    for (std::size_t t = 0; t < certificate.order.size(); ++t) {
        const int degree = certificate.order[t].size();
        const int q = certificate.sets[t].size();
        for (int i = 0; i <= q; ++i)
            table.add(i, degree + i, binomial(q, i));
    }
    return table;
}

std::vector<Face> complement_order(const SimplicialComplex& complex, const ShellingOrder& shelling) {
    const Face all = complex.universe_face();
    std::vector<Face> out;
    out.reserve(shelling.facets.size());
    for (Face f : shelling.facets)
        out.push_back(all - f);
    return out;
}

int bight(const SimplicialComplex& complex) {
    if (complex.is_void())
        throw Error(ErrorCode::VoidComplex, "bight of the void complex");
    int k = complex.facets().front().size();
    for (Face f : complex.facets())
        k = std::min(k, f.size());
    return complex.vertex_count() - k;
}

int bight_by_covers(const SquarefreeMonomialIdeal& ideal) {
    if (ideal.is_zero())
        return 0;
    int best = 0;
    for (Face cover : facets::minimal_transversals(ideal.generators()))
        best = std::max(best, cover.size());
    return best;
}

Face set_identity_expansion(const SimplicialComplex& complex, const ShellingOrder& shelling,
                            const ExpansionVector& s, std::size_t facet_index, std::span<const int> copies) {
    if (facet_index >= shelling.facets.size())
        throw Error(ErrorCode::InvalidInput, "facet index out of range");
    const Face facet = shelling.facets[facet_index];
    if (copies.size() != static_cast<std::size_t>(facet.size()))
        throw Error(ErrorCode::InvalidInput, "copy tuple length differs from the facet size");

    const auto base_cert = check_linear_quotients(alexander_dual_ideal(complex), complement_order(complex, shelling));
    if (!base_cert)
        throw Error(ErrorCode::NotAShelling, "complement order of the shelling has no linear quotients");
    const Face base_set = base_cert->sets[facet_index];

    Face rhs;
    std::size_t t = 0;
    facet.for_each([&](int base) {
        const int r = copies[t++];
        if (base_set.contains(base) || r > 1)
            rhs = rhs.with(s.ordinal(base, r));
    });

    // Direct route: linear-quotient sets of the expanded dual.
    const auto expanded = expand_complex(complex, s);
    const auto expanded_shelling = expansion_shelling(complex, shelling, s);
    const auto cert = check_linear_quotients(alexander_dual_ideal(expanded), complement_order(expanded, expanded_shelling));
    if (!cert)
        throw Error(ErrorCode::TheoremViolation, "expansion shelling complement order has no linear quotients");
    const Face target = s.expanded_face(facet, copies);
    const Face complement = expanded.universe_face() - target;
    const auto pos = std::find(cert->order.begin(), cert->order.end(), complement) - cert->order.begin();
    if (cert->sets[pos] != rhs)
        throw Error(ErrorCode::TheoremViolation, "set identity fails for an expanded facet");
    return rhs;
}

std::size_t check_set_identity_all(const SimplicialComplex& complex, const ShellingOrder& shelling,
                                   const ExpansionVector& s) {
    const auto base_cert = check_linear_quotients(alexander_dual_ideal(complex), complement_order(complex, shelling));
    if (!base_cert)
        throw Error(ErrorCode::NotAShelling, "complement order of the shelling has no linear quotients");
    const auto expanded = expand_complex(complex, s);
    const auto expanded_shelling = expansion_shelling(complex, shelling, s);
    const auto cert = check_linear_quotients(alexander_dual_ideal(expanded), complement_order(expanded, expanded_shelling));
    if (!cert)
        throw Error(ErrorCode::TheoremViolation, "expansion shelling complement order has no linear quotients");

    // expansion_shelling lists facets parent by parent, tuples in lex order.
    std::size_t position = 0;
    for (std::size_t i = 0; i < shelling.facets.size(); ++i) {
        const Face facet = shelling.facets[i];
        for (const auto& tuple : s.copy_tuples(facet)) {
            Face rhs;
            std::size_t t = 0;
            facet.for_each([&](int base) {
                const int r = tuple[t++];
                if (base_cert->sets[i].contains(base) || r > 1)
                    rhs = rhs.with(s.ordinal(base, r));
            });
            if (cert->sets[position] != rhs)
                throw Error(ErrorCode::TheoremViolation, "set identity fails for an expanded facet");
            ++position;
        }
    }
    return position;
}

ExpansionPdDepth expansion_pd_depth(const SimplicialComplex& complex, const ExpansionVector& s, FieldChoice field,
                                    const HochsterOptions& options, const SearchBudget& budget) {
    require_shelling(complex, budget);
    const auto expanded = expand_complex(complex, s);
    const auto base = quotient_invariants(complex, field, options);
    const auto grown = quotient_invariants(expanded, field, options);
    const int n = complex.vertex_count();

    ExpansionPdDepth out;
    out.pd = base.projective_dimension;
    out.depth = base.depth;
    out.expanded_pd = grown.projective_dimension;
    out.expanded_depth = grown.depth;
    out.bight = bight(complex);
    out.expanded_bight = bight(expanded);
    out.pd_formula_holds = out.expanded_pd == out.pd + s.total() - n;
    out.depth_formula_holds = out.expanded_depth == out.depth;
    out.bight_matches = out.pd == out.bight && out.expanded_pd == out.expanded_bight;
    return out;
}

ExpansionReg expansion_reg(const SimplicialComplex& complex, const ExpansionVector& s, FieldChoice field,
                           const HochsterOptions& options, const SearchBudget& budget) {
    const auto shelling = require_shelling(complex, budget);
    const auto expanded = expand_complex(complex, s);
    const auto expanded_shelling = expansion_shelling(complex, shelling, s);

    ExpansionReg out;
    out.reg = dual_pd_via_linear_quotients(expanded, expanded_shelling);
    out.base_reg = dual_pd_via_linear_quotients(complex, shelling);
    out.reg_hochster = quotient_invariants(expanded, field, options).regularity;
    for (Face f : complex.facets()) {
        int lambda = 0;
        f.for_each([&](int v) { lambda += s[v] > 1 ? 1 : 0; });
        out.max_lambda = std::max(out.max_lambda, lambda);
    }
    out.bound = out.base_reg + out.max_lambda;
    out.all_copies_above_one = std::all_of(s.counts().begin(), s.counts().end(), [](int c) { return c > 1; });
    out.equality_case = out.all_copies_above_one && out.reg == dim(complex) + 1;
    out.routes_agree = out.reg == out.reg_hochster;
    out.bound_holds = out.reg <= out.bound;
    return out;
}

}  // namespace expanse
