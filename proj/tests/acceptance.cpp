// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "expanse/conjecture.hpp"
#include "expanse/error.hpp"
#include "expanse/expansion.hpp"
#include "expanse/homology.hpp"
#include "expanse/hypergraph.hpp"
#include "expanse/ideals.hpp"
#include "expanse/random.hpp"
#include "expanse/structure.hpp"
#include "oracles.hpp"

using namespace expanse;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

const FieldChoice Q = FieldChoice::rationals();

SimplicialComplex delta0() {
    return SimplicialComplex::from_facets({"x1", "x2", "x3", "x4", "x5"},
                                          {{"x1", "x2", "x3"}, {"x1", "x2", "x4"}, {"x4", "x5"}});
}

Hypergraph g0() {
    return Hypergraph::from_named_edges({"x1", "x2", "x3", "x4", "x5"}, {{"x1", "x2"},
                                                                          {"x1", "x4"},
                                                                          {"x1", "x5"},
                                                                          {"x2", "x3"},
                                                                          {"x2", "x4"},
                                                                          {"x2", "x5"},
                                                                          {"x3", "x4"}});
}

SimplicialComplex from_masks(int n, const std::vector<oracle::Mask>& masks) {
    std::vector<Face> faces(masks.begin(), masks.end());
    return SimplicialComplex::from_faces(SimplicialComplex::numbered_universe(n, "x"), faces);
}

/// Random complex on at most `n_max` vertices, shellable by search.
std::optional<std::pair<SimplicialComplex, ShellingOrder>> random_shellable(random::Rng& rng, int n_max) {
    const auto c = random::random_small_complex(rng, random::uniform(rng, 2, n_max));
    auto search = search_shelling(c);
    if (!search.order)
        return std::nullopt;
    return std::make_pair(c, *search.order);
}

std::string count_line(const std::string& what, long long n) { return what + "=" + std::to_string(n); }

Outcome example_expansion() {
    using Named = std::set<std::set<std::string>>;
    const auto d = delta0();
    const ExpansionVector s({1, 2, 1, 1, 2});
    const auto start = std::chrono::steady_clock::now();
    const auto e = expand_complex(d, s);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    // the six facets as printed, in canonical order of the expanded universe
    const std::vector<std::vector<std::string>> printed{{"x1_1", "x2_1", "x3_1"}, {"x1_1", "x2_2", "x3_1"},
                                                        {"x1_1", "x2_1", "x4_1"}, {"x1_1", "x2_2", "x4_1"},
                                                        {"x4_1", "x5_1"},         {"x4_1", "x5_2"}};
    const auto expected = SimplicialComplex::from_facets(s.expanded_universe(d.universe()), printed);
    Outcome o;
    o.ok = e == expected && e.facet_count() == 6 && oracle::named_facets(e) == Named(oracle::named_facets(expected)) &&
           ms < 1.0;
    o.detail = "facets=" + std::to_string(e.facet_count()) + " time=" + std::to_string(ms) + "ms";
    return o;
}

Outcome example_pd_depth() {
    const auto d = delta0();
    const auto e = expand_complex(d, ExpansionVector({1, 1, 2, 1, 2}));
    const auto base = quotient_invariants(d, Q);
    const auto exp = quotient_invariants(e, Q);
    Outcome o;
    o.ok = e.facet_count() == 5 && base.projective_dimension == 3 && exp.projective_dimension == 5 &&
           base.depth == 2 && exp.depth == 2;
    o.detail = "pd=" + std::to_string(base.projective_dimension) + "->" + std::to_string(exp.projective_dimension) +
               " depth=" + std::to_string(base.depth) + "," + std::to_string(exp.depth);
    return o;
}

Outcome example_graph_regularity() {
    const ExpansionVector s({2, 2, 3, 2, 3});
    const auto base = independence_complex(g0());
    const auto expanded = independence_complex(expand_hypergraph(g0(), s));
    // Terai + linear quotients: reg(R'/I) = pd of the dual ideal, whose linear
    // quotients come from the expansion of a shelling of Δ_{G0}
    const auto shelling = find_shelling(base);
    if (!shelling)
        return {false, "independence complex of G0 not shellable"};
    const auto order = expansion_shelling(base, *shelling, s);
    const auto dual = alexander_dual_ideal(expanded);
    const auto cert = check_linear_quotients(dual, complement_order(expanded, order));
    if (!cert)
        return {false, "no linear quotients from the expanded shelling"};
    const int reg_lq = betti_from_linear_quotients(*cert).projective_dimension();
    HochsterOptions wide;
    wide.max_variables = 12;
    const int reg_h = quotient_invariants(expanded, Q, wide).regularity;
    Outcome o;
    o.ok = expanded.vertex_count() == 12 && reg_lq == 2 && reg_h == 2;
    o.detail = "vertices=" + std::to_string(expanded.vertex_count()) + " reg_lq=" + std::to_string(reg_lq) +
               " reg_hochster=" + std::to_string(reg_h);
    return o;
}

Outcome vd_preservation() {
    long long checked = 0, violations = 0, randoms = 0;
    for (int n = 1; n <= 4; ++n)
        for (const auto& a : oracle::all_antichains(n)) {
            const auto c = from_masks(n, a);
            const bool base = is_vertex_decomposable(c);
            for (int code = 0; code < (1 << n); ++code) {
                std::vector<int> counts(n);
                for (int i = 0; i < n; ++i)
                    counts[i] = 1 + ((code >> i) & 1);
                const bool expanded = is_vertex_decomposable(expand_complex(c, ExpansionVector(counts)));
                violations += base != expanded ? 1 : 0;
                ++checked;
            }
        }
    auto rng = random::trial_rng(2024, 4);
    for (; randoms < 400; ++randoms) {
        const int n = random::uniform(rng, 1, 6);
        const auto c = random::random_small_complex(rng, n);
        const auto s = random::random_expansion_vector(rng, n, 3);
        violations += is_vertex_decomposable(c) != is_vertex_decomposable(expand_complex(c, s)) ? 1 : 0;
    }
    return {violations == 0, count_line("exhaustive", checked) + " " + count_line("random", randoms) + " " +
                                 count_line("violations", violations)};
}

Outcome shelling_transfer() {
    auto rng = random::trial_rng(2024, 5);
    long long done = 0, violations = 0;
    while (done < 250) {
        const auto sample = random_shellable(rng, 6);
        if (!sample)
            continue;
        const auto& [c, order] = *sample;
        const auto s = random::random_expansion_vector(rng, c.vertex_count(), 3);
        try {
            const auto expanded_order = expansion_shelling(c, order, s);
            violations += is_shelling(expand_complex(c, s), expanded_order) ? 0 : 1;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TheoremViolation)
                throw;
            ++violations;
        }
        ++done;
    }
    return {violations == 0, count_line("instances", done) + " " + count_line("violations", violations)};
}

Outcome pd_depth_formulas() {
    auto rng = random::trial_rng(2024, 6);
    HochsterOptions wide;
    wide.max_variables = 18;
    long long done = 0, violations = 0;
    while (done < 120) {
        const auto sample = random_shellable(rng, 6);
        if (!sample)
            continue;
        const auto& c = sample->first;
        const auto s = random::random_expansion_vector(rng, c.vertex_count(), 3);
        const auto r = expansion_pd_depth(c, s, Q, wide);
        violations += (r.pd_formula_holds && r.depth_formula_holds && r.bight_matches) ? 0 : 1;
        ++done;
    }
    return {violations == 0, count_line("instances", done) + " " + count_line("violations", violations)};
}

Outcome linear_quotients_vs_hochster() {
    auto rng = random::trial_rng(2024, 7);
    long long done = 0, violations = 0;
    while (done < 320) {
        const auto sample = random_shellable(rng, 7);
        if (!sample)
            continue;
        auto [c, order] = *sample;
        // grow some instances by expansion, keeping at most 10 variables
        if (done % 2 == 1) {
            std::vector<int> counts(c.vertex_count(), 1);
            int total = c.vertex_count();
            for (int i = 0; i < c.vertex_count() && total < 10; ++i)
                if (random::uniform(rng, 0, 1) == 1) {
                    ++counts[i];
                    ++total;
                }
            const ExpansionVector s(counts);
            order = expansion_shelling(c, order, s);
            c = expand_complex(c, s);
        }
        const auto dual = alexander_dual_ideal(c);
        if (dual.is_zero() || dual.is_unit())
            continue;
        const auto cert = check_linear_quotients(dual, complement_order(c, order));
        if (!cert) {
            ++violations;
            ++done;
            continue;
        }
        violations += betti_from_linear_quotients(*cert) == betti_numbers_hochster(dual, Q) ? 0 : 1;
        ++done;
    }
    return {violations == 0, count_line("ideals", done) + " " + count_line("violations", violations)};
}

Outcome regularity_bounds() {
    auto rng = random::trial_rng(2024, 8);
    HochsterOptions wide;
    wide.max_variables = 18;
    long long equal_cases = 0, mixed = 0, identities = 0, violations = 0;
    while (equal_cases < 60) {
        const auto sample = random_shellable(rng, 6);
        if (!sample)
            continue;
        const auto& c = sample->first;
        const auto r = expansion_reg(c, ExpansionVector(std::vector<int>(c.vertex_count(), 2)), Q, wide);
        violations += (r.equality_case && r.routes_agree) ? 0 : 1;
        ++equal_cases;
    }
    while (mixed < 120) {
        const auto sample = random_shellable(rng, 6);
        if (!sample)
            continue;
        const auto& [c, order] = *sample;
        const auto s = random::random_expansion_vector(rng, c.vertex_count(), 3);
        const auto r = expansion_reg(c, s, Q, wide);
        violations += (r.bound_holds && r.routes_agree) ? 0 : 1;
        try {
            identities += static_cast<long long>(check_set_identity_all(c, order, s));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TheoremViolation)
                throw;
            ++violations;
        }
        ++mixed;
    }
    return {violations == 0, count_line("equality", equal_cases) + " " + count_line("mixed", mixed) + " " +
                                 count_line("set_identities", identities) + " " + count_line("violations", violations)};
}

Outcome one_dimensional() {
    auto rng = random::trial_rng(2024, 9);
    long long done = 0, violations = 0;
    while (done < 600) {
        const int n = random::uniform(rng, 2, 7);
        const auto g = random::random_graph(rng, n, random::uniform(rng, 15, 85));
        if (g.edges().empty())
            continue;
        std::vector<Face> facets(g.edges().begin(), g.edges().end());
        const auto c = SimplicialComplex::from_faces(g.universe(), facets);
        violations += one_dim_equivalences(c, Q).all_equal() ? 0 : 1;
        ++done;
    }
    return {violations == 0, count_line("complexes", done) + " " + count_line("violations", violations)};
}

Outcome chordality_and_commutation() {
    auto rng = random::trial_rng(2024, 10);
    long long chordal_checks = 0, commutations = 0, violations = 0;
    for (; chordal_checks < 350; ++chordal_checks) {
        const int n = random::uniform(rng, 2, 6);
        const auto g = random::random_graph(rng, n, random::uniform(rng, 15, 85));
        const auto s = random::random_expansion_vector(rng, n, 3);
        const auto expanded = expand_hypergraph(g, s);
        const bool base = is_chordal(g);
        violations += base == is_chordal(expanded) ? 0 : 1;
        violations += base == oracle::chordal(oracle::edge_masks(g), n) ? 0 : 1;
    }
    for (; commutations < 350; ++commutations) {
        const int n = random::uniform(rng, 2, 6);
        const auto h = commutations % 2 == 0 ? random::random_graph(rng, n, 50)
                                             : random::random_hypergraph(rng, n, random::uniform(rng, 1, 5), 3);
        const auto s = random::random_expansion_vector(rng, n, 3);
        violations += independence_complex(expand_hypergraph(h, s)) == expand_complex(independence_complex(h), s) ? 0 : 1;
    }
    return {violations == 0, count_line("chordal", chordal_checks) + " " + count_line("commutation", commutations) +
                                 " " + count_line("violations", violations)};
}

Outcome terai() {
    auto rng = random::trial_rng(2024, 11);
    long long done = 0, violations = 0;
    while (done < 300) {
        const int n = random::uniform(rng, 2, 8);
        const auto c = random::random_small_complex(rng, n);
        const auto ideal = stanley_reisner_ideal(c);
        if (ideal.is_zero())
            continue;
        const int reg = quotient_invariants(c, Q).regularity;
        const int pd_dual = betti_numbers_hochster(alexander_dual_ideal(ideal), Q).projective_dimension();
        violations += reg == pd_dual ? 0 : 1;
        ++done;
    }
    return {violations == 0, count_line("ideals", done) + " " + count_line("violations", violations)};
}

Outcome conjecture_search() {
    ConjectureSearchOptions options;
    options.trials = 500;
    const auto first = search_conjecture(options);
    const auto again = search_conjecture(options);
    const auto serial = search_conjecture_serial(options);
    const bool reproducible = first.to_json() == again.to_json() && first.to_json() == serial.to_json();

    // every reported counterexample carries a second-field verdict and is
    // independently confirmed non-CM over the primary field
    long long unverified = 0;
    for (const auto& c : first.counterexamples) {
        if (c.second_field == c.field)
            ++unverified;
        if (is_cohen_macaulay(expand_complex(c.complex, c.s), options.field) || !is_cohen_macaulay(c.complex, options.field))
            ++unverified;
    }

    ConjectureSearchOptions pure = options;
    pure.pure_shellable = true;
    const auto restricted = search_conjecture(pure);
    long long sampled = 0;
    for (const auto& t : restricted.trials)
        sampled += (t.sampled && !t.skipped) ? 1 : 0;
    const bool guarantee = restricted.counterexamples.empty() && restricted.cm_inputs == sampled &&
                           restricted.preserved == restricted.cm_inputs;

    Outcome o;
    o.ok = reproducible && unverified == 0 && guarantee;
    o.detail = "reproducible=" + std::string(reproducible ? "yes" : "no") + " cm_inputs=" +
               std::to_string(first.cm_inputs) + " counterexamples=" + std::to_string(first.counterexamples.size()) +
               " pure_shellable_cm=" + std::to_string(restricted.cm_inputs) + "/" + std::to_string(sampled) +
               " preserved=" + std::to_string(restricted.preserved);
    return o;
}

struct Criterion {
    int number;
    const char* name;
    double limit_seconds;  ///< 0 means no stated limit
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "expansion of the small example", 0, example_expansion},
        {2, "pd and depth of the small example", 5, example_pd_depth},
        {3, "regularity of the expanded graph", 60, example_graph_regularity},
        {4, "vertex decomposability transfer", 300, vd_preservation},
        {5, "expanded shellings", 120, shelling_transfer},
        {6, "pd and depth formulas", 600, pd_depth_formulas},
        {7, "linear quotients vs Hochster", 0, linear_quotients_vs_hochster},
        {8, "regularity equality, bound and set identity", 0, regularity_bounds},
        {9, "one-dimensional equivalences", 0, one_dimensional},
        {10, "chordality and commutation", 0, chordality_and_commutation},
        {11, "Terai duality", 0, terai},
        {12, "conjecture search", 0, conjecture_search},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
        const bool pass = o.ok && in_time;
        failures += pass ? 0 : 1;
        std::printf("criterion %2d %-44s %s  %.2fs  %s%s\n", c.number, c.name, pass ? "PASS" : "FAIL", seconds,
                    o.detail.c_str(), in_time ? "" : " (over time limit)");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
