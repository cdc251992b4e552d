#include <catch_amalgamated.hpp>

#include "expanse/error.hpp"
#include "expanse/expansion.hpp"
#include "expanse/random.hpp"
#include "expanse/structure.hpp"
#include "oracles.hpp"

using namespace expanse;

namespace {

SimplicialComplex delta0() {
    return SimplicialComplex::from_facets({"x1", "x2", "x3", "x4", "x5"},
                                          {{"x1", "x2", "x3"}, {"x1", "x2", "x4"}, {"x4", "x5"}});
}

SimplicialComplex from_masks(int n, const std::vector<oracle::Mask>& masks) {
    std::vector<Face> faces(masks.begin(), masks.end());
    return SimplicialComplex::from_faces(SimplicialComplex::numbered_universe(n, "v"), faces);
}

/// Checks a shedding tree whose ordinals refer to the root universe: leaves
/// are simplices and every facet of each deletion is a facet of its parent.
bool valid_tree(const std::vector<oracle::Mask>& facets, const SheddingTree& t) {
    if (t.vertex < 0)
        return facets.size() == 1 && facets[0] == t.simplex.bits();
    const auto del = oracle::deletion_facets(facets, t.vertex);
    const auto original = oracle::as_set(facets);
    if (!std::all_of(del.begin(), del.end(), [&](oracle::Mask g) { return original.count(g) > 0; }))
        return false;
    return t.link && t.deletion && valid_tree(oracle::link_facets(facets, t.vertex), *t.link) &&
           valid_tree(del, *t.deletion);
}

bool valid_tree(const SimplicialComplex& c, const SheddingTree& t) { return valid_tree(oracle::masks(c), t); }

}  // namespace

TEST_CASE("Δ₀ is vertex decomposable and shellable") {
    const auto d = delta0();
    const auto vd = decide_vertex_decomposable(d);
    REQUIRE(vd.decision == Decision::Yes);
    CHECK(valid_tree(d, *vd.witness));
    const auto order = find_shelling(d);
    REQUIRE(order);
    CHECK(is_shelling(d, *order));
    CHECK(is_shelling(d, ShellingOrder{{d.face({"x1", "x2", "x3"}), d.face({"x1", "x2", "x4"}), d.face({"x4", "x5"})}}));
    CHECK_FALSE(
        is_shelling(d, ShellingOrder{{d.face({"x1", "x2", "x3"}), d.face({"x4", "x5"}), d.face({"x1", "x2", "x4"})}}));
}

TEST_CASE("shedding vertex forms agree") {
    auto rng = random::trial_rng(41, 0);
    for (int t = 0; t < 300; ++t) {
        const int n = random::uniform(rng, 1, 6);
        const auto c = random::random_small_complex(rng, n);
        for (int v = 0; v < n; ++v)
            if (c.vertex_support().contains(v))
                CHECK(is_shedding_vertex(c, v) == is_shedding_vertex_by_deletion(c, v));
    }
}

TEST_CASE("vertex decomposability against the definition") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& a : oracle::all_antichains(n)) {
            const auto c = from_masks(n, a);
            const auto result = decide_vertex_decomposable(c);
            REQUIRE(result.decision != Decision::Unknown);
            CHECK((result.decision == Decision::Yes) == oracle::vertex_decomposable(oracle::masks(c)));
            if (result.witness)
                CHECK(valid_tree(c, *result.witness));
        }
    auto rng = random::trial_rng(42, 0);
    for (int t = 0; t < 150; ++t) {
        const auto c = random::random_small_complex(rng, random::uniform(rng, 4, 6));
        const auto result = decide_vertex_decomposable(c);
        REQUIRE(result.decision != Decision::Unknown);
        CHECK((result.decision == Decision::Yes) == oracle::vertex_decomposable(oracle::masks(c)));
    }
}

TEST_CASE("shellability against all permutations") {
    int yes = 0;
    for (int n = 1; n <= 4; ++n)
        for (const auto& a : oracle::all_antichains(n)) {
            if (a.size() > 6)
                continue;
            const auto c = from_masks(n, a);
            const auto search = search_shelling(c);
            REQUIRE(search.decision != Decision::Unknown);
            const bool expected = oracle::shellable(oracle::masks(c));
            CHECK((search.decision == Decision::Yes) == expected);
            if (search.order) {
                ++yes;
                CHECK(is_shelling(c, *search.order));
                std::vector<oracle::Mask> order;
                for (auto f : search.order->facets)
                    order.push_back(f.bits());
                CHECK(oracle::shelling_by_intersections(order));
            }
        }
    CHECK(yes > 50);
}

TEST_CASE("is_shelling agrees with the intersection form on random orders") {
    auto rng = random::trial_rng(43, 0);
    for (int t = 0; t < 300; ++t) {
        const auto c = random::random_small_complex(rng, random::uniform(rng, 2, 6));
        std::vector<Face> order(c.facets().begin(), c.facets().end());
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<oracle::Mask> masks;
        for (auto f : order)
            masks.push_back(f.bits());
        CHECK(is_shelling(c, ShellingOrder{order}) == oracle::shelling_by_intersections(masks));
    }
}

TEST_CASE("is_shelling rejects non-permutations") {
    const auto d = delta0();
    try {
        is_shelling(d, ShellingOrder{{d.facets()[0], d.facets()[0], d.facets()[1]}});
        FAIL("repeated facet accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAPermutation);
    }
    CHECK_THROWS_AS(is_shelling(d, ShellingOrder{{d.facets()[0]}}), Error);
}

TEST_CASE("search limits") {
    std::vector<Face> many;
    for (int v = 0; v < 12; ++v)
        many.push_back(Face::of({v}));
    const auto c = SimplicialComplex::from_faces(SimplicialComplex::numbered_universe(12), many);
    try {
        search_shelling(c);
        FAIL("facet cap ignored");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
    const auto tiny = decide_vertex_decomposable(delta0(), {.max_nodes = 1, .max_facets = 10});
    CHECK(tiny.decision == Decision::Unknown);
    CHECK_THROWS_AS(is_vertex_decomposable(delta0(), {.max_nodes = 1, .max_facets = 10}), Error);
}

TEST_CASE("expansion shelling is a shelling") {
    auto rng = random::trial_rng(44, 0);
    int done = 0;
    for (int t = 0; t < 400 && done < 100; ++t) {
        const int n = random::uniform(rng, 2, 5);
        const auto c = random::random_small_complex(rng, n);
        const auto search = search_shelling(c);
        if (!search.order)
            continue;
        const auto s = random::random_expansion_vector(rng, n, 3);
        const auto order = expansion_shelling(c, *search.order, s);
        CHECK(is_shelling(expand_complex(c, s), order));
        ++done;
    }
    CHECK(done == 100);
    const auto d = delta0();
    try {
        expansion_shelling(d, ShellingOrder{{d.facets()[0], d.facets()[2], d.facets()[1]}}, ExpansionVector::ones(5));
        FAIL("bad shelling accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAShelling);
    }
}

TEST_CASE("vertex decomposability is preserved both ways by expansion") {
    auto rng = random::trial_rng(45, 0);
    for (int t = 0; t < 100; ++t) {
        const int n = random::uniform(rng, 1, 5);
        const auto c = random::random_small_complex(rng, n);
        const auto s = random::random_expansion_vector(rng, n, 2);
        CHECK(is_vertex_decomposable(c) == is_vertex_decomposable(expand_complex(c, s)));
    }
}

TEST_CASE("one-dimensional equivalences") {
    const auto path = SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(one_dim_equivalences(path).all_equal());
    CHECK(one_dim_equivalences(path).connected);
    const auto split = SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    const auto flags = one_dim_equivalences(split);
    CHECK(flags.all_equal());
    CHECK_FALSE(flags.cohen_macaulay);
    try {
        one_dim_equivalences(delta0());
        FAIL("non-pure input accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPureOneDimensional);
    }
}

TEST_CASE("the complex {∅} and a single vertex") {
    const auto e = SimplicialComplex::from_faces({"a"}, {Face{}});
    CHECK(is_vertex_decomposable(e));
    CHECK(find_shelling(e).has_value());
    const auto v = SimplicialComplex::from_facets({"a", "b"}, {{"a"}});
    CHECK(is_vertex_decomposable(v));
}
