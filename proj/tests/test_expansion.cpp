#include <catch_amalgamated.hpp>

#include "expanse/error.hpp"
#include "expanse/expansion.hpp"
#include "expanse/hypergraph.hpp"
#include "expanse/random.hpp"
#include "oracles.hpp"

using namespace expanse;

namespace {

SimplicialComplex delta0() {
    return SimplicialComplex::from_facets({"x1", "x2", "x3", "x4", "x5"},
                                          {{"x1", "x2", "x3"}, {"x1", "x2", "x4"}, {"x4", "x5"}});
}

using Named = std::set<std::set<std::string>>;

}  // namespace

TEST_CASE("expansion vector bookkeeping") {
    const ExpansionVector s({1, 2, 1, 1, 2});
    CHECK(s.total() == 7);
    CHECK(s.ordinal(1, 2) == 2);
    CHECK(s.vertex(6) == ExpandedVertex{4, 2});
    CHECK(s.copies_of(1) == Face::of({1, 2}));
    CHECK(s.expanded_universe({"a", "b", "c", "d", "e"}) ==
          std::vector<std::string>{"a_1", "b_1", "b_2", "c_1", "d_1", "e_1", "e_2"});
    CHECK(ExpansionVector::parse("1,2,1,1,2") == s);
    CHECK(s.to_string() == "1,2,1,1,2");
    CHECK(s.copy_tuples(Face::of({1, 4})) ==
          std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
    const std::vector<int> copies{2, 1};
    CHECK(s.base_of(s.expanded_face(Face::of({1, 4}), copies)) == Face::of({1, 4}));
    try {
        ExpansionVector({1, 0});
        FAIL("zero copy count accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidExpansionVector);
    }
    CHECK_THROWS_AS(ExpansionVector::parse("1,x"), Error);
}

TEST_CASE("Δ₀ expanded by (1,2,1,1,2)") {
    const auto e = expand_complex(delta0(), ExpansionVector({1, 2, 1, 1, 2}));
    CHECK(oracle::named_facets(e) == Named{{"x1_1", "x2_1", "x3_1"},
                                           {"x1_1", "x2_2", "x3_1"},
                                           {"x1_1", "x2_1", "x4_1"},
                                           {"x1_1", "x2_2", "x4_1"},
                                           {"x4_1", "x5_1"},
                                           {"x4_1", "x5_2"}});
}

TEST_CASE("Δ₀ expanded by (1,1,2,1,2)") {
    const auto e = expand_complex(delta0(), ExpansionVector({1, 1, 2, 1, 2}));
    CHECK(oracle::named_facets(e) == Named{{"x1_1", "x2_1", "x3_1"},
                                           {"x1_1", "x2_1", "x3_2"},
                                           {"x1_1", "x2_1", "x4_1"},
                                           {"x4_1", "x5_1"},
                                           {"x4_1", "x5_2"}});
}

TEST_CASE("six-edge graph expanded by (1,1,2,1,2)") {
    const auto g = Hypergraph::from_named_edges(
        {"x1", "x2", "x3", "x4", "x5"},
        {{"x1", "x2"}, {"x1", "x4"}, {"x2", "x3"}, {"x2", "x4"}, {"x2", "x5"}, {"x3", "x4"}});
    const auto e = expand_hypergraph(g, ExpansionVector({1, 1, 2, 1, 2}));
    Named edges;
    for (auto f : e.edges()) {
        auto n = e.names(f);
        edges.insert({n.begin(), n.end()});
    }
    CHECK(edges == Named{{"x4_1", "x3_1"}, {"x4_1", "x2_1"}, {"x2_1", "x3_1"}, {"x4_1", "x1_1"},
                         {"x2_1", "x1_1"}, {"x5_1", "x2_1"}, {"x5_2", "x2_1"}, {"x3_1", "x3_2"},
                         {"x3_2", "x2_1"}, {"x3_2", "x4_1"}, {"x5_1", "x5_2"}});
}

TEST_CASE("expansion agrees with the copy-choice oracle") {
    auto rng = random::trial_rng(31, 0);
    for (int t = 0; t < 200; ++t) {
        const int n = random::uniform(rng, 1, 5);
        const auto c = random::random_small_complex(rng, n);
        const auto s = random::random_expansion_vector(rng, n, 3);
        const auto e = expand_complex(c, s);
        CHECK(oracle::as_set(oracle::masks(e)) == oracle::as_set(oracle::expansion(oracle::masks(c), s.counts())));
        std::size_t expected = 0;
        for (auto f : c.facets()) {
            std::size_t product = 1;
            f.for_each([&](int v) { product *= s[v]; });
            expected += product;
        }
        CHECK(e.facet_count() == expected);
    }
}

TEST_CASE("trivial expansion is the identity up to names") {
    auto rng = random::trial_rng(32, 0);
    for (int t = 0; t < 50; ++t) {
        const int n = random::uniform(rng, 1, 6);
        const auto c = random::random_small_complex(rng, n);
        const auto e = expand_complex(c, ExpansionVector::ones(n));
        CHECK(std::vector<Face>(e.facets().begin(), e.facets().end()) ==
              std::vector<Face>(c.facets().begin(), c.facets().end()));
    }
}

TEST_CASE("independence complex commutes with expansion") {
    auto rng = random::trial_rng(33, 0);
    for (int t = 0; t < 150; ++t) {
        const int n = random::uniform(rng, 2, 6);
        const auto h = t % 3 == 0 ? random::random_hypergraph(rng, n, 3, 3) : random::random_graph(rng, n, 50);
        const auto s = random::random_expansion_vector(rng, n, 2);
        CHECK(independence_complex(expand_hypergraph(h, s)) == expand_complex(independence_complex(h), s));
    }
}

TEST_CASE("link and deletion identities") {
    auto rng = random::trial_rng(34, 0);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        const int n = random::uniform(rng, 1, 5);
        const auto c = random::random_small_complex(rng, n);
        const auto s = random::random_expansion_vector(rng, n, 3);
        for (int base = 0; base < n; ++base) {
            if (!c.vertex_support().contains(base)) {
                CHECK_THROWS_AS(link_identity_check(c, s, base), Error);
                continue;
            }
            CHECK(link_identity_check(c, s, base));
            CHECK(deletion_identity_check(c, s, base));
            ++checked;
        }
    }
    CHECK(checked > 300);
}

TEST_CASE("expansion of the void complex throws") {
    CHECK_THROWS_AS(expand_complex(SimplicialComplex::void_complex({"a"}), ExpansionVector({2})), Error);
    CHECK_THROWS_AS(expand_complex(delta0(), ExpansionVector({1, 2})), Error);
}
