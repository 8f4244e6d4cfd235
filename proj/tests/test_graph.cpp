#include "doctest.h"
#include "support.hpp"

using namespace topstruct;
using namespace support;

TEST_CASE("is_separation on small graphs")
{
    const Graph p3 = path(3);
    CHECK(is_separation(p3, set_of(3, {1, 2}), set_of(3, {2, 3})));
    CHECK_FALSE(is_separation(p3, set_of(3, {1}), set_of(3, {2, 3})));
    CHECK_FALSE(is_separation(p3, set_of(3, {1}), set_of(3, {2})));

    const Graph k5 = complete(5);
    int proper = 0;
    for (const auto& s : brute_separations(k5, 6))
        if (!s.side_a.is_subset_of(s.side_b) && !s.side_b.is_subset_of(s.side_a)) ++proper;
    CHECK(proper == 0);
}

TEST_CASE("separation order")
{
    CHECK(separation_order({set_of(3, {1, 2}), set_of(3, {2, 3})}) == 1);
    CHECK(separation_order({set_of(4, {1, 2, 3}), set_of(4, {3, 4, 1})}) == 2);
    const Graph g = petersen();
    CHECK(separation_order({g.all(), g.all()}) == 10);
}

TEST_CASE("tightness")
{
    CHECK(is_tight(path(3), {set_of(3, {1, 2}), set_of(3, {2, 3})}));
    const Graph c4 = cycle(4);
    CHECK(is_tight(c4, {set_of(4, {1, 2, 3}), set_of(4, {3, 4, 1})}));

    Graph pendant = make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}});
    const Separation s{set_of(5, {1, 2, 3, 5}), set_of(5, {3, 4, 1})};
    REQUIRE(is_separation(pendant, s));
    CHECK(is_tight(pendant, s));
    CHECK(is_tight(pendant, s, true));

    // Separator {1,3} of P3 plus an isolated side: no 1-3 path avoiding it on B.
    const Graph p3 = path(3);
    CHECK_FALSE(is_tight(p3, {set_of(3, {1, 2, 3}), set_of(3, {1, 3})}));
    // Strict reading rejects a separator vertex with no neighbour on one side.
    const Graph star = make(3, {{1, 2}, {1, 3}});
    CHECK(is_tight(star, {set_of(3, {1, 2}), set_of(3, {1})}));
    CHECK_FALSE(is_tight(star, {set_of(3, {1, 2}), set_of(3, {1})}, true));
}

TEST_CASE("min_vertex_cut fixtures")
{
    CHECK(min_vertex_cut(cycle(5), 0, 2) == 2);
    CHECK(min_vertex_cut(complete_bipartite(3, 3), 0, 1) == 3);
    const Graph pg = petersen();
    for (Vertex u = 0; u < 10; ++u)
        for (Vertex v = u + 1; v < 10; ++v)
            if (!pg.adjacent(u, v)) CHECK(min_vertex_cut(pg, u, v) == 3);
    CHECK_THROWS_AS(min_vertex_cut(path(3), 0, 1), AdjacentPair);
    CHECK_THROWS_AS(min_vertex_cut(path(3), 1, 1), AdjacentPair);
}

TEST_CASE("min_vertex_cut agrees with subset removal")
{
    for (const Graph& g : corpus(60, 10, 11, 2))
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            for (Vertex v = u + 1; v < g.vertex_count(); ++v)
                if (!g.adjacent(u, v)) REQUIRE(min_vertex_cut(g, u, v) == brute_min_cut(g, u, v));
}

TEST_CASE("min_vertex_separator size matches disjoint paths")
{
    const Graph g = grid(3, 3);
    const VertexSet left = set_of(9, {1, 4, 7});
    const VertexSet right = set_of(9, {3, 6, 9});
    const VertexSet x = min_vertex_separator(g, left, right);
    CHECK(x.size() == 3);
    CHECK_FALSE(g.reach(left - x, g.all() - x).intersects(right));
}

TEST_CASE("overlay_clique")
{
    const Graph p3 = path(3);
    CHECK(overlay_clique(p3, VertexSet(3)) == p3);
    CHECK(overlay_clique(Graph(4), set_of(4, {1, 2, 3})) == make(4, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(overlay_clique(p3, set_of(3, {1, 3})) == cycle(3));
    for (const Graph& g : corpus(30, 9, 12)) {
        const VertexSet z = g.vertex_count() > 2 ? set_of(g.vertex_count(), {1, 2, 3}) : g.all();
        const Graph once = overlay_clique(g, z);
        CHECK(overlay_clique(once, z) == once);
        for (auto [u, v] : g.edges()) CHECK(once.adjacent(u, v));
    }
}

TEST_CASE("enumerate_separations fixtures")
{
    for (const auto& s : enumerate_separations(complete(4), 4))
        CHECK((s.side_a == complete(4).all() || s.side_b == complete(4).all()));

    const auto p3 = enumerate_separations(path(3), 2);
    CHECK(std::find(p3.begin(), p3.end(), Separation{set_of(3, {1, 2}), set_of(3, {2, 3})}) != p3.end());

    const Graph c4 = cycle(4);
    for (const auto& s : enumerate_separations(c4, 2))
        CHECK((s.side_a == c4.all() || s.side_b == c4.all()));
}

TEST_CASE("enumerate_separations is complete and canonical")
{
    for (const Graph& g : corpus(40, 7, 13)) {
        for (int k = 1; k <= 3; ++k) {
            const auto listed = enumerate_separations(g, k);
            std::set<Separation> seen;
            for (const auto& s : listed) {
                CHECK(is_separation(g, s));
                CHECK(s.order() < k);
                CHECK(s == s.canonical());
                CHECK(seen.insert(s).second);
            }
            std::set<Separation> expected;
            for (const auto& s : brute_separations(g, k)) expected.insert(s.canonical());
            CHECK(seen == expected);
        }
    }
}

TEST_CASE("separation symmetry")
{
    for (const Graph& g : corpus(20, 6, 14))
        for (const auto& s : brute_separations(g, 3)) CHECK(is_separation(g, s.side_b, s.side_a));
}

TEST_CASE("graph construction rejects loops and parallel edges")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), PreconditionFailed);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), PreconditionFailed);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionFailed);
}

TEST_CASE("budget exhaustion is an error")
{
    Budget tiny(3);
    CHECK_THROWS_AS(enumerate_separations(petersen(), 4, tiny), BudgetExceeded);
}
