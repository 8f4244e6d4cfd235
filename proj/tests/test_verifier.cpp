#include "doctest.h"
#include "support.hpp"
#include "topstruct/verifier.hpp"

using namespace topstruct;
using namespace support;

TEST_CASE("minor_oracle fixtures")
{
    CHECK_FALSE(minor_oracle(grid(4, 4), 5));
    CHECK(minor_oracle(grid(4, 4), 4));
    CHECK(minor_oracle(petersen(), 5));
    CHECK_FALSE(minor_oracle(petersen(), 6));
    CHECK(minor_oracle(complete_bipartite(3, 3), 4));
    CHECK_FALSE(minor_oracle(complete_bipartite(3, 3), 5));
    CHECK(minor_oracle(complete(7), 7));
    CHECK_FALSE(minor_oracle(complete(7), 8));
    CHECK(minor_oracle(Graph(1), 1));
    CHECK_FALSE(minor_oracle(Graph(0), 1));
    CHECK(minor_oracle(Graph(0), 0));
    CHECK_FALSE(minor_oracle(Graph(5), 2));
    CHECK(minor_oracle(cycle(6), 3));
    CHECK_FALSE(minor_oracle(path(6), 3));

    CHECK_THROWS_AS(minor_oracle(Graph(65), 3), PreconditionFailed);
    Budget tiny(1);
    CHECK_THROWS_AS(minor_oracle(petersen(), 6, tiny), BudgetExceeded);
}

TEST_CASE("minor_oracle agrees with labelling enumeration")
{
    for (const Graph& g : corpus(90, 6, 51))
        for (int m = 1; m <= 5; ++m) REQUIRE(minor_oracle(g, m) == brute_has_minor(g, m));
}

TEST_CASE("minor_oracle agrees with the branch-set search")
{
    for (const Graph& g : corpus(90, 9, 52))
        for (int m = 1; m <= 5; ++m) REQUIRE(minor_oracle(g, m) == find_clique_model(g, m).has_value());
}

TEST_CASE("verify_subdivision fixtures")
{
    const Graph k4 = complete(4);
    SubdivisionEmbedding s;
    s.branch_vertices = {0, 1, 2, 3};
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex w = u + 1; w < 4; ++w) s.paths[{u, w}] = {u, w};
    CHECK(verify_subdivision(k4, 4, s));
    CHECK_FALSE(verify_subdivision(k4, 3, s));

    auto missing = s;
    missing.paths.erase({0, 1});
    CHECK_FALSE(verify_subdivision(k4, 4, missing));

    // Subdivided triangle: paths through 3 and 4.
    const Graph c5 = cycle(5);
    SubdivisionEmbedding t;
    t.branch_vertices = {0, 1, 2};
    t.paths[{0, 1}] = {0, 1};
    t.paths[{1, 2}] = {1, 2};
    t.paths[{0, 2}] = {0, 4, 3, 2};
    CHECK(verify_subdivision(c5, 3, t));
    auto reversed = t;
    reversed.paths[{0, 2}] = {2, 3, 4, 0};
    CHECK_FALSE(verify_subdivision(c5, 3, reversed));
    auto jump = t;
    jump.paths[{0, 2}] = {0, 3, 2};
    CHECK_FALSE(verify_subdivision(c5, 3, jump));
    auto through = t;
    through.paths[{0, 2}] = {0, 1, 2};
    CHECK_FALSE(verify_subdivision(c5, 3, through));
}

TEST_CASE("verify_subdivision agrees with the definition")
{
    for (const Graph& g : corpus(80, 9, 53, 3))
        for (int r = 3; r <= 4; ++r) {
            const auto s = find_subdivision(g, r);
            if (!s) continue;
            CHECK(verify_subdivision(g, r, *s));
            CHECK(brute_is_subdivision(g, r, *s));
            const Model x = subdivision_to_model(*s, g.vertex_count());
            CHECK(x.target() == r);
            CHECK(is_model(g, x));
        }
}

TEST_CASE("verify_theorem fixtures")
{
    const Graph tree = make(6, {{1, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}});
    const auto params = Parameters::from_r(2);
    Budget budget;
    TreeDecomposition td;
    std::vector<NodeId> ids;
    for (auto bag : {set_of(6, {1, 2}), set_of(6, {2, 3}), set_of(6, {2, 4}), set_of(6, {4, 5}), set_of(6, {4, 6})})
        ids.push_back(td.add_node(bag));
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) td.add_edge(ids[i], ids[i + 1]);
    REQUIRE(validate_decomposition(tree, td));
    const auto ok = verify_theorem(tree, td, {}, params, budget);
    CHECK(ok.status() == VerifyStatus::Pass);
    CHECK(ok.adhesion_bound == 4);
    CHECK(ok.degree_threshold == 32);
    CHECK(ok.minor_size == 8);

    auto broken = td;
    broken.bag(ids[4]) = VertexSet(6, {3});
    const auto bad = verify_theorem(tree, broken, {}, params, budget);
    CHECK_FALSE(bad.valid);
    CHECK(bad.status() == VerifyStatus::Violation);

    const Graph k6 = complete(6);
    const auto gen = Parameters::from_km(3, 6);
    const auto one = TreeDecomposition::trivial(k6);
    CHECK(verify_theorem(k6, one, {{1, Color::Red}}, gen, budget).status() == VerifyStatus::Pass);
    const auto blue = verify_theorem(k6, one, {{1, Color::Blue}}, gen, budget);
    CHECK(blue.status() == VerifyStatus::Violation);
    CHECK(blue.torsos.at(0).status == TorsoStatus::Violated);
    CHECK(verify_theorem(k6, one, {}, gen, budget).status() == VerifyStatus::Pass);
    CHECK(verify_theorem(k6, one, {{7, Color::Red}}, gen, budget).status() == VerifyStatus::Violation);

    Budget tiny(1);
    const auto p = petersen();
    const auto slow = verify_theorem(p, TreeDecomposition::trivial(p), {{1, Color::Blue}}, gen, tiny);
    CHECK(slow.status() == VerifyStatus::Unverified);
    CHECK(slow.torsos.at(0).status == TorsoStatus::Unverified);
}

TEST_CASE("pipeline output passes the generalized check")
{
    int checked = 0;
    for (const Graph& g : corpus(100, 9, 54, 2))
        for (int k = 2; k <= 3; ++k) {
            const auto params = Parameters::from_km(k, 2 * k);
            const auto result = run_structure(g, params);
            const auto* d = std::get_if<DecompositionResult>(&result);
            if (!d) continue;
            Budget budget;
            const auto rep = verify_theorem(g, *d, params, budget);
            CHECK(rep.status() == VerifyStatus::Pass);
            ++checked;
        }
    CHECK(checked > 0);
}
