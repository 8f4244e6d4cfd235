#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "topstruct/lean.hpp"

using namespace topstruct;
using namespace support;

TEST_CASE("build_k_lean fixtures")
{
    const Graph forest = make(7, {{1, 2}, {2, 3}, {2, 4}, {5, 6}});
    const auto f = build_k_lean(forest, 2);
    CHECK(validate_decomposition(forest, f));
    CHECK(adhesion(f) < 2);
    CHECK(brute_is_lean(forest, f, 2));
    for (const auto& [t, bag] : f.bags()) CHECK(bag.size() <= 2);

    const Graph k5 = complete(5);
    const auto whole = build_k_lean(k5, 4);
    CHECK(whole.node_count() == 1);
    CHECK(whole.bag(1) == k5.all());

    const Graph bowtie = make(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});
    const auto b = build_k_lean(bowtie, 2);
    CHECK(b.node_count() == 2);
    CHECK(adhesion(b) == 1);
    CHECK((b.bag(1) & b.bag(2)) == set_of(5, {3}));
}

TEST_CASE("improvement_step fixtures")
{
    const Graph triangles = make(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
    const auto single = TreeDecomposition::trivial(triangles);
    const auto v = check_k_lean(triangles, single, 2);
    REQUIRE(v.has_value());
    const auto next = improvement_step(triangles, single, 2, *v);
    CHECK(validate_decomposition(triangles, next));
    CHECK(fatness_of(next, 6) < fatness_of(single, 6));
    CHECK(fatness_of(next, 6).counts == std::vector<int>{0, 0, 0, 2, 0, 0, 0});

    LeannessViolation fake{1, 1, 1, {triangles.all(), triangles.all()}};
    CHECK_THROWS_AS(improvement_step(triangles, single, 2, fake), NotAViolation);
}

TEST_CASE("improvement steps descend until lean")
{
    std::mt19937_64 rng(31);
    for (const Graph& g : corpus(150, 10, 32)) {
        auto td = elimination_decomposition(g, rng);
        const int k = adhesion(td) + 1 + static_cast<int>(rng() % 2);
        for (int step = 0; step < 500; ++step) {
            const auto v = check_k_lean(g, td, k);
            if (!v) break;
            const auto next = improvement_step(g, td, k, *v);
            REQUIRE(validate_decomposition(g, next));
            REQUIRE(adhesion(next) < k);
            REQUIRE(fatness_of(next, g.vertex_count()) < fatness_of(td, g.vertex_count()));
            td = next;
        }
        CHECK_FALSE(check_k_lean(g, td, k).has_value());
    }
}

TEST_CASE("build_k_atomic_exact fixtures")
{
    const auto k4 = build_k_atomic_exact(complete(4), 3);
    CHECK(k4.node_count() == 1);

    const Graph p3 = path(3);
    const auto p = build_k_atomic_exact(p3, 2);
    CHECK(fatness_of(p, 3).counts == std::vector<int>{0, 2, 0, 0});

    const Graph empty(3);
    const auto e = build_k_atomic_exact(empty, 1);
    CHECK(e.node_count() == 3);
    for (const auto& [t, bag] : e.bags()) CHECK(bag.size() == 1);

    CHECK_THROWS_AS(build_k_atomic_exact(petersen(), 2), PreconditionFailed);
}

TEST_CASE("exact atomic output is lean and no fatter than the lean builder")
{
    for (const Graph& g : corpus(60, 6, 33)) {
        for (int k = 2; k <= 3; ++k) {
            const auto exact = build_k_atomic_exact(g, k);
            const auto lean = build_k_lean(g, k);
            REQUIRE(validate_decomposition(g, exact));
            CHECK(adhesion(exact) < k);
            CHECK(fatness_of(exact, g.vertex_count()) <= fatness_of(lean, g.vertex_count()));
            CHECK(brute_is_lean(g, exact, k));
        }
    }
}

TEST_CASE("build_k_lean is deterministic and traces steps")
{
    const Graph g = grid(3, 3);
    std::ostringstream a, b;
    LeanOptions oa, ob;
    oa.trace = &a;
    ob.trace = &b;
    Budget ba, bb;
    const auto x = build_k_lean(g, 3, ba, oa);
    const auto y = build_k_lean(g, 3, bb, ob);
    CHECK(x.structurally_equal(y));
    CHECK(a.str() == b.str());
    CHECK_FALSE(a.str().empty());
}

TEST_CASE("step limit is enforced")
{
    LeanOptions o;
    o.max_steps = 1;
    Budget budget;
    CHECK_THROWS_AS(build_k_lean(grid(3, 3), 3, budget, o), BudgetExceeded);
}
