/*
 * Copyright 2026 The streett-solve Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>

#include "doctest.h"
#include "streett/generate.hpp"
#include "streett/oracles.hpp"
#include "streett/parity3.hpp"
#include "test_util.hpp"

using namespace streett;
using namespace streett::test;

namespace {

std::vector<VertexId> collect(auto range) { return {range.begin(), range.end()}; }

// G3: 0 pr0, 1 Even pr-1; edges 0->0, 0->1, 1->0. Owner of 0 is a parameter.
Parity3Game g3(int owner0) { return make_p3({owner0, 0}, {0, -1}, {{0, 0}, {0, 1}, {1, 0}}); }

void check_counters(const Parity3Solution& sol)
{
    const RunStats& st = sol.stats;
    CHECK(st.level_bound_violations == 0);
    CHECK(st.transfer_violations == 0);
    CHECK(st.residual_violations == 0);
    const std::size_t n = st.initial_vertices;
    if (n > 0) CHECK(st.buchialg_calls <= n / ceil_sqrt(n) + 1);
}

} // namespace

TEST_CASE("absorbing transform")
{
    SUBCASE("priority -1 keeps only a self-loop")
    {
        Parity3Game p3 = make_p3({0, 0, 0}, {-1, 0, 1}, {{0, 1}, {0, 2}, {1, 1}, {2, 0}});
        AbsorbingGame a = absorbing_transform(p3);
        CHECK(collect(a.graph.successors(0)) == std::vector<VertexId>{0});
        CHECK(a.buchi == set_of(3, {1}));
    }
    SUBCASE("no -1 vertex leaves the edges alone")
    {
        Parity3Game p3 = make_p3({0, 1, 0}, {0, 1, 0}, {{0, 1}, {1, 2}, {2, 0}, {1, 1}});
        AbsorbingGame a = absorbing_transform(p3);
        CHECK(a.graph.edge_count() == 4);
        for (VertexId v = 0; v < 3; ++v) {
            auto s = collect(a.graph.successors(v));
            std::sort(s.begin(), s.end());
            auto t = collect(p3.game.successors(v));
            std::sort(t.begin(), t.end());
            CHECK(s == t);
        }
    }
    SUBCASE("G3")
    {
        AbsorbingGame a = absorbing_transform(g3(1));
        CHECK(a.graph.edge_count() == 3);
        CHECK(a.graph.has_edge(0, 0));
        CHECK(a.graph.has_edge(0, 1));
        CHECK(a.graph.has_edge(1, 1));
        CHECK_FALSE(a.graph.has_edge(1, 0));
        CHECK(a.buchi == set_of(2, {0}));
    }
    SUBCASE("in-edges from Even sources come first")
    {
        Parity3Game p3 = make_p3({1, 0, 1, 0, 0}, {1, 1, 1, 1, 0}, {{0, 4}, {1, 4}, {2, 4}, {3, 4}, {4, 4}});
        AbsorbingGame a = absorbing_transform(p3);
        CHECK(collect(a.graph.predecessors(4)) == std::vector<VertexId>{1, 3, 4, 0, 2});
    }
}

TEST_CASE("level game graph")
{
    SUBCASE("low degrees keep every edge")
    {
        GameGraph g = make_game({0, 1, 0}, {{0, 1}, {0, 2}, {1, 2}, {2, 0}, {2, 1}});
        LevelGameGraph lg = level_game_graph(g, 1);
        CHECK(lg.blue.empty());
        CHECK(lg.game.edge_count() == 5);
    }
    SUBCASE("a high-degree Odd vertex turns blue")
    {
        // Odd hub 0 with five out-edges; targets 1..5 each have in-degree 1.
        std::vector<int> owners{1, 0, 0, 0, 0, 0};
        EdgeList edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};
        for (VertexId v = 1; v <= 5; ++v) edges.emplace_back(v, v);
        GameGraph g = make_game(owners, edges);
        LevelGameGraph lg = level_game_graph(g, 2);
        CHECK(lg.blue == set_of(6, {0}));
        // Each target keeps its first four in-edges, which include the hub edge.
        CHECK(lg.game.out_degree(0) == 5);

        // Crowd the targets' in-lists so the hub edge falls outside the first four.
        GameGraph h(11);
        h.set_owner(0, Player::Odd);
        for (VertexId v = 1; v <= 5; ++v) h.add_edge(0, v);
        for (VertexId u = 6; u <= 10; ++u) {
            for (VertexId v = 1; v <= 5; ++v) h.add_edge(u, v);
        }
        for (VertexId v = 1; v <= 5; ++v) h.add_edge(v, v);
        h.stable_sort_in_edges([&](VertexId src) { return h.owner(src) == Player::Even ? 0 : 1; });
        LevelGameGraph lh = level_game_graph(h, 2);
        CHECK(lh.blue == set_of(11, {0}));
        CHECK(lh.game.out_degree(0) == 0);
    }
    SUBCASE("first 2^i in-edges prefer Even sources")
    {
        // Vertex 0 has six in-edges: Odd 1, Even 2, Odd 3, Even 4, Odd 5, Even 6, all
        // from high-degree sources so only the in-edge rule can keep them.
        std::vector<int> owners{0, 1, 0, 1, 0, 1, 0, 0, 0, 0};
        EdgeList edges;
        for (VertexId u = 1; u <= 6; ++u) {
            edges.emplace_back(u, 0);
            for (VertexId t = 7; t <= 9; ++t) edges.emplace_back(u, t);
        }
        for (VertexId v : {0u, 7u, 8u, 9u}) edges.emplace_back(v, v);
        Parity3Game p3 = make_p3(owners, std::vector<int>(10, 1), edges);
        AbsorbingGame a = absorbing_transform(p3);
        LevelGameGraph lg = level_game_graph(a.graph, 1);
        auto kept = collect(lg.game.predecessors(0));
        std::sort(kept.begin(), kept.end());
        // Self-loop of 0 is an out-edge of a low-degree vertex; the two in-rule edges come from 2 and 4.
        CHECK(kept == std::vector<VertexId>{0, 2, 4});
    }
    SUBCASE("top level equals G'")
    {
        Parity3GenOptions opt;
        opt.n = 20;
        opt.m = 150;
        opt.seed = 5;
        AbsorbingGame a = absorbing_transform(generate_parity3(opt));
        LevelGameGraph lg = level_game_graph(a.graph, ceil_log2(20));
        CHECK(lg.blue.empty());
        CHECK(lg.game.edge_count() == a.graph.edge_count());
    }
}

TEST_CASE("dominion search")
{
    SUBCASE("no Büchi vertex left")
    {
        GameGraph g = make_game({0, 0}, {{0, 1}, {1, 0}});
        DominionSearchResult r = dominion_search(g, VertexSet(2), 2);
        CHECK(r.region.empty());
        CHECK(r.level == 0);
    }
    SUBCASE("Even two-cycle through B found at level 1")
    {
        GameGraph g = make_game({0, 0}, {{0, 1}, {1, 0}});
        DominionSearchResult r = dominion_search(g, set_of(2, {0}), 2);
        CHECK(r.region == set_of(2, {0, 1}));
        CHECK(r.level == 1);
    }
    SUBCASE("blue Odd hub with a self-loop")
    {
        // Odd hub 0 -> {0,1,2,3}; Even 1, 2, 3 in B return to the hub.
        GameGraph g = make_game({1, 0, 0, 0}, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {2, 0}, {3, 0}});
        VertexSet b = set_of(4, {1, 2, 3});
        RunStats st;
        CHECK(dominion_search(g, b, 1, &st).region.empty());
        CHECK(dominion_search(g, b, 2, &st).region.empty());
        CHECK(st.dominion_search_calls == 2);
    }
}

TEST_CASE("solve_parity3 examples")
{
    SUBCASE("all priorities 1")
    {
        Parity3Game p3 = make_p3({0, 1, 0}, {1, 1, 1}, {{0, 1}, {1, 2}, {2, 0}});
        Parity3Solution s = solve_parity3(p3);
        CHECK(s.even_region.empty());
        CHECK(s.odd_region.size() == 3);
        CHECK_FALSE(verify_parity3_strategies(p3, s));
        check_counters(s);
    }
    SUBCASE("single Even vertex with priority 0")
    {
        Parity3Game p3 = make_p3({0}, {0}, {{0, 0}});
        Parity3Solution s = solve_parity3(p3);
        CHECK(s.even_region == set_of(1, {0}));
        CHECK(s.even_strategy[0] == 0);
        CHECK_FALSE(verify_parity3_strategies(p3, s));
    }
    SUBCASE("G3 with Odd at vertex 0")
    {
        Parity3Game p3 = g3(1);
        WinningRegions oracle = brute_force_parity3(p3);
        CHECK(oracle.odd == set_of(2, {0, 1}));
        Parity3Solution s = solve_parity3(p3);
        CHECK(s.odd_region == oracle.odd);
        CHECK(s.odd_strategy[0] == 1);
        CHECK_FALSE(verify_parity3_strategies(p3, s));
    }
    SUBCASE("dead ends are rejected")
    {
        Parity3Game p3 = make_p3({0, 0}, {0, 0}, {{0, 1}});
        CHECK_THROWS_AS(solve_parity3(p3), PreconditionError);
    }
    SUBCASE("bad priorities are rejected")
    {
        Parity3Game p3 = make_p3({0}, {2}, {{0, 0}});
        CHECK_THROWS_AS(solve_parity3(p3), PreconditionError);
    }
}

TEST_CASE("verify_parity3_strategies examples")
{
    Parity3Game p3 = make_p3({0}, {0}, {{0, 0}});
    Parity3Solution good{set_of(1, {0}), VertexSet(1), Strategy(1), Strategy(1), {}};
    good.even_strategy.set(0, 0);
    CHECK_FALSE(verify_parity3_strategies(p3, good));

    Parity3Solution missing{set_of(1, {0}), VertexSet(1), Strategy(1), Strategy(1), {}};
    CHECK(verify_parity3_strategies(p3, missing));

    Parity3Game g = g3(1);
    Parity3Solution odd{VertexSet(2), set_of(2, {0, 1}), Strategy(2), Strategy(2), {}};
    odd.odd_strategy.set(0, 1);
    CHECK_FALSE(verify_parity3_strategies(g, odd));
    // Staying on the priority-0 self-loop hands the play to Even.
    odd.odd_strategy.set(0, 0);
    CheckResult bad = verify_parity3_strategies(g, odd);
    REQUIRE(bad);
    CHECK(bad->witness == std::vector<VertexId>{0, 0});
}

TEST_CASE("solve_parity3 matches both oracles on small random games")
{
    for (std::uint64_t seed = 1; seed <= 1500; ++seed) {
        std::size_t n = 1 + seed % 8;
        Parity3GenOptions opt;
        opt.n = n;
        opt.m = n + (seed / 8) % (n * n - n + 1);
        opt.seed = seed;
        Parity3Game p3 = generate_parity3(opt);
        Parity3Solution s = solve_parity3(p3);
        WinningRegions brute = brute_force_parity3(p3);
        WinningRegions classical = classical_parity3(p3);
        REQUIRE(s.even_region == brute.even);
        REQUIRE(classical.even == brute.even);
        CheckResult bad = verify_parity3_strategies(p3, s);
        REQUIRE_MESSAGE(!bad, (bad ? bad->what : ""));
        check_counters(s);
    }
}

TEST_CASE("solve_parity3 matches the classical loop on larger games")
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        std::size_t n = 20 + seed * 3;
        Parity3GenOptions opt;
        opt.n = n;
        opt.m = std::min(n * n, n * (1 + seed % 6));
        opt.seed = seed * 101;
        Parity3Game p3 = generate_parity3(opt);
        Parity3Solution s = solve_parity3(p3);
        REQUIRE(s.even_region == classical_parity3(p3).even);
        CheckResult bad = verify_parity3_strategies(p3, s);
        REQUIRE_MESSAGE(!bad, (bad ? bad->what : ""));
        check_counters(s);
    }
}
