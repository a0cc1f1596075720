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
#include <random>

#include "doctest.h"
#include "streett/generate.hpp"
#include "streett/good_component.hpp"
#include "streett/oracles.hpp"
#include "streett/scc.hpp"
#include "test_util.hpp"

using namespace streett;
using namespace streett::test;

namespace {

// Hub 0 -> 1..5; 1..4 return to the hub, 5 has a self-loop.
Digraph hub_graph() { return make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 5}}); }

// 0<->1 -> 2<->3
Digraph two_pairs() { return make_graph(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}}); }

} // namespace

TEST_CASE("level plain graph")
{
    SUBCASE("low degrees keep every edge")
    {
        Digraph g = two_pairs();
        LevelPlainGraph lg = level_plain_graph(g, g.alive_vertices(), 1);
        CHECK(lg.blue.empty());
        CHECK(lg.graph.edge_count() == g.edge_count());
    }
    SUBCASE("hub of out-degree five at level 2")
    {
        Digraph g = hub_graph();
        LevelPlainGraph lg = level_plain_graph(g, g.alive_vertices(), 2);
        CHECK(lg.blue == set_of(6, {0}));
        CHECK(lg.graph.out_degree(0) == 0);
    }
    SUBCASE("degrees are measured inside S")
    {
        Digraph g = hub_graph();
        LevelPlainGraph lg = level_plain_graph(g, set_of(6, {0, 1, 2}), 1);
        CHECK(lg.blue.empty());
        CHECK(lg.graph.out_degree(0) == 2);
    }
    SUBCASE("no blue vertex at the top level")
    {
        Digraph g = hub_graph();
        CHECK(level_plain_graph(g, g.alive_vertices(), ceil_log2(6)).blue.empty());
    }
}

TEST_CASE("bounded_bottom_scc")
{
    SUBCASE("strongly connected set with a blue vertex")
    {
        Digraph g = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {2, 0}, {3, 0}});
        CHECK_FALSE(bounded_bottom_scc(g, g.alive_vertices(), 1));
    }
    SUBCASE("two two-cycles")
    {
        Digraph g = two_pairs();
        auto x = bounded_bottom_scc(g, g.alive_vertices(), 1);
        REQUIRE(x);
        CHECK(*x == set_of(4, {2, 3}));
    }
    SUBCASE("white self-loop below a blue hub")
    {
        Digraph g = hub_graph();
        auto x = bounded_bottom_scc(g, g.alive_vertices(), 2);
        REQUIRE(x);
        CHECK(*x == set_of(6, {5}));
    }
}

TEST_CASE("lockstep_split")
{
    SUBCASE("triangle is whole")
    {
        Digraph g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
        SearchOutcome r = lockstep_split(g, g.alive_vertices());
        CHECK(r.kind == SearchOutcome::Kind::WholeSetStronglyConnected);
        CHECK(r.level == 1);
    }
    SUBCASE("two two-cycles split in half")
    {
        Digraph g = two_pairs();
        SearchOutcome r = lockstep_split(g, g.alive_vertices());
        REQUIRE(r.kind == SearchOutcome::Kind::SplitFound);
        CHECK(r.split == set_of(4, {2, 3}));
        CHECK(r.direction == SearchDirection::Forward);
    }
    SUBCASE("single edge splits off its head")
    {
        Digraph g = make_graph(2, {{0, 1}});
        SearchOutcome r = lockstep_split(g, g.alive_vertices());
        REQUIRE(r.kind == SearchOutcome::Kind::SplitFound);
        CHECK(r.split == set_of(2, {1}));
        CHECK(r.level == 1);
        CHECK(r.direction == SearchDirection::Forward);
    }
    SUBCASE("reverse direction finds a small top component")
    {
        // Source self-loop 0 feeds a 5-cycle 1..5; the 5-cycle is the only bottom.
        Digraph g = make_graph(6, {{0, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
        SearchOutcome r = lockstep_split(g, g.alive_vertices());
        REQUIRE(r.kind == SearchOutcome::Kind::SplitFound);
        CHECK(r.split == set_of(6, {0}));
        CHECK(r.direction == SearchDirection::Reverse);
    }
}

TEST_CASE("good_component examples")
{
    SUBCASE("no pairs: the triangle itself")
    {
        Digraph g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
        StreettPairs p(3, 0);
        auto x = good_component(g, p, g.alive_vertices());
        REQUIRE(x);
        CHECK(x->size() == 3);
    }
    SUBCASE("triangle with an uncoverable pair")
    {
        Digraph g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
        StreettPairs p(3, 1);
        p.add(0, StreettPairs::Side::Lower, 0);
        GoodComponentStats st;
        CHECK_FALSE(good_component(g, p, g.alive_vertices(), &st));
        CHECK(st.bad_removed == 1);
    }
    SUBCASE("fan instance is good as a whole")
    {
        StreettInstance inst = figure_nk(4, 3);
        auto x = good_component(inst.graph, inst.pairs, inst.graph.alive_vertices());
        REQUIRE(x);
        CHECK(x->size() == inst.graph.vertex_count());
    }
    SUBCASE("input graph is left untouched")
    {
        Digraph g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
        StreettPairs p(3, 1);
        p.add(0, StreettPairs::Side::Lower, 0);
        good_component(g, p, g.alive_vertices());
        CHECK(g.alive_count() == 3);
        CHECK(g.edge_count() == 3);
    }
}

TEST_CASE("good_component on random strongly connected instances")
{
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        StreettGenOptions opt;
        opt.n = 2 + seed % 60;
        opt.m = opt.n + seed % (2 * opt.n);
        opt.k = seed % 8;
        opt.seed = seed;
        opt.lower_density = 0.15;
        opt.upper_density = 0.08;
        opt.strongly_connected = true;
        StreettInstance inst = generate_streett(opt);
        const VertexSet all = inst.graph.alive_vertices();

        GoodComponentStats st;
        GoodComponentOptions go;
        go.expensive_checks = true;
        auto x = good_component(inst.graph, inst.pairs, all, &st, go);
        StreettSolution oracle = basic_streett(inst.graph, inst.pairs);
        REQUIRE(oracle.satisfying_sccs.size() == 1);
        REQUIRE(x.has_value() == oracle.satisfying_sccs[0].good.has_value());
        if (x) REQUIRE(is_good_component(inst.graph, inst.pairs, *x));
        REQUIRE(st.unsound_removals == 0);
        REQUIRE(st.split_scc_violations == 0);
        REQUIRE(st.split_size_violations == 0);
        REQUIRE(st.charge_violations == 0);
        REQUIRE(st.set_data_work_violations == 0);
    }
}

TEST_CASE("a planted good component stays inside exactly one queued set")
{
    std::mt19937_64 rng(77);
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        StreettGenOptions opt;
        opt.n = 10 + seed % 40;
        opt.m = 2 * opt.n;
        opt.k = 1 + seed % 6;
        opt.seed = seed;
        opt.lower_density = 0.3;
        opt.upper_density = 0.05;
        opt.strongly_connected = true;
        StreettInstance inst = generate_streett(opt);
        const std::size_t n = opt.n;

        // Plant Y: a short cycle over random vertices, each pair it touches covered inside it.
        std::vector<VertexId> order(n);
        for (VertexId v = 0; v < n; ++v) order[v] = v;
        std::shuffle(order.begin(), order.end(), rng);
        std::size_t len = 2 + rng() % 4;
        VertexSet y(n);
        for (std::size_t i = 0; i < len; ++i) {
            y.insert(order[i]);
            VertexId a = order[i], b = order[(i + 1) % len];
            if (!inst.graph.has_edge(a, b)) inst.graph.add_edge(a, b);
        }
        for (std::uint32_t j = 0; j < opt.k; ++j) {
            bool hit = false;
            for (VertexId v : inst.pairs.lower(j)) hit = hit || y.contains(v);
            if (hit) inst.pairs.add(j, StreettPairs::Side::Upper, order[0]);
        }
        REQUIRE(is_good_component(inst.graph, inst.pairs, y));

        std::size_t iterations = 0;
        GoodComponentOptions go;
        go.on_iteration = [&](std::span<const std::span<const VertexId>> queued) {
            ++iterations;
            int holders = 0;
            for (std::span<const VertexId> s : queued) {
                VertexSet set(n, s);
                if (y.is_subset_of(set)) ++holders;
            }
            REQUIRE(holders == 1);
        };
        auto x = good_component(inst.graph, inst.pairs, inst.graph.alive_vertices(), nullptr, go);
        REQUIRE(x);
        REQUIRE(iterations >= 1);
    }
}
