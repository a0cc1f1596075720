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

#include "doctest.h"
#include "streett/attractor.hpp"
#include "streett/buchi.hpp"
#include "streett/generate.hpp"
#include "streett/parity3.hpp"
#include "test_util.hpp"

using namespace streett;
using namespace streett::test;

namespace {

BuchiGame g2_buchi()
{
    return {make_game({0, 1}, {{0, 1}, {1, 0}, {1, 1}}), set_of(2, {0})};
}

// Random Büchi game: priority-0 vertices of a random parity game form B.
BuchiGame random_buchi(std::uint64_t seed, std::size_t n)
{
    Parity3GenOptions opt;
    opt.n = n;
    opt.m = std::min(n * n, n + (seed * 7) % (3 * n));
    opt.seed = seed;
    opt.p_minus_one = 0;
    opt.p_zero = 0.3;
    Parity3Game p3 = generate_parity3(opt);
    BuchiGame bg{p3.game, VertexSet(n)};
    for (VertexId v = 0; v < n; ++v) {
        if (p3.priority[v] == 0) bg.buchi.insert(v);
    }
    return bg;
}

Parity3Game as_parity(const BuchiGame& bg)
{
    Parity3Game p3{bg.game, std::vector<Priority>(bg.game.vertex_count(), 1)};
    for (VertexId v : bg.buchi) p3.priority[v] = 0;
    return p3;
}

} // namespace

TEST_CASE("solve_buchi examples")
{
    SUBCASE("no Büchi vertex")
    {
        BuchiGame bg = g2_buchi();
        bg.buchi.clear();
        BuchiSolution s = solve_buchi(bg);
        CHECK(s.even_region.empty());
        CHECK(s.odd_region.size() == 2);
    }
    SUBCASE("single Even self-loop in B")
    {
        BuchiGame bg{make_game({0}, {{0, 0}}), set_of(1, {0})};
        BuchiSolution s = solve_buchi(bg);
        CHECK(s.even_region == set_of(1, {0}));
        CHECK(s.even_strategy[0] == 0);
    }
    SUBCASE("Odd avoids B forever")
    {
        BuchiSolution s = solve_buchi(g2_buchi());
        CHECK(s.odd_region == set_of(2, {0, 1}));
        CHECK(s.odd_strategy[1] == 1);
    }
    SUBCASE("dead end is rejected")
    {
        BuchiGame bg{make_game({0, 0}, {{0, 1}}), set_of(2, {0})};
        CHECK_THROWS_AS(solve_buchi(bg), PreconditionError);
    }
}

TEST_CASE("progress_dominions examples")
{
    SUBCASE("no Büchi vertex")
    {
        BuchiGame bg = g2_buchi();
        bg.buchi.clear();
        CHECK(progress_dominions(bg, 2).region.empty());
    }
    SUBCASE("two-cycle of Even vertices")
    {
        BuchiGame bg{make_game({0, 0}, {{0, 1}, {1, 0}}), set_of(2, {0})};
        DominionResult d = progress_dominions(bg, 2);
        CHECK(d.region == set_of(2, {0, 1}));
        CHECK(d.strategy[0] == 1);
        CHECK(d.strategy[1] == 0);
    }
    SUBCASE("Odd self-loop outside B")
    {
        CHECK(progress_dominions(g2_buchi(), 2).region.empty());
    }
    SUBCASE("bound zero is rejected")
    {
        CHECK_THROWS_AS(progress_dominions(g2_buchi(), 0), PreconditionError);
    }
    SUBCASE("a dominion larger than h is missed")
    {
        // Even cycle 0 -> 1 -> 2 -> 0 with B = {0}: one dominion of size 3.
        BuchiGame bg{make_game({0, 0, 0}, {{0, 1}, {1, 2}, {2, 0}}), set_of(3, {0})};
        CHECK(progress_dominions(bg, 1).region.empty());
        CHECK(progress_dominions(bg, 2).region.size() == 3);
    }
}

TEST_CASE("Büchi solutions verify and progress measures recover W_E at h = n")
{
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        std::size_t n = 1 + seed % 64;
        BuchiGame bg = random_buchi(seed, n);
        BuchiSolution s = solve_buchi(bg);
        Parity3Solution as_p3{s.even_region, s.odd_region, s.even_strategy, s.odd_strategy, {}};
        CheckResult bad = verify_parity3_strategies(as_parity(bg), as_p3);
        REQUIRE_MESSAGE(!bad, (bad ? bad->what : ""));

        WorkCounters w;
        DominionResult full = progress_dominions(bg, n, &w);
        REQUIRE(full.region == s.even_region);
        REQUIRE(w.lift_steps <= 4 * bg.game.edge_count() * n);
    }
}

TEST_CASE("progress_dominions output is an Even dominion and grows with h")
{
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        std::size_t n = 2 + seed % 30;
        BuchiGame bg = random_buchi(seed * 31, n);
        VertexSet previous(n);
        for (std::uint64_t h = 1; h <= n; ++h) {
            WorkCounters w;
            DominionResult d = progress_dominions(bg, h, &w);
            REQUIRE(w.lift_steps <= 4 * bg.game.edge_count() * h);
            REQUIRE(previous.is_subset_of(d.region));
            REQUIRE(is_closed(bg.game, Player::Odd, d.region));
            for (VertexId v : d.region) {
                if (bg.game.owner(v) != Player::Even) continue;
                REQUIRE(d.strategy.defined(v));
                REQUIRE(bg.game.has_edge(v, d.strategy[v]));
                REQUIRE(d.region.contains(d.strategy[v]));
            }
            // Even wins everywhere in F while staying inside F.
            BuchiGame sub{bg.game, bg.buchi};
            for (VertexId v = 0; v < n; ++v) {
                if (!d.region.contains(v)) sub.game.remove_vertex(v);
            }
            VertexSet b(n);
            for (VertexId v : bg.buchi) {
                if (d.region.contains(v)) b.insert(v);
            }
            if (!d.region.empty()) REQUIRE(solve_buchi(sub.game, b).odd_region.empty());
            previous = d.region;
        }
    }
}
