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

#include "streett/parity3.hpp"

#include <algorithm>
#include <string>

#include "streett/attractor.hpp"
#include "streett/scc.hpp"

namespace streett {

GameGraph checked_copy(const Parity3Game& p3)
{
    const GameGraph& g = p3.game;
    if (p3.priority.size() != g.vertex_count()) {
        throw PreconditionError("parity-3 game: priority vector does not match vertex count");
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!g.alive(v)) continue;
        if (p3.priority[v] < -1 || p3.priority[v] > 1) {
            throw PreconditionError("parity-3 game: vertex " + std::to_string(v) + " has priority outside {-1,0,1}");
        }
    }
    require_total(g, "parity-3 game");
    return g;
}

AbsorbingGame absorbing_transform(const Parity3Game& p3)
{
    const GameGraph& g = p3.game;
    const std::size_t n = g.vertex_count();
    AbsorbingGame out{GameGraph(n), VertexSet(n)};
    for (VertexId v = 0; v < n; ++v) {
        out.graph.set_owner(v, g.owner(v));
        if (!g.alive(v)) out.graph.remove_vertex(v);
    }
    // Edge insertion follows g's edge ids so in-lists keep input order.
    for (VertexId v = 0; v < n; ++v) {
        if (g.alive(v) && p3.priority[v] == -1) out.graph.add_edge(v, v);
    }
    for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
        if (!g.edge_alive(e)) continue;
        if (p3.priority[g.source(e)] != -1) out.graph.add_edge(g.source(e), g.target(e));
    }
    out.graph.stable_sort_in_edges([&](VertexId src) { return g.owner(src) == Player::Even ? 0 : 1; });
    for (VertexId v = 0; v < n; ++v) {
        if (g.alive(v) && p3.priority[v] == 0) out.buchi.insert(v);
    }
    return out;
}

LevelGameGraph level_game_graph(const GameGraph& gp, unsigned level)
{
    const std::size_t n = gp.vertex_count();
    const std::uint64_t cap = level >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << level);
    LevelGameGraph out{level, StaticGame(n), VertexSet(n)};
    for (VertexId v = 0; v < n; ++v) {
        if (gp.alive(v)) out.game.add_vertex(v, gp.owner(v));
    }
    for (VertexId v = 0; v < n; ++v) {
        if (!gp.alive(v)) continue;
        if (gp.out_degree(v) <= cap) {
            for (VertexId w : gp.successors(v)) out.game.add_edge(v, w);
        } else if (gp.owner(v) == Player::Odd) {
            out.blue.insert(v);
        }
    }
    // First 2^i in-edges of each vertex; edges from low-degree sources are already in.
    for (VertexId v = 0; v < n; ++v) {
        if (!gp.alive(v)) continue;
        std::uint64_t taken = 0;
        for (VertexId u : gp.predecessors(v)) {
            if (taken++ == cap) break;
            if (gp.out_degree(u) > cap) out.game.add_edge(u, v);
        }
    }
    return out;
}

DominionSearchResult dominion_search(const GameGraph& gp, const VertexSet& buchi, std::uint64_t h_max,
                                     RunStats* stats)
{
    WorkCounters* work = stats != nullptr ? &stats->work : nullptr;
    if (stats != nullptr) ++stats->dominion_search_calls;
    const unsigned levels = std::max(1u, ceil_log2(2 * std::max<std::uint64_t>(h_max, 1)));
    for (unsigned i = 1; i <= levels; ++i) {
        LevelGameGraph lg = level_game_graph(gp, i);
        Attractor escape = attractor(lg.game, Player::Odd, lg.blue, work);
        lg.game.remove_vertices(escape.region);
        DominionResult found = progress_dominions(lg.game, buchi, std::uint64_t{1} << i, work);
        if (!found.region.empty()) return {std::move(found.region), std::move(found.strategy), i};
    }
    return {VertexSet(gp.vertex_count()), Strategy(gp.vertex_count()), 0};
}

namespace {

bool transfers_to_input(const GameGraph& g, const std::vector<Priority>& priority, const VertexSet& d)
{
    for (VertexId v : d) {
        if (priority[v] == -1) return false;
    }
    return is_closed(g, Player::Odd, d);
}

// Odd's strategy on the residual vertex set once no Even dominion remains.
Strategy residual_odd_strategy(const GameGraph& g, const std::vector<Priority>& priority,
                               const VertexSet& buchi, RunStats& stats)
{
    const std::size_t n = g.vertex_count();
    Strategy out(n);
    VertexSet absorbing(n);
    for (VertexId v = 0; v < n; ++v) {
        if (g.alive(v) && priority[v] == -1) absorbing.insert(v);
    }
    VertexSet residual = g.alive_vertices();
    for (VertexId v : absorbing) {
        if (g.owner(v) == Player::Odd) out.set(v, min_successor_in(g, v, residual));
    }
    Attractor to_absorbing = attractor(g, Player::Odd, absorbing, &stats.work);
    for (VertexId v : to_absorbing.region) {
        if (g.owner(v) == Player::Odd && !absorbing.contains(v)) out.set(v, to_absorbing.strategy[v]);
    }
    VertexSet rest(n);
    for (VertexId v : residual) {
        if (!to_absorbing.region.contains(v)) rest.insert(v);
    }
    if (rest.empty()) return out;
    StaticGame sub = StaticGame::induced(g, &rest);
    BuchiSolution inner = solve_buchi(sub, buchi, &stats.work);
    if (!inner.even_region.empty()) ++stats.residual_violations;
    for (VertexId v : rest) {
        if (g.owner(v) == Player::Odd && inner.odd_strategy.defined(v)) out.set(v, inner.odd_strategy[v]);
    }
    return out;
}

} // namespace

Parity3Solution solve_parity3(const Parity3Game& p3, const Parity3Options& options)
{
    GameGraph g = checked_copy(p3);
    AbsorbingGame aux = absorbing_transform(p3);
    GameGraph& gp = aux.graph;
    VertexSet& buchi = aux.buchi;
    const std::size_t n = g.vertex_count();

    Parity3Solution sol{VertexSet(n), VertexSet(n), Strategy(n), Strategy(n), {}};
    RunStats& stats = sol.stats;
    stats.initial_vertices = g.alive_count();
    stats.h_max = ceil_sqrt(stats.initial_vertices);

    for (;;) {
        DominionSearchResult found;
        if (options.use_dominion_search) found = dominion_search(gp, buchi, stats.h_max, &stats);
        if (found.region.empty()) {
            ++stats.buchialg_calls;
            BuchiSolution bs = solve_buchi(gp, buchi, &stats.work);
            found = {std::move(bs.even_region), std::move(bs.even_strategy), 0};
        }
        if (found.region.empty()) break;

        if (!transfers_to_input(g, p3.priority, found.region)) ++stats.transfer_violations;

        Attractor attr = attractor(g, Player::Even, found.region, &stats.work);
        for (VertexId v : found.region) {
            if (g.owner(v) == Player::Even && found.strategy.defined(v)) {
                sol.even_strategy.set_if_unset(v, found.strategy[v]);
            }
        }
        sol.even_strategy.merge(attr.strategy);

        // Level 1 has no lower level to compare against, so only |A| >= 1 is implied there.
        const std::size_t bound = found.level <= 1 ? 0 : (std::size_t{1} << (found.level - 1));
        if (found.level > 0 && attr.region.size() <= bound) ++stats.level_bound_violations;
        stats.dominions.push_back({found.level, found.region.size(), attr.region.size()});

        for (VertexId v : attr.region) {
            sol.even_region.insert(v);
            g.remove_vertex(v);
            gp.remove_vertex(v);
            buchi.erase(v);
        }
    }

    sol.odd_region = g.alive_vertices();
    sol.odd_strategy = residual_odd_strategy(g, p3.priority, buchi, stats);
    return sol;
}

namespace {

// The restricted play graph: `player` moves only along its strategy inside
// `region`, the opponent keeps all edges. Reports escapes along the way.
CheckResult restrict_to_strategy(const Parity3Game& p3, const VertexSet& region, const Strategy& strategy,
                                 Player player, StaticDigraph& out)
{
    const GameGraph& g = p3.game;
    for (VertexId v : region) out.add_vertex(v);
    for (VertexId v : region) {
        if (g.owner(v) == player) {
            VertexId w = strategy[v];
            if (w == kNoVertex) {
                return Violation{std::string(to_string(player)) + " strategy undefined in its winning region", {v}};
            }
            if (!g.has_edge(v, w)) return Violation{"strategy choice is not an edge", {v, w}};
            if (!region.contains(w)) return Violation{"strategy leaves the winning region", {v, w}};
            out.add_edge(v, w);
        } else {
            for (VertexId w : g.successors(v)) {
                if (!region.contains(w)) return Violation{"opponent can escape the winning region", {v, w}};
                out.add_edge(v, w);
            }
        }
    }
    return std::nullopt;
}

// Some vertex of `marked` on a cycle of G[within], reported as that cycle.
CheckResult cycle_through_marked(const StaticDigraph& g, const VertexSet& within, const VertexSet& marked,
                                 const char* what)
{
    for (const VertexSet& comp : sccs(g, within)) {
        bool cyclic = comp.size() > 1 || has_internal_edge(g, comp);
        if (!cyclic) continue;
        for (VertexId v : comp) {
            if (marked.contains(v)) return Violation{what, shortest_cycle_through(g, v, comp)};
        }
    }
    return std::nullopt;
}

} // namespace

CheckResult verify_parity3_strategies(const Parity3Game& p3, const Parity3Solution& sol)
{
    const GameGraph& g = p3.game;
    const std::size_t n = g.vertex_count();
    if (p3.priority.size() != n) return Violation{"priority vector does not match vertex count", {}};
    for (VertexId v = 0; v < n; ++v) {
        if (!g.alive(v)) continue;
        bool e = sol.even_region.contains(v), o = sol.odd_region.contains(v);
        if (e == o) return Violation{e ? "vertex in both winning regions" : "vertex in no winning region", {v}};
    }
    for (const VertexSet* r : {&sol.even_region, &sol.odd_region}) {
        for (VertexId v : *r) {
            if (!g.alive(v)) return Violation{"winning region contains a missing vertex", {v}};
        }
    }

    auto with_priority = [&](const VertexSet& region, auto pred) {
        VertexSet out(n);
        for (VertexId v : region) {
            if (pred(p3.priority[v])) out.insert(v);
        }
        return out;
    };

    {
        StaticDigraph play(n);
        if (auto bad = restrict_to_strategy(p3, sol.even_region, sol.even_strategy, Player::Even, play)) return bad;
        VertexSet minus_one = with_priority(sol.even_region, [](Priority p) { return p == -1; });
        if (auto bad = cycle_through_marked(play, sol.even_region, minus_one,
                                            "Even region: cycle through a priority -1 vertex")) {
            return bad;
        }
        VertexSet ones = with_priority(sol.even_region, [](Priority p) { return p == 1; });
        if (auto bad = cycle_through_marked(play, ones, ones, "Even region: cycle of priority 1 vertices")) {
            return bad;
        }
    }
    {
        StaticDigraph play(n);
        if (auto bad = restrict_to_strategy(p3, sol.odd_region, sol.odd_strategy, Player::Odd, play)) return bad;
        VertexSet no_minus_one = with_priority(sol.odd_region, [](Priority p) { return p != -1; });
        VertexSet zeros = with_priority(sol.odd_region, [](Priority p) { return p == 0; });
        if (auto bad = cycle_through_marked(play, no_minus_one, zeros,
                                            "Odd region: cycle through a priority 0 vertex avoiding -1")) {
            return bad;
        }
    }
    return std::nullopt;
}

} // namespace streett
