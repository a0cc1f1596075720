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

#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "streett/attractor.hpp"
#include "streett/concepts.hpp"
#include "streett/digraph.hpp"
#include "streett/static_graph.hpp"
#include "streett/types.hpp"

namespace streett {

/// Büchi game: Even wins a play iff it visits `buchi` infinitely often.
struct BuchiGame {
    GameGraph game;
    VertexSet buchi;
};

struct BuchiSolution {
    VertexSet even_region;
    VertexSet odd_region;
    Strategy even_strategy;
    Strategy odd_strategy;
};

template <GameArena G>
void require_total(const G& g, const char* who)
{
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.alive(v) && g.out_degree(v) == 0) {
            throw PreconditionError(std::string(who) + ": vertex " + std::to_string(v) + " has no successor");
        }
    }
}

/**
 * Classical Büchi solver.
 *
 * Repeats: A = Attr_Even(B); the rest T is Even-closed and avoids B, so
 * Odd wins there by staying inside; remove Attr_Odd(T) and continue until
 * A covers everything left. Worst case O(n·m).
 */
template <GameArena G>
BuchiSolution solve_buchi(const G& arena, const VertexSet& buchi, WorkCounters* work = nullptr)
{
    require_total(arena, "solve_buchi");
    const std::size_t n = arena.vertex_count();
    StaticGame g = StaticGame::induced(arena);
    BuchiSolution sol{VertexSet(n), VertexSet(n), Strategy(n), Strategy(n)};

    for (;;) {
        VertexSet targets(n);
        for (VertexId v : buchi) {
            if (g.alive(v)) targets.insert(v);
        }
        Attractor reach = attractor(g, Player::Even, targets, work);
        VertexSet trap(n);
        for (VertexId v = 0; v < n; ++v) {
            if (g.alive(v) && !reach.region.contains(v)) trap.insert(v);
        }
        if (trap.empty()) {
            sol.even_region = std::move(reach.region);
            for (VertexId v : sol.even_region) {
                if (g.owner(v) != Player::Even) continue;
                if (reach.strategy.defined(v)) sol.even_strategy.set(v, reach.strategy[v]);
                else sol.even_strategy.set(v, min_successor_in(g, v, sol.even_region));
            }
            break;
        }
        for (VertexId v : trap) {
            if (g.owner(v) == Player::Odd) sol.odd_strategy.set(v, min_successor_in(g, v, trap));
        }
        Attractor lost = attractor(g, Player::Odd, trap, work);
        for (VertexId v : lost.region) {
            if (g.owner(v) == Player::Odd && !trap.contains(v)) sol.odd_strategy.set(v, lost.strategy[v]);
            sol.odd_region.insert(v);
        }
        g.remove_vertices(lost.region);
    }
    return sol;
}

inline BuchiSolution solve_buchi(const BuchiGame& bg, WorkCounters* work = nullptr)
{
    return solve_buchi(bg.game, bg.buchi, work);
}

struct DominionResult {
    VertexSet region;
    Strategy strategy;
};

/**
 * Small progress measure for Büchi games with codomain {0..h} ∪ {top}.
 *
 * A vertex keeps a finite rank iff Even can force a visit to B within
 * rank(v) non-B steps forever; the finite part of the least fixpoint is the
 * union of all Even dominions of size at most h.
 *
 * Even vertices cache the smallest successor rank and how many successors
 * attain it; a full rescan happens only when that count drops to zero,
 * which raises the cached minimum, so each vertex rescans at most h + 1
 * times. Odd vertices keep a running maximum. `work->lift_steps` counts
 * edge visits after initialisation and stays below 2·(h+1)·m.
 *
 * Dead ends are allowed for Even (rank top); an Odd dead end is treated
 * as rank 0.
 */
template <GameArena G>
DominionResult progress_dominions(const G& g, const VertexSet& buchi, std::uint64_t h,
                                  WorkCounters* work = nullptr)
{
    if (h == 0) throw PreconditionError("progress_dominions: bound must be positive");
    const std::size_t n = g.vertex_count();
    const std::uint64_t top = h + 1;
    std::vector<std::uint64_t> rank(n, 0), best(n, 0);
    std::vector<std::uint32_t> best_count(n, 0);
    std::vector<std::uint8_t> queued(n, 0);
    std::deque<VertexId> queue;

    for (VertexId v = 0; v < n; ++v) {
        if (!g.alive(v)) continue;
        if (g.owner(v) == Player::Even) {
            best_count[v] = static_cast<std::uint32_t>(g.out_degree(v));
            best[v] = best_count[v] == 0 ? top : 0;
        }
        queue.push_back(v);
        queued[v] = 1;
    }

    auto lifted = [&](VertexId v) -> std::uint64_t {
        std::uint64_t x = best[v];
        if (x >= top) return top;
        if (buchi.contains(v)) return 0;
        return x + 1;
    };
    auto push = [&](VertexId v) {
        if (!queued[v]) {
            queued[v] = 1;
            queue.push_back(v);
        }
    };

    std::uint64_t steps = 0;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        queued[v] = 0;
        std::uint64_t next = lifted(v);
        if (next <= rank[v]) continue;
        std::uint64_t old = rank[v];
        rank[v] = next;
        for (VertexId u : g.predecessors(v)) {
            ++steps;
            if (!g.alive(u)) continue;
            if (g.owner(u) == Player::Odd) {
                if (next > best[u]) {
                    best[u] = next;
                    push(u);
                }
            } else if (old == best[u] && --best_count[u] == 0) {
                std::uint64_t m = top;
                std::uint32_t count = 0;
                for (VertexId w : g.successors(u)) {
                    ++steps;
                    if (rank[w] < m) {
                        m = rank[w];
                        count = 1;
                    } else if (rank[w] == m) {
                        ++count;
                    }
                }
                best[u] = m;
                best_count[u] = count;
                push(u);
            }
        }
    }
    if (work != nullptr) work->lift_steps += steps;

    DominionResult out{VertexSet(n), Strategy(n)};
    for (VertexId v = 0; v < n; ++v) {
        if (g.alive(v) && rank[v] < top) out.region.insert(v);
    }
    for (VertexId v : out.region) {
        if (g.owner(v) != Player::Even) continue;
        VertexId choice = kNoVertex;
        std::uint64_t m = top;
        for (VertexId w : g.successors(v)) {
            if (rank[w] < m || (rank[w] == m && w < choice)) {
                m = rank[w];
                choice = w;
            }
        }
        out.strategy.set(v, choice);
    }
    return out;
}

inline DominionResult progress_dominions(const BuchiGame& bg, std::uint64_t h, WorkCounters* work = nullptr)
{
    return progress_dominions(bg.game, bg.buchi, h, work);
}

} // namespace streett
