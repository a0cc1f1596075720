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

#include "streett/oracles.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "streett/scc.hpp"

namespace streett {

namespace {

using Mask = std::uint32_t;

// closure[v] = vertices reachable from v in one or more steps.
void transitive_closure(std::vector<Mask>& closure)
{
    const std::size_t n = closure.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Mask bit = Mask{1} << k;
        for (std::size_t i = 0; i < n; ++i) {
            if (closure[i] & bit) closure[i] |= closure[k];
        }
    }
}

// Vertices of `on` that lie on a cycle of the subgraph induced by `within`.
Mask cyclic_vertices(const std::vector<Mask>& succ, Mask within, Mask on)
{
    std::vector<Mask> closure(succ.size(), 0);
    for (std::size_t v = 0; v < succ.size(); ++v) {
        if (within >> v & 1) closure[v] = succ[v] & within;
    }
    transitive_closure(closure);
    Mask out = 0;
    for (std::size_t v = 0; v < succ.size(); ++v) {
        if ((on >> v & 1) && (closure[v] >> v & 1)) out |= Mask{1} << v;
    }
    return out;
}

// Vertices that can reach `targets` (targets included).
Mask can_reach(const std::vector<Mask>& succ, Mask targets)
{
    std::vector<Mask> closure(succ);
    transitive_closure(closure);
    Mask out = targets;
    for (std::size_t v = 0; v < succ.size(); ++v) {
        if (closure[v] & targets) out |= Mask{1} << v;
    }
    return out;
}

} // namespace

WinningRegions brute_force_parity3(const Parity3Game& p3)
{
    GameGraph g = checked_copy(p3);
    const std::size_t cap = g.vertex_count();
    if (g.alive_count() > kBruteForceLimit) throw PreconditionError("brute_force_parity3: game too large");

    // Compact ids 0..n-1 over the alive vertices.
    std::vector<VertexId> ids;
    std::vector<VertexId> index(cap, kNoVertex);
    for (VertexId v = 0; v < cap; ++v) {
        if (!g.alive(v)) continue;
        index[v] = static_cast<VertexId>(ids.size());
        ids.push_back(v);
    }
    const std::size_t n = ids.size();
    const Mask all = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
    std::vector<std::vector<VertexId>> out(n);
    Mask minus_one = 0, zero = 0, one = 0;
    Mask owned[2] = {0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        for (VertexId w : g.successors(ids[i])) out[i].push_back(index[w]);
        std::sort(out[i].begin(), out[i].end());
        out[i].erase(std::unique(out[i].begin(), out[i].end()), out[i].end());
        Mask bit = Mask{1} << i;
        Priority p = p3.priority[ids[i]];
        (p == -1 ? minus_one : p == 0 ? zero : one) |= bit;
        owned[static_cast<int>(g.owner(ids[i]))] |= bit;
    }

    // Enumerate the player with fewer memoryless strategies; memoryless
    // determinacy makes either side exact.
    auto count = [&](Player p) {
        long double total = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (owned[static_cast<int>(p)] >> i & 1) total *= static_cast<long double>(out[i].size());
        }
        return total;
    };
    const Player chooser = count(Player::Odd) < count(Player::Even) ? Player::Odd : Player::Even;
    const Mask mine = owned[static_cast<int>(chooser)];

    std::vector<std::size_t> pick(n, 0);
    std::vector<Mask> succ(n, 0);
    Mask won = 0;
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) {
            if (mine >> i & 1) {
                succ[i] = Mask{1} << out[i][pick[i]];
            } else {
                succ[i] = 0;
                for (VertexId w : out[i]) succ[i] |= Mask{1} << w;
            }
        }
        Mask wins;
        if (chooser == Player::Even) {
            // Odd wins from v iff v reaches a cycle through -1 or a cycle of 1s.
            Mask bad = cyclic_vertices(succ, all, minus_one) | cyclic_vertices(succ, one, one);
            wins = all & ~can_reach(succ, bad);
        } else {
            // Even wins from v iff v reaches a cycle through 0 avoiding -1.
            Mask good = cyclic_vertices(succ, all & ~minus_one, zero);
            wins = all & ~can_reach(succ, good);
        }
        won |= wins;
        if (won == all) break;

        std::size_t i = 0;
        for (; i < n; ++i) {
            if (!(mine >> i & 1)) continue;
            if (++pick[i] < out[i].size()) break;
            pick[i] = 0;
        }
        if (i == n) break;
    }

    WinningRegions res{VertexSet(cap), VertexSet(cap)};
    for (std::size_t i = 0; i < n; ++i) {
        bool chooser_wins = won >> i & 1;
        bool even_wins = chooser == Player::Even ? chooser_wins : !chooser_wins;
        (even_wins ? res.even : res.odd).insert(ids[i]);
    }
    return res;
}

WinningRegions classical_parity3(const Parity3Game& p3)
{
    Parity3Solution sol = solve_parity3(p3, Parity3Options{.use_dominion_search = false});
    return {std::move(sol.even_region), std::move(sol.odd_region)};
}

StreettSolution basic_streett(const Digraph& g, const StreettPairs& pairs)
{
    const std::size_t n = g.vertex_count();
    if (pairs.vertex_count() != n) throw PreconditionError("basic_streett: pairs and graph disagree on n");
    StreettSolution sol{VertexSet(n), {}, {}};
    VertexSet satisfying(n);

    auto naive_bad = [&](const VertexSet& s) {
        VertexSet bad(n);
        for (std::uint32_t j = 0; j < pairs.pair_count(); ++j) {
            bool covered = false;
            for (VertexId u : pairs.upper(j)) covered = covered || s.contains(u);
            if (covered) continue;
            for (VertexId v : pairs.lower(j)) {
                if (s.contains(v)) bad.insert(v);
            }
        }
        return bad;
    };

    for (VertexSet& top : sccs(g, g.alive_vertices(), &sol.stats.work)) {
        if (!has_internal_edge(g, top)) continue;
        std::optional<VertexSet> good;
        std::vector<VertexSet> work{top};
        while (!work.empty() && !good) {
            VertexSet s = std::move(work.back());
            work.pop_back();
            VertexSet bad = naive_bad(s);
            if (bad.empty()) {
                good = std::move(s);
                break;
            }
            s.erase_all(bad);
            for (VertexSet& c : sccs(g, s, &sol.stats.work)) {
                if (has_internal_edge(g, c)) work.push_back(std::move(c));
            }
        }
        if (good) satisfying.insert_all(top);
        sol.satisfying_sccs.push_back({std::move(top), std::move(good)});
    }
    std::sort(sol.satisfying_sccs.begin(), sol.satisfying_sccs.end(),
              [](const SccVerdict& a, const SccVerdict& b) { return a.scc.min() < b.scc.min(); });
    sol.winning = reach_to(g, satisfying, nullptr, &sol.stats.work);
    return sol;
}

} // namespace streett
