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

#include <cassert>
#include <limits>
#include <vector>

#include "streett/concepts.hpp"
#include "streett/types.hpp"

namespace streett {

struct Attractor {
    VertexSet region;
    /// Attractor strategy of the attracting player on region \ target.
    Strategy strategy;
};

/**
 * True iff `set` is p-closed in the arena: every p-vertex in the set has
 * all successors inside, every opponent vertex has at least one.
 */
template <GameArena G>
bool is_closed(const G& g, Player p, const VertexSet& set)
{
    for (VertexId v : set) {
        bool any_inside = false, all_inside = true;
        for (VertexId w : g.successors(v)) {
            if (set.contains(w)) any_inside = true;
            else all_inside = false;
        }
        if (g.owner(v) == p ? !all_inside : !any_inside) return false;
    }
    return true;
}

/**
 * Attr_p(target) in the arena, by backward propagation with per-vertex
 * remaining-out-degree counters. Each vertex's counter is initialised the
 * first time one of its successors joins the region, so the edge work is
 * proportional to the in-degrees of the attracted vertices.
 *
 * Target vertices that are not alive in the arena are ignored.
 */
template <GameArena G>
Attractor attractor(const G& g, Player p, const VertexSet& target, WorkCounters* work = nullptr)
{
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
    const std::size_t n = g.vertex_count();
    Attractor out{VertexSet(n), Strategy(n)};
    std::vector<std::uint32_t> remaining(n, kUnset);
    std::vector<VertexId> queue;
    queue.reserve(target.size());
    for (VertexId v : target) {
        if (g.alive(v) && out.region.insert(v)) queue.push_back(v);
    }
    std::uint64_t scans = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId w = queue[head];
        for (VertexId u : g.predecessors(w)) {
            ++scans;
            if (!g.alive(u) || out.region.contains(u)) continue;
            if (g.owner(u) == p) {
                out.region.insert(u);
                out.strategy.set(u, w);
                queue.push_back(u);
            } else {
                if (remaining[u] == kUnset) remaining[u] = static_cast<std::uint32_t>(g.out_degree(u));
                if (--remaining[u] == 0) {
                    out.region.insert(u);
                    queue.push_back(u);
                }
            }
        }
    }
    if (work != nullptr) work->attractor_edge_scans += scans;
#ifdef STREETT_EXPENSIVE_CHECKS
    {
        VertexSet rest(n);
        for (VertexId v = 0; v < n; ++v) {
            if (g.alive(v) && !out.region.contains(v)) rest.insert(v);
        }
        assert(is_closed(g, p, rest));
    }
#endif
    return out;
}

/// Smallest-id successor of v inside `set`, or kNoVertex.
template <DirectedGraph G>
VertexId min_successor_in(const G& g, VertexId v, const VertexSet& set)
{
    VertexId best = kNoVertex;
    for (VertexId w : g.successors(v)) {
        if (set.contains(w) && w < best) best = w;
    }
    return best;
}

} // namespace streett
