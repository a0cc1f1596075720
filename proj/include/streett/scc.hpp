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

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "streett/concepts.hpp"
#include "streett/types.hpp"

namespace streett {

/**
 * Maximal SCCs of G[within], iterative Tarjan.
 *
 * Components come out in reverse topological order of the condensation,
 * so the first one is always a bottom SCC. DFS roots are taken in the
 * iteration order of `within`.
 */
template <DirectedGraph G>
std::vector<VertexSet> sccs(const G& g, const VertexSet& within, WorkCounters* work = nullptr)
{
    using SuccIt = decltype(g.successors(VertexId{}).begin());
    constexpr std::uint32_t kUnvisited = 0;
    const std::size_t n = g.vertex_count();

    std::vector<std::uint32_t> number(n, kUnvisited), low(n, 0);
    std::vector<std::uint8_t> on_stack(n, 0);
    std::vector<VertexId> stack;
    struct Frame {
        VertexId v;
        SuccIt it, end;
    };
    std::vector<Frame> call;
    std::vector<VertexSet> out;
    std::uint32_t counter = 0;
    std::uint64_t visits = 0;

    auto open = [&](VertexId v) {
        number[v] = low[v] = ++counter;
        stack.push_back(v);
        on_stack[v] = 1;
        auto range = g.successors(v);
        call.push_back(Frame{v, range.begin(), range.end()});
    };

    for (VertexId root : within) {
        if (number[root] != kUnvisited || !g.alive(root)) continue;
        open(root);
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.it != f.end) {
                VertexId w = *f.it;
                ++f.it;
                ++visits;
                if (!within.contains(w) || !g.alive(w)) continue;
                if (number[w] == kUnvisited) {
                    open(w); // invalidates f
                } else if (on_stack[w] && number[w] < low[f.v]) {
                    low[f.v] = number[w];
                }
                continue;
            }
            VertexId v = f.v;
            call.pop_back();
            if (!call.empty() && low[v] < low[call.back().v]) low[call.back().v] = low[v];
            if (low[v] == number[v]) {
                VertexSet comp(n);
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.insert(w);
                } while (w != v);
                out.push_back(std::move(comp));
            }
        }
    }
    if (work != nullptr) work->scc_edge_visits += visits;
    return out;
}

/// True iff G[set] contains at least one edge (so an SCC `set` is non-trivial).
template <DirectedGraph G>
bool has_internal_edge(const G& g, const VertexSet& set)
{
    for (VertexId v : set) {
        for (VertexId w : g.successors(v)) {
            if (set.contains(w)) return true;
        }
    }
    return false;
}

/**
 * A bottom SCC of G[within] of minimum size; ties go to the component with
 * the smallest vertex id. `within` must be nonempty.
 */
template <DirectedGraph G>
VertexSet smallest_bottom_scc(const G& g, const VertexSet& within, WorkCounters* work = nullptr)
{
    std::vector<VertexSet> comps = sccs(g, within, work);
    if (comps.empty()) throw PreconditionError("smallest_bottom_scc: empty vertex set");
    std::vector<std::uint32_t> comp_of(g.vertex_count(), std::numeric_limits<std::uint32_t>::max());
    for (std::uint32_t c = 0; c < comps.size(); ++c) {
        for (VertexId v : comps[c]) comp_of[v] = c;
    }
    std::size_t best = comps.size();
    VertexId best_min = kNoVertex;
    std::uint64_t visits = 0;
    for (std::uint32_t c = 0; c < comps.size(); ++c) {
        if (best < comps.size() && comps[c].size() > comps[best].size()) continue;
        bool bottom = true;
        for (VertexId v : comps[c]) {
            for (VertexId w : g.successors(v)) {
                ++visits;
                if (within.contains(w) && g.alive(w) && comp_of[w] != c) {
                    bottom = false;
                    break;
                }
            }
            if (!bottom) break;
        }
        if (!bottom) continue;
        VertexId m = comps[c].min();
        if (best == comps.size() || comps[c].size() < comps[best].size() || m < best_min) {
            best = c;
            best_min = m;
        }
    }
    if (work != nullptr) work->scc_edge_visits += visits;
    return std::move(comps[best]);
}

/**
 * reach(targets): every alive vertex with a path into `targets` (targets
 * included), by backward search. With `within`, paths are confined to it.
 */
template <DirectedGraph G>
VertexSet reach_to(const G& g, const VertexSet& targets, const VertexSet* within = nullptr,
                   WorkCounters* work = nullptr)
{
    const std::size_t n = g.vertex_count();
    VertexSet seen(n);
    auto admit = [&](VertexId v) { return g.alive(v) && (within == nullptr || within->contains(v)); };
    std::vector<VertexId> queue;
    for (VertexId t : targets) {
        if (admit(t) && seen.insert(t)) queue.push_back(t);
    }
    std::uint64_t visits = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (VertexId u : g.predecessors(queue[head])) {
            ++visits;
            if (admit(u) && seen.insert(u)) queue.push_back(u);
        }
    }
    if (work != nullptr) work->scc_edge_visits += visits;
    return seen;
}

/**
 * Shortest cycle through v inside G[within] as a vertex sequence that
 * starts and ends with v; empty if v lies on no such cycle.
 */
template <DirectedGraph G>
std::vector<VertexId> shortest_cycle_through(const G& g, VertexId v, const VertexSet& within)
{
    const std::size_t n = g.vertex_count();
    std::vector<VertexId> parent(n, kNoVertex);
    std::vector<VertexId> queue{v};
    parent[v] = v;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for (VertexId w : g.successors(u)) {
            if (!within.contains(w) || !g.alive(w)) continue;
            if (w == v) {
                std::vector<VertexId> path{v};
                for (VertexId x = u; x != v; x = parent[x]) path.push_back(x);
                path.push_back(v);
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (parent[w] == kNoVertex) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    return {};
}

} // namespace streett
