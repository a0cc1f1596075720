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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "streett/concepts.hpp"
#include "streett/digraph.hpp"
#include "streett/scc.hpp"
#include "streett/set_data.hpp"
#include "streett/static_graph.hpp"
#include "streett/types.hpp"

namespace streett {

/**
 * Level i of the plain decomposition of H[S]: white vertices (out-degree
 * within S at most 2^i) keep their out-edges into S, blue vertices keep none.
 */
struct LevelPlainGraph {
    unsigned level = 0;
    StaticDigraph graph;
    VertexSet blue;
};

template <DirectedGraph G>
LevelPlainGraph level_plain_graph(const G& h, const VertexSet& s, unsigned level)
{
    const std::size_t n = h.vertex_count();
    const std::uint64_t cap = level >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << level);
    LevelPlainGraph out{level, StaticDigraph(n), VertexSet(n)};
    for (VertexId v : s) {
        if (h.alive(v)) out.graph.add_vertex(v);
    }
    std::vector<VertexId> kept;
    for (VertexId v : s) {
        if (!h.alive(v)) continue;
        // Stop counting once past the cap so each vertex costs O(2^i).
        kept.clear();
        bool white = true;
        for (VertexId w : h.successors(v)) {
            if (!s.contains(w) || !h.alive(w)) continue;
            if (kept.size() == cap) {
                white = false;
                break;
            }
            kept.push_back(w);
        }
        if (!white) {
            out.blue.insert(v);
            continue;
        }
        for (VertexId w : kept) out.graph.add_edge(v, w);
    }
    return out;
}

/**
 * Z = S \ reach(Bl_i, H_i[S]); the smallest bottom SCC of H_i[Z], or nothing
 * when Z is empty. A returned set is a bottom SCC of H[S] as well.
 */
template <DirectedGraph G>
std::optional<VertexSet> bounded_bottom_scc(const G& h, const VertexSet& s, unsigned level,
                                            WorkCounters* work = nullptr)
{
    LevelPlainGraph lg = level_plain_graph(h, s, level);
    VertexSet to_blue = reach_to(lg.graph, lg.blue, nullptr, work);
    VertexSet z(h.vertex_count());
    for (VertexId v : s) {
        if (lg.graph.alive(v) && !to_blue.contains(v)) z.insert(v);
    }
    if (z.empty()) return std::nullopt;
    return smallest_bottom_scc(lg.graph, z, work);
}

enum class SearchDirection : std::uint8_t { Forward, Reverse };

struct SearchOutcome {
    enum class Kind : std::uint8_t { WholeSetStronglyConnected, SplitFound, Exhausted };
    Kind kind = Kind::Exhausted;
    VertexSet split; ///< the split-off set when kind == SplitFound
    unsigned level = 0;
    SearchDirection direction = SearchDirection::Forward;
};

/**
 * Lock-step search for a small top or bottom SCC of G[S]. Both directions
 * finish level i before level i+1 starts; forward wins ties. G[S] must
 * contain an edge.
 */
SearchOutcome lockstep_split(const Digraph& g, const VertexSet& s, WorkCounters* work = nullptr);

struct GoodComponentStats {
    WorkCounters work;
    std::uint64_t iterations = 0;
    std::uint64_t splits = 0;
    std::uint64_t bad_removed = 0;
    /// Number of times each vertex was in a split-off set.
    std::vector<std::uint32_t> split_charges;
    /// Split sets X found at level i with |X| < 2^(i-1).
    std::uint64_t split_size_violations = 0;
    /// Vertices charged more than ceil(log2 n) times.
    std::uint64_t charge_violations = 0;
    /// SetData instances whose total work exceeded the linear budget.
    std::uint64_t set_data_work_violations = 0;
    /// Expensive checks only: removed vertices that were not bad, split sets that were not top/bottom SCCs.
    std::uint64_t unsound_removals = 0;
    std::uint64_t split_scc_violations = 0;

    void merge(const GoodComponentStats& other);
};

struct GoodComponentOptions {
    /// Recheck every bad removal and every split against naive recomputation.
    bool expensive_checks = false;
    /// Called at the start of each outer iteration with the queued vertex sets.
    std::function<void(std::span<const std::span<const VertexId>>)> on_iteration;
};

/// Work budget of one SetData: total work <= kSetDataWorkFactor * (bits(S0) + |S0|).
inline constexpr std::uint64_t kSetDataWorkFactor = 4;

/**
 * A good component inside G[S0], or nothing if none exists. G[S0] must be
 * strongly connected; G itself is not modified.
 */
std::optional<VertexSet> good_component(const Digraph& g, const StreettPairs& pairs, const VertexSet& s0,
                                        GoodComponentStats* stats = nullptr,
                                        const GoodComponentOptions& options = {});

/// X is a non-trivial SCC of G[X] in which every pair meeting L also meets U.
bool is_good_component(const Digraph& g, const StreettPairs& pairs, const VertexSet& x);

} // namespace streett
