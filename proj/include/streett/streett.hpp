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

#include <optional>
#include <vector>

#include "streett/digraph.hpp"
#include "streett/good_component.hpp"
#include "streett/set_data.hpp"
#include "streett/types.hpp"

namespace streett {

/// A non-trivial maximal SCC and, if it is satisfying, a good component inside it.
struct SccVerdict {
    VertexSet scc;
    std::optional<VertexSet> good;
};

struct StreettSolution {
    VertexSet winning;
    /// Non-trivial maximal SCCs ordered by smallest vertex id.
    std::vector<SccVerdict> satisfying_sccs;
    GoodComponentStats stats;
};

/// Vertices from which some infinite path satisfies every Streett pair.
StreettSolution solve_streett(const Digraph& g, const StreettPairs& pairs, const GoodComponentOptions& options = {});

/**
 * DFS artifact over a strongly connected G[X]. Besides the spanning tree
 * with 1-based preorder numbers and lowlinks, each vertex keeps at most one
 * backlink: the first edge on a path realising its lowlink.
 */
struct Jungle {
    VertexId root = kNoVertex;
    std::vector<VertexId> parent;
    std::vector<std::uint32_t> number; ///< 0 outside X
    std::vector<std::uint32_t> lowlink;
    std::vector<VertexId> backlink; ///< target of the backlink edge, kNoVertex if none

    /// Backlink chain from u to the root, u included.
    std::vector<VertexId> chain_to_root(VertexId u) const;
    /// Tree path from the root to u, both included.
    std::vector<VertexId> tree_path(VertexId u) const;
};

/// Throws PreconditionError unless v is in X and G[X] is strongly connected.
Jungle build_jungle(const Digraph& g, const VertexSet& x, VertexId v);

/// stem runs from the start vertex to v; cycle starts and ends at v.
struct Lasso {
    std::vector<VertexId> stem;
    std::vector<VertexId> cycle;
};

/// Size bound asserted on every certificate: 2n(min(n,k)+1) + n vertices over stem and cycle.
std::size_t certificate_size_bound(std::size_t n, std::size_t k);

/**
 * Lasso witnessing an accepting path from x through the good component X.
 * Throws PreconditionError if X is not good or x cannot reach X.
 */
Lasso certificate(const Digraph& g, const StreettPairs& pairs, VertexId x, const VertexSet& good);

CheckResult verify_certificate(const Digraph& g, const StreettPairs& pairs, VertexId x, const Lasso& lasso);

} // namespace streett
