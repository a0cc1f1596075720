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
#include <vector>

#include "streett/buchi.hpp"
#include "streett/digraph.hpp"
#include "streett/static_graph.hpp"
#include "streett/types.hpp"

namespace streett {

/// Priority of a parity-3 game: -1, 0 or 1 (lowest priority seen infinitely often decides).
using Priority = std::int8_t;

/**
 * Parity-3 game (one-pair Streett objective). Even wins a play iff the
 * lowest priority occurring infinitely often is 0.
 */
struct Parity3Game {
    GameGraph game;
    std::vector<Priority> priority;
};

/// One dominion removal of the main loop.
struct DominionRecord {
    unsigned level = 0; ///< level of the decomposition that produced it; 0 = Büchi solver
    std::size_t dominion_size = 0;
    std::size_t attractor_size = 0;
};

struct RunStats {
    WorkCounters work;
    std::uint64_t buchialg_calls = 0;
    std::uint64_t dominion_search_calls = 0;
    std::size_t initial_vertices = 0;
    std::uint64_t h_max = 0;
    std::vector<DominionRecord> dominions;
    /// Dominions found at level i whose Even attractor is too small for the level.
    std::uint64_t level_bound_violations = 0;
    /// Dominions containing a priority -1 vertex or not Odd-closed in the input game.
    std::uint64_t transfer_violations = 0;
    /// Residual Büchi subgame in which Even still wins (would make the Odd strategy unsound).
    std::uint64_t residual_violations = 0;
};

struct Parity3Solution {
    VertexSet even_region;
    VertexSet odd_region;
    Strategy even_strategy;
    Strategy odd_strategy;
    RunStats stats;
};

/// G' and the Büchi set of the auxiliary Büchi game.
struct AbsorbingGame {
    GameGraph graph;
    VertexSet buchi;
};

/**
 * Level i of the hierarchical decomposition of G': all out-edges of
 * vertices with out-degree <= 2^i, plus the first 2^i in-edges of every
 * vertex. `blue` holds the Odd vertices with out-degree > 2^i.
 */
struct LevelGameGraph {
    unsigned level = 0;
    StaticGame game;
    VertexSet blue;
};

struct DominionSearchResult {
    VertexSet region;
    Strategy strategy;
    unsigned level = 0; ///< 0 when nothing was found
};

struct Parity3Options {
    /// false gives the classical algorithm: every iteration calls the Büchi solver.
    bool use_dominion_search = true;
};

/// Copy of p3.game with out-degrees checked; throws PreconditionError on a dead end.
GameGraph checked_copy(const Parity3Game& p3);

/**
 * Priority -1 vertices become absorbing (single self-loop); B = priority 0.
 * In-lists are reordered so edges from Even-owned sources come first,
 * otherwise keeping insertion order.
 */
AbsorbingGame absorbing_transform(const Parity3Game& p3);

/// Decomposition level over the alive vertices of `gp`; costs O(n·2^i).
LevelGameGraph level_game_graph(const GameGraph& gp, unsigned level);

/**
 * Searches levels 1..ceil(log2(2·h_max)) for a nonempty union of Even
 * dominions in the Büchi game (gp, buchi); returns the first one found.
 */
DominionSearchResult dominion_search(const GameGraph& gp, const VertexSet& buchi, std::uint64_t h_max,
                                     RunStats* stats = nullptr);

Parity3Solution solve_parity3(const Parity3Game& p3, const Parity3Options& options = {});

/**
 * Checks that both strategies win on their regions: Even's restricted play
 * graph on W_E has no cycle through a -1 vertex and no cycle of 1-vertices;
 * Odd's restricted play graph on W_O, minus the -1 vertices, has no cycle
 * through a 0 vertex. Also checks the partition, strategy domains and that
 * neither region can be left against its owner.
 */
CheckResult verify_parity3_strategies(const Parity3Game& p3, const Parity3Solution& sol);

} // namespace streett
