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

#include "streett/digraph.hpp"
#include "streett/parity3.hpp"
#include "streett/set_data.hpp"
#include "streett/streett.hpp"

namespace streett {

struct WinningRegions {
    VertexSet even;
    VertexSet odd;
};

/// Largest game brute_force_parity3 accepts.
inline constexpr std::size_t kBruteForceLimit = 12;

/**
 * Exhaustive solver: tries every memoryless Even strategy and decides Odd's
 * best reply by cycle analysis. Throws PreconditionError above kBruteForceLimit.
 */
WinningRegions brute_force_parity3(const Parity3Game& p3);

/// The main loop of solve_parity3 with the Büchi solver called every round.
WinningRegions classical_parity3(const Parity3Game& p3);

/// Repeated SCC decomposition with naive bad-vertex recomputation.
StreettSolution basic_streett(const Digraph& g, const StreettPairs& pairs);

} // namespace streett
