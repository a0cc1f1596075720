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

#include <concepts>
#include <cstddef>

#include "streett/types.hpp"

namespace streett {

/// Read-only directed graph over ids [0, vertex_count()) with an alive mask.
template <class G>
concept DirectedGraph = requires(const G& g, VertexId v) {
    { g.vertex_count() } -> std::convertible_to<std::size_t>;
    { g.alive(v) } -> std::convertible_to<bool>;
    { g.out_degree(v) } -> std::convertible_to<std::size_t>;
    g.successors(v).begin();
    g.predecessors(v).begin();
};

/// DirectedGraph whose vertices carry an owner.
template <class G>
concept GameArena = DirectedGraph<G> && requires(const G& g, VertexId v) {
    { g.owner(v) } -> std::convertible_to<Player>;
};

} // namespace streett
