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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "streett/buchi.hpp"
#include "streett/digraph.hpp"
#include "streett/parity3.hpp"
#include "streett/set_data.hpp"
#include "streett/streett.hpp"

namespace streett {

/// Malformed input; line() is 1-based, 0 when the problem is not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct StreettInstance {
    Digraph graph;
    StreettPairs pairs;
};

/**
 * Parity file: `parity <n>;` then one `<id> <prio> <owner> <succ>,...;` per
 * vertex. On disk priorities are 1, 2, 3 and map to -1, 0, 1 in memory;
 * owner 0 is Even and 1 is Odd. Duplicate successors are merged.
 */
Parity3Game parse_parity3(std::string_view text);
std::string emit_parity3(const Parity3Game& p3);

/// Büchi games use the parity format with priorities 2 (in B) and 3 only.
BuchiGame parse_buchi(std::string_view text);

/**
 * Streett file: `streett <n> <k>;`, edge lines `e <u> <v>;` and exactly one
 * `p <j> L=<ids|-> U=<ids|->;` per pair. Duplicate edges are merged.
 */
StreettInstance parse_streett(std::string_view text);
std::string emit_streett(const StreettInstance& inst);

/// Space-separated ids in ascending order.
std::string format_ids(const VertexSet& set);
std::string format_sequence(const std::vector<VertexId>& seq);

/// `W_E:` / `W_O:` lines followed by `sigma <v> <w>` lines for both strategies.
std::string format_game_solution(const VertexSet& even, const VertexSet& odd, const Strategy& even_strategy,
                                 const Strategy& odd_strategy, const GameGraph& g);

struct GameSolutionText {
    VertexSet even, odd;
    Strategy strategy; ///< both players' choices; owners tell them apart
};
GameSolutionText parse_game_solution(std::string_view text, std::size_t n);

std::string format_lasso(const Lasso& lasso);
Lasso parse_lasso(std::string_view text, std::size_t n);

/// `W:` line of a Streett solution.
VertexSet parse_streett_solution(std::string_view text, std::size_t n);

std::string read_file(const std::string& path);

} // namespace streett
