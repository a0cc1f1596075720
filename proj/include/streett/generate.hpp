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

#include "streett/io.hpp"
#include "streett/parity3.hpp"

namespace streett {

// All generators draw from std::mt19937_64 seeded with `seed` and the
// standard distributions, so output is reproducible per seed and toolchain.

struct Parity3GenOptions {
    std::size_t n = 8;
    std::size_t m = 16; ///< n <= m <= n^2
    std::uint64_t seed = 1;
    double p_minus_one = 1.0 / 3; ///< chance of priority -1
    double p_zero = 1.0 / 3;      ///< chance of priority 0; the rest get 1
    double p_even = 0.5;          ///< chance a vertex is Even-owned
};

/// Simple game: every vertex gets one random out-edge, then distinct random edges up to m.
Parity3Game generate_parity3(const Parity3GenOptions& opt);

struct StreettGenOptions {
    std::size_t n = 8;
    std::size_t m = 16; ///< capped at n^2
    std::size_t k = 2;
    std::uint64_t seed = 1;
    double lower_density = 0.1; ///< chance that a vertex is in L_j
    double upper_density = 0.1; ///< chance that a vertex is in U_j
    bool strongly_connected = false; ///< add the cycle 0 -> 1 -> ... -> n-1 -> 0 first
};

StreettInstance generate_streett(const StreettGenOptions& opt);

/**
 * Path s = 0 -> 1 -> ... -> P = t, fan vertices v_j = P + j (j = 1..k) with
 * edges t -> v_j -> s, and pairs L_j = {s}, U_j = {v_j}. Every accepting
 * cycle must pass through all fan vertices.
 */
StreettInstance figure_nk(std::size_t path_len, std::size_t fan);

} // namespace streett
