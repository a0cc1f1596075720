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
#include <string>
#include <vector>

namespace streett {

struct BenchRow {
    std::string family;
    std::size_t n = 0, m = 0, k = 0, b = 0;
    std::string solver;
    std::uint64_t lift_steps = 0;
    std::uint64_t attractor_edge_scans = 0;
    std::uint64_t scc_edge_visits = 0;
    std::uint64_t buchialg_calls = 0;
    double wall_ms = 0;
};

/**
 * Families: "dense" (parity-3, m = n^2/4), "parity3" (parity-3, m = 4n),
 * "streett" (random, m = 4n) and "figure-nk" (size = path length).
 * Each instance is solved by the solver and by its baseline.
 */
struct BenchOptions {
    std::string family = "dense";
    std::vector<std::size_t> sizes{100, 200, 400};
    std::uint64_t seed = 1;
    std::size_t k = 8;   ///< pairs (streett) or fan width (figure-nk)
    std::size_t repeat = 1;
};

std::vector<BenchRow> run_bench(const BenchOptions& opt);

std::string format_bench_table(const std::vector<BenchRow>& rows);
std::string format_bench_csv(const std::vector<BenchRow>& rows);

} // namespace streett
