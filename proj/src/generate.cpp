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

#include "streett/generate.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>
#include <utility>
#include <vector>

namespace streett {

namespace {

using Edge = std::pair<VertexId, VertexId>;

// Distinct edges: `seeded` first, then random ones until there are m.
std::vector<Edge> random_edges(std::size_t n, std::size_t m, std::vector<Edge> seeded, std::mt19937_64& rng)
{
    std::unordered_set<std::uint64_t> have;
    auto key = [n](Edge e) { return std::uint64_t{e.first} * n + e.second; };
    std::vector<Edge> out;
    for (Edge e : seeded) {
        if (have.insert(key(e)).second) out.push_back(e);
    }
    if (out.size() >= m) return out;
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    if (2 * m <= n * n) {
        while (out.size() < m) {
            Edge e{pick(rng), pick(rng)};
            if (have.insert(key(e)).second) out.push_back(e);
        }
    } else {
        // Dense: shuffle all pairs rather than rejection-sample.
        std::vector<Edge> all;
        all.reserve(n * n);
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = 0; v < n; ++v) all.emplace_back(u, v);
        }
        std::shuffle(all.begin(), all.end(), rng);
        for (Edge e : all) {
            if (out.size() >= m) break;
            if (have.insert(key(e)).second) out.push_back(e);
        }
    }
    return out;
}

} // namespace

Parity3Game generate_parity3(const Parity3GenOptions& opt)
{
    const std::size_t n = opt.n;
    if (n == 0) throw PreconditionError("generate_parity3: n must be positive");
    if (opt.m < n || opt.m > n * n) throw PreconditionError("generate_parity3: need n <= m <= n^2");
    if (opt.p_minus_one < 0 || opt.p_zero < 0 || opt.p_minus_one + opt.p_zero > 1 || opt.p_even < 0 ||
        opt.p_even > 1) {
        throw PreconditionError("generate_parity3: probabilities out of range");
    }
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Parity3Game p3{GameGraph(n), std::vector<Priority>(n)};
    for (VertexId v = 0; v < n; ++v) {
        double r = coin(rng);
        p3.priority[v] = r < opt.p_minus_one ? -1 : r < opt.p_minus_one + opt.p_zero ? 0 : 1;
        p3.game.set_owner(v, coin(rng) < opt.p_even ? Player::Even : Player::Odd);
    }
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    std::vector<Edge> first;
    for (VertexId v = 0; v < n; ++v) first.emplace_back(v, pick(rng));
    std::vector<Edge> edges = random_edges(n, opt.m, std::move(first), rng);
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) p3.game.add_edge(u, v);
    return p3;
}

StreettInstance generate_streett(const StreettGenOptions& opt)
{
    const std::size_t n = opt.n;
    if (n == 0) throw PreconditionError("generate_streett: n must be positive");
    if (opt.lower_density < 0 || opt.lower_density > 1 || opt.upper_density < 0 || opt.upper_density > 1) {
        throw PreconditionError("generate_streett: densities must lie in [0,1]");
    }
    const std::size_t m = std::min(opt.m, n * n);
    std::mt19937_64 rng(opt.seed);
    std::vector<Edge> backbone;
    if (opt.strongly_connected) {
        for (VertexId v = 0; v < n; ++v) backbone.emplace_back(v, static_cast<VertexId>((v + 1) % n));
    }
    std::vector<Edge> edges = random_edges(n, m, std::move(backbone), rng);
    std::sort(edges.begin(), edges.end());

    StreettInstance inst{Digraph(n), StreettPairs(n, opt.k)};
    for (auto [u, v] : edges) inst.graph.add_edge(u, v);
    std::bernoulli_distribution in_lower(opt.lower_density), in_upper(opt.upper_density);
    for (std::uint32_t j = 0; j < opt.k; ++j) {
        for (VertexId v = 0; v < n; ++v) {
            if (in_lower(rng)) inst.pairs.add(j, StreettPairs::Side::Lower, v);
        }
        for (VertexId v = 0; v < n; ++v) {
            if (in_upper(rng)) inst.pairs.add(j, StreettPairs::Side::Upper, v);
        }
    }
    return inst;
}

StreettInstance figure_nk(std::size_t path_len, std::size_t fan)
{
    if (path_len == 0 || fan == 0) throw PreconditionError("figure_nk: path length and fan must be positive");
    const std::size_t n = path_len + 1 + fan;
    StreettInstance inst{Digraph(n), StreettPairs(n, fan)};
    const auto t = static_cast<VertexId>(path_len);
    for (VertexId v = 0; v < t; ++v) inst.graph.add_edge(v, v + 1);
    // Edges go in ascending (u, v) order, the same order a parsed file produces.
    for (std::uint32_t j = 0; j < fan; ++j) inst.graph.add_edge(t, static_cast<VertexId>(path_len + 1 + j));
    for (std::uint32_t j = 0; j < fan; ++j) {
        const auto vj = static_cast<VertexId>(path_len + 1 + j);
        inst.graph.add_edge(vj, 0);
        inst.pairs.add(j, StreettPairs::Side::Lower, 0);
        inst.pairs.add(j, StreettPairs::Side::Upper, vj);
    }
    return inst;
}

} // namespace streett
