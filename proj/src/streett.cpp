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

#include "streett/streett.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "streett/scc.hpp"

namespace streett {

StreettSolution solve_streett(const Digraph& g, const StreettPairs& pairs, const GoodComponentOptions& options)
{
    const std::size_t n = g.vertex_count();
    if (pairs.vertex_count() != n) throw PreconditionError("solve_streett: pairs and graph disagree on n");
    StreettSolution sol{VertexSet(n), {}, {}};
    VertexSet satisfying(n);
    for (VertexSet& comp : sccs(g, g.alive_vertices(), &sol.stats.work)) {
        if (!has_internal_edge(g, comp)) continue;
        std::optional<VertexSet> good = good_component(g, pairs, comp, &sol.stats, options);
        if (good) satisfying.insert_all(comp);
        sol.satisfying_sccs.push_back({std::move(comp), std::move(good)});
    }
    std::sort(sol.satisfying_sccs.begin(), sol.satisfying_sccs.end(),
              [](const SccVerdict& a, const SccVerdict& b) { return a.scc.min() < b.scc.min(); });
    sol.winning = reach_to(g, satisfying, nullptr, &sol.stats.work);
    return sol;
}

std::vector<VertexId> Jungle::chain_to_root(VertexId u) const
{
    std::vector<VertexId> out{u};
    // Each hop either descends a tree edge or jumps to a strictly smaller
    // preorder number, and no vertex repeats.
    std::size_t limit = 0;
    for (std::uint32_t c : number) limit += c != 0;
    while (u != root) {
        u = backlink[u];
        if (u == kNoVertex || out.size() > limit) throw std::logic_error("jungle: broken backlink chain");
        out.push_back(u);
    }
    return out;
}

std::vector<VertexId> Jungle::tree_path(VertexId u) const
{
    std::vector<VertexId> out;
    for (; u != root; u = parent[u]) out.push_back(u);
    out.push_back(root);
    std::reverse(out.begin(), out.end());
    return out;
}

Jungle build_jungle(const Digraph& g, const VertexSet& x, VertexId v)
{
    const std::size_t n = g.vertex_count();
    if (!x.contains(v) || !g.alive(v)) throw PreconditionError("build_jungle: root is not in X");
    Jungle j;
    j.root = v;
    j.parent.assign(n, kNoVertex);
    j.number.assign(n, 0);
    j.lowlink.assign(n, 0);
    j.backlink.assign(n, kNoVertex);

    using It = decltype(g.successors(v).begin());
    struct Frame {
        VertexId u;
        It it, end;
    };
    std::vector<Frame> call;
    std::vector<std::uint8_t> on_stack(n, 0);
    std::uint32_t counter = 0;
    auto open = [&](VertexId u) {
        j.number[u] = j.lowlink[u] = ++counter;
        on_stack[u] = 1;
        auto r = g.successors(u);
        call.push_back({u, r.begin(), r.end()});
    };
    open(v);
    while (!call.empty()) {
        Frame& f = call.back();
        if (f.it != f.end) {
            VertexId w = *f.it;
            ++f.it;
            if (!x.contains(w) || !g.alive(w)) continue;
            VertexId u = f.u;
            if (j.number[w] == 0) {
                j.parent[w] = u;
                open(w); // invalidates f
            } else if (on_stack[w] && j.number[w] < j.lowlink[u]) {
                j.lowlink[u] = j.number[w];
                j.backlink[u] = w;
            }
            continue;
        }
        VertexId u = f.u;
        call.pop_back();
        if (!call.empty()) {
            VertexId p = call.back().u;
            if (j.lowlink[u] < j.lowlink[p]) {
                j.lowlink[p] = j.lowlink[u];
                j.backlink[p] = u;
            }
        }
    }
    for (VertexId u : x) {
        if (j.number[u] == 0) {
            throw PreconditionError("build_jungle: vertex " + std::to_string(u) + " is not reachable from the root");
        }
        if (u != v && j.lowlink[u] >= j.number[u]) {
            throw PreconditionError("build_jungle: X is not strongly connected (at vertex " + std::to_string(u) + ")");
        }
    }
    return j;
}

std::size_t certificate_size_bound(std::size_t n, std::size_t k)
{
    return 2 * n * (std::min(n, k) + 1) + n;
}

namespace {

// DFS path from x to the first vertex of `target`, empty if unreachable.
std::vector<VertexId> dfs_path(const Digraph& g, VertexId x, const VertexSet& target)
{
    const std::size_t n = g.vertex_count();
    if (target.contains(x)) return {x};
    using It = decltype(g.successors(x).begin());
    struct Frame {
        VertexId u;
        It it, end;
    };
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<Frame> call;
    auto open = [&](VertexId u) {
        seen[u] = 1;
        auto r = g.successors(u);
        call.push_back({u, r.begin(), r.end()});
    };
    open(x);
    while (!call.empty()) {
        Frame& f = call.back();
        if (f.it == f.end) {
            call.pop_back();
            continue;
        }
        VertexId w = *f.it;
        ++f.it;
        if (seen[w] || !g.alive(w)) continue;
        if (target.contains(w)) {
            std::vector<VertexId> path;
            for (const Frame& fr : call) path.push_back(fr.u);
            path.push_back(w);
            return path;
        }
        open(w);
    }
    return {};
}

} // namespace

Lasso certificate(const Digraph& g, const StreettPairs& pairs, VertexId x, const VertexSet& good)
{
    const std::size_t n = g.vertex_count();
    if (x >= n || !g.alive(x)) throw PreconditionError("certificate: start vertex does not exist");
    if (!is_good_component(g, pairs, good)) throw PreconditionError("certificate: X is not a good component");
    Lasso lasso;
    lasso.stem = dfs_path(g, x, good);
    if (lasso.stem.empty()) throw PreconditionError("certificate: start vertex cannot reach X");
    const VertexId v = lasso.stem.back();
    Jungle jungle = build_jungle(g, good, v);

    std::vector<VertexId> chosen;
    VertexSet picked(n);
    for (std::uint32_t j = 0; j < pairs.pair_count(); ++j) {
        bool applies = false;
        for (VertexId u : pairs.lower(j)) applies = applies || good.contains(u);
        if (!applies) continue;
        VertexId best = kNoVertex;
        for (VertexId u : pairs.upper(j)) {
            if (good.contains(u)) best = std::min(best, u);
        }
        if (picked.insert(best)) chosen.push_back(best);
    }

    lasso.cycle.push_back(v);
    for (VertexId u : chosen) {
        if (u == v) continue;
        std::vector<VertexId> down = jungle.tree_path(u);
        std::vector<VertexId> up = jungle.chain_to_root(u);
        lasso.cycle.insert(lasso.cycle.end(), down.begin() + 1, down.end());
        lasso.cycle.insert(lasso.cycle.end(), up.begin() + 1, up.end());
    }
    if (lasso.cycle.size() == 1) lasso.cycle = shortest_cycle_through(g, v, good);

    if (lasso.stem.size() + lasso.cycle.size() > certificate_size_bound(n, pairs.pair_count())) {
        throw std::logic_error("certificate: size bound exceeded");
    }
    return lasso;
}

CheckResult verify_certificate(const Digraph& g, const StreettPairs& pairs, VertexId x, const Lasso& lasso)
{
    const std::size_t n = g.vertex_count();
    if (pairs.vertex_count() != n) return Violation{"pairs and graph disagree on n", {}};
    if (lasso.stem.empty()) return Violation{"empty stem", {}};
    if (lasso.stem.front() != x) return Violation{"stem does not start at the start vertex", {lasso.stem.front()}};
    if (lasso.cycle.size() < 2) return Violation{"cycle has no edge", {}};
    if (lasso.stem.back() != lasso.cycle.front()) {
        return Violation{"stem does not end where the cycle starts", {lasso.stem.back(), lasso.cycle.front()}};
    }
    if (lasso.cycle.front() != lasso.cycle.back()) {
        return Violation{"cycle does not close", {lasso.cycle.front(), lasso.cycle.back()}};
    }
    for (const std::vector<VertexId>* seq : {&lasso.stem, &lasso.cycle}) {
        for (VertexId v : *seq) {
            if (v >= n || !g.alive(v)) return Violation{"vertex does not exist", {v}};
        }
        for (std::size_t i = 0; i + 1 < seq->size(); ++i) {
            if (!g.has_edge((*seq)[i], (*seq)[i + 1])) {
                return Violation{"edge does not exist", {(*seq)[i], (*seq)[i + 1]}};
            }
        }
    }
    VertexSet inf(n, lasso.cycle);
    for (std::uint32_t j = 0; j < pairs.pair_count(); ++j) {
        VertexId hit = kNoVertex;
        for (VertexId u : pairs.lower(j)) {
            if (inf.contains(u)) hit = u;
        }
        if (hit == kNoVertex) continue;
        bool covered = false;
        for (VertexId u : pairs.upper(j)) covered = covered || inf.contains(u);
        if (!covered) return Violation{"pair " + std::to_string(j) + " visited in L but not in U", {hit}};
    }
    return std::nullopt;
}

} // namespace streett
