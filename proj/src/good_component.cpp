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

#include "streett/good_component.hpp"

#include <deque>
#include <stdexcept>

namespace streett {

void GoodComponentStats::merge(const GoodComponentStats& other)
{
    work.lift_steps += other.work.lift_steps;
    work.attractor_edge_scans += other.work.attractor_edge_scans;
    work.scc_edge_visits += other.work.scc_edge_visits;
    iterations += other.iterations;
    splits += other.splits;
    bad_removed += other.bad_removed;
    if (split_charges.size() < other.split_charges.size()) split_charges.resize(other.split_charges.size(), 0);
    for (std::size_t v = 0; v < other.split_charges.size(); ++v) split_charges[v] += other.split_charges[v];
    split_size_violations += other.split_size_violations;
    charge_violations += other.charge_violations;
    set_data_work_violations += other.set_data_work_violations;
    unsound_removals += other.unsound_removals;
    split_scc_violations += other.split_scc_violations;
}

SearchOutcome lockstep_split(const Digraph& g, const VertexSet& s, WorkCounters* work)
{
    const unsigned levels = std::max(1u, ceil_log2(s.size()));
    const auto rev = reverse_view(g);
    SearchOutcome out;
    for (unsigned i = 1; i <= levels; ++i) {
        for (SearchDirection dir : {SearchDirection::Forward, SearchDirection::Reverse}) {
            std::optional<VertexSet> x = dir == SearchDirection::Forward ? bounded_bottom_scc(g, s, i, work)
                                                                         : bounded_bottom_scc(rev, s, i, work);
            if (!x) continue;
            if (x->size() == s.size()) {
                out.kind = SearchOutcome::Kind::WholeSetStronglyConnected;
                out.level = i;
                out.direction = dir;
                return out;
            }
            if (2 * x->size() <= s.size()) {
                out.kind = SearchOutcome::Kind::SplitFound;
                out.split = std::move(*x);
                out.level = i;
                out.direction = dir;
                return out;
            }
        }
    }
    return out;
}

bool is_good_component(const Digraph& g, const StreettPairs& pairs, const VertexSet& x)
{
    if (x.empty()) return false;
    for (VertexId v : x) {
        if (!g.alive(v)) return false;
    }
    std::vector<VertexSet> comps = sccs(g, x);
    if (comps.size() != 1 || !has_internal_edge(g, x)) return false;
    for (std::uint32_t j = 0; j < pairs.pair_count(); ++j) {
        bool meets_lower = false, meets_upper = false;
        for (VertexId v : pairs.lower(j)) meets_lower = meets_lower || x.contains(v);
        for (VertexId v : pairs.upper(j)) meets_upper = meets_upper || x.contains(v);
        if (meets_lower && !meets_upper) return false;
    }
    return true;
}

namespace {

struct QueuedSet {
    SetData data;
    std::uint64_t budget;
};

QueuedSet make_entry(const StreettPairs& pairs, std::span<const VertexId> members)
{
    return {SetData::construct(pairs, members), kSetDataWorkFactor * (bits(members, pairs) + members.size())};
}

bool naive_bad(const StreettPairs& pairs, const VertexSet& s, VertexId v)
{
    for (const StreettPairs::Membership& m : pairs.memberships(v)) {
        if (m.side != StreettPairs::Side::Lower) continue;
        bool covered = false;
        for (VertexId u : pairs.upper(m.pair)) covered = covered || s.contains(u);
        if (!covered) return true;
    }
    return false;
}

// X must be a bottom SCC of G[S] (forward) or a top SCC (reverse).
bool is_extreme_scc(const Digraph& g, const VertexSet& s, const VertexSet& x, SearchDirection dir)
{
    std::vector<VertexSet> comps = sccs(g, s);
    bool found = false;
    for (const VertexSet& c : comps) found = found || c == x;
    if (!found) return false;
    for (VertexId v : x) {
        if (dir == SearchDirection::Forward) {
            for (VertexId w : g.successors(v)) {
                if (s.contains(w) && !x.contains(w)) return false;
            }
        } else {
            for (VertexId u : g.predecessors(v)) {
                if (s.contains(u) && !x.contains(u)) return false;
            }
        }
    }
    return true;
}

void cut_cross_edges(Digraph& h, const VertexSet& x)
{
    std::vector<EdgeId> cut;
    for (VertexId v : x) {
        for (EdgeId e : h.out_edges(v)) {
            if (!x.contains(h.target(e))) cut.push_back(e);
        }
        for (EdgeId e : h.in_edges(v)) {
            if (!x.contains(h.source(e))) cut.push_back(e);
        }
    }
    for (EdgeId e : cut) h.remove_edge(e);
}

} // namespace

std::optional<VertexSet> good_component(const Digraph& g, const StreettPairs& pairs, const VertexSet& s0,
                                        GoodComponentStats* stats, const GoodComponentOptions& options)
{
    const std::size_t n = g.vertex_count();
    if (pairs.vertex_count() != n) throw PreconditionError("good_component: pairs and graph disagree on n");
    GoodComponentStats local;
    GoodComponentStats& st = stats != nullptr ? *stats : local;
    if (st.split_charges.size() < n) st.split_charges.resize(n, 0);
    const std::uint32_t charge_limit = ceil_log2(s0.size());

    // Private copy of G[S0]; bad vertices and cross edges get deleted from it.
    Digraph h(n);
    for (VertexId v = 0; v < n; ++v) {
        if (!s0.contains(v) || !g.alive(v)) h.remove_vertex(v);
    }
    for (VertexId v : s0) {
        if (!g.alive(v)) continue;
        for (VertexId w : g.successors(v)) {
            if (s0.contains(w) && g.alive(w)) h.add_edge(v, w);
        }
    }

    std::deque<QueuedSet> queue;
    {
        std::vector<VertexId> start;
        for (VertexId v : s0) {
            if (h.alive(v)) start.push_back(v);
        }
        queue.push_back(make_entry(pairs, start));
    }

    std::vector<std::span<const VertexId>> view;
    while (!queue.empty()) {
        ++st.iterations;
        if (options.on_iteration) {
            view.clear();
            for (const QueuedSet& q : queue) view.push_back(q.data.members());
            options.on_iteration(view);
        }
        QueuedSet cur = std::move(queue.front());
        queue.pop_front();
        SetData& d = cur.data;

        while (!d.bad().empty()) {
            std::vector<VertexId> bad(d.bad().begin(), d.bad().end());
            if (options.expensive_checks) {
                VertexSet s(n, d.members());
                for (VertexId v : bad) {
                    if (!naive_bad(pairs, s, v)) ++st.unsound_removals;
                }
            }
            d.remove(bad);
            for (VertexId v : bad) h.remove_vertex(v);
            st.bad_removed += bad.size();
        }

        VertexSet s(n, d.members());
        if (s.empty() || !has_internal_edge(h, s)) {
            if (d.work() > cur.budget) ++st.set_data_work_violations;
            continue;
        }

        SearchOutcome found = lockstep_split(h, s, &st.work);
        if (found.kind == SearchOutcome::Kind::WholeSetStronglyConnected) {
            if (d.work() > cur.budget) ++st.set_data_work_violations;
            return s;
        }
        if (found.kind != SearchOutcome::Kind::SplitFound) {
            throw std::logic_error("good_component: lock-step search found neither a split nor the whole set");
        }

        const VertexSet& x = found.split;
        ++st.splits;
        if (found.level > 1 && x.size() < (std::size_t{1} << (found.level - 1))) ++st.split_size_violations;
        if (options.expensive_checks && !is_extreme_scc(h, s, x, found.direction)) ++st.split_scc_violations;
        for (VertexId v : x) {
            if (++st.split_charges[v] > charge_limit) ++st.charge_violations;
        }
        cut_cross_edges(h, x);
        d.remove(x);
        queue.push_back(std::move(cur));
        queue.push_back(make_entry(pairs, x.members()));
    }
    return std::nullopt;
}

} // namespace streett
