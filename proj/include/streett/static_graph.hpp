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
#include <iterator>
#include <vector>

#include "streett/types.hpp"

namespace streett {

/**
 * Adjacency-vector graph over a subset of a larger id space.
 *
 * Used for the per-level subgraphs of the hierarchical decomposition and as
 * a scratch copy for solvers that peel vertices off. Vertices are added
 * explicitly; removal marks the vertex dead and keeps neighbour degree
 * counters exact, while iteration filters out dead entries lazily.
 */
class StaticDigraph {
    class FilteredIterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = VertexId;
        using difference_type = std::ptrdiff_t;
        using pointer = const VertexId*;
        using reference = VertexId;

        FilteredIterator() = default;
        FilteredIterator(const StaticDigraph* g, const VertexId* cur, const VertexId* end)
            : g_(g), cur_(cur), end_(end)
        {
            skip();
        }
        VertexId operator*() const noexcept { return *cur_; }
        FilteredIterator& operator++() noexcept
        {
            ++cur_;
            skip();
            return *this;
        }
        FilteredIterator operator++(int) noexcept
        {
            FilteredIterator tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const FilteredIterator& o) const noexcept { return cur_ == o.cur_; }

    private:
        void skip() noexcept
        {
            while (cur_ != end_ && !g_->alive(*cur_)) ++cur_;
        }
        const StaticDigraph* g_ = nullptr;
        const VertexId* cur_ = nullptr;
        const VertexId* end_ = nullptr;
    };

    struct Range {
        FilteredIterator first, last;
        FilteredIterator begin() const noexcept { return first; }
        FilteredIterator end() const noexcept { return last; }
    };

public:
    StaticDigraph() = default;
    explicit StaticDigraph(std::size_t capacity)
        : out_(capacity), in_(capacity), out_deg_(capacity, 0), in_deg_(capacity, 0), alive_(capacity, 0)
    {}

    std::size_t vertex_count() const noexcept { return alive_.size(); }
    std::size_t alive_count() const noexcept { return alive_count_; }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool alive(VertexId v) const noexcept { return v < alive_.size() && alive_[v]; }

    std::size_t out_degree(VertexId v) const noexcept { return out_deg_[v]; }
    std::size_t in_degree(VertexId v) const noexcept { return in_deg_[v]; }

    Range successors(VertexId v) const noexcept { return make_range(out_[v]); }
    Range predecessors(VertexId v) const noexcept { return make_range(in_[v]); }

    void add_vertex(VertexId v)
    {
        if (alive_.at(v)) return;
        alive_[v] = 1;
        ++alive_count_;
    }

    /// Both endpoints must have been added; duplicates are the caller's concern.
    void add_edge(VertexId u, VertexId v)
    {
        out_[u].push_back(v);
        in_[v].push_back(u);
        ++out_deg_[u];
        ++in_deg_[v];
        ++edge_count_;
    }

    void remove_vertex(VertexId v)
    {
        if (!alive(v)) return;
        for (VertexId w : successors(v)) {
            --in_deg_[w];
            --edge_count_;
        }
        for (VertexId u : predecessors(v)) {
            if (u == v) continue; // self-loop already counted above
            --out_deg_[u];
            --edge_count_;
        }
        alive_[v] = 0;
        out_deg_[v] = in_deg_[v] = 0;
        --alive_count_;
    }

    void remove_vertices(const VertexSet& vs)
    {
        for (VertexId v : vs) remove_vertex(v);
    }

    VertexSet alive_vertices() const
    {
        VertexSet out(alive_.size());
        for (VertexId v = 0; v < alive_.size(); ++v) {
            if (alive_[v]) out.insert(v);
        }
        return out;
    }

    /// Induced copy of `g` on its alive vertices, optionally restricted to `subset`.
    template <class G>
    static StaticDigraph induced(const G& g, const VertexSet* subset = nullptr)
    {
        StaticDigraph out(g.vertex_count());
        out.copy_from(g, subset);
        return out;
    }

protected:
    template <class G>
    void copy_from(const G& g, const VertexSet* subset)
    {
        auto keep = [&](VertexId v) { return g.alive(v) && (subset == nullptr || subset->contains(v)); };
        if (subset != nullptr) {
            for (VertexId v : *subset) {
                if (keep(v)) add_vertex(v);
            }
        } else {
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (keep(v)) add_vertex(v);
            }
        }
        for (VertexId v = 0; v < alive_.size(); ++v) {
            if (!alive_[v]) continue;
            for (VertexId w : g.successors(v)) {
                if (alive(w)) add_edge(v, w);
            }
        }
    }

private:
    Range make_range(const std::vector<VertexId>& list) const noexcept
    {
        const VertexId* b = list.data();
        const VertexId* e = b + list.size();
        return {FilteredIterator(this, b, e), FilteredIterator(this, e, e)};
    }

    std::vector<std::vector<VertexId>> out_, in_;
    std::vector<std::uint32_t> out_deg_, in_deg_;
    std::vector<std::uint8_t> alive_;
    std::size_t alive_count_ = 0;
    std::size_t edge_count_ = 0;
};

/// StaticDigraph with vertex ownership; the scratch arena of the game solvers.
class StaticGame : public StaticDigraph {
public:
    StaticGame() = default;
    explicit StaticGame(std::size_t capacity) : StaticDigraph(capacity), owner_(capacity, Player::Even) {}

    Player owner(VertexId v) const noexcept { return owner_[v]; }

    void add_vertex(VertexId v, Player p)
    {
        StaticDigraph::add_vertex(v);
        owner_[v] = p;
    }

    template <class G>
    static StaticGame induced(const G& g, const VertexSet* subset = nullptr)
    {
        StaticGame out(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (g.alive(v)) out.owner_[v] = g.owner(v);
        }
        out.copy_from(g, subset);
        return out;
    }

private:
    std::vector<Player> owner_;
};

} // namespace streett
