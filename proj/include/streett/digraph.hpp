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
 * Directed graph with deletion support.
 *
 * Every vertex keeps its out-edges and in-edges in doubly linked lists
 * threaded through the edge records, so removing one edge is O(1) and
 * removing a vertex costs O(degree). Removal preserves the relative order
 * of the remaining entries in every list; algorithms that depend on the
 * in-edge order (the level decomposition of the parity-3 solver) rely on
 * this.
 *
 * Vertex ids are dense in [0, vertex_count()) and never reused; deleted
 * vertices stay addressable with alive() == false.
 */
class Digraph {
    template <bool Out>
    class EdgeIterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = EdgeId;
        using difference_type = std::ptrdiff_t;
        using pointer = const EdgeId*;
        using reference = EdgeId;

        EdgeIterator() = default;
        EdgeIterator(const Digraph* g, EdgeId e) : g_(g), e_(e) {}

        EdgeId operator*() const noexcept { return e_; }
        EdgeIterator& operator++() noexcept
        {
            e_ = Out ? g_->edges_[e_].next_out : g_->edges_[e_].next_in;
            return *this;
        }
        EdgeIterator operator++(int) noexcept
        {
            EdgeIterator tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const EdgeIterator& o) const noexcept { return e_ == o.e_; }

    private:
        const Digraph* g_ = nullptr;
        EdgeId e_ = kNoEdge;
    };

    template <bool Out>
    class NeighborIterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = VertexId;
        using difference_type = std::ptrdiff_t;
        using pointer = const VertexId*;
        using reference = VertexId;

        NeighborIterator() = default;
        NeighborIterator(const Digraph* g, EdgeId e) : g_(g), it_(g, e) {}

        VertexId operator*() const noexcept { return Out ? g_->edges_[*it_].dst : g_->edges_[*it_].src; }
        NeighborIterator& operator++() noexcept
        {
            ++it_;
            return *this;
        }
        NeighborIterator operator++(int) noexcept
        {
            NeighborIterator tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const NeighborIterator& o) const noexcept { return it_ == o.it_; }

    private:
        const Digraph* g_ = nullptr;
        EdgeIterator<Out> it_;
    };

    template <class It>
    struct Range {
        It first, last;
        It begin() const noexcept { return first; }
        It end() const noexcept { return last; }
    };

public:
    using OutEdges = Range<EdgeIterator<true>>;
    using InEdges = Range<EdgeIterator<false>>;
    using Successors = Range<NeighborIterator<true>>;
    using Predecessors = Range<NeighborIterator<false>>;

    Digraph() = default;
    explicit Digraph(std::size_t n) : nodes_(n), alive_count_(n) {}

    std::size_t vertex_count() const noexcept { return nodes_.size(); }
    std::size_t alive_count() const noexcept { return alive_count_; }
    std::size_t edge_count() const noexcept { return edge_count_; }
    /// Upper bound on edge ids ever handed out.
    std::size_t edge_capacity() const noexcept { return edges_.size(); }

    bool alive(VertexId v) const noexcept { return v < nodes_.size() && nodes_[v].alive; }
    bool edge_alive(EdgeId e) const noexcept { return e < edges_.size() && edges_[e].alive; }

    std::size_t out_degree(VertexId v) const noexcept { return nodes_[v].out_deg; }
    std::size_t in_degree(VertexId v) const noexcept { return nodes_[v].in_deg; }

    VertexId source(EdgeId e) const noexcept { return edges_[e].src; }
    VertexId target(EdgeId e) const noexcept { return edges_[e].dst; }

    OutEdges out_edges(VertexId v) const noexcept
    {
        return {EdgeIterator<true>(this, nodes_[v].out_head), EdgeIterator<true>(this, kNoEdge)};
    }
    InEdges in_edges(VertexId v) const noexcept
    {
        return {EdgeIterator<false>(this, nodes_[v].in_head), EdgeIterator<false>(this, kNoEdge)};
    }
    Successors successors(VertexId v) const noexcept
    {
        return {NeighborIterator<true>(this, nodes_[v].out_head), NeighborIterator<true>(this, kNoEdge)};
    }
    Predecessors predecessors(VertexId v) const noexcept
    {
        return {NeighborIterator<false>(this, nodes_[v].in_head), NeighborIterator<false>(this, kNoEdge)};
    }

    /// Appends (u, v) to the tail of Out(u) and In(v). Both ends must be alive.
    EdgeId add_edge(VertexId u, VertexId v);

    /// O(deg(u)).
    bool has_edge(VertexId u, VertexId v) const noexcept;

    void remove_edge(EdgeId e);
    void remove_vertex(VertexId v);
    void remove_vertices(const VertexSet& vs);

    VertexSet alive_vertices() const;

    /// Reorders every in-list stably by `key(source)`; lower keys first.
    template <class Key>
    void stable_sort_in_edges(Key key);

private:
    struct Edge {
        VertexId src, dst;
        EdgeId next_out = kNoEdge, prev_out = kNoEdge;
        EdgeId next_in = kNoEdge, prev_in = kNoEdge;
        bool alive = true;
    };
    struct Node {
        EdgeId out_head = kNoEdge, out_tail = kNoEdge;
        EdgeId in_head = kNoEdge, in_tail = kNoEdge;
        std::uint32_t out_deg = 0, in_deg = 0;
        bool alive = true;
    };

    void unlink_out(EdgeId e) noexcept;
    void unlink_in(EdgeId e) noexcept;
    void relink_in_list(VertexId v, const std::vector<EdgeId>& order) noexcept;

    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::size_t alive_count_ = 0;
    std::size_t edge_count_ = 0;
};

template <class Key>
void Digraph::stable_sort_in_edges(Key key)
{
    std::vector<EdgeId> list;
    for (VertexId v = 0; v < nodes_.size(); ++v) {
        if (!nodes_[v].alive) continue;
        list.clear();
        for (EdgeId e : in_edges(v)) list.push_back(e);
        std::stable_sort(list.begin(), list.end(),
                         [&](EdgeId a, EdgeId b) { return key(edges_[a].src) < key(edges_[b].src); });
        relink_in_list(v, list);
    }
}

/// Game graph: a digraph whose vertices are partitioned between Even and Odd.
class GameGraph : public Digraph {
public:
    GameGraph() = default;
    explicit GameGraph(std::size_t n, Player default_owner = Player::Even)
        : Digraph(n), owner_(n, default_owner)
    {}

    Player owner(VertexId v) const noexcept { return owner_[v]; }
    void set_owner(VertexId v, Player p) { owner_.at(v) = p; }

private:
    std::vector<Player> owner_;
};

using PlainGraph = Digraph;

/**
 * Zero-copy reversal of a graph: successors and predecessors swap roles.
 * The view reads the underlying graph directly, so deletions made to the
 * base are visible through it.
 */
template <class G>
class ReverseView {
public:
    explicit ReverseView(const G& g) noexcept : g_(&g) {}

    const G& base() const noexcept { return *g_; }

    std::size_t vertex_count() const noexcept { return g_->vertex_count(); }
    bool alive(VertexId v) const noexcept { return g_->alive(v); }
    std::size_t out_degree(VertexId v) const noexcept { return g_->in_degree(v); }
    std::size_t in_degree(VertexId v) const noexcept { return g_->out_degree(v); }
    auto successors(VertexId v) const noexcept { return g_->predecessors(v); }
    auto predecessors(VertexId v) const noexcept { return g_->successors(v); }

private:
    const G* g_;
};

template <class G>
ReverseView<G> reverse_view(const G& g) noexcept
{
    return ReverseView<G>(g);
}

template <class G>
const G& reverse_view(const ReverseView<G>& r) noexcept
{
    return r.base();
}

} // namespace streett
