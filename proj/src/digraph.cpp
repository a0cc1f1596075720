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

#include "streett/digraph.hpp"

#include <stdexcept>

namespace streett {

EdgeId Digraph::add_edge(VertexId u, VertexId v)
{
    if (!alive(u) || !alive(v)) throw std::out_of_range("Digraph::add_edge: endpoint missing or deleted");
    auto e = static_cast<EdgeId>(edges_.size());
    Edge& edge = edges_.emplace_back();
    edge.src = u;
    edge.dst = v;

    Node& nu = nodes_[u];
    edge.prev_out = nu.out_tail;
    if (nu.out_tail != kNoEdge) edges_[nu.out_tail].next_out = e;
    else nu.out_head = e;
    nu.out_tail = e;
    ++nu.out_deg;

    Node& nv = nodes_[v];
    edge.prev_in = nv.in_tail;
    if (nv.in_tail != kNoEdge) edges_[nv.in_tail].next_in = e;
    else nv.in_head = e;
    nv.in_tail = e;
    ++nv.in_deg;

    ++edge_count_;
    return e;
}

bool Digraph::has_edge(VertexId u, VertexId v) const noexcept
{
    if (!alive(u)) return false;
    for (VertexId w : successors(u)) {
        if (w == v) return true;
    }
    return false;
}

void Digraph::unlink_out(EdgeId e) noexcept
{
    Edge& edge = edges_[e];
    Node& n = nodes_[edge.src];
    if (edge.prev_out != kNoEdge) edges_[edge.prev_out].next_out = edge.next_out;
    else n.out_head = edge.next_out;
    if (edge.next_out != kNoEdge) edges_[edge.next_out].prev_out = edge.prev_out;
    else n.out_tail = edge.prev_out;
    edge.next_out = edge.prev_out = kNoEdge;
    --n.out_deg;
}

void Digraph::unlink_in(EdgeId e) noexcept
{
    Edge& edge = edges_[e];
    Node& n = nodes_[edge.dst];
    if (edge.prev_in != kNoEdge) edges_[edge.prev_in].next_in = edge.next_in;
    else n.in_head = edge.next_in;
    if (edge.next_in != kNoEdge) edges_[edge.next_in].prev_in = edge.prev_in;
    else n.in_tail = edge.prev_in;
    edge.next_in = edge.prev_in = kNoEdge;
    --n.in_deg;
}

void Digraph::remove_edge(EdgeId e)
{
    if (!edge_alive(e)) return;
    unlink_out(e);
    unlink_in(e);
    edges_[e].alive = false;
    --edge_count_;
}

void Digraph::remove_vertex(VertexId v)
{
    if (!alive(v)) return;
    // Detach out-edges from their targets' in-lists first; this also drops a
    // self-loop from v's own in-list before the second pass.
    EdgeId e = nodes_[v].out_head;
    while (e != kNoEdge) {
        EdgeId next = edges_[e].next_out;
        unlink_in(e);
        edges_[e].alive = false;
        edges_[e].next_out = edges_[e].prev_out = kNoEdge;
        --edge_count_;
        e = next;
    }
    e = nodes_[v].in_head;
    while (e != kNoEdge) {
        EdgeId next = edges_[e].next_in;
        unlink_out(e);
        edges_[e].alive = false;
        edges_[e].next_in = edges_[e].prev_in = kNoEdge;
        --edge_count_;
        e = next;
    }
    Node& n = nodes_[v];
    n = Node{};
    n.alive = false;
    --alive_count_;
}

void Digraph::remove_vertices(const VertexSet& vs)
{
    for (VertexId v : vs) remove_vertex(v);
}

VertexSet Digraph::alive_vertices() const
{
    VertexSet out(nodes_.size());
    for (VertexId v = 0; v < nodes_.size(); ++v) {
        if (nodes_[v].alive) out.insert(v);
    }
    return out;
}

void Digraph::relink_in_list(VertexId v, const std::vector<EdgeId>& order) noexcept
{
    Node& n = nodes_[v];
    n.in_head = n.in_tail = kNoEdge;
    for (EdgeId e : order) {
        Edge& edge = edges_[e];
        edge.prev_in = n.in_tail;
        edge.next_in = kNoEdge;
        if (n.in_tail != kNoEdge) edges_[n.in_tail].next_in = e;
        else n.in_head = e;
        n.in_tail = e;
    }
}

} // namespace streett
