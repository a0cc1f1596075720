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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace streett {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

enum class Player : std::uint8_t { Even = 0, Odd = 1 };

constexpr Player opponent(Player p) noexcept
{
    return p == Player::Even ? Player::Odd : Player::Even;
}

inline const char* to_string(Player p) noexcept
{
    return p == Player::Even ? "Even" : "Odd";
}

/// Raised when an input violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Sparse set over the id range [0, capacity).
 *
 * Membership, insertion and erasure are O(1); iteration visits the members
 * in insertion order, except that erase() moves the last member into the
 * vacated slot.
 */
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) : index_(capacity, kAbsent) {}
    VertexSet(std::size_t capacity, std::initializer_list<VertexId> members)
        : VertexSet(capacity, std::span<const VertexId>(members.begin(), members.size()))
    {}
    VertexSet(std::size_t capacity, std::span<const VertexId> members) : index_(capacity, kAbsent)
    {
        for (VertexId v : members) insert(v);
    }

    std::size_t capacity() const noexcept { return index_.size(); }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    bool contains(VertexId v) const noexcept { return v < index_.size() && index_[v] != kAbsent; }

    bool insert(VertexId v)
    {
        if (v >= index_.size()) throw std::out_of_range("VertexSet::insert: id out of range");
        if (index_[v] != kAbsent) return false;
        index_[v] = static_cast<std::uint32_t>(members_.size());
        members_.push_back(v);
        return true;
    }

    bool erase(VertexId v) noexcept
    {
        if (!contains(v)) return false;
        std::uint32_t slot = index_[v];
        VertexId last = members_.back();
        members_[slot] = last;
        index_[last] = slot;
        members_.pop_back();
        index_[v] = kAbsent;
        return true;
    }

    void clear() noexcept
    {
        for (VertexId v : members_) index_[v] = kAbsent;
        members_.clear();
    }

    void insert_all(const VertexSet& other)
    {
        for (VertexId v : other) insert(v);
    }

    void erase_all(const VertexSet& other) noexcept
    {
        for (VertexId v : other) erase(v);
    }

    bool is_subset_of(const VertexSet& other) const noexcept
    {
        return std::all_of(members_.begin(), members_.end(), [&](VertexId v) { return other.contains(v); });
    }

    bool intersects(const VertexSet& other) const noexcept
    {
        const VertexSet& small = size() <= other.size() ? *this : other;
        const VertexSet& large = size() <= other.size() ? other : *this;
        return std::any_of(small.begin(), small.end(), [&](VertexId v) { return large.contains(v); });
    }

    std::span<const VertexId> members() const noexcept { return members_; }
    std::vector<VertexId>::const_iterator begin() const noexcept { return members_.begin(); }
    std::vector<VertexId>::const_iterator end() const noexcept { return members_.end(); }

    std::vector<VertexId> sorted() const
    {
        std::vector<VertexId> out(members_);
        std::sort(out.begin(), out.end());
        return out;
    }

    VertexId min() const noexcept
    {
        return members_.empty() ? kNoVertex : *std::min_element(members_.begin(), members_.end());
    }

    /// Equal iff the member sets agree; capacity is ignored.
    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept
    {
        return a.size() == b.size() && a.is_subset_of(b);
    }

private:
    static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();
    std::vector<VertexId> members_;
    std::vector<std::uint32_t> index_;
};

/// Memoryless strategy: partial map from vertices to a chosen successor.
class Strategy {
public:
    Strategy() = default;
    explicit Strategy(std::size_t capacity) : choice_(capacity, kNoVertex) {}

    std::size_t capacity() const noexcept { return choice_.size(); }
    bool defined(VertexId v) const noexcept { return v < choice_.size() && choice_[v] != kNoVertex; }
    VertexId operator[](VertexId v) const noexcept { return v < choice_.size() ? choice_[v] : kNoVertex; }

    void set(VertexId v, VertexId w) { choice_.at(v) = w; }

    /// First write wins.
    bool set_if_unset(VertexId v, VertexId w)
    {
        if (choice_.at(v) != kNoVertex) return false;
        choice_[v] = w;
        return true;
    }

    void unset(VertexId v) noexcept
    {
        if (v < choice_.size()) choice_[v] = kNoVertex;
    }

    /// Copies every choice of `other` on vertices still unset here.
    void merge(const Strategy& other)
    {
        if (choice_.size() < other.choice_.size()) choice_.resize(other.choice_.size(), kNoVertex);
        for (std::size_t v = 0; v < other.choice_.size(); ++v) {
            if (choice_[v] == kNoVertex) choice_[v] = other.choice_[v];
        }
    }

    std::size_t size() const noexcept
    {
        return static_cast<std::size_t>(
            std::count_if(choice_.begin(), choice_.end(), [](VertexId w) { return w != kNoVertex; }));
    }

    friend bool operator==(const Strategy&, const Strategy&) = default;

private:
    std::vector<VertexId> choice_;
};

/// Witness of a failed check: a short description plus the offending vertices.
struct Violation {
    std::string what;
    std::vector<VertexId> witness;
};

using CheckResult = std::optional<Violation>;

/// Operation counters shared by the solvers; all monotone during a run.
struct WorkCounters {
    std::uint64_t lift_steps = 0;
    std::uint64_t attractor_edge_scans = 0;
    std::uint64_t scc_edge_visits = 0;

    std::uint64_t total() const noexcept { return lift_steps + attractor_edge_scans + scc_edge_visits; }
};

inline unsigned ceil_log2(std::uint64_t x) noexcept
{
    unsigned r = 0;
    while ((std::uint64_t{1} << r) < x) ++r;
    return r;
}

inline std::uint64_t ceil_sqrt(std::uint64_t x) noexcept
{
    std::uint64_t r = 0;
    while (r * r < x) ++r;
    return r;
}

} // namespace streett
