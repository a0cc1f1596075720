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
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "streett/types.hpp"

namespace streett {

/**
 * k Streett pairs (L_j, U_j) over n vertices, plus the per-vertex list of
 * pair memberships. An accepting infinite path that visits L_j infinitely
 * often must visit U_j infinitely often.
 */
class StreettPairs {
public:
    enum class Side : std::uint8_t { Lower, Upper };
    struct Membership {
        std::uint32_t pair;
        Side side;
    };

    StreettPairs() = default;
    StreettPairs(std::size_t vertex_count, std::size_t pair_count);

    /// Adds v to L_j (Side::Lower) or U_j (Side::Upper); duplicates are ignored.
    void add(std::uint32_t pair, Side side, VertexId v);

    std::size_t vertex_count() const noexcept { return memberships_.size(); }
    std::size_t pair_count() const noexcept { return lower_.size(); }
    /// b = sum over j of |L_j| + |U_j|.
    std::size_t total_bits() const noexcept { return total_bits_; }

    std::span<const VertexId> lower(std::uint32_t j) const { return lower_.at(j); }
    std::span<const VertexId> upper(std::uint32_t j) const { return upper_.at(j); }
    std::span<const Membership> memberships(VertexId v) const { return memberships_.at(v); }

    bool in_lower(std::uint32_t j, VertexId v) const;
    bool in_upper(std::uint32_t j, VertexId v) const;

private:
    std::vector<std::vector<VertexId>> lower_, upper_;
    std::vector<std::vector<Membership>> memberships_;
    std::size_t total_bits_ = 0;
};

/// bits(S) = sum over j of |S ∩ L_j| + |S ∩ U_j|.
std::size_t bits(std::span<const VertexId> set, const StreettPairs& pairs);
inline std::size_t bits(const VertexSet& set, const StreettPairs& pairs)
{
    return bits(set.members(), pairs);
}

/**
 * Bad-vertex bookkeeping for one vertex set S under deletions.
 *
 * Maintains |S ∩ U_j| and S ∩ L_j for every pair touched by S, and the set
 * bad(S) = {v in S | v in L_j and U_j ∩ S empty for some j}. Only pairs that
 * actually meet S are materialised, so construction costs O(bits(S) + |S|)
 * and removing B costs O(bits(B) + |B|) plus the bad insertions it causes;
 * each membership enters the bad set at most once over the lifetime of the
 * structure. Hash containers back the per-pair state, so bounds are
 * expected-time.
 */
class SetData {
public:
    static SetData construct(const StreettPairs& pairs, std::span<const VertexId> members);
    static SetData construct(const StreettPairs& pairs, const VertexSet& members)
    {
        return construct(pairs, members.members());
    }

    /// S <- S \ removed. Throws PreconditionError unless removed ⊆ S.
    void remove(std::span<const VertexId> removed);
    void remove(const VertexSet& removed) { remove(removed.members()); }

    /// The current bad set, without recomputation.
    std::span<const VertexId> bad() const noexcept { return bad_; }

    std::span<const VertexId> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(VertexId v) const { return member_pos_.count(v) != 0; }

    /// |S ∩ U_j|.
    std::size_t upper_count(std::uint32_t j) const;

    /// Elementary steps spent on this structure so far (construction included).
    std::uint64_t work() const noexcept { return work_; }

private:
    struct PairState {
        std::uint32_t upper_count = 0;
        std::unordered_set<VertexId> lower;
    };

    explicit SetData(const StreettPairs& pairs) : pairs_(&pairs) {}

    void mark_bad(VertexId v);
    void unmark_bad(VertexId v);

    const StreettPairs* pairs_;
    std::vector<VertexId> members_;
    std::unordered_map<VertexId, std::uint32_t> member_pos_;
    std::unordered_map<std::uint32_t, PairState> state_;
    std::vector<VertexId> bad_;
    std::unordered_map<VertexId, std::uint32_t> bad_pos_;
    std::uint64_t work_ = 0;
};

} // namespace streett
