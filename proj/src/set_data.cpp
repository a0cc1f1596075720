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

#include "streett/set_data.hpp"

#include <algorithm>
#include <string>

namespace streett {

StreettPairs::StreettPairs(std::size_t vertex_count, std::size_t pair_count)
    : lower_(pair_count), upper_(pair_count), memberships_(vertex_count)
{}

bool StreettPairs::in_lower(std::uint32_t j, VertexId v) const
{
    for (const Membership& m : memberships(v)) {
        if (m.pair == j && m.side == Side::Lower) return true;
    }
    return false;
}

bool StreettPairs::in_upper(std::uint32_t j, VertexId v) const
{
    for (const Membership& m : memberships(v)) {
        if (m.pair == j && m.side == Side::Upper) return true;
    }
    return false;
}

void StreettPairs::add(std::uint32_t pair, Side side, VertexId v)
{
    if (pair >= lower_.size()) throw std::out_of_range("StreettPairs::add: pair index out of range");
    if (v >= memberships_.size()) throw std::out_of_range("StreettPairs::add: vertex out of range");
    if (side == Side::Lower ? in_lower(pair, v) : in_upper(pair, v)) return;
    (side == Side::Lower ? lower_ : upper_)[pair].push_back(v);
    memberships_[v].push_back({pair, side});
    ++total_bits_;
}

std::size_t bits(std::span<const VertexId> set, const StreettPairs& pairs)
{
    std::size_t total = 0;
    for (VertexId v : set) total += pairs.memberships(v).size();
    return total;
}

SetData SetData::construct(const StreettPairs& pairs, std::span<const VertexId> members)
{
    SetData d(pairs);
    d.members_.reserve(members.size());
    for (VertexId v : members) {
        ++d.work_;
        if (!d.member_pos_.emplace(v, static_cast<std::uint32_t>(d.members_.size())).second) continue;
        d.members_.push_back(v);
        for (const StreettPairs::Membership& m : pairs.memberships(v)) {
            ++d.work_;
            PairState& st = d.state_[m.pair];
            if (m.side == StreettPairs::Side::Upper) ++st.upper_count;
            else st.lower.insert(v);
        }
    }
    for (auto& [j, st] : d.state_) {
        if (st.upper_count != 0) continue;
        for (VertexId v : st.lower) {
            ++d.work_;
            d.mark_bad(v);
        }
    }
    return d;
}

void SetData::remove(std::span<const VertexId> removed)
{
    for (VertexId v : removed) {
        if (!contains(v)) {
            throw PreconditionError("SetData::remove: vertex " + std::to_string(v) + " is not in the set");
        }
    }
    for (VertexId v : removed) {
        ++work_;
        auto it = member_pos_.find(v);
        if (it == member_pos_.end()) continue; // listed twice
        std::uint32_t slot = it->second;
        VertexId last = members_.back();
        members_[slot] = last;
        member_pos_[last] = slot;
        members_.pop_back();
        member_pos_.erase(v);
        unmark_bad(v);

        for (const StreettPairs::Membership& m : pairs_->memberships(v)) {
            ++work_;
            PairState& st = state_[m.pair];
            if (m.side == StreettPairs::Side::Lower) {
                st.lower.erase(v);
                continue;
            }
            if (--st.upper_count != 0) continue;
            for (VertexId w : st.lower) {
                ++work_;
                mark_bad(w);
            }
        }
    }
}

std::size_t SetData::upper_count(std::uint32_t j) const
{
    auto it = state_.find(j);
    return it == state_.end() ? 0 : it->second.upper_count;
}

void SetData::mark_bad(VertexId v)
{
    if (bad_pos_.emplace(v, static_cast<std::uint32_t>(bad_.size())).second) bad_.push_back(v);
}

void SetData::unmark_bad(VertexId v)
{
    auto it = bad_pos_.find(v);
    if (it == bad_pos_.end()) return;
    std::uint32_t slot = it->second;
    VertexId last = bad_.back();
    bad_[slot] = last;
    bad_pos_[last] = slot;
    bad_.pop_back();
    bad_pos_.erase(v);
}

} // namespace streett
