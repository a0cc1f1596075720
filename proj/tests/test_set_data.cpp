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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "streett/set_data.hpp"
#include "test_util.hpp"

using namespace streett;
using namespace streett::test;

namespace {

// L_0 = {1}, U_0 = {2}; L_1 = {3}, U_1 = {3}.
StreettPairs example_pairs()
{
    StreettPairs p(4, 2);
    p.add(0, StreettPairs::Side::Lower, 1);
    p.add(0, StreettPairs::Side::Upper, 2);
    p.add(1, StreettPairs::Side::Lower, 3);
    p.add(1, StreettPairs::Side::Upper, 3);
    return p;
}

std::vector<VertexId> sorted(std::span<const VertexId> s)
{
    std::vector<VertexId> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> naive_bad(const StreettPairs& pairs, const std::vector<VertexId>& s)
{
    std::vector<VertexId> out;
    for (VertexId v : s) {
        for (std::uint32_t j = 0; j < pairs.pair_count(); ++j) {
            if (!pairs.in_lower(j, v)) continue;
            bool covered = std::any_of(s.begin(), s.end(), [&](VertexId u) { return pairs.in_upper(j, u); });
            if (!covered) {
                out.push_back(v);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("bits")
{
    StreettPairs p = example_pairs();
    CHECK(p.total_bits() == 4);
    CHECK(bits(VertexSet(4), p) == 0);
    CHECK(bits(set_of(4, {1, 2, 3}), p) == 4);
    CHECK(bits(set_of(4, {3}), p) == 2);
}

TEST_CASE("duplicate memberships are ignored")
{
    StreettPairs p = example_pairs();
    p.add(0, StreettPairs::Side::Lower, 1);
    CHECK(p.total_bits() == 4);
    CHECK(p.memberships(1).size() == 1);
}

TEST_CASE("construct")
{
    StreettPairs p = example_pairs();
    SUBCASE("empty set")
    {
        SetData d = SetData::construct(p, VertexSet(4));
        CHECK(d.upper_count(0) == 0);
        CHECK(d.upper_count(1) == 0);
        CHECK(d.bad().empty());
    }
    SUBCASE("everything covered")
    {
        SetData d = SetData::construct(p, set_of(4, {1, 2, 3}));
        CHECK(d.upper_count(0) == 1);
        CHECK(d.upper_count(1) == 1);
        CHECK(d.bad().empty());
    }
    SUBCASE("pair 0 uncovered")
    {
        SetData d = SetData::construct(p, set_of(4, {1, 3}));
        CHECK(d.upper_count(0) == 0);
        CHECK(d.upper_count(1) == 1);
        CHECK(sorted(d.bad()) == std::vector<VertexId>{1});
    }
    SUBCASE("empty U_j makes its L_j bad from the start")
    {
        StreettPairs q(3, 1);
        q.add(0, StreettPairs::Side::Lower, 0);
        q.add(0, StreettPairs::Side::Lower, 2);
        SetData d = SetData::construct(q, set_of(3, {0, 1, 2}));
        CHECK(sorted(d.bad()) == std::vector<VertexId>{0, 2});
    }
}

TEST_CASE("remove")
{
    StreettPairs p = example_pairs();
    SetData d = SetData::construct(p, set_of(4, {1, 2, 3}));
    d.remove(VertexSet(4));
    CHECK(d.size() == 3);
    CHECK(d.bad().empty());

    d.remove(set_of(4, {2}));
    CHECK(d.upper_count(0) == 0);
    CHECK(d.upper_count(1) == 1);
    CHECK(sorted(d.bad()) == std::vector<VertexId>{1});

    d.remove(set_of(4, {1}));
    CHECK(d.bad().empty());
    CHECK(sorted(d.members()) == std::vector<VertexId>{3});

    CHECK_THROWS_AS(d.remove(set_of(4, {2})), PreconditionError);
}

TEST_CASE("bad set matches naive recomputation along random removal sequences")
{
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 2000; ++round) {
        std::size_t n = 1 + rng() % 24;
        std::size_t k = rng() % 6;
        StreettPairs pairs(n, k);
        std::bernoulli_distribution lower(0.25), upper(0.15);
        for (std::uint32_t j = 0; j < k; ++j) {
            for (VertexId v = 0; v < n; ++v) {
                if (lower(rng)) pairs.add(j, StreettPairs::Side::Lower, v);
                if (upper(rng)) pairs.add(j, StreettPairs::Side::Upper, v);
            }
        }
        std::vector<VertexId> s;
        for (VertexId v = 0; v < n; ++v) {
            if (rng() % 4 != 0) s.push_back(v);
        }
        const std::uint64_t budget = 4 * (bits(s, pairs) + s.size());
        SetData d = SetData::construct(pairs, s);
        REQUIRE(sorted(d.bad()) == naive_bad(pairs, s));
        while (!s.empty()) {
            std::shuffle(s.begin(), s.end(), rng);
            std::size_t take = 1 + rng() % std::min<std::size_t>(s.size(), 4);
            std::vector<VertexId> gone(s.end() - static_cast<std::ptrdiff_t>(take), s.end());
            s.resize(s.size() - take);
            d.remove(gone);
            REQUIRE(sorted(d.members()) == sorted(s));
            REQUIRE(sorted(d.bad()) == naive_bad(pairs, s));
        }
        REQUIRE(d.work() <= budget);
    }
}
