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

#include <string>

#include "doctest.h"
#include "streett/io.hpp"
#include "test_util.hpp"

using namespace streett;
using namespace streett::test;

namespace {

std::string data(const std::string& name) { return read_file(std::string(STREETT_TEST_DATA) + "/" + name); }

// Line number of a ParseError, or 0 when parsing succeeds.
template <class F>
std::size_t error_line(F&& parse)
{
    try {
        parse();
    } catch (const ParseError& e) {
        return e.line() == 0 ? std::size_t(-1) : e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("parity round trip on the golden corpus")
{
    for (const char* name : {"single.parity", "random7.parity", "random12.parity"}) {
        CAPTURE(name);
        std::string text = data(name);
        CHECK(emit_parity3(parse_parity3(text)) == text);
    }
    CHECK(emit_parity3(parse_parity3(data("messy.parity"))) == data("messy.parity.canonical"));
}

TEST_CASE("streett round trip on the golden corpus")
{
    for (const char* name : {"two_cycle.streett", "random9.streett", "figure_4_3.streett"}) {
        CAPTURE(name);
        std::string text = data(name);
        CHECK(emit_streett(parse_streett(text)) == text);
    }
}

TEST_CASE("small examples")
{
    Parity3Game p = parse_parity3("parity 1;\n0 2 0 0;\n");
    CHECK(p.game.vertex_count() == 1);
    CHECK(p.game.owner(0) == Player::Even);
    CHECK(p.priority[0] == 0);
    CHECK(p.game.has_edge(0, 0));

    StreettInstance s = parse_streett("streett 2 1;\ne 0 1; e 1 0; p 0 L=0 U=1;\n");
    CHECK(s.graph.edge_count() == 2);
    CHECK(s.pairs.in_lower(0, 0));
    CHECK(s.pairs.in_upper(0, 1));
    CHECK_FALSE(s.pairs.in_upper(0, 0));

    BuchiGame b = parse_buchi("parity 2;\n0 2 0 1;\n1 3 1 0;\n");
    CHECK(b.buchi == set_of(2, {0}));
}

TEST_CASE("parse errors cite the line")
{
    CHECK(error_line([] { parse_parity3(data("no_successors.parity")); }) == 3);
    CHECK(error_line([] { parse_parity3("parity 2;\n0 2 0 1;\n0 2 0 1;\n"); }) == 3);
    CHECK(error_line([] { parse_parity3("parity 1;\n0 4 0 0;\n"); }) == 2);
    CHECK(error_line([] { parse_parity3("parity 1;\n0 2 2 0;\n"); }) == 2);
    CHECK(error_line([] { parse_parity3("parity 1;\n0 2 0 1;\n"); }) == 2);
    CHECK(error_line([] { parse_parity3("parity 2;\n0 2 0 1;\n"); }) != 0);
    CHECK(error_line([] { parse_parity3("streett 1 0;\n"); }) == 1);
    CHECK(error_line([] { parse_buchi("parity 1;\n0 1 0 0;\n"); }) == 2);
    CHECK(error_line([] { parse_streett("streett 2 1;\ne 0 2;\np 0 L=- U=-;\n"); }) == 2);
    CHECK(error_line([] { parse_streett("streett 2 1;\ne 0 1;\np 1 L=- U=-;\n"); }) == 3);
    CHECK(error_line([] { parse_streett("streett 2 1;\ne 0 1;\n"); }) != 0);
    CHECK(error_line([] { parse_streett("streett 2 1;\np 0 L=0 U=-;\np 0 L=- U=-;\n"); }) == 3);
}

TEST_CASE("solution and lasso text")
{
    Parity3Game p = parse_parity3("parity 2;\n0 2 0 1;\n1 3 1 0,1;\n");
    Strategy even(2), odd(2);
    even.set(0, 1);
    odd.set(1, 0);
    std::string text = format_game_solution(set_of(2, {0, 1}), VertexSet(2), even, odd, p.game);
    // Choices outside the owner's region are not printed.
    CHECK(text == "W_E: 0 1\nW_O: \nsigma 0 1\n");
    GameSolutionText back = parse_game_solution(text, 2);
    CHECK(back.even == set_of(2, {0, 1}));
    CHECK(back.odd.empty());
    CHECK(back.strategy[0] == 1);
    CHECK_FALSE(back.strategy.defined(1));

    Lasso l{{0, 2}, {2, 3, 2}};
    CHECK(format_lasso(l) == "stem: 0 2\ncycle: 2 3 2\n");
    Lasso r = parse_lasso(format_lasso(l), 4);
    CHECK(r.stem == l.stem);
    CHECK(r.cycle == l.cycle);

    CHECK(parse_streett_solution("# x\nW: 1 3\nscc: 1 | good: -\n", 4) == set_of(4, {1, 3}));
    CHECK_THROWS_AS(parse_lasso("stem: 0 9\ncycle: 0\n", 4), ParseError);
}
