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

#include "streett/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace streett {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line)
{}

namespace {

struct Statement {
    std::size_t line;
    std::vector<std::string> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::vector<std::string> split_ws(std::string_view s)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        std::size_t j = i;
        while (j < s.size() && !is_space(s[j])) ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

// ';'-terminated statements; lines whose first non-blank character is '#' are dropped.
std::vector<Statement> statements(std::string_view text)
{
    std::vector<Statement> out;
    std::string cur;
    std::size_t cur_line = 0, line = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view row = text.substr(pos, eol - pos);
        ++line;
        pos = eol + 1;
        std::size_t first = 0;
        while (first < row.size() && is_space(row[first])) ++first;
        if (first < row.size() && row[first] == '#') continue;
        for (char c : row) {
            if (c == ';') {
                if (split_ws(cur).empty()) throw ParseError(line, "empty statement");
                out.push_back({cur_line, split_ws(cur)});
                cur.clear();
                continue;
            }
            if (cur.empty() && is_space(c)) continue;
            if (cur.empty()) cur_line = line;
            cur.push_back(c);
        }
        if (!cur.empty()) cur.push_back(' ');
    }
    if (!split_ws(cur).empty()) throw ParseError(cur_line, "statement is missing its terminating ';'");
    return out;
}

std::uint64_t parse_number(std::string_view tok, std::size_t line, const char* what)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
    }
    return value;
}

VertexId parse_id(std::string_view tok, std::size_t n, std::size_t line)
{
    std::uint64_t v = parse_number(tok, line, "a vertex id");
    if (v >= n) throw ParseError(line, "vertex id " + std::string(tok) + " out of range");
    return static_cast<VertexId>(v);
}

// Comma-separated id list, or "-" for the empty list.
std::vector<VertexId> parse_id_list(std::string_view s, std::size_t n, std::size_t line, bool allow_empty)
{
    std::vector<VertexId> out;
    if (s == "-" && allow_empty) return out;
    std::size_t i = 0;
    while (i <= s.size()) {
        std::size_t j = s.find(',', i);
        if (j == std::string_view::npos) j = s.size();
        out.push_back(parse_id(s.substr(i, j - i), n, line));
        i = j + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string join_ids(const std::vector<VertexId>& ids, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(ids[i]);
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, std::size_t from)
{
    std::string out;
    for (std::size_t i = from; i < parts.size(); ++i) out += parts[i];
    return out;
}

Parity3Game parse_parity_impl(std::string_view text, bool buchi_only)
{
    std::vector<Statement> st = statements(text);
    if (st.empty()) throw ParseError(0, "missing 'parity <n>;' header");
    const Statement& head = st.front();
    if (head.tokens.size() != 2 || head.tokens[0] != "parity") {
        throw ParseError(head.line, "expected 'parity <n>;' header");
    }
    const std::size_t n = parse_number(head.tokens[1], head.line, "a vertex count");

    std::vector<int> prio(n, 0);
    std::vector<Player> owner(n, Player::Even);
    std::vector<std::vector<VertexId>> succ(n);
    std::vector<std::size_t> seen_at(n, 0);
    for (std::size_t s = 1; s < st.size(); ++s) {
        const Statement& stmt = st[s];
        if (stmt.tokens.size() < 3) throw ParseError(stmt.line, "vertex line needs '<id> <prio> <owner> <succ>,...'");
        VertexId v = parse_id(stmt.tokens[0], n, stmt.line);
        if (seen_at[v] != 0) {
            throw ParseError(stmt.line, "vertex " + std::to_string(v) + " already defined on line " +
                                            std::to_string(seen_at[v]));
        }
        seen_at[v] = stmt.line;
        std::uint64_t p = parse_number(stmt.tokens[1], stmt.line, "a priority");
        if (p < 1 || p > 3) throw ParseError(stmt.line, "priority must be 1, 2 or 3");
        if (buchi_only && p == 1) throw ParseError(stmt.line, "Büchi games allow priorities 2 and 3 only");
        prio[v] = static_cast<int>(p) - 2;
        std::uint64_t o = parse_number(stmt.tokens[2], stmt.line, "an owner");
        if (o > 1) throw ParseError(stmt.line, "owner must be 0 (Even) or 1 (Odd)");
        owner[v] = o == 0 ? Player::Even : Player::Odd;
        if (stmt.tokens.size() == 3) throw ParseError(stmt.line, "vertex " + std::to_string(v) + " has no successors");
        succ[v] = parse_id_list(join(stmt.tokens, 3), n, stmt.line, false);
    }
    for (VertexId v = 0; v < n; ++v) {
        if (seen_at[v] == 0) throw ParseError(0, "vertex " + std::to_string(v) + " is never defined");
    }

    Parity3Game p3{GameGraph(n), std::vector<Priority>(n)};
    for (VertexId v = 0; v < n; ++v) {
        p3.game.set_owner(v, owner[v]);
        p3.priority[v] = static_cast<Priority>(prio[v]);
    }
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId w : succ[v]) p3.game.add_edge(v, w);
    }
    return p3;
}

std::vector<VertexId> sorted_successors(const Digraph& g, VertexId v)
{
    std::vector<VertexId> out(g.successors(v).begin(), g.successors(v).end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexId> sorted_copy(std::span<const VertexId> ids)
{
    std::vector<VertexId> out(ids.begin(), ids.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string_view> lines_of(std::string_view text)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        out.push_back(text.substr(pos, eol - pos));
        pos = eol + 1;
    }
    return out;
}

std::vector<VertexId> parse_id_tokens(const std::vector<std::string>& tok, std::size_t from, std::size_t n,
                                      std::size_t line)
{
    std::vector<VertexId> out;
    for (std::size_t i = from; i < tok.size(); ++i) out.push_back(parse_id(tok[i], n, line));
    return out;
}

} // namespace

Parity3Game parse_parity3(std::string_view text) { return parse_parity_impl(text, false); }

BuchiGame parse_buchi(std::string_view text)
{
    Parity3Game p3 = parse_parity_impl(text, true);
    const std::size_t n = p3.priority.size();
    BuchiGame bg{std::move(p3.game), VertexSet(n)};
    for (VertexId v = 0; v < n; ++v) {
        if (p3.priority[v] == 0) bg.buchi.insert(v);
    }
    return bg;
}

std::string emit_parity3(const Parity3Game& p3)
{
    const GameGraph& g = p3.game;
    std::ostringstream out;
    out << "parity " << g.vertex_count() << ";\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << v << ' ' << p3.priority[v] + 2 << ' ' << (g.owner(v) == Player::Even ? 0 : 1) << ' '
            << join_ids(sorted_successors(g, v), ",") << ";\n";
    }
    return out.str();
}

StreettInstance parse_streett(std::string_view text)
{
    std::vector<Statement> st = statements(text);
    if (st.empty()) throw ParseError(0, "missing 'streett <n> <k>;' header");
    const Statement& head = st.front();
    if (head.tokens.size() != 3 || head.tokens[0] != "streett") {
        throw ParseError(head.line, "expected 'streett <n> <k>;' header");
    }
    const std::size_t n = parse_number(head.tokens[1], head.line, "a vertex count");
    const std::size_t k = parse_number(head.tokens[2], head.line, "a pair count");

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::size_t> pair_line(k, 0);
    StreettInstance inst{Digraph(n), StreettPairs(n, k)};
    for (std::size_t s = 1; s < st.size(); ++s) {
        const Statement& stmt = st[s];
        const std::string& kind = stmt.tokens[0];
        if (kind == "e") {
            if (stmt.tokens.size() != 3) throw ParseError(stmt.line, "edge line must be 'e <u> <v>'");
            edges.emplace_back(parse_id(stmt.tokens[1], n, stmt.line), parse_id(stmt.tokens[2], n, stmt.line));
        } else if (kind == "p") {
            if (stmt.tokens.size() != 4) throw ParseError(stmt.line, "pair line must be 'p <j> L=<ids|-> U=<ids|->'");
            std::uint64_t j = parse_number(stmt.tokens[1], stmt.line, "a pair index");
            if (j >= k) throw ParseError(stmt.line, "pair index " + stmt.tokens[1] + " out of range");
            if (pair_line[j] != 0) {
                throw ParseError(stmt.line, "pair " + stmt.tokens[1] + " already defined on line " +
                                                std::to_string(pair_line[j]));
            }
            pair_line[j] = stmt.line;
            const std::string& l = stmt.tokens[2];
            const std::string& u = stmt.tokens[3];
            if (l.rfind("L=", 0) != 0 || u.rfind("U=", 0) != 0) {
                throw ParseError(stmt.line, "pair line must be 'p <j> L=<ids|-> U=<ids|->'");
            }
            auto pj = static_cast<std::uint32_t>(j);
            for (VertexId v : parse_id_list(std::string_view(l).substr(2), n, stmt.line, true)) {
                inst.pairs.add(pj, StreettPairs::Side::Lower, v);
            }
            for (VertexId v : parse_id_list(std::string_view(u).substr(2), n, stmt.line, true)) {
                inst.pairs.add(pj, StreettPairs::Side::Upper, v);
            }
        } else {
            throw ParseError(stmt.line, "unknown statement '" + kind + "'");
        }
    }
    for (std::size_t j = 0; j < k; ++j) {
        if (pair_line[j] == 0) throw ParseError(0, "pair " + std::to_string(j) + " is never defined");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto [u, v] : edges) inst.graph.add_edge(u, v);
    return inst;
}

std::string emit_streett(const StreettInstance& inst)
{
    const Digraph& g = inst.graph;
    const StreettPairs& pairs = inst.pairs;
    std::ostringstream out;
    out << "streett " << g.vertex_count() << ' ' << pairs.pair_count() << ";\n";
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (!g.alive(u)) continue;
        for (VertexId v : sorted_successors(g, u)) out << "e " << u << ' ' << v << ";\n";
    }
    auto list = [](std::span<const VertexId> ids) {
        std::vector<VertexId> s = sorted_copy(ids);
        return s.empty() ? std::string("-") : join_ids(s, ",");
    };
    for (std::uint32_t j = 0; j < pairs.pair_count(); ++j) {
        out << "p " << j << " L=" << list(pairs.lower(j)) << " U=" << list(pairs.upper(j)) << ";\n";
    }
    return out.str();
}

std::string format_ids(const VertexSet& set) { return join_ids(set.sorted(), " "); }

std::string format_sequence(const std::vector<VertexId>& seq) { return join_ids(seq, " "); }

std::string format_game_solution(const VertexSet& even, const VertexSet& odd, const Strategy& even_strategy,
                                 const Strategy& odd_strategy, const GameGraph& g)
{
    std::ostringstream out;
    out << "W_E: " << format_ids(even) << "\n";
    out << "W_O: " << format_ids(odd) << "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!g.alive(v)) continue;
        const Strategy& s = g.owner(v) == Player::Even ? even_strategy : odd_strategy;
        const VertexSet& region = g.owner(v) == Player::Even ? even : odd;
        if (region.contains(v) && s.defined(v)) out << "sigma " << v << ' ' << s[v] << "\n";
    }
    return out.str();
}

GameSolutionText parse_game_solution(std::string_view text, std::size_t n)
{
    GameSolutionText sol{VertexSet(n), VertexSet(n), Strategy(n)};
    bool have_even = false, have_odd = false;
    std::size_t line = 0;
    for (std::string_view row : lines_of(text)) {
        ++line;
        std::vector<std::string> tok = split_ws(row);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (tok[0] == "W_E:" || tok[0] == "W_O:") {
            bool even = tok[0] == "W_E:";
            bool& have = even ? have_even : have_odd;
            if (have) throw ParseError(line, tok[0] + " given twice");
            have = true;
            for (VertexId v : parse_id_tokens(tok, 1, n, line)) (even ? sol.even : sol.odd).insert(v);
        } else if (tok[0] == "sigma") {
            if (tok.size() != 3) throw ParseError(line, "strategy line must be 'sigma <v> <w>'");
            VertexId v = parse_id(tok[1], n, line);
            if (sol.strategy.defined(v)) throw ParseError(line, "vertex " + tok[1] + " has two strategy lines");
            sol.strategy.set(v, parse_id(tok[2], n, line));
        } else {
            throw ParseError(line, "unexpected '" + tok[0] + "' in game solution");
        }
    }
    if (!have_even || !have_odd) throw ParseError(0, "game solution needs both W_E: and W_O: lines");
    return sol;
}

std::string format_lasso(const Lasso& lasso)
{
    return "stem: " + format_sequence(lasso.stem) + "\ncycle: " + format_sequence(lasso.cycle) + "\n";
}

Lasso parse_lasso(std::string_view text, std::size_t n)
{
    Lasso lasso;
    bool have_stem = false, have_cycle = false;
    std::size_t line = 0;
    for (std::string_view row : lines_of(text)) {
        ++line;
        std::vector<std::string> tok = split_ws(row);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (tok[0] == "stem:" && !have_stem) {
            have_stem = true;
            lasso.stem = parse_id_tokens(tok, 1, n, line);
        } else if (tok[0] == "cycle:" && !have_cycle) {
            have_cycle = true;
            lasso.cycle = parse_id_tokens(tok, 1, n, line);
        } else {
            throw ParseError(line, "unexpected '" + tok[0] + "' in certificate");
        }
    }
    if (!have_stem || !have_cycle) throw ParseError(0, "certificate needs stem: and cycle: lines");
    return lasso;
}

VertexSet parse_streett_solution(std::string_view text, std::size_t n)
{
    VertexSet w(n);
    bool have = false;
    std::size_t line = 0;
    for (std::string_view row : lines_of(text)) {
        ++line;
        std::vector<std::string> tok = split_ws(row);
        if (tok.empty() || tok[0][0] == '#' || tok[0] == "scc:") continue;
        if (tok[0] != "W:" || have) throw ParseError(line, "unexpected '" + tok[0] + "' in Streett solution");
        have = true;
        for (VertexId v : parse_id_tokens(tok, 1, n, line)) w.insert(v);
    }
    if (!have) throw ParseError(0, "Streett solution needs a W: line");
    return w;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace streett
