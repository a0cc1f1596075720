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

// Command-line front end: solvers, certificates, verification, generators, bench.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "streett/bench.hpp"
#include "streett/generate.hpp"
#include "streett/io.hpp"
#include "streett/oracles.hpp"
#include "streett/parity3.hpp"
#include "streett/scc.hpp"
#include "streett/streett.hpp"

using namespace streett;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

// Thrown for anything that should exit with status 1.
struct VerifyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* kFormats = R"(File formats
  parity:  parity <n>;   then per vertex   <id> <prio> <owner> <succ>,<succ>,...;
           prio 1, 2, 3 stand for -1, 0, 1 (the lowest priority seen infinitely
           often must be 2 for Even to win); owner 0 = Even, 1 = Odd.
  buchi:   parity format with priorities 2 (Büchi vertex) and 3 only.
  streett: streett <n> <k>;   e <u> <v>;   p <j> L=<ids|-> U=<ids|->;
  Lines starting with '#' are comments.
Exit codes: 0 success, 1 verification failure, 2 I/O or parse error.)";

std::string violation_text(const Violation& v)
{
    std::string out = "violation: " + v.what;
    if (!v.witness.empty()) out += " [" + format_sequence(v.witness) + "]";
    return out;
}

void write_output(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

void print_run_stats(const RunStats& st)
{
    std::cout << "# lift_steps " << st.work.lift_steps << "\n"
              << "# attractor_edge_scans " << st.work.attractor_edge_scans << "\n"
              << "# scc_edge_visits " << st.work.scc_edge_visits << "\n"
              << "# buchialg_calls " << st.buchialg_calls << "\n"
              << "# dominions " << st.dominions.size() << "\n";
}

int solve_parity3_cmd(const std::string& path, bool classical, bool stats)
{
    Parity3Game p3 = parse_parity3(read_file(path));
    Parity3Solution sol = solve_parity3(p3, Parity3Options{.use_dominion_search = !classical});
    std::cout << format_game_solution(sol.even_region, sol.odd_region, sol.even_strategy, sol.odd_strategy, p3.game);
    if (stats) print_run_stats(sol.stats);
    return kOk;
}

int solve_buchi_cmd(const std::string& path)
{
    BuchiGame bg = parse_buchi(read_file(path));
    BuchiSolution sol = solve_buchi(bg);
    std::cout << format_game_solution(sol.even_region, sol.odd_region, sol.even_strategy, sol.odd_strategy, bg.game);
    return kOk;
}

int solve_streett_cmd(const std::string& path, bool show_sccs, bool stats)
{
    StreettInstance inst = parse_streett(read_file(path));
    StreettSolution sol = solve_streett(inst.graph, inst.pairs);
    std::cout << "W: " << format_ids(sol.winning) << "\n";
    if (show_sccs) {
        for (const SccVerdict& v : sol.satisfying_sccs) {
            std::cout << "scc: " << format_ids(v.scc) << " | good: " << (v.good ? format_ids(*v.good) : "-") << "\n";
        }
    }
    if (stats) {
        std::cout << "# scc_edge_visits " << sol.stats.work.scc_edge_visits << "\n"
                  << "# splits " << sol.stats.splits << "\n"
                  << "# bad_removed " << sol.stats.bad_removed << "\n";
    }
    return kOk;
}

int certificate_cmd(const std::string& path, VertexId from)
{
    StreettInstance inst = parse_streett(read_file(path));
    const std::size_t n = inst.graph.vertex_count();
    if (from >= n) throw ParseError(0, "--from " + std::to_string(from) + " is not a vertex");
    StreettSolution sol = solve_streett(inst.graph, inst.pairs);
    if (!sol.winning.contains(from)) throw VerifyFailure("vertex " + std::to_string(from) + " is not winning");
    VertexSet reachable = reach_to(reverse_view(inst.graph), VertexSet(n, {from}));
    for (const SccVerdict& v : sol.satisfying_sccs) {
        if (!v.good || !v.good->intersects(reachable)) continue;
        Lasso lasso = certificate(inst.graph, inst.pairs, from, *v.good);
        std::cout << format_lasso(lasso);
        return kOk;
    }
    throw std::logic_error("winning vertex reaches no good component");
}

bool looks_like(const std::string& text, const char* keyword)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        return line.compare(i, std::strlen(keyword), keyword) == 0;
    }
    return false;
}

int verify_cmd(const std::string& instance_path, const std::string& solution_path)
{
    std::string instance = read_file(instance_path);
    std::string solution = read_file(solution_path);
    CheckResult result;
    if (looks_like(instance, "parity")) {
        Parity3Game p3 = parse_parity3(instance);
        GameSolutionText text = parse_game_solution(solution, p3.game.vertex_count());
        Parity3Solution sol{text.even, text.odd, Strategy(p3.game.vertex_count()),
                            Strategy(p3.game.vertex_count()), {}};
        for (VertexId v = 0; v < p3.game.vertex_count(); ++v) {
            if (!text.strategy.defined(v)) continue;
            (p3.game.owner(v) == Player::Even ? sol.even_strategy : sol.odd_strategy).set(v, text.strategy[v]);
        }
        result = verify_parity3_strategies(p3, sol);
    } else if (looks_like(instance, "streett")) {
        StreettInstance inst = parse_streett(instance);
        const std::size_t n = inst.graph.vertex_count();
        if (looks_like(solution, "stem:")) {
            Lasso lasso = parse_lasso(solution, n);
            if (lasso.stem.empty()) throw ParseError(0, "certificate has an empty stem");
            result = verify_certificate(inst.graph, inst.pairs, lasso.stem.front(), lasso);
        } else {
            VertexSet claimed = parse_streett_solution(solution, n);
            VertexSet truth = basic_streett(inst.graph, inst.pairs).winning;
            for (VertexId v = 0; v < n && !result; ++v) {
                if (claimed.contains(v) != truth.contains(v)) {
                    result = Violation{claimed.contains(v) ? "vertex claimed winning but is losing"
                                                           : "winning vertex missing from W",
                                       {v}};
                }
            }
        }
    } else {
        throw ParseError(0, "'" + instance_path + "' is neither a parity nor a Streett file");
    }
    if (result) throw VerifyFailure(violation_text(*result));
    std::cout << "ok\n";
    return kOk;
}

std::vector<std::size_t> parse_sizes(const std::string& list)
{
    std::vector<std::size_t> out;
    std::stringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoul(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError(0, "--sizes expects comma-separated integers, got '" + list + "'");
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Parity-3 and Streett solvers with certificates and benchmarks"};
    app.footer(kFormats);
    app.require_subcommand(1);

    std::string file, solution, output;
    bool with_stats = false, classical = false, show_sccs = false, csv = false;
    VertexId from = 0;

    auto* sp = app.add_subcommand("solve-parity3", "solve a parity-3 game; prints W_E, W_O and strategies");
    sp->add_option("file", file, "parity game file")->required();
    sp->add_flag("--classical", classical, "call the Büchi solver every round instead of searching dominions");
    sp->add_flag("--stats", with_stats, "append operation counters as comment lines");

    auto* sb = app.add_subcommand("solve-buchi", "solve a Büchi game (parity file, priorities 2 and 3)");
    sb->add_option("file", file, "Büchi game file")->required();

    auto* ss = app.add_subcommand("solve-streett", "winning set of a Streett graph");
    ss->add_option("file", file, "Streett file")->required();
    ss->add_flag("--sccs", show_sccs, "also list non-trivial maximal SCCs and their good components");
    ss->add_flag("--stats", with_stats, "append operation counters as comment lines");

    auto* sc = app.add_subcommand("certificate", "lasso certificate for a winning start vertex");
    sc->add_option("file", file, "Streett file")->required();
    sc->add_option("--from", from, "start vertex")->required();

    auto* sv = app.add_subcommand("verify", "check a solution or certificate against its instance");
    sv->add_option("instance", file, "parity or Streett file")->required();
    sv->add_option("solution", solution, "output of solve-* or certificate")->required();

    BenchOptions bench;
    std::string sizes = "100,200,400";
    auto* sbe = app.add_subcommand("bench", "run solver and baseline on a generated family");
    sbe->add_option("--family", bench.family, "dense | parity3 | streett | figure-nk")
        ->check(CLI::IsMember({"dense", "parity3", "streett", "figure-nk"}));
    sbe->add_option("--sizes", sizes, "comma-separated n values (path lengths for figure-nk)");
    sbe->add_option("--seed", bench.seed);
    sbe->add_option("--k", bench.k, "pairs (streett) or fan width (figure-nk)");
    sbe->add_option("--repeat", bench.repeat, "instances per size");
    sbe->add_flag("--csv", csv, "comma-separated output instead of a table");

    Parity3GenOptions gp;
    StreettGenOptions gs;
    std::string kind, family = "random";
    std::size_t n = 8, m = 16, k = 2, path_len = 16, fan = 4;
    std::uint64_t seed = 1;
    auto* sg = app.add_subcommand("generate", "write a random instance");
    sg->add_option("kind", kind, "parity3 | streett")->required()->check(CLI::IsMember({"parity3", "streett"}));
    sg->add_option("--family", family, "random | figure-nk (streett only)")
        ->check(CLI::IsMember({"random", "figure-nk"}));
    sg->add_option("--n", n);
    sg->add_option("--m", m);
    sg->add_option("--k", k);
    sg->add_option("--seed", seed);
    sg->add_option("--p-minus-one", gp.p_minus_one, "parity3: chance of priority 1 on disk (-1)");
    sg->add_option("--p-zero", gp.p_zero, "parity3: chance of priority 2 on disk (0)");
    sg->add_option("--p-even", gp.p_even, "parity3: chance a vertex is Even-owned");
    sg->add_option("--lower-density", gs.lower_density, "streett: chance a vertex is in L_j");
    sg->add_option("--upper-density", gs.upper_density, "streett: chance a vertex is in U_j");
    sg->add_flag("--strongly-connected", gs.strongly_connected, "streett: add a Hamiltonian cycle first");
    sg->add_option("--path-len", path_len, "figure-nk: path length");
    sg->add_option("--fan", fan, "figure-nk: number of fan vertices (pairs)");
    sg->add_option("-o,--output", output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*sp) return solve_parity3_cmd(file, classical, with_stats);
        if (*sb) return solve_buchi_cmd(file);
        if (*ss) return solve_streett_cmd(file, show_sccs, with_stats);
        if (*sc) return certificate_cmd(file, from);
        if (*sv) return verify_cmd(file, solution);
        if (*sbe) {
            bench.sizes = parse_sizes(sizes);
            std::vector<BenchRow> rows = run_bench(bench);
            std::cout << (csv ? format_bench_csv(rows) : format_bench_table(rows));
            return kOk;
        }
        if (*sg) {
            if (kind == "parity3") {
                if (family != "random") throw ParseError(0, "parity3 has only the random family");
                gp.n = n;
                gp.m = m;
                gp.seed = seed;
                write_output(emit_parity3(generate_parity3(gp)), output);
            } else if (family == "figure-nk") {
                write_output(emit_streett(figure_nk(path_len, fan)), output);
            } else {
                gs.n = n;
                gs.m = m;
                gs.k = k;
                gs.seed = seed;
                write_output(emit_streett(generate_streett(gs)), output);
            }
            return kOk;
        }
    } catch (const VerifyFailure& e) {
        std::cerr << e.what() << "\n";
        return kVerifyFailed;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kInputError;
    } catch (const PreconditionError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInputError;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
