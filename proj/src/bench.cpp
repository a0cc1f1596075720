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

#include "streett/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "streett/generate.hpp"
#include "streett/oracles.hpp"

namespace streett {

namespace {

double time_ms(const std::function<void()>& run)
{
    auto start = std::chrono::steady_clock::now();
    run();
    std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
    return took.count();
}

void fill(BenchRow& row, const WorkCounters& w)
{
    row.lift_steps = w.lift_steps;
    row.attractor_edge_scans = w.attractor_edge_scans;
    row.scc_edge_visits = w.scc_edge_visits;
}

void bench_parity(std::vector<BenchRow>& rows, const std::string& family, const Parity3Game& p3)
{
    BenchRow base{family, p3.game.alive_count(), p3.game.edge_count(), 1, 0, "", 0, 0, 0, 0, 0};
    for (std::size_t v = 0; v < p3.priority.size(); ++v) base.b += p3.priority[v] != 1;
    for (bool search : {true, false}) {
        BenchRow row = base;
        row.solver = search ? "parity3" : "classical";
        Parity3Solution sol;
        row.wall_ms = time_ms([&] { sol = solve_parity3(p3, Parity3Options{.use_dominion_search = search}); });
        fill(row, sol.stats.work);
        row.buchialg_calls = sol.stats.buchialg_calls;
        rows.push_back(row);
    }
}

void bench_streett(std::vector<BenchRow>& rows, const std::string& family, const StreettInstance& inst)
{
    BenchRow base{family, inst.graph.alive_count(), inst.graph.edge_count(), inst.pairs.pair_count(),
                  inst.pairs.total_bits(), "", 0, 0, 0, 0, 0};
    {
        BenchRow row = base;
        row.solver = "streett";
        StreettSolution sol;
        row.wall_ms = time_ms([&] { sol = solve_streett(inst.graph, inst.pairs); });
        fill(row, sol.stats.work);
        rows.push_back(row);
    }
    {
        BenchRow row = base;
        row.solver = "basic";
        StreettSolution sol;
        row.wall_ms = time_ms([&] { sol = basic_streett(inst.graph, inst.pairs); });
        fill(row, sol.stats.work);
        rows.push_back(row);
    }
}

} // namespace

std::vector<BenchRow> run_bench(const BenchOptions& opt)
{
    std::vector<BenchRow> rows;
    for (std::size_t n : opt.sizes) {
        for (std::size_t r = 0; r < opt.repeat; ++r) {
            const std::uint64_t seed = opt.seed + 1000003 * r + n;
            if (opt.family == "dense" || opt.family == "parity3") {
                Parity3GenOptions g;
                g.n = n;
                g.m = opt.family == "dense" ? std::max(n, n * n / 4) : std::min(n * n, 4 * n);
                g.seed = seed;
                bench_parity(rows, opt.family, generate_parity3(g));
            } else if (opt.family == "streett") {
                StreettGenOptions g;
                g.n = n;
                g.m = 4 * n;
                g.k = opt.k;
                g.seed = seed;
                bench_streett(rows, opt.family, generate_streett(g));
            } else if (opt.family == "figure-nk") {
                bench_streett(rows, opt.family, figure_nk(n, opt.k));
            } else {
                throw std::invalid_argument("unknown bench family '" + opt.family + "'");
            }
        }
    }
    return rows;
}

std::string format_bench_table(const std::vector<BenchRow>& rows)
{
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-10s %7s %9s %4s %7s %-10s %12s %12s %12s %6s %10s\n", "family", "n", "m", "k",
                  "b", "solver", "lift_steps", "attr_scans", "scc_visits", "buchi", "wall_ms");
    out << line;
    for (const BenchRow& r : rows) {
        std::snprintf(line, sizeof line, "%-10s %7zu %9zu %4zu %7zu %-10s %12llu %12llu %12llu %6llu %10.2f\n",
                      r.family.c_str(), r.n, r.m, r.k, r.b, r.solver.c_str(),
                      static_cast<unsigned long long>(r.lift_steps),
                      static_cast<unsigned long long>(r.attractor_edge_scans),
                      static_cast<unsigned long long>(r.scc_edge_visits),
                      static_cast<unsigned long long>(r.buchialg_calls), r.wall_ms);
        out << line;
    }
    return out.str();
}

std::string format_bench_csv(const std::vector<BenchRow>& rows)
{
    std::ostringstream out;
    out << "family,n,m,k,b,solver,lift_steps,attractor_edge_scans,scc_edge_visits,buchialg_calls,wall_ms\n";
    for (const BenchRow& r : rows) {
        out << r.family << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.b << ',' << r.solver << ','
            << r.lift_steps << ',' << r.attractor_edge_scans << ',' << r.scc_edge_visits << ',' << r.buchialg_calls
            << ',' << r.wall_ms << '\n';
    }
    return out.str();
}

} // namespace streett
