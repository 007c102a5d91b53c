// Copyright 2026 The fsgraph developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "fs_engine.hpp"
#include "graph.hpp"
#include "rng.hpp"

namespace fsg {

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::vector<Edge> edge_slots(int n, bool bipartite) {
  std::vector<Edge> slots;
  if (bipartite) {
    int r = n / 2;
    for (int i = 0; i < r; ++i)
      for (int j = r; j < n; ++j) slots.push_back({i, j});
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) slots.push_back({a, b});
  }
  return slots;
}

std::vector<ExperimentRecord> run_sweep_impl(const SweepConfig& c,
                                             bool bipartite) {
  if (c.trials < 1) throw GraphError("trial count must be at least 1");
  if (c.size < 1) throw GraphError("size must be positive");
  if (c.p_grid.empty()) throw GraphError("empty p grid");
  for (double p : c.p_grid)
    if (p < 0.0 || p > 1.0) throw GraphError("p values must lie in [0,1]");
  const int n = bipartite ? 2 * c.size : c.size;
  if (n > c.cap)
    throw CapError("sweep size " + std::to_string(n) +
                   " exceeds the exact-analysis cap " + std::to_string(c.cap));

  const std::vector<Edge> slots = edge_slots(n, bipartite);
  std::vector<int> parts(n);
  if (bipartite)
    for (int i = 0; i < n; ++i) parts[i] = i < n / 2 ? 0 : 1;

  struct Accum {
    long long connected = 0;
    long long isolated = 0;
    long long two = 0;
    double comps = 0.0;
    std::int64_t nanos = 0;
  };
  std::vector<Accum> acc(c.p_grid.size());
  std::vector<double> ux(slots.size()), uy(slots.size());

  for (int trial = 0; trial < c.trials; ++trial) {
    // one uniform per slot per trial, shared across the whole p grid
    SplitMix64 gen = derive_stream(
        c.seed, 2ULL * static_cast<std::uint64_t>(c.size) + (bipartite ? 1 : 0),
        trial);
    for (double& u : ux) u = gen.next_double();
    for (double& u : uy) u = gen.next_double();

    for (std::size_t cell = 0; cell < c.p_grid.size(); ++cell) {
      const double p = c.p_grid[cell];
      auto start = std::chrono::steady_clock::now();
      Graph x(n), y(n);
      if (bipartite) {
        x.declare_partition(parts);
        y.declare_partition(parts);
      }
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (ux[s] < p) x.add_edge(slots[s].first, slots[s].second);
        if (uy[s] < p) y.add_edge(slots[s].first, slots[s].second);
      }
      ComponentSummary sum = components(x, y, c.cap);
      auto stop = std::chrono::steady_clock::now();
      Accum& a = acc[cell];
      a.connected += sum.component_count == 1;
      a.isolated += sum.isolated_count > 0;
      a.two += sum.component_count == 2;
      a.comps += static_cast<double>(sum.component_count);
      a.nanos += std::chrono::duration_cast<std::chrono::nanoseconds>(
                     stop - start)
                     .count();
    }
  }

  std::vector<ExperimentRecord> records;
  records.reserve(c.p_grid.size());
  for (std::size_t cell = 0; cell < c.p_grid.size(); ++cell) {
    const Accum& a = acc[cell];
    ExperimentRecord rec;
    rec.mode = bipartite ? "bipartite" : "gnp";
    rec.size = c.size;
    rec.p = c.p_grid[cell];
    rec.trials = c.trials;
    rec.seed = c.seed;
    rec.frac_connected = static_cast<double>(a.connected) / c.trials;
    rec.frac_isolated_exists = static_cast<double>(a.isolated) / c.trials;
    rec.frac_exactly_two = static_cast<double>(a.two) / c.trials;
    rec.mean_components = a.comps / c.trials;
    rec.wall_ms = a.nanos / 1000000;
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace

std::vector<ExperimentRecord> run_sweep(const SweepConfig& c) {
  return run_sweep_impl(c, c.mode == SweepMode::bipartite);
}

std::vector<ExperimentRecord> run_bipartite_sweep(const SweepConfig& c) {
  return run_sweep_impl(c, true);
}

HittingTimeRecord hitting_time_trial(int n, std::uint64_t seed) {
  if (n < 2) throw GraphError("hitting-time process needs at least 2 vertices");
  if (n > 10) throw CapError("hitting-time analysis caps n at 10");

  SplitMix64 gen_x = derive_stream(seed, n, 0);
  SplitMix64 gen_y = derive_stream(seed, n, 1);
  Graph x(n), y(n);
  const int total = n * (n - 1) / 2;

  auto add_random_absent = [n](Graph& g, SplitMix64& gen) {
    std::vector<Edge> absent;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!g.has_edge(a, b)) absent.push_back({a, b});
    Edge e = absent[gen.next_below(absent.size())];
    g.add_edge(e.first, e.second);
  };

  HittingTimeRecord rec;
  rec.n = n;
  rec.seed = seed;
  rec.t_iso = -1;
  rec.t_conn = -1;
  for (int t = 1; t <= total; ++t) {
    add_random_absent(x, gen_x);
    add_random_absent(y, gen_y);
    if (rec.t_iso == -1) {
      IsolatedSearch search = find_isolated_vertex(x, y, 0);
      if (!search.witness && search.exhaustive) rec.t_iso = t;
    }
    if (rec.t_iso != -1 && rec.t_conn == -1) {
      if (components(x, y, 10).component_count == 1) rec.t_conn = t;
    }
    if (rec.t_iso != -1 && rec.t_conn != -1) break;
  }
  if (rec.t_iso == -1 || rec.t_conn == -1)
    throw InvariantError("hitting times missing after the complete process");
  return rec;
}

std::string render_csv(const std::vector<ExperimentRecord>& records) {
  if (records.empty()) throw GraphError("no records to report");
  std::ostringstream out;
  out << "mode,size,p,trials,seed,frac_connected,frac_isolated_exists,"
         "frac_exactly_two,mean_components,wall_ms\n";
  for (const ExperimentRecord& r : records) {
    out << r.mode << ',' << r.size << ',' << fmt_double(r.p) << ','
        << r.trials << ',' << r.seed << ',' << fmt_double(r.frac_connected)
        << ',' << fmt_double(r.frac_isolated_exists) << ','
        << fmt_double(r.frac_exactly_two) << ','
        << fmt_double(r.mean_components) << ',' << r.wall_ms << '\n';
  }
  return out.str();
}

std::string render_svg(const std::vector<ExperimentRecord>& records) {
  if (records.empty()) throw GraphError("no records to plot");
  std::vector<const ExperimentRecord*> pts;
  pts.reserve(records.size());
  for (const ExperimentRecord& r : records) pts.push_back(&r);
  std::sort(pts.begin(), pts.end(),
            [](const ExperimentRecord* a, const ExperimentRecord* b) {
              return a->p < b->p;
            });
  const double width = 640, height = 400, ml = 60, mr = 20, mt = 20, mb = 50;
  const double pw = width - ml - mr, ph = height - mt - mb;
  auto sx = [&](double p) { return ml + p * pw; };
  auto sy = [&](double f) { return mt + (1.0 - f) * ph; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "  <rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  out << "  <line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\""
      << ml + pw << "\" y2=\"" << mt + ph
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "  <line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
      << "\" y2=\"" << mt + ph << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "  <text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-size=\"14\">p</text>\n";
  out << "  <text x=\"18\" y=\"" << mt + ph / 2
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 "
         "18 "
      << mt + ph / 2 << ")\">frac_connected</text>\n";
  for (int tick = 0; tick <= 4; ++tick) {
    double f = tick / 4.0;
    out << "  <text x=\"" << ml - 8 << "\" y=\"" << sy(f) + 4
        << "\" text-anchor=\"end\" font-size=\"11\">" << fmt_double(f)
        << "</text>\n";
    out << "  <text x=\"" << sx(f) << "\" y=\"" << mt + ph + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt_double(f)
        << "</text>\n";
  }
  out << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" "
         "points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out << ' ';
    out << fmt_double(sx(pts[i]->p)) << ','
        << fmt_double(sy(pts[i]->frac_connected));
  }
  out << "\"/>\n";
  for (const ExperimentRecord* r : pts)
    out << "  <circle cx=\"" << fmt_double(sx(r->p)) << "\" cy=\""
        << fmt_double(sy(r->frac_connected))
        << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string render_hitting_csv(const std::vector<HittingTimeRecord>& records) {
  if (records.empty()) throw GraphError("no records to report");
  std::ostringstream out;
  out << "n,seed,t_iso,t_conn\n";
  for (const HittingTimeRecord& r : records)
    out << r.n << ',' << r.seed << ',' << r.t_iso << ',' << r.t_conn << '\n';
  return out.str();
}

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw GraphError("write failed for " + path);
}

}  // namespace

void emit_report(const std::vector<ExperimentRecord>& records,
                 ReportFormat format, const std::string& path) {
  write_file(path, format == ReportFormat::csv ? render_csv(records)
                                               : render_svg(records));
}

void write_hitting_csv(const std::vector<HittingTimeRecord>& records,
                       const std::string& path) {
  write_file(path, render_hitting_csv(records));
}

}  // namespace fsg
