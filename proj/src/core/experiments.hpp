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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fsg {

enum class SweepMode { gnp, bipartite };

/**
 * Grid of Monte Carlo cells: one cell per p value, trials samples each.
 * size is n in gnp mode and the half-size r in bipartite mode. cap
 * bounds the vertex count admitted to exact component analysis.
 */
struct SweepConfig {
  SweepMode mode = SweepMode::gnp;
  int size = 6;
  std::vector<double> p_grid;
  int trials = 100;
  std::uint64_t seed = 0;
  int cap = 10;
};

struct ExperimentRecord {
  std::string mode;
  int size = 0;
  double p = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  double frac_connected = 0.0;
  double frac_isolated_exists = 0.0;
  double frac_exactly_two = 0.0;
  double mean_components = 0.0;
  std::int64_t wall_ms = 0;
};

struct HittingTimeRecord {
  int n = 0;
  std::uint64_t seed = 0;
  int t_iso = 0;
  int t_conn = 0;
};

/**
 * Runs the sweep for the configured mode. Sampling is coupled across
 * the p grid: each trial draws one uniform per edge slot and thresholds
 * it against every p, so a connected cell stays connected at any larger
 * p of the same trial, making the monotone checks exact rather than
 * statistical. Deterministic for a fixed config; wall_ms is the one
 * measured, non-reproducible column.
 */
std::vector<ExperimentRecord> run_sweep(const SweepConfig& c);

/** The sweep over the bipartite model, ignoring c.mode. */
std::vector<ExperimentRecord> run_bipartite_sweep(const SweepConfig& c);

/**
 * Grows an empty pair one random absent edge per graph per step (X
 * first, then Y, independent streams) and after each step recomputes
 * whether the move graph on bijections still has an isolated vertex and
 * whether it is connected. Returns the first step at which each
 * property holds; t_iso <= t_conn always since connectedness excludes
 * isolated vertices. Exact analysis caps n at 10.
 */
HittingTimeRecord hitting_time_trial(int n, std::uint64_t seed);

enum class ReportFormat { csv, svg };

std::string render_csv(const std::vector<ExperimentRecord>& records);
/** Minimal line plot of frac_connected against p. */
std::string render_svg(const std::vector<ExperimentRecord>& records);
std::string render_hitting_csv(const std::vector<HittingTimeRecord>& records);

/** Writes the chosen rendering; empty record lists are rejected. */
void emit_report(const std::vector<ExperimentRecord>& records,
                 ReportFormat format, const std::string& path);
void write_hitting_csv(const std::vector<HittingTimeRecord>& records,
                       const std::string& path);

}  // namespace fsg
