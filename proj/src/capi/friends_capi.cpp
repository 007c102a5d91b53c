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

#include "friends/friends.h"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <string>

#include "json.hpp"

#include "constructions.hpp"
#include "embeddability.hpp"
#include "errors.hpp"
#include "exchanger.hpp"
#include "experiments.hpp"
#include "fs_engine.hpp"
#include "graph.hpp"
#include "perm.hpp"
#include "rng.hpp"
#include "wilson.hpp"

struct fr_graph {
  fsg::Graph g;
};

namespace {

thread_local std::string t_last_error;

int set_error(int code, const std::string& what) {
  t_last_error = what;
  return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return FR_OK;
  } catch (const fsg::CapError& e) {
    return set_error(FR_ERR_CAP, e.what());
  } catch (const fsg::SequenceError& e) {
    return set_error(FR_ERR_SEQUENCE, e.what());
  } catch (const fsg::InvariantError& e) {
    return set_error(FR_ERR_INVARIANT, e.what());
  } catch (const fsg::GraphError& e) {
    return set_error(FR_ERR_GRAPH, e.what());
  } catch (const std::exception& e) {
    return set_error(FR_ERR_INTERNAL, e.what());
  }
}

int require(bool ok, const char* what) {
  return ok ? FR_OK : set_error(FR_ERR_ARGUMENT, what);
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void give(char** slot, const std::string& s) {
  if (slot) *slot = dup_string(s);
}

fsg::Perm to_perm(const int* b, int n) {
  fsg::Perm p(b, b + n);
  fsg::check_permutation(p);
  return p;
}

nlohmann::ordered_json blocks_json(const fsg::BlockConstruction& bc) {
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < bc.blocks.size(); ++i)
    blocks.push_back({{"name", bc.block_names[i]}, {"vertices", bc.blocks[i]}});
  return blocks;
}

std::vector<std::vector<int>> parse_sets(const char* spec) {
  std::vector<std::vector<int>> sets;
  std::string text(spec);
  std::istringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<int> set;
    std::istringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty()) continue;
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size())
        throw fsg::GraphError("bad set element '" + item + "'");
      set.push_back(v);
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

}  // namespace

extern "C" {

const char* fr_last_error(void) { return t_last_error.c_str(); }

void fr_string_free(char* s) { delete[] s; }

int fr_graph_create(int n, fr_graph** out) {
  if (int rc = require(out != nullptr, "null out pointer")) return rc;
  return guarded([&] { *out = new fr_graph{fsg::Graph(n)}; });
}

int fr_graph_clone(const fr_graph* g, fr_graph** out) {
  if (int rc = require(g && out, "null argument")) return rc;
  return guarded([&] { *out = new fr_graph{g->g}; });
}

void fr_graph_destroy(fr_graph* g) { delete g; }

int fr_graph_add_edge(fr_graph* g, int a, int b) {
  if (int rc = require(g != nullptr, "null graph")) return rc;
  return guarded([&] { g->g.add_edge(a, b); });
}

int fr_graph_has_edge(const fr_graph* g, int a, int b, int* out) {
  if (int rc = require(g && out, "null argument")) return rc;
  return guarded([&] { *out = g->g.has_edge(a, b) ? 1 : 0; });
}

int fr_graph_vertex_count(const fr_graph* g, int* out) {
  if (int rc = require(g && out, "null argument")) return rc;
  *out = g->g.vertex_count();
  return FR_OK;
}

int fr_graph_edge_count(const fr_graph* g, int* out) {
  if (int rc = require(g && out, "null argument")) return rc;
  *out = g->g.edge_count();
  return FR_OK;
}

int fr_graph_declare_partition(fr_graph* g, const int* labels, int n) {
  if (int rc = require(g && labels, "null argument")) return rc;
  if (int rc = require(n == g->g.vertex_count(), "label count mismatch"))
    return rc;
  return guarded(
      [&] { g->g.declare_partition(std::vector<int>(labels, labels + n)); });
}

int fr_graph_min_degree(const fr_graph* g, int* out) {
  if (int rc = require(g && out, "null argument")) return rc;
  return guarded([&] { *out = fsg::degree_stats(g->g).min_degree; });
}

int fr_graph_max_degree(const fr_graph* g, int* out) {
  if (int rc = require(g && out, "null argument")) return rc;
  return guarded([&] { *out = fsg::degree_stats(g->g).max_degree; });
}

int fr_graph_is_connected(const fr_graph* g, int* out) {
  if (int rc = require(g && out, "null argument")) return rc;
  return guarded([&] { *out = fsg::is_connected(g->g) ? 1 : 0; });
}

int fr_graph_is_biconnected(const fr_graph* g, int* out) {
  if (int rc = require(g && out, "null argument")) return rc;
  return guarded([&] { *out = fsg::is_biconnected(g->g) ? 1 : 0; });
}

int fr_graph_is_bipartite(const fr_graph* g, int* out) {
  if (int rc = require(g && out, "null argument")) return rc;
  return guarded([&] { *out = fsg::is_bipartite(g->g) ? 1 : 0; });
}

int fr_graph_girth(const fr_graph* g, int* out) {
  if (int rc = require(g && out, "null argument")) return rc;
  return guarded([&] {
    auto girth = fsg::girth(g->g);
    *out = girth ? *girth : -1;
  });
}

int fr_graph_complete(int n, fr_graph** out) {
  if (int rc = require(out != nullptr, "null out pointer")) return rc;
  return guarded([&] { *out = new fr_graph{fsg::make_complete(n)}; });
}

int fr_graph_complete_bipartite(int r, int s, fr_graph** out) {
  if (int rc = require(out != nullptr, "null out pointer")) return rc;
  return guarded([&] { *out = new fr_graph{fsg::make_complete_bipartite(r, s)}; });
}

int fr_graph_star(int n, fr_graph** out) {
  if (int rc = require(out != nullptr, "null out pointer")) return rc;
  return guarded([&] { *out = new fr_graph{fsg::make_star(n)}; });
}

int fr_graph_cycle(int n, fr_graph** out) {
  if (int rc = require(out != nullptr, "null out pointer")) return rc;
  return guarded([&] { *out = new fr_graph{fsg::make_cycle(n)}; });
}

int fr_graph_path(int n, fr_graph** out) {
  if (int rc = require(out != nullptr, "null out pointer")) return rc;
  return guarded([&] { *out = new fr_graph{fsg::make_path(n)}; });
}

int fr_graph_theta0(fr_graph** out) {
  if (int rc = require(out != nullptr, "null out pointer")) return rc;
  return guarded([&] { *out = new fr_graph{fsg::make_theta0()}; });
}

int fr_graph_sample_gnp(int n, double p, uint64_t seed, fr_graph** out) {
  if (int rc = require(out != nullptr, "null out pointer")) return rc;
  return guarded(
      [&] { *out = new fr_graph{fsg::sample(fsg::RandomModel::gnp(n, p, seed))}; });
}

int fr_graph_sample_bipartite_gnp(int r, double p, uint64_t seed,
                                  fr_graph** out) {
  if (int rc = require(out != nullptr, "null out pointer")) return rc;
  return guarded([&] {
    *out = new fr_graph{fsg::sample(fsg::RandomModel::bipartite_gnp(r, p, seed))};
  });
}

int fr_graph_read_file(const char* path, fr_graph** out) {
  if (int rc = require(path && out, "null argument")) return rc;
  return guarded([&] { *out = new fr_graph{fsg::read_edge_list_file(path)}; });
}

int fr_graph_write_file(const fr_graph* g, const char* path) {
  if (int rc = require(g && path, "null argument")) return rc;
  return guarded([&] { fsg::write_edge_list_file(g->g, path); });
}

int fr_graph_parse(const char* text, fr_graph** out) {
  if (int rc = require(text && out, "null argument")) return rc;
  return guarded([&] {
    std::istringstream in{std::string(text)};
    *out = new fr_graph{fsg::read_edge_list(in)};
  });
}

int fr_graph_render(const fr_graph* g, char** out) {
  if (int rc = require(g && out, "null argument")) return rc;
  return guarded([&] {
    std::ostringstream text;
    fsg::write_edge_list(g->g, text);
    give(out, text.str());
  });
}

int fr_components(const fr_graph* x, const fr_graph* y, int cap,
                  uint64_t* component_count, uint64_t* isolated_count,
                  uint64_t* total_states, char** render) {
  if (int rc = require(x && y, "null graph")) return rc;
  return guarded([&] {
    fsg::ComponentSummary sum = fsg::components(x->g, y->g, cap);
    if (component_count) *component_count = sum.component_count;
    if (isolated_count) *isolated_count = sum.isolated_count;
    if (total_states) *total_states = sum.total_states;
    give(render, sum.to_string());
  });
}

int fr_find_isolated(const fr_graph* x, const fr_graph* y, uint64_t budget,
                     int* found, int* exhaustive, uint64_t* attempts,
                     int* witness) {
  if (int rc = require(x && y && found, "null argument")) return rc;
  return guarded([&] {
    fsg::IsolatedSearch search = fsg::find_isolated_vertex(x->g, y->g, budget);
    *found = search.witness ? 1 : 0;
    if (exhaustive) *exhaustive = search.exhaustive ? 1 : 0;
    if (attempts) *attempts = search.attempts;
    if (witness && search.witness)
      std::copy(search.witness->begin(), search.witness->end(), witness);
  });
}

int fr_is_isolated(const fr_graph* x, const fr_graph* y, const int* b, int n,
                   int* out) {
  if (int rc = require(x && y && b && out, "null argument")) return rc;
  return guarded(
      [&] { *out = fsg::is_isolated(x->g, y->g, to_perm(b, n)) ? 1 : 0; });
}

int fr_exchangeable(const fr_graph* x, const fr_graph* y, const int* b, int n,
                    int u, int v, int cap, int* found, char** seq) {
  if (int rc = require(x && y && b && found, "null argument")) return rc;
  return guarded([&] {
    auto result = fsg::exchangeable(x->g, y->g, to_perm(b, n), u, v, cap);
    *found = result ? 1 : 0;
    if (result) give(seq, fsg::seq_to_string(*result));
  });
}

int fr_concordance_class(const fr_graph* x, const fr_graph* y, const int* b,
                         int n, int* out) {
  if (int rc = require(x && y && b && out, "null argument")) return rc;
  return guarded(
      [&] { *out = fsg::concordance_class(x->g, y->g, to_perm(b, n)); });
}

int fr_apply_sequence(const fr_graph* x, const fr_graph* y, const int* b,
                      int n, const char* seq, int* final_state) {
  if (int rc = require(x && y && b && seq && final_state, "null argument"))
    return rc;
  return guarded([&] {
    fsg::SequenceResult result = fsg::apply_sequence(
        x->g, y->g, to_perm(b, n), fsg::seq_from_string(seq));
    std::copy(result.final.begin(), result.final.end(), final_state);
  });
}

int fr_classify(const fr_graph* g, char** status, char** detail) {
  if (int rc = require(g && status, "null argument")) return rc;
  return guarded([&] {
    fsg::WilsonVerdict verdict = fsg::classify(g->g);
    give(status, fsg::to_string(verdict.status));
    if (detail) {
      std::string text;
      if (verdict.articulation_vertex)
        text = "articulation vertex " +
               std::to_string(*verdict.articulation_vertex);
      else if (verdict.two_coloring)
        text = "bipartition found";
      else if (verdict.theta0_map)
        text = "isomorphism onto the exceptional graph";
      give(detail, text);
    }
  });
}

int fr_build_lower_bound_pair(int n, fr_graph** x, fr_graph** y,
                              char** manifest) {
  if (int rc = require(x && y, "null out pointer")) return rc;
  return guarded([&] {
    fsg::BlockConstruction bc = fsg::build_lower_bound_pair(n);
    nlohmann::ordered_json man{{"family", "five-block"},
                               {"n", n},
                               {"blocks", blocks_json(bc)}};
    *x = new fr_graph{std::move(bc.x)};
    *y = new fr_graph{std::move(bc.y)};
    give(manifest, man.dump(2) + "\n");
  });
}

int fr_build_bipartite_lower_bound(int r, fr_graph** x, fr_graph** y,
                                   int* sigma0, char** manifest) {
  if (int rc = require(x && y, "null out pointer")) return rc;
  return guarded([&] {
    fsg::BipartiteLowerBound built = fsg::build_bipartite_lower_bound(r);
    if (sigma0)
      std::copy(built.sigma0.begin(), built.sigma0.end(), sigma0);
    nlohmann::ordered_json man{
        {"family", "bipartite-four-block"},
        {"r", r},
        {"sigma0", fsg::perm_to_string(built.sigma0)},
        {"blocks", blocks_json(built.blocks)}};
    *x = new fr_graph{built.blocks.x};
    *y = new fr_graph{built.blocks.y};
    give(manifest, man.dump(2) + "\n");
  });
}

int fr_build_large_gadget(int m, fr_graph** g2, fr_graph** h2,
                          fr_graph** gstar, fr_graph** hstar,
                          char** manifest) {
  return guarded([&] {
    fsg::GadgetLayout layout = fsg::build_large_gadget(m);
    fsg::GadgetReport report = fsg::verify_gadget_constraints(layout);
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const fsg::GadgetCheck& c : report.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}});
    nlohmann::ordered_json man{{"family", "large-gadget"},
                               {"m", layout.m},
                               {"ell", layout.ell},
                               {"anchors", layout.z},
                               {"hub", layout.w},
                               {"xs", layout.xs},
                               {"ys", layout.ys},
                               {"all_pass", report.all_pass},
                               {"checks", checks}};
    if (g2) *g2 = new fr_graph{layout.g_2star};
    if (h2) *h2 = new fr_graph{layout.h_2star};
    if (gstar) *gstar = new fr_graph{layout.g_star};
    if (hstar) *hstar = new fr_graph{layout.h_star};
    give(manifest, man.dump(2) + "\n");
  });
}

int fr_smallest_feasible_gadget_m(int* out) {
  if (int rc = require(out != nullptr, "null out pointer")) return rc;
  return guarded([&] { *out = fsg::smallest_feasible_gadget_m(); });
}

int fr_builtin_sequence(int index, char** seq) {
  if (int rc = require(seq != nullptr, "null out pointer")) return rc;
  if (int rc = require(index >= 1 && index <= 4, "index must be 1..4"))
    return rc;
  return guarded([&] {
    give(seq,
         fsg::seq_to_string(fsg::builtin_bipartite_gadget_sequences()[index - 1]));
  });
}

int fr_derive_sequence_gadget(const char* seq, int n, int u, int v,
                              fr_graph** gmin, fr_graph** hmin) {
  if (int rc = require(seq && gmin && hmin, "null argument")) return rc;
  return guarded([&] {
    fsg::DerivedGadget derived =
        fsg::derive_gadget_from_sequence(fsg::seq_from_string(seq), n, u, v);
    *gmin = new fr_graph{std::move(derived.g_min)};
    *hmin = new fr_graph{std::move(derived.h_min)};
  });
}

int fr_exchange_ladder(const fr_graph* x, const fr_graph* y, const int* b,
                       int n, int u, int v, int cap, int* found, char** seq,
                       char** strategy, char** reason) {
  if (int rc = require(x && y && b && found, "null argument")) return rc;
  return guarded([&] {
    fsg::LadderOutcome outcome =
        fsg::exchange_ladder(x->g, y->g, to_perm(b, n), u, v, cap);
    *found = outcome.result ? 1 : 0;
    if (outcome.result) {
      give(seq, fsg::seq_to_string(outcome.result->sequence));
      give(strategy, fsg::to_string(outcome.result->strategy));
    }
    give(reason, outcome.reason);
  });
}

int fr_bipartite_exchange(const fr_graph* x, const fr_graph* y, const int* b,
                          int n, int u, int v, char** seq) {
  if (int rc = require(x && y && b && seq, "null argument")) return rc;
  return guarded([&] {
    fsg::ExchangeResult result =
        fsg::bipartite_min_degree_exchange(x->g, y->g, to_perm(b, n), u, v);
    give(seq, fsg::seq_to_string(result.sequence));
  });
}

int fr_find_embedding(const fr_graph* g, const fr_graph* h, const fr_graph* x,
                      const fr_graph* y, const int* sigma, int n,
                      const char* sets, int* found, char** witness) {
  if (int rc = require(g && h && x && y && sigma && sets && found,
                       "null argument"))
    return rc;
  return guarded([&] {
    fsg::EmbedInstance inst;
    inst.g = g->g;
    inst.h = h->g;
    inst.x = x->g;
    inst.y = y->g;
    inst.sigma = to_perm(sigma, n);
    inst.sets = parse_sets(sets);
    auto result = fsg::find_embedding(inst);
    *found = result ? 1 : 0;
    if (result) {
      std::ostringstream text;
      for (std::size_t i = 0; i < result->chosen.size(); ++i)
        text << (i ? "," : "") << result->chosen[i];
      give(witness, text.str());
    }
  });
}

int fr_run_sweep(const char* mode, int size, const double* pgrid, int np,
                 int trials, uint64_t seed, int cap, const char* csv_path,
                 const char* svg_path, char** csv_render) {
  if (int rc = require(mode && pgrid && np > 0, "null or empty argument"))
    return rc;
  return guarded([&] {
    fsg::SweepConfig config;
    std::string mode_text(mode);
    if (mode_text == "gnp")
      config.mode = fsg::SweepMode::gnp;
    else if (mode_text == "bipartite" || mode_text == "bip")
      config.mode = fsg::SweepMode::bipartite;
    else
      throw fsg::GraphError("unknown sweep mode '" + mode_text + "'");
    config.size = size;
    config.p_grid.assign(pgrid, pgrid + np);
    config.trials = trials;
    config.seed = seed;
    config.cap = cap;
    auto records = fsg::run_sweep(config);
    if (csv_path)
      fsg::emit_report(records, fsg::ReportFormat::csv, csv_path);
    if (svg_path)
      fsg::emit_report(records, fsg::ReportFormat::svg, svg_path);
    if (csv_render) give(csv_render, fsg::render_csv(records));
  });
}

int fr_hitting_times(int n, int trials, uint64_t seed, const char* csv_path,
                     char** csv_render) {
  if (int rc = require(trials > 0, "trials must be positive")) return rc;
  return guarded([&] {
    std::vector<fsg::HittingTimeRecord> records;
    records.reserve(trials);
    for (int trial = 0; trial < trials; ++trial)
      records.push_back(
          fsg::hitting_time_trial(n, fsg::derive_stream(seed, n, trial).next()));
    if (csv_path) fsg::write_hitting_csv(records, csv_path);
    if (csv_render) give(csv_render, fsg::render_hitting_csv(records));
  });
}

}  // extern "C"
