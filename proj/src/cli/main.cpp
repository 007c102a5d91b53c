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

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "friends/friends.h"

namespace {

void check(int rc) {
  if (rc != FR_OK) {
    std::cerr << "error: " << fr_last_error() << "\n";
    std::exit(rc);
  }
}

struct GraphDelete {
  void operator()(fr_graph* g) const { fr_graph_destroy(g); }
};
using GraphPtr = std::unique_ptr<fr_graph, GraphDelete>;

struct StringDelete {
  void operator()(char* s) const { fr_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDelete>;

GraphPtr load_graph(const std::string& path) {
  fr_graph* g = nullptr;
  check(fr_graph_read_file(path.c_str(), &g));
  return GraphPtr(g);
}

std::vector<int> parse_perm(const std::string& text) {
  std::vector<int> p;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size())
      throw CLI::ValidationError("--sigma", "bad entry '" + item + "'");
    p.push_back(v);
  }
  if (p.empty()) throw CLI::ValidationError("--sigma", "empty permutation");
  return p;
}

std::vector<double> parse_pgrid(const std::string& text) {
  double a = 0, b = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' ||
      !(in >> std::ws).eof())
    throw CLI::ValidationError("--pgrid", "expected a:b:step");
  if (step <= 0 || b < a)
    throw CLI::ValidationError("--pgrid", "need step > 0 and b >= a");
  std::vector<double> grid;
  for (double p = a; p <= b + step / 2; p += step) grid.push_back(p);
  return grid;
}

int vertex_count(const GraphPtr& g) {
  int n = 0;
  check(fr_graph_vertex_count(g.get(), &n));
  return n;
}

void print_perm(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    std::cout << (i ? "," : "") << p[i];
  std::cout << "\n";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path.string() << "\n";
    std::exit(FR_ERR_GRAPH);
  }
}

void run_analyze(const std::string& xpath, const std::string& ypath,
                 bool isolated, const std::vector<int>& exchange,
                 const std::string& sigma_text, int cap,
                 std::uint64_t budget) {
  GraphPtr x = load_graph(xpath);
  GraphPtr y = load_graph(ypath);
  if (!exchange.empty()) {
    std::vector<int> b = parse_perm(sigma_text);
    int found = 0;
    char* seq = nullptr;
    check(fr_exchangeable(x.get(), y.get(), b.data(),
                          static_cast<int>(b.size()), exchange[0], exchange[1],
                          cap, &found, &seq));
    ApiString s(seq);
    std::cout << (found ? s.get() : "none") << "\n";
    return;
  }
  if (isolated) {
    std::vector<int> witness(vertex_count(x));
    int found = 0, exhaustive = 0;
    std::uint64_t attempts = 0;
    check(fr_find_isolated(x.get(), y.get(), budget, &found, &exhaustive,
                           &attempts, witness.data()));
    if (found)
      print_perm(witness);
    else
      std::cout << (exhaustive ? "none" : "unknown") << "\n";
    return;
  }
  char* render = nullptr;
  check(fr_components(x.get(), y.get(), cap, nullptr, nullptr, nullptr,
                      &render));
  ApiString s(render);
  std::cout << s.get() << "\n";
}

void run_classify(const std::string& ypath) {
  GraphPtr y = load_graph(ypath);
  char* status = nullptr;
  check(fr_classify(y.get(), &status, nullptr));
  ApiString s(status);
  std::cout << s.get() << "\n";
}

void run_construct(const std::string& family, int n,
                   const std::string& outdir) {
  namespace sfs = std::filesystem;
  sfs::create_directories(outdir);
  auto write_graph = [&](fr_graph* g, const char* name) {
    check(fr_graph_write_file(g, (sfs::path(outdir) / name).string().c_str()));
  };
  auto finish = [&](const std::string& manifest) {
    write_text(sfs::path(outdir) / "manifest.json", manifest);
    std::cout << manifest;
  };
  if (family == "five-block") {
    fr_graph *x = nullptr, *y = nullptr;
    char* man = nullptr;
    check(fr_build_lower_bound_pair(n, &x, &y, &man));
    GraphPtr gx(x), gy(y);
    ApiString m(man);
    write_graph(gx.get(), "x.edges");
    write_graph(gy.get(), "y.edges");
    finish(m.get());
  } else if (family == "bipartite-four-block") {
    std::vector<int> sigma0(n > 0 ? 2 * n : 0);
    fr_graph *x = nullptr, *y = nullptr;
    char* man = nullptr;
    check(fr_build_bipartite_lower_bound(n, &x, &y, sigma0.data(), &man));
    GraphPtr gx(x), gy(y);
    ApiString m(man);
    write_graph(gx.get(), "x.edges");
    write_graph(gy.get(), "y.edges");
    finish(m.get());
  } else if (family == "large-gadget") {
    int m = n;
    if (m == 0) check(fr_smallest_feasible_gadget_m(&m));
    fr_graph *g2 = nullptr, *h2 = nullptr, *gs = nullptr, *hs = nullptr;
    char* man = nullptr;
    check(fr_build_large_gadget(m, &g2, &h2, &gs, &hs, &man));
    GraphPtr a(g2), b(h2), c(gs), d(hs);
    ApiString text(man);
    write_graph(a.get(), "g_2star.edges");
    write_graph(b.get(), "h_2star.edges");
    write_graph(c.get(), "g_star.edges");
    write_graph(d.get(), "h_star.edges");
    finish(text.get());
  } else {
    // sequence-gadget: n picks one of the four built-in sequences.
    char* seq = nullptr;
    check(fr_builtin_sequence(n, &seq));
    ApiString s(seq);
    fr_graph *gmin = nullptr, *hmin = nullptr;
    check(fr_derive_sequence_gadget(s.get(), 8, 6, 7, &gmin, &hmin));
    GraphPtr a(gmin), b(hmin);
    write_graph(a.get(), "g_min.edges");
    write_graph(b.get(), "h_min.edges");
    int ge = 0, he = 0;
    check(fr_graph_edge_count(a.get(), &ge));
    check(fr_graph_edge_count(b.get(), &he));
    nlohmann::ordered_json man{
        {"family", "sequence-gadget"}, {"index", n},       {"n", 8},
        {"u", 6},                      {"v", 7},           {"sequence", s.get()},
        {"g_min_edges", ge},           {"h_min_edges", he}};
    finish(man.dump(2) + "\n");
  }
}

void run_exchange(const std::string& xpath, const std::string& ypath,
                  const std::string& sigma_text, int u, int v,
                  const std::string& strategy, int cap) {
  GraphPtr x = load_graph(xpath);
  GraphPtr y = load_graph(ypath);
  std::vector<int> b = parse_perm(sigma_text);
  int n = static_cast<int>(b.size());
  if (strategy == "bip62") {
    char* seq = nullptr;
    check(fr_bipartite_exchange(x.get(), y.get(), b.data(), n, u, v, &seq));
    ApiString s(seq);
    std::cout << s.get() << "\nstrategy bipartite_min_degree\n";
    return;
  }
  if (strategy == "bfs") {
    int found = 0;
    char* seq = nullptr;
    check(fr_exchangeable(x.get(), y.get(), b.data(), n, u, v, cap, &found,
                          &seq));
    ApiString s(seq);
    if (found)
      std::cout << s.get() << "\nstrategy bfs_fallback\n";
    else
      std::cout << "none\n";
    return;
  }
  int found = 0;
  char *seq = nullptr, *tag = nullptr, *reason = nullptr;
  check(fr_exchange_ladder(x.get(), y.get(), b.data(), n, u, v, cap, &found,
                           &seq, &tag, &reason));
  ApiString s(seq), t(tag), r(reason);
  if (found)
    std::cout << s.get() << "\nstrategy " << t.get() << "\n";
  else
    std::cout << "none\nreason " << r.get() << "\n";
}

void run_embed(const std::string& gpath, const std::string& hpath,
               const std::string& xpath, const std::string& ypath,
               const std::string& sigma_text, const std::string& sets) {
  GraphPtr g = load_graph(gpath);
  GraphPtr h = load_graph(hpath);
  GraphPtr x = load_graph(xpath);
  GraphPtr y = load_graph(ypath);
  std::vector<int> sigma = parse_perm(sigma_text);
  int found = 0;
  char* witness = nullptr;
  check(fr_find_embedding(g.get(), h.get(), x.get(), y.get(), sigma.data(),
                          static_cast<int>(sigma.size()), sets.c_str(), &found,
                          &witness));
  ApiString w(witness);
  std::cout << (found ? w.get() : "none") << "\n";
}

void run_montecarlo(const std::string& mode, int size,
                    const std::string& pgrid_text, int trials,
                    std::uint64_t seed, int cap, const std::string& out,
                    const std::string& svg) {
  std::vector<double> grid = parse_pgrid(pgrid_text);
  char* csv = nullptr;
  check(fr_run_sweep(mode.c_str(), size, grid.data(),
                     static_cast<int>(grid.size()), trials, seed, cap,
                     out.c_str(), svg.empty() ? nullptr : svg.c_str(), &csv));
  ApiString s(csv);
  std::cout << s.get();
}

void run_hitting(int n, int trials, std::uint64_t seed,
                 const std::string& out) {
  char* csv = nullptr;
  check(fr_hitting_times(n, trials, seed, out.c_str(), &csv));
  ApiString s(csv);
  std::cout << s.get();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"friends-and-strangers graph toolkit"};
  app.require_subcommand(1);

  std::string xpath, ypath, gpath, hpath, sigma_text, sets_spec;
  std::string family, outdir = ".", strategy = "auto", mode, out_file, svg_file;
  std::string pgrid_text;
  std::vector<int> exchange_labels;
  bool want_components = false, want_isolated = false;
  int cap = 12, sweep_cap = 10, param_n = 0, u = 0, v = 0;
  int size = 6, trials = 100;
  std::uint64_t seed = 0, budget = 10000000;

  CLI::App* analyze =
      app.add_subcommand("analyze", "exact analysis of the bijection graph");
  analyze->add_option("--x", xpath, "edge-list file for X")->required();
  analyze->add_option("--y", ypath, "edge-list file for Y")->required();
  CLI::Option* oc =
      analyze->add_flag("--components", want_components, "component census");
  CLI::Option* oi = analyze->add_flag("--isolated", want_isolated,
                                      "search for an isolated bijection");
  CLI::Option* oe =
      analyze->add_option("--exchange", exchange_labels, "labels U V to swap")
          ->expected(2);
  analyze->add_option("--sigma", sigma_text,
                      "start bijection, comma-separated images");
  analyze->add_option("--cap", cap, "state-space cap (vertex count)");
  analyze->add_option("--budget", budget, "attempt budget for --isolated");
  oe->excludes(oc)->excludes(oi);
  oi->excludes(oc);
  analyze->callback([&] {
    run_analyze(xpath, ypath, want_isolated, exchange_labels, sigma_text, cap,
                budget);
  });

  CLI::App* classify =
      app.add_subcommand("classify", "star-pair connectivity class of Y");
  classify->add_option("--y", ypath, "edge-list file")->required();
  classify->callback([&] { run_classify(ypath); });

  CLI::App* construct =
      app.add_subcommand("construct", "build a named graph family");
  construct
      ->add_option("--family", family,
                   "five-block | bipartite-four-block | large-gadget | "
                   "sequence-gadget")
      ->required()
      ->check(CLI::IsMember({"five-block", "bipartite-four-block",
                             "large-gadget", "sequence-gadget"}));
  construct
      ->add_option("--n", param_n,
                   "size parameter: vertex count, part size, cycle length "
                   "(0 = smallest feasible), or sequence index 1..4")
      ->required();
  construct->add_option("--out", outdir, "output directory")
      ->capture_default_str();
  construct->callback([&] { run_construct(family, param_n, outdir); });

  CLI::App* exchange =
      app.add_subcommand("exchange", "construct a swap sequence for two labels");
  exchange->add_option("--x", xpath, "edge-list file for X")->required();
  exchange->add_option("--y", ypath, "edge-list file for Y")->required();
  exchange->add_option("--sigma", sigma_text, "start bijection")->required();
  exchange->add_option("--u", u, "first label")->required();
  exchange->add_option("--v", v, "second label")->required();
  exchange->add_option("--strategy", strategy, "auto | bip62 | bfs")
      ->check(CLI::IsMember({"auto", "bip62", "bfs"}))
      ->capture_default_str();
  exchange->add_option("--cap", cap, "state-space cap for search fallback");
  exchange->callback(
      [&] { run_exchange(xpath, ypath, sigma_text, u, v, strategy, cap); });

  CLI::App* embed = app.add_subcommand(
      "embed", "find vertex sets realising a guest pair inside a host pair");
  // long-only help so the -h short name stays free for the --h guest option
  embed->set_help_flag("--help", "print help");
  embed->add_option("--g", gpath, "guest graph for the host X side")->required();
  embed->add_option("--h", hpath, "guest graph for the host Y side")->required();
  embed->add_option("--x", xpath, "host graph X")->required();
  embed->add_option("--y", ypath, "host graph Y")->required();
  embed->add_option("--sigma", sigma_text, "host bijection")->required();
  embed
      ->add_option("--sets", sets_spec,
                   "candidate sets, semicolon-separated comma lists")
      ->required();
  embed->callback(
      [&] { run_embed(gpath, hpath, xpath, ypath, sigma_text, sets_spec); });

  CLI::App* montecarlo =
      app.add_subcommand("montecarlo", "random-pair connectivity sweep");
  montecarlo->add_option("--mode", mode, "gnp | bip")
      ->required()
      ->check(CLI::IsMember({"gnp", "bip"}));
  montecarlo->add_option("--size", size, "vertex count (or part size)")
      ->required();
  montecarlo->add_option("--pgrid", pgrid_text, "edge probabilities a:b:step")
      ->required();
  montecarlo->add_option("--trials", trials, "trials per grid point")
      ->required();
  montecarlo->add_option("--seed", seed, "base seed")->required();
  montecarlo->add_option("--out", out_file, "CSV output path")->required();
  montecarlo->add_option("--svg", svg_file, "optional SVG plot path");
  montecarlo->add_option("--cap", sweep_cap, "exact-analysis size cap");
  montecarlo->callback([&] {
    run_montecarlo(mode, size, pgrid_text, trials, seed, sweep_cap, out_file,
                   svg_file);
  });

  CLI::App* hitting = app.add_subcommand(
      "hitting", "coupled random-edge hitting times for the two thresholds");
  hitting->add_option("--n", param_n, "vertex count")->required();
  hitting->add_option("--trials", trials, "trial count")->required();
  hitting->add_option("--seed", seed, "base seed")->required();
  hitting->add_option("--out", out_file, "CSV output path")->required();
  hitting->callback([&] { run_hitting(param_n, trials, seed, out_file); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
