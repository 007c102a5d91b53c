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

#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "friends/friends.h"

namespace {

// the option type is plain C; tiny RAII shims keep the tests leak-free
struct Handle {
  fr_graph* g = nullptr;
  ~Handle() { fr_graph_destroy(g); }
  fr_graph** slot() { return &g; }
};

struct Text {
  char* s = nullptr;
  ~Text() { fr_string_free(s); }
  char** slot() { return &s; }
  std::string str() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("graph lifecycle over the boundary") {
  Handle g;
  REQUIRE(fr_graph_create(4, g.slot()) == FR_OK);
  CHECK(fr_graph_add_edge(g.g, 0, 1) == FR_OK);
  int has = 0, n = 0, m = 0;
  CHECK(fr_graph_has_edge(g.g, 1, 0, &has) == FR_OK);
  CHECK(has == 1);
  CHECK(fr_graph_vertex_count(g.g, &n) == FR_OK);
  CHECK(fr_graph_edge_count(g.g, &m) == FR_OK);
  CHECK(n == 4);
  CHECK(m == 1);

  Handle clone;
  REQUIRE(fr_graph_clone(g.g, clone.slot()) == FR_OK);
  CHECK(fr_graph_has_edge(clone.g, 0, 1, &has) == FR_OK);
  CHECK(has == 1);

  CHECK(fr_graph_add_edge(g.g, 0, 0) == FR_ERR_GRAPH);
  CHECK(std::strlen(fr_last_error()) > 0);
  CHECK(fr_graph_create(3, nullptr) == FR_ERR_ARGUMENT);
  fr_graph_destroy(nullptr);  // must be a safe no-op
}

TEST_CASE("factories and predicates") {
  Handle t0;
  REQUIRE(fr_graph_theta0(t0.slot()) == FR_OK);
  int girth = 0, bic = 0;
  CHECK(fr_graph_girth(t0.g, &girth) == FR_OK);
  CHECK(girth == 5);
  CHECK(fr_graph_is_biconnected(t0.g, &bic) == FR_OK);
  CHECK(bic == 1);

  Handle path;
  REQUIRE(fr_graph_path(4, path.slot()) == FR_OK);
  CHECK(fr_graph_girth(path.g, &girth) == FR_OK);
  CHECK(girth == -1);

  Handle kb;
  REQUIRE(fr_graph_complete_bipartite(3, 3, kb.slot()) == FR_OK);
  int mind = 0, bip = 0;
  CHECK(fr_graph_min_degree(kb.g, &mind) == FR_OK);
  CHECK(mind == 3);
  CHECK(fr_graph_is_bipartite(kb.g, &bip) == FR_OK);
  CHECK(bip == 1);

  Handle rnd1, rnd2;
  REQUIRE(fr_graph_sample_gnp(8, 0.5, 123, rnd1.slot()) == FR_OK);
  REQUIRE(fr_graph_sample_gnp(8, 0.5, 123, rnd2.slot()) == FR_OK);
  Text r1, r2;
  CHECK(fr_graph_render(rnd1.g, r1.slot()) == FR_OK);
  CHECK(fr_graph_render(rnd2.g, r2.slot()) == FR_OK);
  CHECK(r1.str() == r2.str());
}

TEST_CASE("text and file round trips") {
  Handle g;
  REQUIRE(fr_graph_parse("3 2\n0 1\n1 2\n", g.slot()) == FR_OK);
  Text render;
  REQUIRE(fr_graph_render(g.g, render.slot()) == FR_OK);
  Handle back;
  REQUIRE(fr_graph_parse(render.str().c_str(), back.slot()) == FR_OK);
  int m = 0;
  CHECK(fr_graph_edge_count(back.g, &m) == FR_OK);
  CHECK(m == 2);

  namespace sfs = std::filesystem;
  sfs::path file = sfs::temp_directory_path() / "fsg_capi_roundtrip.edges";
  REQUIRE(fr_graph_write_file(g.g, file.string().c_str()) == FR_OK);
  Handle from_disk;
  REQUIRE(fr_graph_read_file(file.string().c_str(), from_disk.slot()) == FR_OK);
  CHECK(fr_graph_edge_count(from_disk.g, &m) == FR_OK);
  CHECK(m == 2);
  sfs::remove(file);

  Handle bad;
  CHECK(fr_graph_parse("2 1\n0 9\n", bad.slot()) == FR_ERR_GRAPH);
  CHECK(fr_graph_read_file("/nonexistent/no.edges", bad.slot()) ==
        FR_ERR_GRAPH);
}

TEST_CASE("analysis calls map errors to codes") {
  Handle k4;
  REQUIRE(fr_graph_complete(4, k4.slot()) == FR_OK);
  uint64_t count = 0, iso = 0, total = 0;
  Text render;
  REQUIRE(fr_components(k4.g, k4.g, 12, &count, &iso, &total, render.slot()) ==
          FR_OK);
  CHECK(count == 1);
  CHECK(iso == 0);
  CHECK(total == 24);
  CHECK(render.str() == "count 1 sizes 24*1");

  CHECK(fr_components(k4.g, k4.g, 3, &count, &iso, &total, nullptr) ==
        FR_ERR_CAP);
  CHECK(fr_components(nullptr, k4.g, 12, &count, &iso, &total, nullptr) ==
        FR_ERR_ARGUMENT);

  std::vector<int> id{0, 1, 2, 3};
  int final_state[4];
  CHECK(fr_apply_sequence(k4.g, k4.g, id.data(), 4, "0,1", final_state) ==
        FR_OK);
  CHECK(final_state[0] == 1);
  CHECK(final_state[1] == 0);
  CHECK(fr_apply_sequence(k4.g, k4.g, id.data(), 4, "0;1", final_state) ==
        FR_ERR_SEQUENCE);

  int found = 0;
  Text seq;
  REQUIRE(fr_exchangeable(k4.g, k4.g, id.data(), 4, 0, 1, 12, &found,
                          seq.slot()) == FR_OK);
  CHECK(found == 1);
  CHECK_FALSE(seq.str().empty());
}

TEST_CASE("isolated search over the boundary") {
  Handle k2, empty;
  REQUIRE(fr_graph_complete(2, k2.slot()) == FR_OK);
  REQUIRE(fr_graph_create(2, empty.slot()) == FR_OK);
  int found = 0, exhaustive = 0, witness[2] = {-1, -1};
  uint64_t attempts = 0;
  REQUIRE(fr_find_isolated(k2.g, empty.g, 1000, &found, &exhaustive, &attempts,
                           witness) == FR_OK);
  CHECK(found == 1);
  int verdict = 0;
  CHECK(fr_is_isolated(k2.g, empty.g, witness, 2, &verdict) == FR_OK);
  CHECK(verdict == 1);
}

TEST_CASE("classification token crosses intact") {
  Handle t0;
  REQUIRE(fr_graph_theta0(t0.slot()) == FR_OK);
  Text status, detail;
  REQUIRE(fr_classify(t0.g, status.slot(), detail.slot()) == FR_OK);
  CHECK(status.str() == "theta0_exception");
}

TEST_CASE("constructions cross with manifests") {
  Handle x, y;
  Text man;
  REQUIRE(fr_build_lower_bound_pair(10, x.slot(), y.slot(), man.slot()) ==
          FR_OK);
  CHECK(man.str().find("\"family\": \"five-block\"") != std::string::npos);
  int n = 0;
  CHECK(fr_graph_vertex_count(x.g, &n) == FR_OK);
  CHECK(n == 10);

  Handle bx, by;
  Text bman;
  int sigma0[8];
  REQUIRE(fr_build_bipartite_lower_bound(4, bx.slot(), by.slot(), sigma0,
                                         bman.slot()) == FR_OK);
  const int expected[8] = {0, 1, 4, 5, 2, 3, 6, 7};
  for (int i = 0; i < 8; ++i) CHECK(sigma0[i] == expected[i]);

  int smallest = 0;
  REQUIRE(fr_smallest_feasible_gadget_m(&smallest) == FR_OK);
  CHECK(smallest == 691);

  Text seq;
  REQUIRE(fr_builtin_sequence(1, seq.slot()) == FR_OK);
  CHECK(fr_builtin_sequence(5, seq.slot()) == FR_ERR_ARGUMENT);
  Handle gmin, hmin;
  REQUIRE(fr_derive_sequence_gadget(seq.str().c_str(), 8, 6, 7, gmin.slot(),
                                    hmin.slot()) == FR_OK);
  int ge = 0;
  CHECK(fr_graph_edge_count(gmin.g, &ge) == FR_OK);
  CHECK(ge == 11);
}

TEST_CASE("exchange operations over the boundary") {
  Handle x, y;
  REQUIRE(fr_graph_create(4, x.slot()) == FR_OK);
  REQUIRE(fr_graph_create(4, y.slot()) == FR_OK);
  for (auto [a, b] : {std::pair{0, 1}, {0, 3}, {1, 3}, {2, 3}})
    REQUIRE(fr_graph_add_edge(x.g, a, b) == FR_OK);
  for (auto [a, b] : {std::pair{0, 2}, {1, 2}, {2, 3}})
    REQUIRE(fr_graph_add_edge(y.g, a, b) == FR_OK);
  std::vector<int> id{0, 1, 2, 3};
  int found = 0;
  Text seq, tag, reason;
  REQUIRE(fr_exchange_ladder(x.g, y.g, id.data(), 4, 0, 1, 12, &found,
                             seq.slot(), tag.slot(), reason.slot()) == FR_OK);
  CHECK(found == 1);
  CHECK(seq.str() == "2,3 0,2 1,2 0,2 2,3");
  CHECK(tag.str() == "path_conjugation");

  Handle kb;
  REQUIRE(fr_graph_complete_bipartite(3, 3, kb.slot()) == FR_OK);
  std::vector<int> id6{0, 1, 2, 3, 4, 5};
  Text bseq;
  REQUIRE(fr_bipartite_exchange(kb.g, kb.g, id6.data(), 6, 0, 3,
                                bseq.slot()) == FR_OK);
  CHECK(bseq.str() == "0,3");
  CHECK(fr_bipartite_exchange(kb.g, kb.g, id6.data(), 6, 0, 1, bseq.slot()) ==
        FR_ERR_GRAPH);
}

TEST_CASE("embedding and experiment entry points") {
  Handle k2, k4;
  REQUIRE(fr_graph_complete(2, k2.slot()) == FR_OK);
  REQUIRE(fr_graph_complete(4, k4.slot()) == FR_OK);
  std::vector<int> id{0, 1, 2, 3};
  int found = 0;
  Text witness;
  REQUIRE(fr_find_embedding(k2.g, k2.g, k4.g, k4.g, id.data(), 4, "0,1;2,3",
                            &found, witness.slot()) == FR_OK);
  CHECK(found == 1);
  CHECK_FALSE(witness.str().empty());

  namespace sfs = std::filesystem;
  sfs::path dir = sfs::temp_directory_path() / "fsg_capi_reports";
  sfs::create_directories(dir);
  double grid[1] = {1.0};
  Text csv;
  REQUIRE(fr_run_sweep("gnp", 4, grid, 1, 2, 1, 10,
                       (dir / "s.csv").string().c_str(), nullptr,
                       csv.slot()) == FR_OK);
  CHECK(csv.str().rfind("mode,size,p", 0) == 0);
  CHECK(sfs::file_size(dir / "s.csv") > 0);
  CHECK(fr_run_sweep("nope", 4, grid, 1, 2, 1, 10, nullptr, nullptr,
                     nullptr) == FR_ERR_GRAPH);

  Text hcsv;
  REQUIRE(fr_hitting_times(5, 2, 7, (dir / "h.csv").string().c_str(),
                           hcsv.slot()) == FR_OK);
  CHECK(hcsv.str().rfind("n,seed,t_iso,t_conn", 0) == 0);
  sfs::remove_all(dir);
}
