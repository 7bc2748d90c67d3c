/*
 * Copyright 2026 The dlrx Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <algorithm>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "dlrx/graph.hpp"
#include "support.hpp"

using namespace dlrx;
using dlrx::testing::Gen;

TEST_CASE("edge list: two-edge path") {
  std::istringstream in("0 1\n1 2\n");
  const Graph g = parse_edge_list(in, false);
  CHECK(g.num_vertices == 3);
  CHECK(g.num_edges() == 2);
  CHECK(g.edges[0].weight == 1);
  CHECK(g.edges[1].weight == 1);
}

TEST_CASE("edge list: self loop kept") {
  std::istringstream in("0 0\n");
  const Graph g = parse_edge_list(in, false);
  CHECK(g.num_vertices == 1);
  REQUIRE(g.num_edges() == 1);
  CHECK(g.edges[0] == Edge{0, 0, 1});
}

TEST_CASE("edge list: weighted line") {
  std::istringstream in("# comment\n2 1 7\n");
  const Graph g = parse_edge_list(in, true);
  CHECK(g.num_vertices == 3);
  REQUIRE(g.num_edges() == 1);
  CHECK(g.edges[0] == Edge{2, 1, 7});
}

TEST_CASE("edge list: errors name the line") {
  std::istringstream a("0 1\n0 x\n");
  CHECK_THROWS_WITH_AS(parse_edge_list(a, false, "f"), doctest::Contains("f:2"), ConfigError);
  std::istringstream b("0 1 5\n");
  CHECK_THROWS_AS(parse_edge_list(b, false), ConfigError);
  std::istringstream c("7\n");
  CHECK_THROWS_AS(parse_edge_list(c, false), ConfigError);
  CHECK_THROWS_AS(load_edge_list("/nonexistent/graph.txt", false), ConfigError);
}

TEST_CASE("rmat: counts") {
  RmatParams p;
  p.scale = 4;
  p.edge_factor = 10;
  const Graph g = rmat_generate(p);
  CHECK(g.num_vertices == 16);
  CHECK(g.num_edges() == 160);
  for (const Edge& e : g.edges) {
    CHECK(e.src < 16);
    CHECK(e.dst < 16);
  }
}

TEST_CASE("rmat: scale 16 size") {
  RmatParams p;
  p.scale = 16;
  p.edge_factor = 10;
  const Graph g = rmat_generate(p);
  CHECK(g.num_vertices == 65536);
  CHECK(g.num_edges() == 655360);
}

TEST_CASE("rmat: deterministic and seed dependent") {
  RmatParams p;
  p.scale = 10;
  p.weighted = true;
  const Graph a = rmat_generate(p), b = rmat_generate(p);
  CHECK(a.edges == b.edges);
  p.seed = 2;
  CHECK(rmat_generate(p).edges != a.edges);
}

TEST_CASE("rmat: skew survives the label permutation") {
  RmatParams p;
  p.scale = 12;
  const Graph g = rmat_generate(p);
  std::vector<std::uint64_t> deg(g.num_vertices);
  for (const Edge& e : g.edges) ++deg[e.src];
  const auto mx = *std::max_element(deg.begin(), deg.end());
  CHECK(mx > 20 * g.num_edges() / g.num_vertices);
  // Without the permutation vertex 0 is the hub.
  p.permute = false;
  const Graph raw = rmat_generate(p);
  std::vector<std::uint64_t> rdeg(raw.num_vertices);
  for (const Edge& e : raw.edges) ++rdeg[e.src];
  CHECK(rdeg[0] == *std::max_element(rdeg.begin(), rdeg.end()));
}

TEST_CASE("rmat: bad parameters") {
  RmatParams p;
  p.a = 0.9;
  CHECK_THROWS_AS(rmat_generate(p), ConfigError);
  p = RmatParams{};
  p.scale = 0;
  CHECK_THROWS_AS(rmat_generate(p), ConfigError);
}

TEST_CASE("csr: counting-sort example") {
  const Csr c = build_csr(dlrx::testing::graph_of(3, {{0, 1, 1}, {0, 2, 1}, {2, 1, 1}}), false);
  CHECK(c.ptr == std::vector<std::uint64_t>{0, 2, 2, 3});
  CHECK(c.edge_idx == std::vector<VertexId>{1, 2, 1});
}

TEST_CASE("csr: empty graph") {
  Graph g;
  g.num_vertices = 3;
  const Csr c = build_csr(g, false);
  CHECK(c.ptr == std::vector<std::uint64_t>{0, 0, 0, 0});
  CHECK(c.num_edges() == 0);
}

TEST_CASE("csr: symmetrize") {
  const Csr c = build_csr(dlrx::testing::graph_of(2, {{0, 1, 1}}), true);
  CHECK(c.num_edges() == 2);
  CHECK(c.ptr == std::vector<std::uint64_t>{0, 1, 2});
  CHECK(c.edge_idx == std::vector<VertexId>{1, 0});
}

TEST_CASE("csr: out-of-range edge") {
  CHECK_THROWS_AS(build_csr(dlrx::testing::graph_of(2, {{0, 5, 1}}), false), ConfigError);
}

TEST_CASE("property: csr invariants and edge multiset") {
  Gen gen(11);
  for (int round = 0; round < 200; ++round) {
    const std::uint64_t v = gen.range(1, 60);
    const bool weighted = gen.coin();
    const Graph g = dlrx::testing::random_graph(gen, v, gen.below(300), weighted);
    const Csr c = build_csr(g, false);
    REQUIRE(c.ptr.size() == v + 1);
    CHECK(c.ptr.front() == 0);
    CHECK(c.ptr.back() == g.num_edges());
    CHECK(std::is_sorted(c.ptr.begin(), c.ptr.end()));
    std::vector<std::tuple<VertexId, VertexId, std::uint32_t>> want, got;
    for (const Edge& e : g.edges) want.emplace_back(e.src, e.dst, e.weight);
    for (std::uint64_t u = 0; u < v; ++u)
      for (auto k = c.ptr[u]; k < c.ptr[u + 1]; ++k) {
        CHECK(c.edge_idx[k] < v);
        got.emplace_back(static_cast<VertexId>(u), c.edge_idx[k], c.edge_values[k]);
      }
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    CHECK(want == got);
  }
}

TEST_CASE("property: binary csr round trip") {
  Gen gen(5);
  const auto dir = std::filesystem::temp_directory_path() / "dlrx_graph_test";
  std::filesystem::create_directories(dir);
  for (int round = 0; round < 20; ++round) {
    const Csr c = build_csr(dlrx::testing::random_graph(gen, gen.range(1, 100), gen.below(400),
                                                        true),
                            gen.coin());
    const auto path = dir / ("g" + std::to_string(round) + ".bin");
    const int width = round % 2 ? 64 : 32;
    write_binary_csr(path, c, width);
    CHECK(is_binary_csr(path));
    const Csr back = read_binary_csr(path);
    CHECK(back.num_vertices == c.num_vertices);
    CHECK(back.ptr == c.ptr);
    CHECK(back.edge_idx == c.edge_idx);
    CHECK(back.edge_values == c.edge_values);
    CHECK(back.weighted == c.weighted);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("degree sort puts hubs first") {
  const Graph g = dlrx::testing::graph_of(4, {{3, 0, 1}, {3, 1, 1}, {3, 2, 1}, {1, 0, 1}});
  const Graph s = degree_sorted(g);
  const Csr c = build_csr(s, false);
  CHECK(c.degree(0) == 3);
  CHECK(c.degree(1) == 1);
}
