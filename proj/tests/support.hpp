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


#pragma once

#include <cstdint>
#include <initializer_list>
#include <tuple>
#include <vector>

#include "dlrx/common.hpp"
#include "dlrx/graph.hpp"
#include "dlrx/sim.hpp"

namespace dlrx::testing {

// Small deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() { return mix64(state_++ * 0x2545f4914f6cdd1dULL); }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return next() & 1; }

 private:
  std::uint64_t state_;
};

inline Graph graph_of(std::uint64_t v, std::initializer_list<std::tuple<int, int, int>> edges,
                      bool weighted = false) {
  Graph g;
  g.num_vertices = v;
  g.weighted = weighted;
  for (const auto& [s, d, w] : edges)
    g.edges.push_back({static_cast<VertexId>(s), static_cast<VertexId>(d),
                       static_cast<std::uint32_t>(w)});
  return g;
}

inline Graph random_graph(Gen& gen, std::uint64_t v, std::uint64_t e, bool weighted) {
  Graph g;
  g.num_vertices = v;
  g.weighted = weighted;
  for (std::uint64_t k = 0; k < e; ++k)
    g.edges.push_back({static_cast<VertexId>(gen.below(v)), static_cast<VertexId>(gen.below(v)),
                       weighted ? static_cast<std::uint32_t>(gen.range(1, 64)) : 1u});
  return g;
}

inline SimConfig small_config(KernelKind k, std::uint32_t w, std::uint32_t h) {
  SimConfig c;
  c.kernel = k;
  c.width = w;
  c.height = h;
  c.cycle_limit = 50'000'000;
  return c;
}

}  // namespace dlrx::testing
