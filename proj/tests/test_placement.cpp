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


#include <set>

#include "doctest.h"
#include "dlrx/placement.hpp"
#include "support.hpp"

using namespace dlrx;
using dlrx::testing::Gen;

TEST_CASE("owner_of: fixed cases") {
  const auto c = PlacementPolicy::make(Placement::Contiguous, 32, 4);
  CHECK(c.chunk == 8);
  CHECK(owner_of(9, c) == Slot{1, 1});
  const auto i = PlacementPolicy::make(Placement::Interleaved, 32, 4);
  CHECK(owner_of(9, i) == Slot{1, 2});
  CHECK(owner_of(0, c) == Slot{0, 0});
  CHECK(owner_of(0, i) == Slot{0, 0});
  CHECK_THROWS_AS(owner_of(32, c), SimAssertion);
}

TEST_CASE("padding: last tile padded") {
  const auto p = PlacementPolicy::make(Placement::Contiguous, 10, 4);
  CHECK(p.chunk == 3);
  const std::vector<int> v{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  const auto d = distribute(std::span<const int>(v), p, -1);
  REQUIRE(d.chunks.size() == 4);
  for (const auto& ch : d.chunks) CHECK(ch.size() == 3);
  CHECK(d.chunks[3] == std::vector<int>{9, -1, -1});
}

TEST_CASE("property: owner_of is a bijection and reassembly is exact") {
  Gen gen(3);
  for (int round = 0; round < 300; ++round) {
    const std::uint32_t tiles = 1u << gen.below(7);
    const std::uint64_t len = gen.below(500);
    const Placement kind = gen.coin() ? Placement::Contiguous : Placement::Interleaved;
    const auto p = PlacementPolicy::make(kind, len, tiles);
    std::set<std::pair<TileId, std::uint64_t>> seen;
    for (std::uint64_t i = 0; i < len; ++i) {
      const Slot s = owner_of(i, p);
      CHECK(s.tile < tiles);
      CHECK(s.local < p.chunk);
      CHECK(seen.insert({s.tile, s.local}).second);
      CHECK(global_of(s, p) == i);
    }
    std::vector<std::uint64_t> v(len);
    for (auto& x : v) x = gen.next();
    const auto d = distribute(std::span<const std::uint64_t>(v), p, std::uint64_t{0});
    CHECK(reassemble(d) == v);
  }
}

TEST_CASE("partition: edges contiguous, vertices by policy") {
  Gen gen(9);
  for (int round = 0; round < 50; ++round) {
    const Csr csr = build_csr(dlrx::testing::random_graph(gen, gen.range(1, 80), gen.below(300),
                                                          true),
                              false);
    const std::uint32_t tiles = 1u << gen.below(5);
    const Placement kind = gen.coin() ? Placement::Contiguous : Placement::Interleaved;
    const PartitionedDataset d = partition(csr, kind, tiles);
    CHECK(d.edge_policy.kind == Placement::Contiguous);
    CHECK(d.vertex_policy.kind == kind);
    const Csr back = d.reassemble_csr();
    CHECK(back.ptr == csr.ptr);
    CHECK(back.edge_idx == csr.edge_idx);
    CHECK(back.edge_values == csr.edge_values);
    // ptr_end padding repeats E so padded slots hold empty ranges.
    for (const auto& ch : d.ptr_end.chunks)
      for (std::uint64_t k = 0; k < ch.size(); ++k) CHECK(ch[k] <= csr.num_edges());
  }
}
