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

#include "dlrx/placement.hpp"

#include <algorithm>

namespace dlrx {

std::string to_string(Placement p) {
  return p == Placement::Contiguous ? "contiguous" : "interleaved";
}

Placement parse_placement(const std::string& s) {
  if (s == "contiguous") return Placement::Contiguous;
  if (s == "interleaved") return Placement::Interleaved;
  throw ConfigError("unknown placement '" + s + "' (contiguous|interleaved)");
}

PlacementPolicy PlacementPolicy::make(Placement kind, std::uint64_t length,
                                      std::uint32_t num_tiles) {
  if (num_tiles == 0) throw ConfigError("placement over zero tiles");
  PlacementPolicy p;
  p.kind = kind;
  p.num_tiles = num_tiles;
  p.length = length;
  // A zero-length array still gets one (padding) slot per tile.
  p.chunk = std::max<std::uint64_t>(1, ceil_div(length, num_tiles));
  return p;
}

PartitionedDataset partition(const Csr& csr, Placement vertex_placement,
                             std::uint32_t num_tiles) {
  PartitionedDataset d;
  d.num_tiles = num_tiles;
  d.num_vertices = csr.num_vertices;
  d.num_edges = csr.num_edges();
  d.weighted = csr.weighted;
  d.vertex_policy = PlacementPolicy::make(vertex_placement, csr.num_vertices, num_tiles);
  d.edge_policy = PlacementPolicy::make(Placement::Contiguous, csr.num_edges(), num_tiles);

  const std::uint64_t e = csr.num_edges();
  std::span<const std::uint64_t> ptr(csr.ptr);
  d.ptr_begin = distribute(ptr.first(csr.num_vertices), d.vertex_policy, e);
  d.ptr_end = distribute(ptr.subspan(1, csr.num_vertices), d.vertex_policy, e);
  d.edge_idx = distribute(std::span<const VertexId>(csr.edge_idx), d.edge_policy,
                          VertexId{0});
  d.edge_values = distribute(std::span<const std::uint32_t>(csr.edge_values),
                             d.edge_policy, 0u);
  return d;
}

Csr PartitionedDataset::reassemble_csr() const {
  Csr csr;
  csr.num_vertices = num_vertices;
  csr.weighted = weighted;
  csr.ptr = reassemble(ptr_begin);
  csr.ptr.push_back(num_edges);
  csr.edge_idx = reassemble(edge_idx);
  csr.edge_values = reassemble(edge_values);
  return csr;
}

}  // namespace dlrx
