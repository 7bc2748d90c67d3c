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
#include <span>
#include <string>
#include <vector>

#include "dlrx/common.hpp"
#include "dlrx/graph.hpp"

namespace dlrx {

enum class Placement : std::uint8_t { Contiguous, Interleaved };

std::string to_string(Placement p);
Placement parse_placement(const std::string& s);

/// How one distributed array of `length` elements maps onto `num_tiles`
/// tiles. Every tile owns `chunk` = ceil(length / num_tiles) slots; the last
/// slots of some tiles are padding when length is not a multiple.
struct PlacementPolicy {
  Placement kind = Placement::Interleaved;
  std::uint32_t num_tiles = 1;
  std::uint64_t length = 0;
  std::uint64_t chunk = 0;

  static PlacementPolicy make(Placement kind, std::uint64_t length,
                              std::uint32_t num_tiles);
};

struct Slot {
  TileId tile = 0;
  std::uint64_t local = 0;

  friend bool operator==(const Slot&, const Slot&) = default;
};

/// Contiguous: (idx / chunk, idx % chunk). Interleaved: (idx % T, idx / T).
inline Slot owner_of(std::uint64_t idx, const PlacementPolicy& p) {
  DLRX_ASSERT(idx < p.length, "index ", idx, " outside array of length ", p.length);
  if (p.kind == Placement::Contiguous)
    return {static_cast<TileId>(idx / p.chunk), idx % p.chunk};
  return {static_cast<TileId>(idx % p.num_tiles), idx / p.num_tiles};
}

inline Slot owner_of(std::uint64_t idx, std::uint64_t array_len,
                     const PlacementPolicy& p) {
  DLRX_ASSERT(idx < array_len, "index ", idx, " outside array of length ", array_len);
  return owner_of(idx, p);
}

/// Inverse of owner_of. Padding slots map past the end of the array.
inline std::uint64_t global_of(Slot s, const PlacementPolicy& p) {
  if (p.kind == Placement::Contiguous) return s.tile * p.chunk + s.local;
  return s.local * p.num_tiles + s.tile;
}

/// One array split into equal per-tile chunks. Padding slots hold `pad`.
template <typename T>
struct Distributed {
  PlacementPolicy policy;
  std::vector<std::vector<T>> chunks;
  T pad{};
};

template <typename T>
Distributed<T> distribute(std::span<const T> values, const PlacementPolicy& policy,
                          T pad) {
  Distributed<T> d;
  d.policy = policy;
  d.pad = pad;
  d.chunks.assign(policy.num_tiles, std::vector<T>(policy.chunk, pad));
  for (std::uint64_t i = 0; i < values.size(); ++i) {
    const Slot s = owner_of(i, policy);
    d.chunks[s.tile][s.local] = values[i];
  }
  return d;
}

template <typename T>
std::vector<T> reassemble(const Distributed<T>& d) {
  std::vector<T> out(d.policy.length);
  for (std::uint64_t i = 0; i < out.size(); ++i) {
    const Slot s = owner_of(i, d.policy);
    out[i] = d.chunks[s.tile][s.local];
  }
  return out;
}

/// CSR arrays split per tile. Vertex-indexed arrays follow the configured
/// placement; edge-indexed arrays are always EDGES_PER_CHUNK-contiguous so
/// a neighbor range crosses tiles only at chunk boundaries.
struct PartitionedDataset {
  std::uint32_t num_tiles = 1;
  std::uint64_t num_vertices = 0;
  std::uint64_t num_edges = 0;
  PlacementPolicy vertex_policy;
  PlacementPolicy edge_policy;
  Distributed<std::uint64_t> ptr_begin;  // ptr[v]
  Distributed<std::uint64_t> ptr_end;    // ptr[v + 1]; padding repeats E
  Distributed<VertexId> edge_idx;
  Distributed<std::uint32_t> edge_values;
  bool weighted = false;

  std::uint64_t nodes_per_chunk() const { return vertex_policy.chunk; }
  std::uint64_t edges_per_chunk() const { return edge_policy.chunk; }

  Csr reassemble_csr() const;
};

PartitionedDataset partition(const Csr& csr, Placement vertex_placement,
                             std::uint32_t num_tiles);

}  // namespace dlrx
