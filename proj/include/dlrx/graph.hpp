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
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace dlrx {

using VertexId = std::uint32_t;

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  std::uint32_t weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed edge list. Duplicates and self-loops are kept as given.
struct Graph {
  std::uint64_t num_vertices = 0;
  std::vector<Edge> edges;
  bool weighted = false;
  bool directed = true;

  std::uint64_t num_edges() const { return edges.size(); }
};

/// Compressed sparse row. ptr has V+1 entries; edge_values is parallel to
/// edge_idx (all ones for unweighted graphs).
struct Csr {
  std::uint64_t num_vertices = 0;
  std::vector<std::uint64_t> ptr;
  std::vector<VertexId> edge_idx;
  std::vector<std::uint32_t> edge_values;
  bool weighted = false;

  std::uint64_t num_edges() const { return edge_idx.size(); }
  std::uint64_t degree(std::uint64_t v) const { return ptr[v + 1] - ptr[v]; }
};

/// Parses "src dst [weight]" lines. '#' and '%' start comments. Throws
/// ConfigError naming the line on malformed input or on a weight column
/// when `weighted` is false.
Graph parse_edge_list(std::istream& in, bool weighted,
                      const std::string& source_name = "<stream>");
Graph load_edge_list(const std::filesystem::path& path, bool weighted);

struct RmatParams {
  int scale = 10;
  std::uint32_t edge_factor = 10;
  std::uint64_t seed = 1;
  double a = 0.57, b = 0.19, c = 0.19, d = 0.05;
  bool weighted = false;
  std::uint32_t max_weight = 64;
  /// Scramble vertex labels with a seeded permutation (Graph500 / GAP do).
  bool permute = true;
};

/// Recursive-matrix generator. Edge k draws from its own counter-based
/// stream, so the output depends only on the parameters.
Graph rmat_generate(const RmatParams& params);

/// n x n matrix pattern with each entry present independently with
/// probability `density`; weights in [1, max_weight].
Graph uniform_random(std::uint64_t n, double density, std::uint64_t seed,
                     std::uint32_t max_weight = 64);

/// Relabels vertices by descending out-degree (ties keep id order).
Graph degree_sorted(const Graph& g);

Csr build_csr(const Graph& g, bool symmetrize);

// Binary container: "DLRXCSR1", u32 width_bits (32|64), u32 flags
// (bit0 = weighted), u64 V, u64 E, then ptr[V+1], edge_idx[E],
// edge_values[E], all little-endian at width_bits.
void write_binary_csr(const std::filesystem::path& path, const Csr& csr,
                      int width_bits = 32);
Csr read_binary_csr(const std::filesystem::path& path);
bool is_binary_csr(const std::filesystem::path& path);

}  // namespace dlrx
