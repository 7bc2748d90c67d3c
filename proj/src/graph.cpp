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

#include "dlrx/graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <numeric>

#include "dlrx/common.hpp"

namespace dlrx {

namespace {

constexpr char kCsrMagic[8] = {'D', 'L', 'R', 'X', 'C', 'S', 'R', '1'};

bool skip_ws(const char*& p, const char* end) {
  while (p < end && (*p == ' ' || *p == '\t' || *p == '\r' || *p == ',')) ++p;
  return p < end;
}

}  // namespace

Graph parse_edge_list(std::istream& in, bool weighted,
                      const std::string& source_name) {
  Graph g;
  g.weighted = weighted;
  std::string line;
  std::uint64_t line_no = 0;
  std::uint64_t max_id = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++line_no;
    const char* p = line.data();
    const char* end = p + line.size();
    if (!skip_ws(p, end) || *p == '#' || *p == '%') continue;

    std::array<std::uint64_t, 3> fields{};
    int n = 0;
    while (skip_ws(p, end) && *p != '#' && *p != '%') {
      if (n == 3)
        throw ConfigError(detail::concat(source_name, ":", line_no,
                                         ": too many fields"));
      auto [next, ec] = std::from_chars(p, end, fields[n]);
      if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' &&
                                *next != '\r' && *next != ',' && *next != '#'))
        throw ConfigError(detail::concat(source_name, ":", line_no,
                                         ": malformed number"));
      p = next;
      ++n;
    }
    if (n < 2)
      throw ConfigError(
          detail::concat(source_name, ":", line_no, ": expected 'src dst'"));
    if (n == 3 && !weighted)
      throw ConfigError(detail::concat(
          source_name, ":", line_no, ": weight given on an unweighted load"));
    if (fields[0] > 0xffffffffULL || fields[1] > 0xffffffffULL ||
        fields[2] > 0xffffffffULL)
      throw ConfigError(
          detail::concat(source_name, ":", line_no, ": value exceeds 32 bits"));
    Edge e{static_cast<VertexId>(fields[0]), static_cast<VertexId>(fields[1]),
           n == 3 ? static_cast<std::uint32_t>(fields[2]) : 1u};
    max_id = std::max({max_id, fields[0], fields[1]});
    any = true;
    g.edges.push_back(e);
  }
  g.num_vertices = any ? max_id + 1 : 0;
  return g;
}

Graph load_edge_list(const std::filesystem::path& path, bool weighted) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open edge list: " + path.string());
  return parse_edge_list(in, weighted, path.string());
}

Graph rmat_generate(const RmatParams& p) {
  if (p.scale < 1 || p.scale > 31)
    throw ConfigError("rmat: scale must be in [1, 31]");
  if (p.edge_factor < 1) throw ConfigError("rmat: edge_factor must be >= 1");
  const double sum = p.a + p.b + p.c + p.d;
  if (std::abs(sum - 1.0) > 1e-9 || p.a < 0 || p.b < 0 || p.c < 0 || p.d < 0)
    throw ConfigError("rmat: quadrant probabilities must be >= 0 and sum to 1");

  Graph g;
  g.num_vertices = std::uint64_t{1} << p.scale;
  g.weighted = p.weighted;
  const std::uint64_t m = g.num_vertices * p.edge_factor;
  g.edges.resize(m);
  const double ab = p.a + p.b;
  const double abc = ab + p.c;
  for (std::uint64_t k = 0; k < m; ++k) {
    std::uint64_t src = 0, dst = 0;
    for (int level = 0; level < p.scale; ++level) {
      const double u = unit_random(p.seed, k, static_cast<std::uint64_t>(level));
      const std::uint64_t bit = std::uint64_t{1} << (p.scale - 1 - level);
      if (u < p.a) {
      } else if (u < ab) {
        dst |= bit;
      } else if (u < abc) {
        src |= bit;
      } else {
        src |= bit;
        dst |= bit;
      }
    }
    std::uint32_t w = 1;
    if (p.weighted) {
      const double u = unit_random(p.seed, k, 0xfeedULL);
      w = 1 + static_cast<std::uint32_t>(u * p.max_weight);
    }
    g.edges[k] = Edge{static_cast<VertexId>(src), static_cast<VertexId>(dst), w};
  }
  if (p.permute) {
    // Without this the hubs sit at ids with many zero low bits.
    std::vector<VertexId> perm(g.num_vertices);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    for (std::uint64_t i = g.num_vertices - 1; i > 0; --i) {
      const double u = unit_random(p.seed, 0x9e3779b9ULL, i);
      std::swap(perm[i], perm[static_cast<std::uint64_t>(u * static_cast<double>(i + 1))]);
    }
    for (Edge& e : g.edges) {
      e.src = perm[e.src];
      e.dst = perm[e.dst];
    }
  }
  return g;
}

Graph uniform_random(std::uint64_t n, double density, std::uint64_t seed,
                     std::uint32_t max_weight) {
  if (density < 0.0 || density > 1.0)
    throw ConfigError("uniform: density must be in [0, 1]");
  Graph g;
  g.num_vertices = n;
  g.weighted = true;
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) {
      if (unit_random(seed, i, j) < density) {
        const double u = unit_random(seed ^ 0x5bd1e995ULL, i, j);
        g.edges.push_back(Edge{static_cast<VertexId>(i), static_cast<VertexId>(j),
                               1 + static_cast<std::uint32_t>(u * max_weight)});
      }
    }
  }
  return g;
}

Graph degree_sorted(const Graph& g) {
  std::vector<std::uint64_t> degree(g.num_vertices, 0);
  for (const Edge& e : g.edges) ++degree[e.src];
  std::vector<VertexId> order(g.num_vertices);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
    return degree[x] > degree[y];
  });
  std::vector<VertexId> relabel(g.num_vertices);
  for (std::uint64_t k = 0; k < order.size(); ++k)
    relabel[order[k]] = static_cast<VertexId>(k);

  Graph out = g;
  for (Edge& e : out.edges) {
    e.src = relabel[e.src];
    e.dst = relabel[e.dst];
  }
  return out;
}

Csr build_csr(const Graph& g, bool symmetrize) {
  const std::uint64_t v = g.num_vertices;
  for (const Edge& e : g.edges)
    if (e.src >= v || e.dst >= v)
      throw ConfigError(detail::concat("edge (", e.src, ",", e.dst,
                                       ") outside vertex range ", v));

  std::vector<Edge> edges;
  if (symmetrize) {
    edges.reserve(g.edges.size() * 2);
    for (const Edge& e : g.edges) {
      edges.push_back(e);
      edges.push_back(Edge{e.dst, e.src, e.weight});
    }
  }
  const std::vector<Edge>& src = symmetrize ? edges : g.edges;

  Csr csr;
  csr.num_vertices = v;
  csr.weighted = g.weighted;
  csr.ptr.assign(v + 1, 0);
  for (const Edge& e : src) ++csr.ptr[e.src + 1];
  for (std::uint64_t i = 0; i < v; ++i) csr.ptr[i + 1] += csr.ptr[i];

  csr.edge_idx.resize(src.size());
  csr.edge_values.resize(src.size());
  std::vector<std::uint64_t> cursor(csr.ptr.begin(),
                                    csr.ptr.begin() + static_cast<std::ptrdiff_t>(v));
  for (const Edge& e : src) {
    const std::uint64_t slot = cursor[e.src]++;
    csr.edge_idx[slot] = e.dst;
    csr.edge_values[slot] = g.weighted ? e.weight : 1u;
  }
  return csr;
}

namespace {

void put_le(std::ostream& out, std::uint64_t value, int bytes) {
  char buf[8];
  for (int i = 0; i < bytes; ++i) buf[i] = static_cast<char>((value >> (8 * i)) & 0xff);
  out.write(buf, bytes);
}

std::uint64_t get_le(std::istream& in, int bytes, const std::string& name) {
  unsigned char buf[8];
  if (!in.read(reinterpret_cast<char*>(buf), bytes))
    throw ConfigError("truncated binary CSR: " + name);
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  return v;
}

}  // namespace

void write_binary_csr(const std::filesystem::path& path, const Csr& csr,
                      int width_bits) {
  if (width_bits != 32 && width_bits != 64)
    throw ConfigError("binary CSR width must be 32 or 64");
  const int bytes = width_bits / 8;
  if (width_bits == 32 && csr.num_edges() > 0xffffffffULL)
    throw ConfigError("graph too large for a 32-bit container");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out.write(kCsrMagic, sizeof(kCsrMagic));
  put_le(out, static_cast<std::uint64_t>(width_bits), 4);
  put_le(out, csr.weighted ? 1u : 0u, 4);
  put_le(out, csr.num_vertices, 8);
  put_le(out, csr.num_edges(), 8);
  for (std::uint64_t p : csr.ptr) put_le(out, p, bytes);
  for (VertexId e : csr.edge_idx) put_le(out, e, bytes);
  for (std::uint32_t w : csr.edge_values) put_le(out, w, bytes);
}

bool is_binary_csr(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  char magic[8] = {};
  return in.read(magic, 8) && std::memcmp(magic, kCsrMagic, 8) == 0;
}

Csr read_binary_csr(const std::filesystem::path& path) {
  const std::string name = path.string();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + name);
  char magic[8] = {};
  if (!in.read(magic, 8) || std::memcmp(magic, kCsrMagic, 8) != 0)
    throw ConfigError("not a DLRXCSR1 container: " + name);
  const auto width = get_le(in, 4, name);
  if (width != 32 && width != 64)
    throw ConfigError("binary CSR: bad width flag in " + name);
  const int bytes = static_cast<int>(width / 8);
  Csr csr;
  csr.weighted = (get_le(in, 4, name) & 1u) != 0;
  csr.num_vertices = get_le(in, 8, name);
  const std::uint64_t e = get_le(in, 8, name);
  csr.ptr.resize(csr.num_vertices + 1);
  for (auto& p : csr.ptr) p = get_le(in, bytes, name);
  csr.edge_idx.resize(e);
  for (auto& x : csr.edge_idx) x = static_cast<VertexId>(get_le(in, bytes, name));
  csr.edge_values.resize(e);
  for (auto& w : csr.edge_values) w = static_cast<std::uint32_t>(get_le(in, bytes, name));
  if (csr.ptr.front() != 0 || csr.ptr.back() != e ||
      !std::is_sorted(csr.ptr.begin(), csr.ptr.end()))
    throw ConfigError("binary CSR: inconsistent ptr array in " + name);
  for (VertexId x : csr.edge_idx)
    if (x >= csr.num_vertices)
      throw ConfigError("binary CSR: edge target out of range in " + name);
  return csr;
}

}  // namespace dlrx
