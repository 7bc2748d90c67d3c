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


#include "dlrx/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>

#include "dlrx/common.hpp"

namespace dlrx {

std::vector<std::uint64_t> dijkstra(const Csr& csr, std::uint64_t root, std::uint64_t inf) {
  std::vector<std::uint64_t> dist(csr.num_vertices, inf);
  if (csr.num_vertices == 0) return dist;
  using Item = std::pair<std::uint64_t, std::uint64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[root] = 0;
  pq.push({0, root});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (std::uint64_t k = csr.ptr[u]; k < csr.ptr[u + 1]; ++k) {
      const std::uint64_t v = csr.edge_idx[k];
      const std::uint64_t nd = d + csr.edge_values[k];
      if (nd < dist[v]) {
        dist[v] = nd;
        pq.push({nd, v});
      }
    }
  }
  return dist;
}

std::vector<std::uint64_t> bfs_levels(const Csr& csr, std::uint64_t root, std::uint64_t inf) {
  std::vector<std::uint64_t> level(csr.num_vertices, inf);
  if (csr.num_vertices == 0) return level;
  std::vector<std::uint64_t> current{root}, next;
  level[root] = 0;
  for (std::uint64_t depth = 1; !current.empty(); ++depth) {
    next.clear();
    for (auto u : current)
      for (std::uint64_t k = csr.ptr[u]; k < csr.ptr[u + 1]; ++k) {
        const std::uint64_t v = csr.edge_idx[k];
        if (level[v] == inf) {
          level[v] = depth;
          next.push_back(v);
        }
      }
    std::swap(current, next);
  }
  return level;
}

std::vector<std::uint64_t> wcc_labels(const Csr& csr) {
  std::vector<std::uint64_t> parent(csr.num_vertices);
  std::iota(parent.begin(), parent.end(), std::uint64_t{0});
  auto find = [&](std::uint64_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::uint64_t u = 0; u < csr.num_vertices; ++u)
    for (std::uint64_t k = csr.ptr[u]; k < csr.ptr[u + 1]; ++k) {
      const std::uint64_t a = find(u), b = find(csr.edge_idx[k]);
      // The smaller id becomes the root, so roots are component minima.
      if (a < b)
        parent[b] = a;
      else if (b < a)
        parent[a] = b;
    }
  std::vector<std::uint64_t> label(csr.num_vertices);
  for (std::uint64_t v = 0; v < csr.num_vertices; ++v) label[v] = find(v);
  return label;
}

std::vector<double> pagerank_power(const Csr& csr, double damping, std::uint32_t epochs) {
  const std::uint64_t n = csr.num_vertices;
  std::vector<double> rank(n, n ? 1.0 / static_cast<double>(n) : 0.0), next(n);
  for (std::uint32_t e = 0; e < epochs; ++e) {
    double dangling = 0.0;
    std::fill(next.begin(), next.end(), 0.0);
    for (std::uint64_t u = 0; u < n; ++u) {
      const std::uint64_t deg = csr.degree(u);
      if (deg == 0) {
        dangling += rank[u];
        continue;
      }
      const double c = damping * rank[u] / static_cast<double>(deg);
      for (std::uint64_t k = csr.ptr[u]; k < csr.ptr[u + 1]; ++k) next[csr.edge_idx[k]] += c;
    }
    const double base = (1.0 - damping) / static_cast<double>(n) +
                        damping * dangling / static_cast<double>(n);
    for (std::uint64_t v = 0; v < n; ++v) rank[v] = base + next[v];
  }
  return rank;
}

std::vector<std::uint64_t> spmv_int(const Csr& csr, const std::vector<Word>& x,
                                    std::uint32_t width_bits) {
  const std::uint64_t mask =
      width_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_bits) - 1;
  std::vector<std::uint64_t> y(csr.num_vertices, 0);
  for (std::uint64_t i = 0; i < csr.num_vertices; ++i)
    for (std::uint64_t k = csr.ptr[i]; k < csr.ptr[i + 1]; ++k)
      y[i] = (y[i] + ((csr.edge_values[k] * x[csr.edge_idx[k]]) & mask)) & mask;
  return y;
}

std::vector<double> spmv_real(const Csr& csr, const std::vector<Word>& x) {
  std::vector<double> y(csr.num_vertices, 0.0);
  for (std::uint64_t i = 0; i < csr.num_vertices; ++i)
    for (std::uint64_t k = csr.ptr[i]; k < csr.ptr[i + 1]; ++k) {
      const float xf = std::bit_cast<float>(static_cast<std::uint32_t>(x[csr.edge_idx[k]]));
      y[i] += static_cast<double>(static_cast<float>(csr.edge_values[k]) * xf);
    }
  return y;
}

namespace {

OracleReport compare_exact(const std::vector<std::uint64_t>& want,
                           const std::vector<std::uint64_t>& got) {
  OracleReport r;
  if (want.size() != got.size()) {
    r.detail = detail::concat("length ", got.size(), " != ", want.size());
    return r;
  }
  for (std::uint64_t i = 0; i < want.size(); ++i)
    if (want[i] != got[i]) {
      if (r.mismatches++ == 0)
        r.detail = detail::concat("index ", i, ": got ", got[i], ", want ", want[i]);
      r.max_error = std::max(r.max_error, std::abs(static_cast<double>(want[i]) -
                                                   static_cast<double>(got[i])));
    }
  r.match = r.mismatches == 0;
  return r;
}

OracleReport compare_real(const std::vector<double>& want, const std::vector<double>& got,
                          double tol, bool relative) {
  OracleReport r;
  r.tolerance = tol;
  if (want.size() != got.size()) {
    r.detail = detail::concat("length ", got.size(), " != ", want.size());
    return r;
  }
  for (std::uint64_t i = 0; i < want.size(); ++i) {
    double err = std::abs(want[i] - got[i]);
    if (relative) err /= std::max(std::abs(want[i]), 1e-300);
    if (!(err <= tol) && want[i] != got[i]) {
      if (r.mismatches++ == 0)
        r.detail = detail::concat("index ", i, ": got ", got[i], ", want ", want[i]);
    }
    if (want[i] != got[i]) r.max_error = std::max(r.max_error, err);
  }
  r.match = r.mismatches == 0;
  return r;
}

}  // namespace

OracleReport check_oracle(KernelKind kind, const Csr& csr, const KernelParams& params,
                          const KernelOutput& out, std::uint32_t epochs) {
  const std::uint64_t inf =
      params.width_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << params.width_bits) - 1;
  switch (kind) {
    case KernelKind::Sssp: return compare_exact(dijkstra(csr, params.root, inf), out.ints);
    case KernelKind::Bfs: return compare_exact(bfs_levels(csr, params.root, inf), out.ints);
    case KernelKind::Wcc: return compare_exact(wcc_labels(csr), out.ints);
    case KernelKind::PageRank:
      return compare_real(pagerank_power(csr, params.damping, epochs), out.reals, 1e-6, false);
    case KernelKind::Spmv: {
      const auto x = spmv_x(csr.num_vertices, params.x_seed, params.spmv_float);
      if (params.spmv_float) return compare_real(spmv_real(csr, x), out.reals, 1e-9, true);
      return compare_exact(spmv_int(csr, x, params.width_bits), out.ints);
    }
  }
  return {};
}

}  // namespace dlrx
