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
#include <string>
#include <vector>

#include "dlrx/graph.hpp"
#include "dlrx/kernels.hpp"

namespace dlrx {

// Sequential reference implementations. `inf` marks unreachable vertices.
std::vector<std::uint64_t> dijkstra(const Csr& csr, std::uint64_t root, std::uint64_t inf);
std::vector<std::uint64_t> bfs_levels(const Csr& csr, std::uint64_t root, std::uint64_t inf);
/// Minimum vertex id of each weakly connected component (union-find).
std::vector<std::uint64_t> wcc_labels(const Csr& csr);
/// Power iteration from the uniform vector for exactly `epochs` steps;
/// dangling mass is spread uniformly.
std::vector<double> pagerank_power(const Csr& csr, double damping, std::uint32_t epochs);
/// y = A x with wrap-around at the flit width.
std::vector<std::uint64_t> spmv_int(const Csr& csr, const std::vector<Word>& x,
                                    std::uint32_t width_bits);
/// y = A x with float32 products (x holds float32 bits) summed in double.
std::vector<double> spmv_real(const Csr& csr, const std::vector<Word>& x);

struct OracleReport {
  bool match = false;
  std::uint64_t mismatches = 0;
  double max_error = 0.0;  // L-inf (absolute; relative for SPMV real mode)
  double tolerance = 0.0;
  std::string detail;  // first mismatch, human readable
};

/// Runs the matching oracle and compares. PageRank uses `epochs` steps.
OracleReport check_oracle(KernelKind kind, const Csr& csr, const KernelParams& params,
                          const KernelOutput& out, std::uint32_t epochs);

}  // namespace dlrx
