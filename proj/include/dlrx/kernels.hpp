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
#include <memory>
#include <string>
#include <vector>

#include "dlrx/graph.hpp"
#include "dlrx/placement.hpp"
#include "dlrx/program.hpp"
#include "dlrx/tile.hpp"

namespace dlrx {

enum class KernelKind : std::uint8_t { Bfs, Sssp, Wcc, PageRank, Spmv };

std::string to_string(KernelKind k);
KernelKind parse_kernel(const std::string& s);
bool kernel_weighted(KernelKind k);
bool kernel_symmetric(KernelKind k);

struct KernelParams {
  std::uint64_t root = 0;
  bool barrier = false;
  std::uint32_t width_bits = 32;
  // Queue sizes (entries).
  std::uint32_t iq_t1 = 32;
  std::uint32_t iq_t2 = 128;
  std::uint32_t iq_t3 = 2048;
  std::uint32_t iq_acc = 2048;  // SPMV accumulation task
  std::uint32_t iq_t4 = 32;     // floor; T4 always has one entry per frontier block
  std::uint32_t cq1_len = 128;
  std::uint32_t cq2_len = 1024;
  std::uint32_t cq3_len = 1024;
  /// Largest edge range per CQ1 message; 0 picks q_len(CQ2) / flits-per-edge.
  std::uint32_t oqt2 = 0;
  // PageRank.
  double damping = 0.85;
  double epsilon = 1e-4;
  std::uint32_t max_epochs = 20;
  // SPMV.
  bool spmv_float = false;
  std::uint64_t x_seed = 1;
};

/// Scratchpad bytes a tile needs for one kernel.
struct Footprint {
  std::uint64_t data_bytes = 0;
  std::uint64_t queue_bytes = 0;
  std::uint64_t code_bytes = 0;
  std::uint64_t total() const { return data_bytes + queue_bytes + code_bytes; }
};

/// What the host does when the chip goes idle.
struct HostAction {
  enum class Kind : std::uint8_t { Stop, Broadcast } kind = Kind::Stop;
  std::uint16_t task = 0;
  Word payload = 0;
};

/// Final values gathered from every owner, indexed by global id.
struct KernelOutput {
  bool real = false;
  std::vector<std::uint64_t> ints;
  std::vector<double> reals;
};

class Kernel {
 public:
  virtual ~Kernel() = default;

  KernelKind kind() const { return kind_; }
  const KernelParams& params() const { return params_; }
  const TaskProgram& program() const { return program_; }
  Word inf() const;

  /// Loads this tile's chunk of every array and initial property values.
  virtual std::unique_ptr<TileData> make_tile_data(TileId tile,
                                                   const PartitionedDataset& d) const = 0;
  /// Host seeding before cycle 0 (root invocation or initial frontier).
  virtual void seed(std::vector<Tile>& tiles, const PartitionedDataset& d) = 0;
  /// Barrier controller: called on every global quiescence.
  virtual HostAction on_quiescence(std::vector<Tile>& tiles) = 0;
  virtual KernelOutput output(const std::vector<Tile>& tiles,
                              const PartitionedDataset& d) const = 0;
  virtual Footprint footprint(const PartitionedDataset& d) const = 0;

  std::uint32_t broadcasts() const { return broadcasts_; }
  std::uint32_t epochs() const { return epochs_; }
  std::uint32_t oqt2() const { return oqt2_; }

 protected:
  Kernel(KernelKind kind, const KernelParams& p) : kind_(kind), params_(p) {}

  KernelKind kind_;
  KernelParams params_;
  TaskProgram program_;
  std::uint32_t broadcasts_ = 0;
  std::uint32_t epochs_ = 0;
  std::uint32_t oqt2_ = 0;
};

/// Builds the task program for `kind` over a partitioned dataset. Throws
/// ConfigError for unsupported combinations (PageRank without barriers, an
/// OQT2 that does not fit CQ2, a root outside the graph).
std::unique_ptr<Kernel> make_kernel(KernelKind kind, const KernelParams& params,
                                    const PartitionedDataset& d);

// Task indices shared by the graph programs.
namespace task {
inline constexpr std::uint16_t T1 = 0, T2 = 1, T3 = 2, T4 = 3, T5 = 4, T6 = 5;
}

/// Deterministic dense vector for SPMV: small integers, or float32 bits in
/// [0, 1) in floating mode.
std::vector<Word> spmv_x(std::uint64_t n, std::uint64_t seed, bool real);

}  // namespace dlrx
