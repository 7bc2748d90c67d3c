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

#include <filesystem>
#include <string>
#include <vector>

#include "dlrx/config.hpp"
#include "dlrx/energy.hpp"
#include "dlrx/oracles.hpp"
#include "dlrx/sim.hpp"

namespace dlrx {

struct RunResult {
  RunConfig cfg;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  RunStats stats;
  Footprint footprint;
  std::uint64_t tile_memory_bytes = 0;
  AreaReport area;
  EnergyLedger energy;
  double power_density_mw_mm2 = 0.0;
  bool oracle_checked = false;
  OracleReport oracle;
  std::vector<std::pair<std::uint64_t, std::pair<double, double>>> diffs;  // id, got, want
};

/// Validates, simulates, prices and (optionally) checks one configuration.
/// Throws ConfigError on failed validation and SimAbort on a stuck run.
RunResult run_experiment(const RunConfig& cfg, const Csr& csr);
RunResult run_experiment(const RunConfig& cfg);

/// run.json body. Contains no wall-clock data, so it is byte-stable.
std::string run_json(const RunResult& r);

/// Writes run.json and the CSVs into `dir` (created if missing).
void write_outputs(const std::filesystem::path& dir, const RunResult& r);

/// Writes through a temporary file and rename.
void write_atomic(const std::filesystem::path& path, const std::string& content);

struct SweepRow {
  std::vector<std::pair<std::string, std::string>> point;
  RunResult result;
};

std::string scaling_csv(const std::vector<SweepRow>& rows);

}  // namespace dlrx
