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
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dlrx/energy.hpp"
#include "dlrx/graph.hpp"
#include "dlrx/sim.hpp"

namespace dlrx {

/// Everything one run needs: simulator config, dataset and outputs.
struct RunConfig {
  SimConfig sim;
  EnergyParams energy;
  std::string dataset = "rmat:s=10:ef=10";
  std::uint64_t seed = 1;
  bool oracle = true;
  std::string out = "out";
  std::uint64_t sram_kb = 0;  // 0 = footprint rounded up to macros
  std::uint64_t code_kb = 32;
  /// kernel.root = auto: highest out-degree vertex, lowest id on ties.
  bool root_auto = true;
};

/// Applies the deferred choices that depend on the dataset (auto root).
RunConfig resolve(const RunConfig& cfg, const Csr& csr);

/// One flat dotted configuration key.
struct ConfigKey {
  std::string name;
  std::string help;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
  bool echo = true;  // part of the reproducibility echo in run.json
};

const std::vector<ConfigKey>& config_keys();
const ConfigKey* find_key(const std::string& name);

/// Applies `key = value`. Throws ConfigError naming the key.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Parses "key = value" lines; '#' starts a comment.
std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string& text,
                                                                   const std::string& name);
void load_config_file(RunConfig& cfg, const std::string& path);

/// Ordered key/value echo sufficient to reproduce the run.
std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& cfg);

std::pair<std::uint32_t, std::uint32_t> parse_grid(const std::string& s);

/// Dataset URIs: "file:PATH" (edge list or DLRXCSR1), "rmat:s=..:ef=..
/// [:seed=..][:a=..:b=..:c=..:d=..][:sort=degree][:permute=0]", "uniform:n=..:density=..
/// [:seed=..]". Missing seeds default to `seed`. WCC inputs are symmetrized.
Csr load_dataset(const std::string& uri, KernelKind kernel, std::uint64_t seed);

struct Diagnostic {
  enum class Severity : std::uint8_t { Error, Warning, Info } severity = Severity::Error;
  std::string code;
  std::string message;
};

struct Validation {
  std::vector<Diagnostic> diagnostics;
  Footprint footprint;
  std::uint64_t tile_memory_bytes = 0;
  bool ok() const;
};

/// Static checks: grid, kernel/barrier combination, OQT2 rule, head-flit
/// index bits, code budget, queues and dataset against per-tile memory.
Validation validate(const RunConfig& cfg, const Csr& csr);
Validation validate(const RunConfig& cfg);

std::string to_string(const Diagnostic& d);

}  // namespace dlrx
