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

#include "dlrx/noc.hpp"
#include "dlrx/sim.hpp"

namespace dlrx {

struct EnergyParams {
  double sram_read_pj = 5.8;
  double sram_write_pj = 9.1;
  double wire_pj_per_mm = 8.0;  // per 32-bit flit
  double alu_op_pj = 1.0;
  double router_flit_pj = 1.0;  // moving a flit through a router ~ one ALU op
  double pu_leakage_mw = 0.5;
  double sram_leakage_uw = 16.9;  // per macro
  std::uint32_t macro_kb = 32;
  double sram_density_mbit_mm2 = 29.2;
  double frequency_ghz = 1.0;
  double pu_area_mm2 = 0.03;
  double router_area_mm2 = 0.0067;  // 5-port 32-bit mesh router
  double torus_router_factor = 1.5;
  double power_density_limit_mw_mm2 = 1500.0;
};

struct AreaReport {
  double sram_mm2 = 0.0;  // per tile
  double pu_mm2 = 0.0;
  double router_mm2 = 0.0;
  double tile_mm2 = 0.0;
  double chip_mm2 = 0.0;
  double pitch_mm = 0.0;
};

double sram_area_mm2(std::uint64_t mem_bytes, const EnergyParams& p);
double router_area_mm2(const Topology& topo, const EnergyParams& p);
/// Tile area = SRAM + PU + router; chip = W * H tiles; pitch = sqrt(tile).
AreaReport area_of(std::uint64_t mem_bytes_per_tile, const Topology& topo,
                   const EnergyParams& p);

/// Scratchpad provisioned per tile: the footprint rounded up to whole
/// macros, or an explicit size in KB when `sram_kb` is nonzero.
std::uint64_t tile_memory_bytes(std::uint64_t footprint_bytes, std::uint64_t sram_kb,
                                const EnergyParams& p);
std::uint64_t macros_of(std::uint64_t mem_bytes, const EnergyParams& p);

/// Wire length of one link in mm: mesh pitch, folded torus 2x pitch, ruche
/// R x pitch.
double unit_link_mm(const Topology& topo, double pitch_mm);
double ruche_link_mm(const Topology& topo, double pitch_mm);

struct EnergyLedger {
  double compute_j = 0.0;
  double sram_j = 0.0;
  double network_j = 0.0;
  double leakage_j = 0.0;

  double total() const { return compute_j + sram_j + network_j + leakage_j; }
  double fraction(double part) const { return total() > 0 ? part / total() : 0.0; }
  EnergyLedger& operator+=(const EnergyLedger& o);
};

/// Per-tile ledger; summing it over all tiles gives energy_of_run.
EnergyLedger tile_energy(const TileStats& tile, Cycle cycles, const Topology& topo,
                         std::uint64_t mem_bytes_per_tile, std::uint32_t width_bits,
                         const EnergyParams& p);
EnergyLedger energy_of_run(const RunStats& stats, const Topology& topo,
                           std::uint64_t mem_bytes_per_tile, std::uint32_t width_bits,
                           const EnergyParams& p);

/// mW per mm^2. Throws ConfigError on a non-positive area; 0 for an empty run.
double power_density(const EnergyLedger& ledger, double seconds, double chip_mm2);

}  // namespace dlrx
