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


#include "dlrx/energy.hpp"

#include <algorithm>
#include <cmath>

namespace dlrx {

double sram_area_mm2(std::uint64_t mem_bytes, const EnergyParams& p) {
  const double mbit = static_cast<double>(mem_bytes) * 8.0 / 1e6;
  return mbit / p.sram_density_mbit_mm2;
}

double router_area_mm2(const Topology& topo, const EnergyParams& p) {
  double a = p.router_area_mm2;
  if (topo.torus()) a *= p.torus_router_factor;
  // Crossbar area grows with the square of the radix.
  const double radix = static_cast<double>(topo.num_ports()) / 5.0;
  return a * radix * radix;
}

AreaReport area_of(std::uint64_t mem_bytes_per_tile, const Topology& topo,
                   const EnergyParams& p) {
  AreaReport r;
  r.sram_mm2 = sram_area_mm2(mem_bytes_per_tile, p);
  r.pu_mm2 = p.pu_area_mm2;
  r.router_mm2 = router_area_mm2(topo, p);
  r.tile_mm2 = r.sram_mm2 + r.pu_mm2 + r.router_mm2;
  r.chip_mm2 = r.tile_mm2 * topo.tiles();
  r.pitch_mm = std::sqrt(r.tile_mm2);
  return r;
}

std::uint64_t macros_of(std::uint64_t mem_bytes, const EnergyParams& p) {
  return ceil_div(mem_bytes, std::uint64_t{p.macro_kb} * 1024);
}

std::uint64_t tile_memory_bytes(std::uint64_t footprint_bytes, std::uint64_t sram_kb,
                                const EnergyParams& p) {
  if (sram_kb) return sram_kb * 1024;
  return std::max<std::uint64_t>(1, macros_of(footprint_bytes, p)) * p.macro_kb * 1024;
}

double unit_link_mm(const Topology& topo, double pitch_mm) {
  return topo.torus() ? 2.0 * pitch_mm : pitch_mm;
}

double ruche_link_mm(const Topology& topo, double pitch_mm) {
  return static_cast<double>(topo.ruche) * pitch_mm;
}

EnergyLedger& EnergyLedger::operator+=(const EnergyLedger& o) {
  compute_j += o.compute_j;
  sram_j += o.sram_j;
  network_j += o.network_j;
  leakage_j += o.leakage_j;
  return *this;
}

EnergyLedger tile_energy(const TileStats& tile, Cycle cycles, const Topology& topo,
                         std::uint64_t mem_bytes_per_tile, std::uint32_t width_bits,
                         const EnergyParams& p) {
  constexpr double pj = 1e-12;
  const AreaReport area = area_of(mem_bytes_per_tile, topo, p);
  const double flit_scale = static_cast<double>(width_bits) / 32.0;
  EnergyLedger e;
  e.compute_j = static_cast<double>(tile.micro_ops) * p.alu_op_pj * pj;
  e.sram_j = (static_cast<double>(tile.mem_reads) * p.sram_read_pj +
              static_cast<double>(tile.mem_writes) * p.sram_write_pj) *
             pj;
  std::uint64_t unit = 0, ruche = 0, traversals = tile.port_flits[Local];
  for (std::uint32_t q = N; q <= W; ++q) unit += tile.port_flits[q];
  for (std::uint32_t q = RN; q <= RW; ++q) ruche += tile.port_flits[q];
  traversals += unit + ruche;
  const double wire_pj =
      (static_cast<double>(unit) * unit_link_mm(topo, area.pitch_mm) +
       static_cast<double>(ruche) * ruche_link_mm(topo, area.pitch_mm)) *
      p.wire_pj_per_mm * flit_scale;
  e.network_j = (wire_pj + static_cast<double>(traversals) * p.router_flit_pj) * pj;
  const double seconds = static_cast<double>(cycles) / (p.frequency_ghz * 1e9);
  const double leak_w = p.pu_leakage_mw * 1e-3 +
                        static_cast<double>(macros_of(mem_bytes_per_tile, p)) *
                            p.sram_leakage_uw * 1e-6;
  e.leakage_j = leak_w * seconds;
  return e;
}

EnergyLedger energy_of_run(const RunStats& stats, const Topology& topo,
                           std::uint64_t mem_bytes_per_tile, std::uint32_t width_bits,
                           const EnergyParams& p) {
  EnergyLedger total;
  for (const auto& t : stats.tiles)
    total += tile_energy(t, stats.cycles, topo, mem_bytes_per_tile, width_bits, p);
  return total;
}

double power_density(const EnergyLedger& ledger, double seconds, double chip_mm2) {
  if (!(chip_mm2 > 0.0)) throw ConfigError("power density needs a positive chip area");
  if (!(seconds > 0.0)) return 0.0;
  return ledger.total() / seconds * 1e3 / chip_mm2;
}

}  // namespace dlrx
