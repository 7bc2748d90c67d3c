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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlrx/common.hpp"
#include "dlrx/placement.hpp"

namespace dlrx {

enum class TopologyKind : std::uint8_t { Mesh, Torus };

std::string to_string(TopologyKind k);
TopologyKind parse_topology(const std::string& s);

/// Router ports. N decreases y, S increases y, E increases x, W decreases x.
/// The R-prefixed ports are ruche links spanning `ruche` tiles.
enum Port : std::uint8_t { Local = 0, N, E, S, W, RN, RE, RS, RW };
inline constexpr std::uint32_t kMaxPorts = 9;

Port opposite(Port p);
const char* port_name(Port p);

struct Topology {
  TopologyKind kind = TopologyKind::Torus;
  std::uint32_t width = 1;
  std::uint32_t height = 1;
  std::uint32_t ruche = 1;
  std::uint32_t buffer_pool = 8;  // slots per input direction, all channels

  /// Validates the power-of-two and ruche constraints.
  static Topology make(TopologyKind kind, std::uint32_t width, std::uint32_t height,
                       std::uint32_t ruche = 1, std::uint32_t buffer_pool = 8);

  std::uint32_t tiles() const { return width * height; }
  std::uint32_t tile_bits() const { return log2_floor(tiles()); }
  std::uint32_t num_ports() const { return ruche > 1 ? 9 : 5; }
  std::uint32_t x_of(TileId t) const { return t % width; }
  std::uint32_t y_of(TileId t) const { return t / width; }
  TileId id(std::uint32_t x, std::uint32_t y) const { return y * width + x; }
  bool torus() const { return kind == TopologyKind::Torus; }

  /// Tile at the far end of the link leaving `t` through `p`, if wired.
  std::optional<TileId> neighbor(TileId t, Port p) const;
};

/// Head flit = (tile << (width - tile_bits)) | local.
struct HeadCodec {
  std::uint32_t width_bits = 32;
  std::uint32_t tile_bits = 0;

  std::uint32_t local_bits() const { return width_bits - tile_bits; }
  std::uint64_t local_mask() const {
    return local_bits() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << local_bits()) - 1;
  }
  Word encode(Slot s) const {
    DLRX_ASSERT(s.local <= local_mask(), "local index ", s.local, " exceeds ",
                local_bits(), " head bits");
    return tile_bits == 0 ? s.local
                          : (static_cast<Word>(s.tile) << local_bits()) | s.local;
  }
  Slot decode(Word flit) const {
    if (tile_bits == 0) return {0, flit & local_mask()};
    return {static_cast<TileId>(flit >> local_bits()), flit & local_mask()};
  }
};

Word encode_head(std::uint64_t global_idx, const PlacementPolicy& policy,
                 const HeadCodec& codec);
Slot decode_head(Word flit, const HeadCodec& codec);

/// Dimension-ordered next hop: X first, then Y. On a torus the shorter
/// direction wins (ties go positive); the ruche port is taken while the
/// remaining distance in the dimension is at least the ruche factor.
Port route_next(TileId current, TileId dest, const Topology& topo);

/// Hop count of the path route_next produces.
std::uint32_t route_hops(TileId src, TileId dest, const Topology& topo);

/// A message entering a ring needs room for itself plus one bubble slot;
/// flits already in the ring only need one slot.
inline bool bubble_admission(std::uint32_t free_slots, std::uint32_t message_flits,
                             bool entering_ring) {
  return entering_ring ? free_slots >= message_flits + 1 : free_slots >= 1;
}

/// Wire payload plus out-of-band simulator metadata.
struct Flit {
  Word payload = 0;
  std::uint64_t tag = 0;
  TileId dest = 0;
  TileId src = 0;
  std::uint16_t len = 1;
  std::uint16_t hops = 0;
  std::uint8_t channel = 0;
  bool head = false;
};

class FlitBuffer {
 public:
  FlitBuffer() = default;
  explicit FlitBuffer(std::uint32_t slots) : slots_(slots) {}

  std::uint32_t capacity() const { return static_cast<std::uint32_t>(slots_.size()); }
  std::uint32_t size() const { return size_; }
  std::uint32_t free() const { return capacity() - size_; }
  bool empty() const { return size_ == 0; }
  std::uint32_t high_water() const { return high_; }

  const Flit& front() const { return slots_[head_]; }
  const Flit& at(std::uint32_t i) const {
    std::uint32_t k = head_ + i;
    if (k >= capacity()) k -= capacity();
    return slots_[k];
  }
  void push(const Flit& f) {
    DLRX_ASSERT(size_ < capacity(), "router buffer overflow (", capacity(), " slots)");
    std::uint32_t tail = head_ + size_;
    if (tail >= capacity()) tail -= capacity();
    slots_[tail] = f;
    if (++size_ > high_) high_ = size_;
  }
  Flit pop() {
    DLRX_ASSERT(size_ > 0, "router buffer underflow");
    Flit f = slots_[head_];
    if (++head_ == capacity()) head_ = 0;
    --size_;
    return f;
  }

 private:
  std::vector<Flit> slots_;
  std::uint32_t head_ = 0;
  std::uint32_t size_ = 0;
  std::uint32_t high_ = 0;
};

/// Per-channel slots: an even split of the pool, but never less than one
/// full message plus a bubble slot.
std::vector<std::uint32_t> channel_slots(std::uint32_t pool,
                                         const std::vector<std::uint32_t>& message_flits);

struct RouterCounters {
  std::array<std::uint64_t, kMaxPorts> flits_out{};  // Local = ejected flits
  std::uint64_t flits_injected = 0;
  std::uint64_t busy_cycles = 0;
  std::uint64_t stall_cycles = 0;
  std::uint64_t messages_ejected = 0;
};

/// Input-buffered wormhole router. Buffers are indexed [port * nch + ch].
struct Router {
  std::uint32_t nports = 5;
  std::uint32_t nch = 0;
  std::vector<FlitBuffer> in;
  std::vector<std::int16_t> route_out;    // per buffer: open route's output or -1
  std::vector<std::uint16_t> remaining;   // per buffer: flits left in open route
  std::vector<std::int16_t> owner_in;     // per (output, channel): holding buffer or -1
  std::array<std::uint16_t, kMaxPorts> rr{};
  std::uint16_t eject_rr = 0;
  std::uint32_t buffered = 0;
  // Arrival-side message framing, checked on every accepted flit.
  std::vector<std::uint64_t> arrival_tag;
  std::vector<std::uint16_t> arrival_left;

  // Phase-A staging, read by neighbors in phase B.
  std::array<Flit, kMaxPorts> out_flit{};
  std::array<std::int16_t, kMaxPorts> grant_from{};
  std::uint16_t out_valid = 0;

  RouterCounters counters;

  void init(std::uint32_t ports, const std::vector<std::uint32_t>& slots_per_channel);
  /// Accepts a flit into buffer (port, ch); asserts that messages on the
  /// link never interleave.
  void accept(std::uint32_t port, const Flit& f);
  FlitBuffer& buffer(std::uint32_t port, std::uint32_t ch) { return in[port * nch + ch]; }
  const FlitBuffer& buffer(std::uint32_t port, std::uint32_t ch) const {
    return in[port * nch + ch];
  }
};

/// Phase A: pick at most one flit per output from start-of-cycle state.
/// Reads neighbors' buffer occupancy only; writes this router's staging and
/// route tables.
void router_arbitrate(Router& self, TileId t, const std::vector<Router>& all,
                      const Topology& topo);

/// Phase B, first half: remove this router's granted flits.
void router_commit_grants(Router& self);

/// Phase B, second half: accept flits neighbors staged toward this router.
void router_receive(Router& self, TileId t, const std::vector<Router>& all,
                    const Topology& topo);

}  // namespace dlrx
