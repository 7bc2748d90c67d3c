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


#include "dlrx/noc.hpp"

#include <algorithm>
#include <bit>

namespace dlrx {

std::string to_string(TopologyKind k) { return k == TopologyKind::Mesh ? "mesh" : "torus"; }

TopologyKind parse_topology(const std::string& s) {
  if (s == "mesh") return TopologyKind::Mesh;
  if (s == "torus") return TopologyKind::Torus;
  throw ConfigError("unknown topology '" + s + "' (mesh|torus)");
}

Port opposite(Port p) {
  switch (p) {
    case N: return S;
    case S: return N;
    case E: return W;
    case W: return E;
    case RN: return RS;
    case RS: return RN;
    case RE: return RW;
    case RW: return RE;
    default: return Local;
  }
}

const char* port_name(Port p) {
  static const char* names[] = {"local", "n", "e", "s", "w", "rn", "re", "rs", "rw"};
  return names[p];
}

Topology Topology::make(TopologyKind kind, std::uint32_t width, std::uint32_t height,
                        std::uint32_t ruche, std::uint32_t buffer_pool) {
  if (!is_pow2(width) || !is_pow2(height))
    throw ConfigError(detail::concat("grid ", width, "x", height,
                                     ": width and height must be powers of two"));
  if (ruche < 1) throw ConfigError("ruche factor must be >= 1");
  if (ruche > 1 && ruche >= std::min(width, height))
    throw ConfigError(detail::concat("ruche factor ", ruche,
                                     " must be smaller than min(width, height)"));
  if (buffer_pool < 1) throw ConfigError("router buffer pool must be >= 1");
  Topology t;
  t.kind = kind;
  t.width = width;
  t.height = height;
  t.ruche = ruche;
  t.buffer_pool = buffer_pool;
  return t;
}

std::optional<TileId> Topology::neighbor(TileId t, Port p) const {
  if (p == Local) return t;
  if (p >= RN && ruche <= 1) return std::nullopt;
  const std::int64_t step = p >= RN ? ruche : 1;
  std::int64_t x = x_of(t), y = y_of(t);
  const bool horizontal = p == E || p == W || p == RE || p == RW;
  const std::int64_t size = horizontal ? width : height;
  if (size == 1) return std::nullopt;
  const std::int64_t dir = (p == E || p == S || p == RE || p == RS) ? step : -step;
  std::int64_t& c = horizontal ? x : y;
  c += dir;
  if (c < 0 || c >= size) {
    if (!torus()) return std::nullopt;
    c = (c % size + size) % size;
  }
  return id(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
}

Word encode_head(std::uint64_t global_idx, const PlacementPolicy& policy,
                 const HeadCodec& codec) {
  return codec.encode(owner_of(global_idx, policy));
}

Slot decode_head(Word flit, const HeadCodec& codec) { return codec.decode(flit); }

namespace {

// Direction and distance along one dimension.
std::pair<int, std::uint32_t> leg(std::uint32_t from, std::uint32_t to, std::uint32_t size,
                                  bool torus) {
  if (from == to) return {0, 0};
  if (!torus) return to > from ? std::pair{1, to - from} : std::pair{-1, from - to};
  const std::uint32_t fwd = (to + size - from) % size;
  const std::uint32_t back = size - fwd;
  return fwd <= back ? std::pair{1, fwd} : std::pair{-1, back};
}

}  // namespace

Port route_next(TileId current, TileId dest, const Topology& topo) {
  if (current == dest) return Local;
  const bool ruche = topo.ruche > 1;
  auto [dx, nx] = leg(topo.x_of(current), topo.x_of(dest), topo.width, topo.torus());
  if (nx > 0) {
    const bool r = ruche && nx >= topo.ruche;
    return dx > 0 ? (r ? RE : E) : (r ? RW : W);
  }
  auto [dy, ny] = leg(topo.y_of(current), topo.y_of(dest), topo.height, topo.torus());
  const bool r = ruche && ny >= topo.ruche;
  return dy > 0 ? (r ? RS : S) : (r ? RN : N);
}

std::uint32_t route_hops(TileId src, TileId dest, const Topology& topo) {
  std::uint32_t hops = 0;
  TileId at = src;
  while (at != dest) {
    const auto next = topo.neighbor(at, route_next(at, dest, topo));
    DLRX_ASSERT(next.has_value(), "route leaves the grid at tile ", at);
    at = *next;
    ++hops;
  }
  return hops;
}

std::vector<std::uint32_t> channel_slots(std::uint32_t pool,
                                         const std::vector<std::uint32_t>& message_flits) {
  std::vector<std::uint32_t> slots;
  const std::uint32_t share =
      message_flits.empty() ? pool : pool / static_cast<std::uint32_t>(message_flits.size());
  for (auto f : message_flits) slots.push_back(std::max(share, f + 1));
  return slots;
}

void Router::init(std::uint32_t ports, const std::vector<std::uint32_t>& slots_per_channel) {
  nports = ports;
  nch = static_cast<std::uint32_t>(slots_per_channel.size());
  DLRX_ASSERT(nports * nch <= 32, "too many router buffers");
  in.clear();
  for (std::uint32_t p = 0; p < nports; ++p)
    for (std::uint32_t c = 0; c < nch; ++c) in.emplace_back(slots_per_channel[c]);
  route_out.assign(nports * nch, -1);
  remaining.assign(nports * nch, 0);
  owner_in.assign(nports * nch, -1);
  arrival_tag.assign(nports * nch, 0);
  arrival_left.assign(nports * nch, 0);
  rr.fill(0);
  buffered = 0;
  out_valid = 0;
}

void Router::accept(std::uint32_t port, const Flit& f) {
  const std::uint32_t b = port * nch + f.channel;
  if (f.head) {
    DLRX_ASSERT(arrival_left[b] == 0, "head flit interleaved into an open message on port ",
                port_name(static_cast<Port>(port)), " channel ", int{f.channel});
    arrival_left[b] = static_cast<std::uint16_t>(f.len - 1);
    arrival_tag[b] = f.tag;
  } else {
    DLRX_ASSERT(arrival_left[b] > 0 && arrival_tag[b] == f.tag,
                "body flit of another message interleaved on port ",
                port_name(static_cast<Port>(port)), " channel ", int{f.channel});
    --arrival_left[b];
  }
  in[b].push(f);
  ++buffered;
}

void router_arbitrate(Router& self, TileId t, const std::vector<Router>& all,
                      const Topology& topo) {
  self.out_valid = 0;
  if (self.buffered == 0) return;
  const std::uint32_t nbuf = self.nports * self.nch;
  std::array<std::uint32_t, kMaxPorts> req{};
  bool stalled = false;
  for (std::uint32_t b = 0; b < nbuf; ++b) {
    const FlitBuffer& buf = self.in[b];
    if (buf.empty()) continue;
    const auto p = static_cast<Port>(b / self.nch);
    const std::uint32_t c = b % self.nch;
    const Flit& f = buf.front();
    Port o;
    if (self.route_out[b] >= 0) {
      o = static_cast<Port>(self.route_out[b]);
    } else {
      DLRX_ASSERT(f.head, "tile ", t, ": body flit at a buffer front without a route");
      o = route_next(t, f.dest, topo);
      if (o == Local) continue;  // ejection is handled by the TSU
      if (self.owner_in[o * self.nch + c] >= 0) {
        stalled = true;
        continue;
      }
    }
    const auto nb = topo.neighbor(t, o);
    DLRX_ASSERT(nb.has_value(), "tile ", t, ": route through unwired port ", port_name(o));
    const std::uint32_t free = all[*nb].buffer(opposite(o), c).free();
    const bool entering = topo.torus() && f.head && (p == Local || opposite(p) != o);
    if (bubble_admission(free, f.len, entering))
      req[o] |= 1u << b;
    else
      stalled = true;
  }
  for (std::uint32_t o = 1; o < self.nports; ++o) {
    const std::uint32_t mask = req[o];
    if (mask == 0) continue;
    // Round-robin: first requester at or after the pointer.
    const std::uint32_t upper = mask >> self.rr[o];
    const std::uint32_t b =
        upper != 0 ? self.rr[o] + static_cast<std::uint32_t>(std::countr_zero(upper))
                   : static_cast<std::uint32_t>(std::countr_zero(mask));
    if (std::popcount(mask) > 1) stalled = true;
    const std::uint32_t c = b % self.nch;
    Flit f = self.in[b].front();
    ++f.hops;
    self.out_flit[o] = f;
    self.grant_from[o] = static_cast<std::int16_t>(b);
    self.out_valid |= static_cast<std::uint16_t>(1u << o);
    self.rr[o] = static_cast<std::uint16_t>((b + 1) % nbuf);
    if (self.route_out[b] < 0) {
      self.route_out[b] = static_cast<std::int16_t>(o);
      self.remaining[b] = f.len;
      self.owner_in[o * self.nch + c] = static_cast<std::int16_t>(b);
    }
    if (--self.remaining[b] == 0) {
      self.route_out[b] = -1;
      self.owner_in[o * self.nch + c] = -1;
    }
  }
  if (stalled) ++self.counters.stall_cycles;
}

void router_commit_grants(Router& self) {
  if (self.out_valid == 0) return;
  for (std::uint32_t o = 1; o < self.nports; ++o) {
    if (!(self.out_valid & (1u << o))) continue;
    self.in[self.grant_from[o]].pop();
    --self.buffered;
    ++self.counters.flits_out[o];
  }
}

void router_receive(Router& self, TileId t, const std::vector<Router>& all,
                    const Topology& topo) {
  for (std::uint32_t p = 1; p < self.nports; ++p) {
    const auto nb = topo.neighbor(t, static_cast<Port>(p));
    if (!nb) continue;
    const Router& r = all[*nb];
    const Port o = opposite(static_cast<Port>(p));
    if (!(r.out_valid & (1u << o))) continue;
    self.accept(p, r.out_flit[o]);
  }
}

}  // namespace dlrx
