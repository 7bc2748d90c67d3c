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
#include <sstream>
#include <stdexcept>
#include <string>

namespace dlrx {

using TileId = std::uint32_t;
using Cycle = std::uint64_t;

/// Queue entry / flit storage. The logical width (32 or 64 bits) is a
/// configuration property; storage is always 64 bits wide.
using Word = std::uint64_t;

/// Bad input: malformed files, inconsistent configuration, unsupported
/// combinations. Reported to the user, never a simulator bug.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state the modeled hardware can never reach (queue overflow, pop on
/// empty, out-of-range index). Carries tile/cycle context in the message.
class SimAssertion : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {
template <typename... Args>
std::string concat(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}
}  // namespace detail

#define DLRX_ASSERT(cond, ...)                                             \
  do {                                                                     \
    if (!(cond))                                                           \
      throw ::dlrx::SimAssertion(::dlrx::detail::concat(                   \
          __FILE__, ":", __LINE__, ": assertion `" #cond "` failed: ",     \
          __VA_ARGS__));                                                   \
  } while (0)

/// splitmix64 finalizer; the building block of every counter-based random
/// stream in the project.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform double in [0, 1) from a (seed, stream, counter) triple.
constexpr double unit_random(std::uint64_t seed, std::uint64_t stream,
                             std::uint64_t counter) {
  std::uint64_t h = mix64(seed ^ mix64(stream ^ mix64(counter)));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

constexpr bool is_pow2(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

constexpr std::uint32_t log2_floor(std::uint64_t x) {
  std::uint32_t r = 0;
  while (x > 1) {
    x >>= 1;
    ++r;
  }
  return r;
}

constexpr std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
  return b == 0 ? 0 : (a + b - 1) / b;
}

}  // namespace dlrx
