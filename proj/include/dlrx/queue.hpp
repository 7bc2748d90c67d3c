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
#include <vector>

#include "dlrx/common.hpp"

namespace dlrx {

/// Circular FIFO living in a tile's scratchpad. Each entry carries a
/// simulator-only causal tag and the cycle at which it becomes visible to
/// the TSU (channel queues written mid-task are stamped with the write's
/// cycle). Overflow and underflow are modeled-hardware impossibilities.
class Queue {
 public:
  Queue() = default;
  explicit Queue(std::uint32_t capacity)
      : data_(capacity), tag_(capacity), ready_(capacity) {}

  std::uint32_t capacity() const { return static_cast<std::uint32_t>(data_.size()); }
  std::uint32_t size() const { return size_; }
  std::uint32_t free() const { return capacity() - size_; }
  bool empty() const { return size_ == 0; }
  bool full() const { return size_ == capacity(); }
  std::uint32_t high_water() const { return high_; }
  std::uint32_t head_index() const { return head_; }

  void push(Word v, std::uint64_t tag = 0, Cycle ready = 0) {
    DLRX_ASSERT(size_ < capacity(), "push on full queue (capacity ", capacity(), ")");
    std::uint32_t tail = head_ + size_;
    if (tail >= capacity()) tail -= capacity();
    data_[tail] = v;
    tag_[tail] = tag;
    ready_[tail] = ready;
    if (++size_ > high_) high_ = size_;
  }

  Word front() const {
    DLRX_ASSERT(size_ > 0, "peek on empty queue");
    return data_[head_];
  }
  std::uint64_t front_tag() const {
    DLRX_ASSERT(size_ > 0, "peek on empty queue");
    return tag_[head_];
  }
  Cycle front_ready() const {
    DLRX_ASSERT(size_ > 0, "peek on empty queue");
    return ready_[head_];
  }

  /// i-th entry counted from the head.
  Word at(std::uint32_t i) const {
    DLRX_ASSERT(i < size_, "queue index ", i, " beyond occupancy ", size_);
    std::uint32_t k = head_ + i;
    if (k >= capacity()) k -= capacity();
    return data_[k];
  }

  Word pop() {
    DLRX_ASSERT(size_ > 0, "pop on empty queue");
    const Word v = data_[head_];
    if (++head_ == capacity()) head_ = 0;
    --size_;
    return v;
  }

  void clear() {
    head_ = 0;
    size_ = 0;
  }

 private:
  std::vector<Word> data_;
  std::vector<std::uint64_t> tag_;
  std::vector<Cycle> ready_;
  std::uint32_t head_ = 0;
  std::uint32_t size_ = 0;
  std::uint32_t high_ = 0;
};

}  // namespace dlrx
