// Copyright 2026 The gossip-tools Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GOSSIP_SRC_STATE_SET_HPP_
#define GOSSIP_SRC_STATE_SET_HPP_

#include <cstdint>
#include <cstring>
#include <limits>
#include <vector>

namespace gossip::detail {

// Open-addressing hash set of fixed-width packed states.  Keys live
// back-to-back in one arena, so state ids double as insertion order, which
// a breadth-first search relies on for its queue.
class StateSet {
 public:
  static constexpr std::uint32_t kNone =
      std::numeric_limits<std::uint32_t>::max();

  explicit StateSet(std::size_t words) : words_(words) {
    table_.assign(kInitialBuckets, kNone);
    mask_ = kInitialBuckets - 1;
  }

  std::size_t size() const { return size_; }

  const std::uint64_t* key(std::uint32_t id) const {
    return arena_.data() + static_cast<std::size_t>(id) * words_;
  }

  // Returns the id and whether the key was newly inserted.
  std::pair<std::uint32_t, bool> insert(const std::uint64_t* key_words) {
    if ((size_ + 1) * 10 >= (mask_ + 1) * 7) grow();
    std::size_t bucket = hash(key_words) & mask_;
    while (true) {
      std::uint32_t id = table_[bucket];
      if (id == kNone) {
        std::uint32_t fresh = static_cast<std::uint32_t>(size_);
        arena_.insert(arena_.end(), key_words, key_words + words_);
        table_[bucket] = fresh;
        ++size_;
        return {fresh, true};
      }
      if (std::memcmp(key(id), key_words, words_ * sizeof(std::uint64_t)) ==
          0) {
        return {id, false};
      }
      bucket = (bucket + 1) & mask_;
    }
  }

  std::uint32_t find(const std::uint64_t* key_words) const {
    std::size_t bucket = hash(key_words) & mask_;
    while (true) {
      std::uint32_t id = table_[bucket];
      if (id == kNone) return kNone;
      if (std::memcmp(key(id), key_words, words_ * sizeof(std::uint64_t)) ==
          0) {
        return id;
      }
      bucket = (bucket + 1) & mask_;
    }
  }

 private:
  static constexpr std::size_t kInitialBuckets = 1 << 10;

  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
  }

  std::uint64_t hash(const std::uint64_t* key_words) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t w = 0; w < words_; ++w) h = mix(h ^ key_words[w]);
    return h;
  }

  void grow() {
    std::size_t buckets = (mask_ + 1) * 2;
    table_.assign(buckets, kNone);
    mask_ = buckets - 1;
    for (std::uint32_t id = 0; id < size_; ++id) {
      std::size_t bucket = hash(key(id)) & mask_;
      while (table_[bucket] != kNone) bucket = (bucket + 1) & mask_;
      table_[bucket] = id;
    }
  }

  std::size_t words_;
  std::size_t size_ = 0;
  std::size_t mask_ = 0;
  std::vector<std::uint64_t> arena_;
  std::vector<std::uint32_t> table_;
};

}  // namespace gossip::detail

#endif  // GOSSIP_SRC_STATE_SET_HPP_
