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

#ifndef GOSSIP_SRC_PACKED_HPP_
#define GOSSIP_SRC_PACKED_HPP_

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

#include "gossip/bool_matrix.hpp"

namespace gossip::detail {

// Search states are matrices packed contiguously row-major: entry (r, c)
// lives at bit r*n + c.  This is the canonical fixed-width encoding used as
// the hash key, so equal matrices always pack to identical words.

inline std::size_t packed_words(int n) {
  return (static_cast<std::size_t>(n) * n + 63) / 64;
}

inline void packed_set(std::uint64_t* s, std::size_t bit) {
  s[bit >> 6] |= 1ULL << (bit & 63);
}

inline bool packed_get(const std::uint64_t* s, std::size_t bit) {
  return (s[bit >> 6] >> (bit & 63)) & 1;
}

inline void pack(const BoolMatrix& m, std::uint64_t* out) {
  const int n = m.dim();
  std::memset(out, 0, packed_words(n) * sizeof(std::uint64_t));
  for (int r = 0; r < n; ++r) {
    const std::uint64_t* row = m.row_words(r);
    for (int w = 0; w < m.stride(); ++w) {
      std::uint64_t bits = row[w];
      while (bits != 0) {
        int c = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        packed_set(out, static_cast<std::size_t>(r) * n + c);
      }
    }
  }
}

inline BoolMatrix unpack(int n, const std::uint64_t* in) {
  BoolMatrix m(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (packed_get(in, static_cast<std::size_t>(r) * n + c)) {
        m.set(r, c, true);
      }
    }
  }
  return m;
}

inline bool packed_leq(const std::uint64_t* a, const std::uint64_t* b,
                       std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    if ((a[w] & ~b[w]) != 0) return false;
  }
  return true;
}

inline bool packed_eq(const std::uint64_t* a, const std::uint64_t* b,
                      std::size_t words) {
  return std::memcmp(a, b, words * sizeof(std::uint64_t)) == 0;
}

// Applies one generator to a packed state.  Precomputes single-word shift
// masks when the whole matrix fits in one word (n <= 8); otherwise falls
// back to per-entry bit loops, which stay O(n) per call.
class PackedOps {
 public:
  PackedOps(int n, std::span<const CallPair> generators)
      : n_(n), words_(packed_words(n)) {
    gens_.reserve(generators.size());
    for (const CallPair& p : generators) gens_.push_back({p.i - 1, p.j - 1});
    if (words_ == 1) {
      single_.reserve(gens_.size());
      for (const auto& [gi, gj] : gens_) {
        SingleWordMasks m;
        for (int r = 0; r < n_; ++r) {
          m.col_i |= 1ULL << (r * n_ + gi);
          m.col_j |= 1ULL << (r * n_ + gj);
        }
        m.col_shift = gj - gi;
        m.row_i = ((1ULL << n_) - 1) << (gi * n_);
        m.row_j = ((1ULL << n_) - 1) << (gj * n_);
        m.row_shift = (gj - gi) * n_;
        single_.push_back(m);
      }
    }
  }

  std::size_t words() const { return words_; }
  std::size_t count() const { return gens_.size(); }

  void apply_right(const std::uint64_t* in, std::uint64_t* out,
                   std::size_t g) const {
    if (words_ == 1) {
      const SingleWordMasks& m = single_[g];
      std::uint64_t s = in[0];
      std::uint64_t joined =
          ((s & m.col_i) << m.col_shift) | ((s & m.col_j) >> m.col_shift);
      out[0] = s | joined;
      return;
    }
    std::memcpy(out, in, words_ * sizeof(std::uint64_t));
    const auto& [gi, gj] = gens_[g];
    for (int r = 0; r < n_; ++r) {
      std::size_t pi = static_cast<std::size_t>(r) * n_ + gi;
      std::size_t pj = static_cast<std::size_t>(r) * n_ + gj;
      if (packed_get(in, pi) || packed_get(in, pj)) {
        packed_set(out, pi);
        packed_set(out, pj);
      }
    }
  }

  void apply_left(const std::uint64_t* in, std::uint64_t* out,
                  std::size_t g) const {
    if (words_ == 1) {
      const SingleWordMasks& m = single_[g];
      std::uint64_t s = in[0];
      std::uint64_t joined =
          ((s & m.row_i) << m.row_shift) | ((s & m.row_j) >> m.row_shift);
      out[0] = s | joined;
      return;
    }
    std::memcpy(out, in, words_ * sizeof(std::uint64_t));
    const auto& [gi, gj] = gens_[g];
    for (int c = 0; c < n_; ++c) {
      std::size_t pi = static_cast<std::size_t>(gi) * n_ + c;
      std::size_t pj = static_cast<std::size_t>(gj) * n_ + c;
      if (packed_get(in, pi) || packed_get(in, pj)) {
        packed_set(out, pi);
        packed_set(out, pj);
      }
    }
  }

 private:
  struct SingleWordMasks {
    std::uint64_t col_i = 0, col_j = 0, row_i = 0, row_j = 0;
    int col_shift = 0, row_shift = 0;
  };

  int n_;
  std::size_t words_;
  std::vector<std::pair<int, int>> gens_;  // 0-based (i, j), i < j
  std::vector<SingleWordMasks> single_;
};

}  // namespace gossip::detail

#endif  // GOSSIP_SRC_PACKED_HPP_
