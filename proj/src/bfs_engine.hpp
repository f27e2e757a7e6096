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

#ifndef GOSSIP_SRC_BFS_ENGINE_HPP_
#define GOSSIP_SRC_BFS_ENGINE_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gossip/bool_matrix.hpp"
#include "gossip/call_sequence.hpp"
#include "src/state_set.hpp"

namespace gossip::detail {

// Breadth-first closure of a start matrix under one-sided call products.
// States are explored in discovery order; successors of one state are
// generated left-side moves first (when enabled), then right-side moves,
// each side in the given generator order.  States not entrywise below
// `upper` are pruned, which keeps exhaustion sound for monotone targets.
struct BfsParams {
  int n = 0;
  std::span<const CallPair> generators;
  const BoolMatrix* start = nullptr;
  const BoolMatrix* target = nullptr;  // null: enumerate the full closure
  const BoolMatrix* upper = nullptr;   // null: no pruning
  bool right_moves = true;
  bool left_moves = false;
  std::uint64_t budget = 0;  // required; pass kNoBudgetLimit for none
};

inline constexpr std::uint64_t kNoBudgetLimit = ~0ULL;

struct BfsRun {
  enum class Status { kFoundTarget, kExhausted, kOutOfBudget };

  Status status = Status::kExhausted;
  std::uint64_t nodes_expanded = 0;

  StateSet states;
  std::vector<std::uint32_t> parent;  // StateSet::kNone at the root
  std::vector<std::uint32_t> gen;
  std::vector<std::uint8_t> side;  // 0 right, 1 left
  std::vector<std::uint32_t> depth;
  std::uint32_t target_id = StateSet::kNone;
  std::uint32_t max_depth = 0;

  explicit BfsRun(std::size_t words) : states(words) {}

  // Left and right call words such that (left word) * start * (right word)
  // equals the state, with each word read left to right.
  std::pair<CallSequence, CallSequence> words_to(
      std::uint32_t id, std::span<const CallPair> generators) const;
};

BfsRun packed_bfs(const BfsParams& params);

}  // namespace gossip::detail

#endif  // GOSSIP_SRC_BFS_ENGINE_HPP_
