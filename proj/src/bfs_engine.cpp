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

#include "src/bfs_engine.hpp"

#include <algorithm>

#include "src/packed.hpp"

namespace gossip::detail {

std::pair<CallSequence, CallSequence> BfsRun::words_to(
    std::uint32_t id, std::span<const CallPair> generators) const {
  CallSequence left, right;
  // Walking to the root yields moves newest first.  A right word reads
  // oldest first, so each move is prepended; a left word reads newest
  // first (later factors multiply on the left), so each move is appended.
  while (parent[id] != StateSet::kNone) {
    const CallPair& p = generators[gen[id]];
    if (side[id] == 0) {
      right.calls.insert(right.calls.begin(), p);
    } else {
      left.calls.push_back(p);
    }
    id = parent[id];
  }
  return {std::move(left), std::move(right)};
}

BfsRun packed_bfs(const BfsParams& params) {
  const int n = params.n;
  const std::size_t words = packed_words(n);
  PackedOps ops(n, params.generators);
  BfsRun run(words);

  std::vector<std::uint64_t> start(words), target, upper;
  pack(*params.start, start.data());
  if (params.target != nullptr) {
    target.resize(words);
    pack(*params.target, target.data());
  }
  if (params.upper != nullptr) {
    upper.resize(words);
    pack(*params.upper, upper.data());
  }

  run.states.insert(start.data());
  run.parent.push_back(StateSet::kNone);
  run.gen.push_back(0);
  run.side.push_back(0);
  run.depth.push_back(0);

  if (params.target != nullptr && packed_eq(start.data(), target.data(), words)) {
    run.status = BfsRun::Status::kFoundTarget;
    run.target_id = 0;
    return run;
  }
  if (params.upper != nullptr &&
      !packed_leq(start.data(), upper.data(), words)) {
    // Every product only adds entries, so nothing under `upper` is reachable.
    run.status = BfsRun::Status::kExhausted;
    return run;
  }

  std::vector<std::uint64_t> state(words), succ(words);
  const std::size_t gen_count = ops.count();

  for (std::uint32_t cur = 0; cur < run.states.size(); ++cur) {
    if (run.nodes_expanded >= params.budget) {
      run.status = BfsRun::Status::kOutOfBudget;
      run.nodes_expanded = params.budget;
      return run;
    }
    ++run.nodes_expanded;
    // The arena may reallocate while successors are inserted.
    std::copy(run.states.key(cur), run.states.key(cur) + words, state.begin());
    const std::uint32_t next_depth = run.depth[cur] + 1;

    for (int side = params.left_moves ? 1 : 0; side >= 0; --side) {
      if (side == 0 && !params.right_moves) continue;
      for (std::size_t g = 0; g < gen_count; ++g) {
        if (side == 1) {
          ops.apply_left(state.data(), succ.data(), g);
        } else {
          ops.apply_right(state.data(), succ.data(), g);
        }
        if (packed_eq(succ.data(), state.data(), words)) continue;
        if (params.upper != nullptr &&
            !packed_leq(succ.data(), upper.data(), words)) {
          continue;
        }
        auto [id, fresh] = run.states.insert(succ.data());
        if (!fresh) continue;
        run.parent.push_back(cur);
        run.gen.push_back(static_cast<std::uint32_t>(g));
        run.side.push_back(static_cast<std::uint8_t>(side));
        run.depth.push_back(next_depth);
        run.max_depth = std::max(run.max_depth, next_depth);
        if (params.target != nullptr &&
            packed_eq(succ.data(), target.data(), words)) {
          run.status = BfsRun::Status::kFoundTarget;
          run.target_id = id;
          return run;
        }
      }
    }
  }
  run.status = BfsRun::Status::kExhausted;
  return run;
}

}  // namespace gossip::detail
