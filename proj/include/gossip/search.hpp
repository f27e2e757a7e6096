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

#ifndef GOSSIP_SEARCH_HPP_
#define GOSSIP_SEARCH_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "gossip/bool_matrix.hpp"
#include "gossip/call_sequence.hpp"
#include "gossip/graph.hpp"

namespace gossip {

// Default node budget for the exact solvers.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
// Sentinel for searches that should run to exhaustion.
inline constexpr std::uint64_t kNoBudget =
    std::numeric_limits<std::uint64_t>::max();

enum class SearchStatus {
  kFound,         // a witness was found and is attached
  kProvenAbsent,  // the pruned state space was exhausted; no witness exists
  kInconclusive,  // the node budget ran out first
};

// Witness for a two-sided question: (left word) * middle * (right word).
struct TwoSidedWitness {
  CallSequence left;
  CallSequence right;

  friend bool operator==(const TwoSidedWitness&,
                         const TwoSidedWitness&) = default;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::kInconclusive;
  std::variant<std::monostate, CallSequence, TwoSidedWitness> witness;
  // States taken off the queue and expanded.  Equals the budget exactly
  // when the status is kInconclusive, and never exceeds it.
  std::uint64_t nodes_expanded = 0;
  std::uint64_t budget = 0;

  bool found() const { return status == SearchStatus::kFound; }
  const CallSequence& word() const { return std::get<CallSequence>(witness); }
  const TwoSidedWitness& two_sided() const {
    return std::get<TwoSidedWitness>(witness);
  }
};

// Whether x has no zero column and its distinct columns form an antichain
// in the entrywise order (no column strictly below another).
bool check_maximal_column_condition(const BoolMatrix& x);

// Is there a G in the gossip monoid with x * G = y?  Found attaches a word
// for G.  Dimensions must agree; budget must be positive.
SearchOutcome solve_gtp(const BoolMatrix& x, const BoolMatrix& y,
                        std::uint64_t budget = kDefaultBudget);

// solve_gtp restricted to instances whose x satisfies the maximal column
// condition; other x are rejected as malformed.
SearchOutcome solve_mgtp(const BoolMatrix& x, const BoolMatrix& y,
                         std::uint64_t budget = kDefaultBudget);

// Is a a member of the gossip monoid in its own dimension?  Found attaches
// a minimal-length word for a.
SearchOutcome solve_gmp(const BoolMatrix& a,
                        std::uint64_t budget = kDefaultBudget);

// Membership handling for the two-sided solver: Verify runs solve_gmp on
// both inputs first; Trusted skips that for inputs certified by
// construction (e.g. instances emitted with an explicit factorization).
enum class MembershipCheck { kVerify, kTrusted };

// Is x <= y in the two-sided order, i.e. are there monoid members U, V
// with U * y * V = x?  Both inputs must themselves be monoid members.
// Found attaches a TwoSidedWitness (left, right).
SearchOutcome solve_gjp(const BoolMatrix& x, const BoolMatrix& y,
                        std::uint64_t budget = kDefaultBudget,
                        MembershipCheck membership = MembershipCheck::kVerify);

// Exhaustive dominating-set oracle: the smallest dominating set of size at
// most k, lexicographically least among the smallest, or nullopt.
std::optional<std::vector<int>> solve_dominating_set(const Graph& g, int k);

// Whether the vertex set dominates g (every vertex is in the set or
// adjacent to a member) and has size at most k.
bool check_dominating_set(const Graph& g, const std::vector<int>& vertices,
                          int k);

}  // namespace gossip

#endif  // GOSSIP_SEARCH_HPP_
