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

#ifndef GOSSIP_MONOID_HPP_
#define GOSSIP_MONOID_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "gossip/bool_matrix.hpp"
#include "gossip/call_sequence.hpp"
#include "gossip/search.hpp"

namespace gossip {

enum class GeneratorMode {
  kAllCalls,       // every C[i,j], 1 <= i < j <= n
  kAdjacentCalls,  // only C[i,i+1]
};

// The generator list for a mode, in lexicographic pair order.
std::vector<CallPair> generators(int n, GeneratorMode mode);

// Dimension caps for full enumeration.  The defaults keep the state count
// within desk scale; callers may widen them explicitly.
struct EnumerationLimits {
  int all_calls_cap = 6;
  int adjacent_calls_cap = 8;
};

// The monoid generated by the selected call matrices, enumerated
// breadth-first from the identity.  Element ids follow discovery order, so
// every word length class is a contiguous id range.
class MonoidEnumeration {
 public:
  struct Impl;

  MonoidEnumeration(MonoidEnumeration&&) noexcept;
  MonoidEnumeration& operator=(MonoidEnumeration&&) noexcept;
  ~MonoidEnumeration();

  int dim() const;
  GeneratorMode mode() const;
  std::size_t size() const;
  // Maximum over elements of the minimal word length.
  int diameter() const;

  bool contains(const BoolMatrix& m) const;
  // Minimal word length of m, if m belongs to the monoid.
  std::optional<int> min_length(const BoolMatrix& m) const;
  // A minimal-length word whose product is m, if m belongs to the monoid.
  std::optional<CallSequence> word_for(const BoolMatrix& m) const;

  BoolMatrix element(std::size_t id) const;
  int min_length_of(std::size_t id) const;
  CallSequence word_of(std::size_t id) const;

 private:
  friend MonoidEnumeration enumerate(int, GeneratorMode,
                                     const EnumerationLimits&);
  explicit MonoidEnumeration(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

// Enumerates the full monoid for the given dimension and generator mode.
// Throws BudgetError when n exceeds the mode's cap.
MonoidEnumeration enumerate(int n, GeneratorMode mode,
                            const EnumerationLimits& limits = {});

// Breadth-first search from the identity for a minimal word with the given
// product, pruning states not entrywise below the target.  ProvenAbsent
// means the target is not in the monoid; with kNoBudget the search always
// terminates because the pruned space is finite.
SearchOutcome shortest_word_to(int n, const BoolMatrix& target,
                               GeneratorMode mode,
                               std::uint64_t budget = kNoBudget);

// A call word multiplying out to the conference matrix C[S], of length
// 2|S| - 4 for |S| >= 4 (and 0, 1, 3 for |S| <= 3).  The word is verified
// by multiplication before it is returned.
CallSequence factor_conference(int n, const ConferenceSet& s);

// All idempotents of the enumerated monoid, in canonical matrix order.
std::vector<BoolMatrix> idempotent_census(int n,
                                          const EnumerationLimits& limits = {});

}  // namespace gossip

#endif  // GOSSIP_MONOID_HPP_
