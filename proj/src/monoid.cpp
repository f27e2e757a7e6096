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

#include "gossip/monoid.hpp"

#include <algorithm>
#include <utility>

#include "src/bfs_engine.hpp"
#include "src/packed.hpp"

namespace gossip {

std::vector<CallPair> generators(int n, GeneratorMode mode) {
  if (n < 1) {
    throw DimensionError("dimension must be at least 1, got " +
                         std::to_string(n));
  }
  std::vector<CallPair> gens;
  if (mode == GeneratorMode::kAllCalls) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) gens.emplace_back(i, j);
    }
  } else {
    for (int i = 1; i < n; ++i) gens.emplace_back(i, i + 1);
  }
  return gens;
}

struct MonoidEnumeration::Impl {
  int n;
  GeneratorMode mode;
  std::vector<CallPair> gens;
  detail::BfsRun run;
};

MonoidEnumeration::MonoidEnumeration(std::unique_ptr<Impl> impl)
    : impl_(std::move(impl)) {}
MonoidEnumeration::MonoidEnumeration(MonoidEnumeration&&) noexcept = default;
MonoidEnumeration& MonoidEnumeration::operator=(MonoidEnumeration&&) noexcept =
    default;
MonoidEnumeration::~MonoidEnumeration() = default;

int MonoidEnumeration::dim() const { return impl_->n; }
GeneratorMode MonoidEnumeration::mode() const { return impl_->mode; }
std::size_t MonoidEnumeration::size() const { return impl_->run.states.size(); }
int MonoidEnumeration::diameter() const {
  return static_cast<int>(impl_->run.max_depth);
}

namespace {

std::uint32_t find_id(const MonoidEnumeration::Impl& impl,
                      const BoolMatrix& m) {
  if (m.dim() != impl.n) return detail::StateSet::kNone;
  std::vector<std::uint64_t> key(detail::packed_words(impl.n));
  detail::pack(m, key.data());
  return impl.run.states.find(key.data());
}

}  // namespace

bool MonoidEnumeration::contains(const BoolMatrix& m) const {
  return find_id(*impl_, m) != detail::StateSet::kNone;
}

std::optional<int> MonoidEnumeration::min_length(const BoolMatrix& m) const {
  std::uint32_t id = find_id(*impl_, m);
  if (id == detail::StateSet::kNone) return std::nullopt;
  return static_cast<int>(impl_->run.depth[id]);
}

std::optional<CallSequence> MonoidEnumeration::word_for(
    const BoolMatrix& m) const {
  std::uint32_t id = find_id(*impl_, m);
  if (id == detail::StateSet::kNone) return std::nullopt;
  return word_of(id);
}

BoolMatrix MonoidEnumeration::element(std::size_t id) const {
  if (id >= size()) {
    throw DimensionError("element id " + std::to_string(id) +
                         " out of range; monoid has " + std::to_string(size()) +
                         " elements");
  }
  return detail::unpack(impl_->n,
                        impl_->run.states.key(static_cast<std::uint32_t>(id)));
}

int MonoidEnumeration::min_length_of(std::size_t id) const {
  if (id >= size()) {
    throw DimensionError("element id " + std::to_string(id) + " out of range");
  }
  return static_cast<int>(impl_->run.depth[id]);
}

CallSequence MonoidEnumeration::word_of(std::size_t id) const {
  if (id >= size()) {
    throw DimensionError("element id " + std::to_string(id) + " out of range");
  }
  return impl_->run
      .words_to(static_cast<std::uint32_t>(id), impl_->gens)
      .second;
}

MonoidEnumeration enumerate(int n, GeneratorMode mode,
                            const EnumerationLimits& limits) {
  const int cap = mode == GeneratorMode::kAllCalls ? limits.all_calls_cap
                                                   : limits.adjacent_calls_cap;
  if (n > cap) {
    throw BudgetError("enumeration of dimension " + std::to_string(n) +
                      " exceeds the cap of " + std::to_string(cap) +
                      " for this generator mode");
  }
  auto impl = std::make_unique<MonoidEnumeration::Impl>(
      MonoidEnumeration::Impl{n, mode, generators(n, mode),
                              detail::BfsRun(detail::packed_words(n))});
  BoolMatrix id = BoolMatrix::identity(n);
  detail::BfsParams params;
  params.n = n;
  params.generators = impl->gens;
  params.start = &id;
  params.budget = detail::kNoBudgetLimit;
  impl->run = detail::packed_bfs(params);
  return MonoidEnumeration(std::move(impl));
}

SearchOutcome shortest_word_to(int n, const BoolMatrix& target,
                               GeneratorMode mode, std::uint64_t budget) {
  if (target.dim() != n) {
    throw DimensionError("target dimension " + std::to_string(target.dim()) +
                         " does not match n = " + std::to_string(n));
  }
  if (budget == 0) {
    throw BudgetError("budget must be positive");
  }
  std::vector<CallPair> gens = generators(n, mode);
  BoolMatrix id = BoolMatrix::identity(n);
  detail::BfsParams params;
  params.n = n;
  params.generators = gens;
  params.start = &id;
  params.target = &target;
  params.upper = &target;
  params.budget = budget;
  detail::BfsRun run = detail::packed_bfs(params);

  SearchOutcome outcome;
  outcome.budget = budget;
  outcome.nodes_expanded = run.nodes_expanded;
  switch (run.status) {
    case detail::BfsRun::Status::kFoundTarget:
      outcome.status = SearchStatus::kFound;
      outcome.witness = run.words_to(run.target_id, gens).second;
      break;
    case detail::BfsRun::Status::kExhausted:
      outcome.status = SearchStatus::kProvenAbsent;
      break;
    case detail::BfsRun::Status::kOutOfBudget:
      outcome.status = SearchStatus::kInconclusive;
      break;
  }
  return outcome;
}

CallSequence factor_conference(int n, const ConferenceSet& s) {
  for (int a : s.members) {
    if (a > n) {
      throw DimensionError("conference member " + std::to_string(a) +
                           " out of range 1.." + std::to_string(n));
    }
  }
  CallSequence word;
  const std::vector<int>& m = s.members;
  if (m.size() == 2) {
    word.calls.emplace_back(m[0], m[1]);
  } else if (m.size() == 3) {
    word.calls.emplace_back(m[0], m[1]);
    word.calls.emplace_back(m[1], m[2]);
    word.calls.emplace_back(m[0], m[1]);
  } else if (m.size() >= 4) {
    // Four smallest members act as hubs; everyone else reports to the
    // first hub before and after the hubs exchange, 2|S| - 4 calls total.
    const int h1 = m[0], h2 = m[1], h3 = m[2], h4 = m[3];
    for (std::size_t k = 4; k < m.size(); ++k) {
      word.calls.emplace_back(h1, m[k]);
    }
    word.calls.emplace_back(h1, h2);
    word.calls.emplace_back(h3, h4);
    word.calls.emplace_back(h1, h3);
    word.calls.emplace_back(h2, h4);
    for (std::size_t k = 4; k < m.size(); ++k) {
      word.calls.emplace_back(h1, m[k]);
    }
  }
  if (word_product(n, word) != conference_matrix(n, s)) {
    throw StructuralError(
        "conference factorization failed its multiplication check");
  }
  return word;
}

std::vector<BoolMatrix> idempotent_census(int n,
                                          const EnumerationLimits& limits) {
  MonoidEnumeration monoid = enumerate(n, GeneratorMode::kAllCalls, limits);
  std::vector<BoolMatrix> idempotents;
  for (std::size_t id = 0; id < monoid.size(); ++id) {
    BoolMatrix e = monoid.element(id);
    if (e * e == e) idempotents.push_back(std::move(e));
  }
  std::sort(idempotents.begin(), idempotents.end());
  return idempotents;
}

}  // namespace gossip
