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

#include "gossip/search.hpp"

#include <algorithm>
#include <numeric>

#include "gossip/monoid.hpp"
#include "src/bfs_engine.hpp"

namespace gossip {

namespace {

void check_budget(std::uint64_t budget) {
  if (budget == 0) {
    throw BudgetError("budget must be positive");
  }
}

void check_same_dim(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("instance matrices have dimensions " +
                         std::to_string(a.dim()) + " and " +
                         std::to_string(b.dim()) + ", expected equal");
  }
}

SearchOutcome run_one_sided(const BoolMatrix& x, const BoolMatrix& y,
                            std::uint64_t budget) {
  std::vector<CallPair> gens = generators(x.dim(), GeneratorMode::kAllCalls);
  detail::BfsParams params;
  params.n = x.dim();
  params.generators = gens;
  params.start = &x;
  params.target = &y;
  params.upper = &y;
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

}  // namespace

bool check_maximal_column_condition(const BoolMatrix& x) {
  const int n = x.dim();
  std::vector<std::vector<bool>> cols(n, std::vector<bool>(n));
  for (int c = 0; c < n; ++c) {
    bool nonzero = false;
    for (int r = 0; r < n; ++r) {
      cols[c][r] = x.at(r, c);
      nonzero = nonzero || cols[c][r];
    }
    if (!nonzero) return false;
  }
  for (int c1 = 0; c1 < n; ++c1) {
    for (int c2 = 0; c2 < n; ++c2) {
      if (c1 == c2 || cols[c1] == cols[c2]) continue;
      // Strict containment of distinct columns breaks the antichain.
      bool below = true;
      for (int r = 0; r < n && below; ++r) {
        below = !cols[c1][r] || cols[c2][r];
      }
      if (below) return false;
    }
  }
  return true;
}

SearchOutcome solve_gtp(const BoolMatrix& x, const BoolMatrix& y,
                        std::uint64_t budget) {
  check_same_dim(x, y);
  check_budget(budget);
  return run_one_sided(x, y, budget);
}

SearchOutcome solve_mgtp(const BoolMatrix& x, const BoolMatrix& y,
                         std::uint64_t budget) {
  check_same_dim(x, y);
  check_budget(budget);
  if (!check_maximal_column_condition(x)) {
    throw InstanceFormatError(
        "instance violates the maximal column condition: x has a zero "
        "column or a column strictly below another");
  }
  return run_one_sided(x, y, budget);
}

SearchOutcome solve_gmp(const BoolMatrix& a, std::uint64_t budget) {
  check_budget(budget);
  return run_one_sided(BoolMatrix::identity(a.dim()), a, budget);
}

SearchOutcome solve_gjp(const BoolMatrix& x, const BoolMatrix& y,
                        std::uint64_t budget, MembershipCheck membership) {
  check_same_dim(x, y);
  check_budget(budget);
  if (membership == MembershipCheck::kVerify) {
    for (const BoolMatrix* m : {&x, &y}) {
      SearchOutcome member = solve_gmp(*m, budget);
      if (member.status == SearchStatus::kProvenAbsent) {
        throw InstanceFormatError(
            "two-sided order is only defined on monoid members; an input "
            "matrix is not one");
      }
      if (member.status == SearchStatus::kInconclusive) {
        SearchOutcome outcome;
        outcome.status = SearchStatus::kInconclusive;
        outcome.nodes_expanded = member.nodes_expanded;
        outcome.budget = budget;
        return outcome;
      }
    }
  }

  std::vector<CallPair> gens = generators(x.dim(), GeneratorMode::kAllCalls);
  detail::BfsParams params;
  params.n = x.dim();
  params.generators = gens;
  params.start = &y;
  params.target = &x;
  params.upper = &x;
  params.left_moves = true;
  params.budget = budget;
  detail::BfsRun run = detail::packed_bfs(params);

  SearchOutcome outcome;
  outcome.budget = budget;
  outcome.nodes_expanded = run.nodes_expanded;
  switch (run.status) {
    case detail::BfsRun::Status::kFoundTarget: {
      outcome.status = SearchStatus::kFound;
      auto [left, right] = run.words_to(run.target_id, gens);
      outcome.witness = TwoSidedWitness{std::move(left), std::move(right)};
      break;
    }
    case detail::BfsRun::Status::kExhausted:
      outcome.status = SearchStatus::kProvenAbsent;
      break;
    case detail::BfsRun::Status::kOutOfBudget:
      outcome.status = SearchStatus::kInconclusive;
      break;
  }
  return outcome;
}

namespace {

std::vector<std::uint64_t> coverage_mask(const Graph& g, int vertex) {
  std::size_t words = (static_cast<std::size_t>(g.n) + 63) / 64;
  std::vector<std::uint64_t> mask(words, 0);
  auto set = [&mask](int v) { mask[(v - 1) >> 6] |= 1ULL << ((v - 1) & 63); };
  set(vertex);
  for (const auto& [u, v] : g.edges) {
    if (u == vertex) set(v);
    if (v == vertex) set(u);
  }
  return mask;
}

}  // namespace

bool check_dominating_set(const Graph& g, const std::vector<int>& vertices,
                          int k) {
  if (static_cast<int>(vertices.size()) > k) return false;
  std::vector<bool> covered(g.n + 1, false);
  for (int v : vertices) {
    if (v < 1 || v > g.n) return false;
    covered[v] = true;
  }
  for (const auto& [u, v] : g.edges) {
    bool u_in = std::find(vertices.begin(), vertices.end(), u) != vertices.end();
    bool v_in = std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    if (u_in) covered[v] = true;
    if (v_in) covered[u] = true;
  }
  return std::all_of(covered.begin() + 1, covered.end(),
                     [](bool c) { return c; });
}

std::optional<std::vector<int>> solve_dominating_set(const Graph& g, int k) {
  if (k < 1 || k > g.n) {
    throw DimensionError("dominating set size bound " + std::to_string(k) +
                         " out of range 1.." + std::to_string(g.n));
  }
  const int n = g.n;
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> cover;
  cover.reserve(n);
  for (int v = 1; v <= n; ++v) cover.push_back(coverage_mask(g, v));

  std::vector<std::uint64_t> full(words, ~0ULL);
  if (n % 64 != 0) full[words - 1] = (1ULL << (n % 64)) - 1;

  // Increasing cardinality, lexicographic combinations within each size,
  // so the first hit is the smallest then lexicographically least set.
  for (int size = 1; size <= k; ++size) {
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
      std::vector<std::uint64_t> mask(words, 0);
      for (int v : pick) {
        for (std::size_t w = 0; w < words; ++w) mask[w] |= cover[v - 1][w];
      }
      if (mask == full) return pick;
      // Next combination of {1..n} in lexicographic order.
      int pos = size - 1;
      while (pos >= 0 && pick[pos] == n - (size - 1 - pos)) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int q = pos + 1; q < size; ++q) pick[q] = pick[q - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace gossip
