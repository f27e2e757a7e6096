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

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "gossip/error.hpp"
#include "gossip/monoid.hpp"
#include "naive_oracle.hpp"
#include "test_util.hpp"

using gossip::BoolMatrix;
using gossip::CallPair;
using gossip::ConferenceSet;
using gossip::GeneratorMode;
using testutil::mk;

namespace {

// Element counts and diameters pinned by the first full enumeration runs,
// cross-checked against an independent left-multiplication closure.
constexpr std::size_t kAllCallsSize[] = {0, 1, 2, 11, 189, 9152};
constexpr int kAllCallsDiameter[] = {0, 0, 1, 3, 4, 6};
constexpr std::size_t kAdjacentSize[] = {0, 1, 2, 6, 23, 103, 513, 2761,
                                         15767};
constexpr int kAdjacentDiameter[] = {0, 0, 1, 3, 5, 8, 12, 16, 21};

}  // namespace

TEST_SUITE_BEGIN("monoid");

TEST_CASE("generator lists are lexicographic") {
  auto all4 = generators(4, GeneratorMode::kAllCalls);
  REQUIRE(all4.size() == 6);
  CHECK(all4[0] == CallPair(1, 2));
  CHECK(all4[1] == CallPair(1, 3));
  CHECK(all4[2] == CallPair(1, 4));
  CHECK(all4[3] == CallPair(2, 3));
  CHECK(all4[4] == CallPair(2, 4));
  CHECK(all4[5] == CallPair(3, 4));

  auto adj4 = generators(4, GeneratorMode::kAdjacentCalls);
  REQUIRE(adj4.size() == 3);
  CHECK(adj4[0] == CallPair(1, 2));
  CHECK(adj4[1] == CallPair(2, 3));
  CHECK(adj4[2] == CallPair(3, 4));

  CHECK(generators(1, GeneratorMode::kAllCalls).empty());
}

TEST_CASE("enumeration sizes and diameters match the frozen constants") {
  for (int n = 1; n <= 5; ++n) {
    auto monoid = enumerate(n, GeneratorMode::kAllCalls);
    CHECK(monoid.size() == kAllCallsSize[n]);
    CHECK(monoid.diameter() == kAllCallsDiameter[n]);
    CHECK(monoid.dim() == n);
    CHECK(monoid.mode() == GeneratorMode::kAllCalls);
  }
  for (int n = 1; n <= 8; ++n) {
    auto monoid = enumerate(n, GeneratorMode::kAdjacentCalls);
    CHECK(monoid.size() == kAdjacentSize[n]);
    CHECK(monoid.diameter() == kAdjacentDiameter[n]);
  }
}

TEST_CASE("enumeration agrees with an independent left closure") {
  for (int n = 1; n <= 3; ++n) {
    auto monoid = enumerate(n, GeneratorMode::kAllCalls);
    std::set<naive::Mat> oracle = naive::left_closure(n);
    REQUIRE(monoid.size() == oracle.size());
    for (std::size_t id = 0; id < monoid.size(); ++id) {
      CHECK(oracle.count(naive::from_lib(monoid.element(id))) == 1);
    }
  }
}

TEST_CASE("enumeration caps reject oversized requests") {
  CHECK_THROWS_AS(enumerate(7, GeneratorMode::kAllCalls),
                  gossip::BudgetError);
  CHECK_THROWS_AS(enumerate(9, GeneratorMode::kAdjacentCalls),
                  gossip::BudgetError);
  gossip::EnumerationLimits tight;
  tight.all_calls_cap = 3;
  CHECK_THROWS_AS(enumerate(4, GeneratorMode::kAllCalls, tight),
                  gossip::BudgetError);
  CHECK(enumerate(3, GeneratorMode::kAllCalls, tight).size() == 11);
  CHECK_THROWS_AS(enumerate(0, GeneratorMode::kAllCalls),
                  gossip::DimensionError);
}

TEST_CASE("membership, minimal lengths, and witnesses are consistent") {
  auto monoid = enumerate(4, GeneratorMode::kAllCalls);
  CHECK(monoid.contains(BoolMatrix::identity(4)));
  CHECK(monoid.min_length(BoolMatrix::identity(4)) == 0);
  CHECK_FALSE(monoid.contains(mk({"1100", "0100", "0010", "0001"})));
  CHECK_FALSE(monoid.min_length(mk({"1100", "0100", "0010", "0001"}))
                  .has_value());

  int layers[16] = {};
  for (std::size_t id = 0; id < monoid.size(); ++id) {
    BoolMatrix element = monoid.element(id);
    int length = monoid.min_length_of(id);
    gossip::CallSequence word = monoid.word_of(id);
    CHECK(static_cast<int>(word.size()) == length);
    CHECK(gossip::word_product(4, word) == element);
    CHECK(monoid.min_length(element) == length);
    CHECK(gossip::word_product(4, *monoid.word_for(element)) == element);
    ++layers[length];
  }
  // BFS layering: ids are discovered in nondecreasing length order.
  for (std::size_t id = 1; id < monoid.size(); ++id) {
    CHECK(monoid.min_length_of(id) >= monoid.min_length_of(id - 1));
  }
  CHECK(layers[0] == 1);
  CHECK(layers[1] == 6);  // the six call matrices
}

TEST_CASE("enumerated monoid is transpose-closed with all-ones diagonal") {
  for (int n = 1; n <= 4; ++n) {
    auto monoid = enumerate(n, GeneratorMode::kAllCalls);
    for (std::size_t id = 0; id < monoid.size(); ++id) {
      BoolMatrix element = monoid.element(id);
      CHECK(monoid.contains(transpose(element)));
      for (int i = 0; i < n; ++i) CHECK(element.at(i, i));
    }
  }
}

TEST_CASE("adjacent-call monoid embeds in the full monoid") {
  for (int n = 2; n <= 4; ++n) {
    auto all = enumerate(n, GeneratorMode::kAllCalls);
    auto adjacent = enumerate(n, GeneratorMode::kAdjacentCalls);
    CHECK(adjacent.size() <= all.size());
    for (std::size_t id = 0; id < adjacent.size(); ++id) {
      CHECK(all.contains(adjacent.element(id)));
    }
  }
}

TEST_CASE("minimal word lengths obey the quadratic bound") {
  for (int n = 4; n <= 5; ++n) {
    auto monoid = enumerate(n, GeneratorMode::kAllCalls);
    CHECK(monoid.diameter() <= n * (n - 1) / 2);
  }
}

TEST_CASE("shortest word search reproduces the gossip numbers") {
  const int expected[] = {0, 0, 1, 3, 4, 6};
  for (int n = 1; n <= 5; ++n) {
    auto outcome = gossip::shortest_word_to(n, BoolMatrix::ones(n),
                                            GeneratorMode::kAllCalls);
    REQUIRE(outcome.found());
    CHECK(static_cast<int>(outcome.word().size()) == expected[n]);
    CHECK(gossip::word_product(n, outcome.word()) == BoolMatrix::ones(n));
  }
}

TEST_CASE("shortest word search proves absence for non-members") {
  auto outcome = gossip::shortest_word_to(2, mk({"11", "01"}),
                                          GeneratorMode::kAllCalls);
  CHECK(outcome.status == gossip::SearchStatus::kProvenAbsent);
  // A matrix below the target in the order but not reachable: zero diagonal.
  auto zero = gossip::shortest_word_to(2, BoolMatrix(2),
                                       GeneratorMode::kAllCalls);
  CHECK(zero.status == gossip::SearchStatus::kProvenAbsent);
}

TEST_CASE("shortest word budget handling") {
  CHECK_THROWS_AS(gossip::shortest_word_to(3, BoolMatrix::ones(3),
                                           GeneratorMode::kAllCalls, 0),
                  gossip::BudgetError);
  auto outcome = gossip::shortest_word_to(4, BoolMatrix::ones(4),
                                          GeneratorMode::kAllCalls, 2);
  CHECK(outcome.status == gossip::SearchStatus::kInconclusive);
  CHECK(outcome.nodes_expanded == 2);
  CHECK(outcome.budget == 2);
}

TEST_CASE("shortest words agree with enumeration lengths") {
  auto monoid = enumerate(3, GeneratorMode::kAllCalls);
  for (std::size_t id = 0; id < monoid.size(); ++id) {
    auto outcome = gossip::shortest_word_to(3, monoid.element(id),
                                            GeneratorMode::kAllCalls);
    REQUIRE(outcome.found());
    CHECK(static_cast<int>(outcome.word().size()) == monoid.min_length_of(id));
  }
}

TEST_CASE("conference factorization lengths and products") {
  // Length per set size: 0, 0, 1, 3, then 2|s|-4.
  const std::size_t expected_len[] = {0, 0, 1, 3, 4, 6, 8};
  for (int size = 0; size <= 6; ++size) {
    std::vector<int> members;
    for (int v = 1; v <= size; ++v) members.push_back(v);
    ConferenceSet s(members);
    gossip::CallSequence word = gossip::factor_conference(6, s);
    CHECK(word.size() == expected_len[size]);
    CHECK(gossip::word_product(6, word) == conference_matrix(6, s));
  }

  // Non-contiguous member sets, exhaustively at n=5.
  for (unsigned mask = 0; mask < 32; ++mask) {
    std::vector<int> members;
    for (int v = 1; v <= 5; ++v) {
      if (mask >> (v - 1) & 1) members.push_back(v);
    }
    ConferenceSet s(members);
    gossip::CallSequence word = gossip::factor_conference(5, s);
    CHECK(gossip::word_product(5, word) == conference_matrix(5, s));
  }
  CHECK_THROWS_AS(gossip::factor_conference(3, ConferenceSet({1, 4})),
                  gossip::DimensionError);
}

TEST_CASE("three-member factorization matches the displayed pattern") {
  gossip::CallSequence word =
      gossip::factor_conference(3, ConferenceSet({1, 2, 3}));
  CHECK(word == testutil::word({{1, 2}, {2, 3}, {1, 2}}));
}

TEST_CASE("conference factorizations are minimal") {
  for (unsigned mask = 0; mask < 32; ++mask) {
    std::vector<int> members;
    for (int v = 1; v <= 5; ++v) {
      if (mask >> (v - 1) & 1) members.push_back(v);
    }
    ConferenceSet s(members);
    BoolMatrix target = conference_matrix(5, s);
    auto outcome =
        gossip::shortest_word_to(5, target, GeneratorMode::kAllCalls);
    REQUIRE(outcome.found());
    CHECK(outcome.word().size() == gossip::factor_conference(5, s).size());
  }
}

TEST_CASE("idempotent census equals the set partition oracle") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<BoolMatrix> census = gossip::idempotent_census(n);
    std::vector<BoolMatrix> expected;
    for (const naive::Mat& m : naive::partition_matrices(n)) {
      expected.push_back(naive::to_lib(m));
    }
    std::sort(expected.begin(), expected.end());
    REQUIRE(census.size() == expected.size());
    CHECK(std::is_sorted(census.begin(), census.end()));
    for (std::size_t i = 0; i < census.size(); ++i) {
      CHECK(census[i] == expected[i]);
    }
  }
}

TEST_CASE("idempotents are exactly the equivalence matrices") {
  auto monoid = enumerate(4, GeneratorMode::kAllCalls);
  std::size_t idempotents = 0;
  for (std::size_t id = 0; id < monoid.size(); ++id) {
    BoolMatrix element = monoid.element(id);
    bool idempotent = element * element == element;
    CHECK(idempotent == is_equivalence_matrix(element));
    idempotents += idempotent ? 1 : 0;
  }
  CHECK(idempotents == 15);  // set partitions of a 4-set
}

TEST_SUITE_END();
