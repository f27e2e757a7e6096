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

#ifndef GOSSIP_REDUCTIONS_HPP_
#define GOSSIP_REDUCTIONS_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gossip/bool_matrix.hpp"
#include "gossip/call_sequence.hpp"
#include "gossip/graph.hpp"
#include "gossip/search.hpp"

namespace gossip {

// A transformation instance (x, y) whose x satisfies the maximal column
// condition by construction.
struct MgtpInstance {
  BoolMatrix a;
  BoolMatrix b;
};

// A two-sided order instance built from a transformation question on
// source_n-dimensional matrices.  Both x and y carry explicit
// factorizations from their construction, so they are monoid members.
// The encoded question is whether y lies below x, i.e. solve_gjp(y, x).
struct GjpInstance {
  BoolMatrix x;
  BoolMatrix y;
  int source_n;
};

// Index bookkeeping for the n(n+4)-dimensional membership instance.  The
// columns split into families a (width n*n) and b, c, d, e (width n each);
// the rows split into bands of heights n, n*n, n, n, n.  All indices are
// 1-based; every consumer of the block structure goes through this one
// descriptor.
struct GmpBlockLayout {
  int n;

  explicit GmpBlockLayout(int source_n);

  int dim() const { return n * (n + 4); }

  int a(int i) const { return check(i, n * n), i; }
  int b(int i) const { return check(i, n), n * n + i; }
  int c(int i) const { return check(i, n), n * n + n + i; }
  int d(int i) const { return check(i, n), n * n + 2 * n + i; }
  int e(int i) const { return check(i, n), n * n + 3 * n + i; }

  // Column family of a 1-based index: 0..4 for a..e.
  int family(int index) const;
  // 1-based position of an index within its family.
  int family_offset(int index) const;

  // Inclusive 1-based [first, last] ranges; bands and families number 1..5.
  std::pair<int, int> row_band(int band) const;
  std::pair<int, int> col_family(int family_no) const;

 private:
  static int check(int i, int bound);
};

// A membership instance.  For source dimension 1 the matrix is the 1x1
// answer matrix and there is no block layout.
struct GmpInstance {
  int source_n;
  BoolMatrix c;
  std::optional<GmpBlockLayout> layout;
};

// The four-part factorization of a nested matrix, as conference sets plus
// the fully expanded call word (verified at construction).
struct NestingFactorization {
  ConferenceSet x1;
  std::vector<ConferenceSet> x2;
  std::vector<ConferenceSet> x3;
  ConferenceSet x4;
  CallSequence expanded;
};

// Dominating set to restricted transformation.  For k = h.n the instance
// is the trivially-yes pair A = B = I_{3n}; otherwise the 3n-dimensional
// block construction over the closed adjacency matrix, with every
// non-maximal column replaced by the lexicographically least maximal one.
// The emitted x always satisfies the maximal column condition.
MgtpInstance reduce_ds_to_mgtp(const Graph& h, int k);

// Embeds an n-dimensional matrix a (n >= 2) into a monoid member X of
// dimension n(n+1) with block form [1 a; 1 1], and returns the explicit
// factorization certifying membership.
std::pair<BoolMatrix, NestingFactorization> nest_in_gossip(const BoolMatrix& a);

// Transformation to two-sided order: x nests [a I; 0 1], y nests
// [b I; 0 1], both of dimension 2n(2n+1).  y lies below x in the
// two-sided order iff some monoid member G satisfies a*G = b.
GjpInstance reduce_gtp_to_gjp(const BoolMatrix& a, const BoolMatrix& b);

// Runs the two-sided solver on a reduced instance with the encoded
// orientation (is y below x?).  Membership checks are skipped because the
// construction certifies both inputs by explicit factorization.
SearchOutcome solve_reduced_gjp(const GjpInstance& instance,
                                std::uint64_t budget = kDefaultBudget);

// Multiplies out the right word of a Found two-sided outcome on a reduced
// instance and reads the n-by-n block at rows/columns (2n)^2+1..(2n)^2+n.
// The product must be block-diagonal with blocks of sizes (2n)^2, n, n;
// off-block entries signal a non-reduced instance.
BoolMatrix extract_gjp_witness_block(const CallSequence& v_word, int source_n);

// Restricted transformation to membership.  Source dimension 1 yields the
// 1x1 answer matrix; otherwise the n(n+4) block construction.  a must
// satisfy the maximal column condition.
GmpInstance reduce_mgtp_to_gmp(const BoolMatrix& a, const BoolMatrix& b);

// Emits a call word multiplying to reduce_mgtp_to_gmp(a, b).c from a word
// g_word with a * (product of g_word) = b.  The result is verified by
// multiplication before it is returned.
CallSequence witness_gmp_from_mgtp(const BoolMatrix& a, const BoolMatrix& b,
                                   const CallSequence& g_word);

// The converse direction: given any word multiplying to the reduced
// matrix, strips redundant factors, validates the structural guarantees
// of the block construction (named in the errors as the marker, column,
// and growth invariants), and returns a word g with a * (product of g) = b.
CallSequence extract_mgtp_witness(const BoolMatrix& a, const BoolMatrix& b,
                                  const CallSequence& c_word);

}  // namespace gossip

#endif  // GOSSIP_REDUCTIONS_HPP_
