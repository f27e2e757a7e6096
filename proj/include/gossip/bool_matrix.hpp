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

#ifndef GOSSIP_BOOL_MATRIX_HPP_
#define GOSSIP_BOOL_MATRIX_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gossip/error.hpp"

namespace gossip {

// An unordered pair of distinct 1-based indices {i, j} with i < j.  The
// constructor normalizes the order and rejects i == j and indices < 1.
struct CallPair {
  int i;
  int j;

  CallPair(int a, int b);

  friend auto operator<=>(const CallPair&, const CallPair&) = default;
};

// A set of distinct 1-based indices, kept sorted.  May be empty.
struct ConferenceSet {
  std::vector<int> members;

  ConferenceSet() = default;
  // Sorts, rejects duplicates and indices < 1.
  explicit ConferenceSet(std::vector<int> elements);

  std::size_t size() const { return members.size(); }

  friend bool operator==(const ConferenceSet&, const ConferenceSet&) = default;
};

// A square matrix over the boolean semiring ({0,1}, max, min).  Rows are
// stored as packed 64-bit words, one stride of words per row; padding bits
// beyond column n-1 are always zero.  Instances behave as plain values with
// structural equality and a row-major lexicographic total order.
class BoolMatrix {
 public:
  // The n-by-n zero matrix.  n >= 1.
  explicit BoolMatrix(int n);

  static BoolMatrix identity(int n);
  static BoolMatrix ones(int n);

  int dim() const { return n_; }

  // 0-based element access.  Bounds-checked.
  bool at(int row, int col) const;
  void set(int row, int col, bool value);

  // Raw row words, stride() words per row.  Used by the packed kernels.
  int stride() const { return stride_; }
  const std::uint64_t* row_words(int row) const {
    return words_.data() + static_cast<std::size_t>(row) * stride_;
  }
  std::uint64_t* row_words(int row) {
    return words_.data() + static_cast<std::size_t>(row) * stride_;
  }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;
  // Row-major lexicographic order on entries, 0 < 1.
  friend std::strong_ordering operator<=>(const BoolMatrix& a,
                                          const BoolMatrix& b);

  // Semiring product.  Dimensions must agree.
  friend BoolMatrix operator*(const BoolMatrix& a, const BoolMatrix& b);

 private:
  int n_;
  int stride_;
  std::vector<std::uint64_t> words_;

  friend struct BoolMatrixHasher;
};

struct BoolMatrixHasher {
  std::size_t operator()(const BoolMatrix& m) const;
};

// Entrywise order: a(i,j) <= b(i,j) for all i, j.
bool leq(const BoolMatrix& a, const BoolMatrix& b);

BoolMatrix transpose(const BoolMatrix& m);

// The call matrix C[i,j]: the identity with extra ones at (i,j) and (j,i).
// Indices in the pair are 1-based and must be <= n.
BoolMatrix call_matrix(int n, const CallPair& p);

// The conference matrix C[S]: the identity with the S x S block filled with
// ones.  Every member must be <= n.  C[{}] and C[{i}] equal the identity.
BoolMatrix conference_matrix(int n, const ConferenceSet& s);

// Right product m * C[p]: ORs columns p.i and p.j of m into each other.
BoolMatrix apply_call_right(const BoolMatrix& m, const CallPair& p);

// Left product C[p] * m: ORs rows p.i and p.j of m into each other.
BoolMatrix apply_call_left(const BoolMatrix& m, const CallPair& p);

// Whether m is reflexive, symmetric and transitive, i.e. the incidence
// matrix of an equivalence relation.
bool is_equivalence_matrix(const BoolMatrix& m);

// -- Matrix text format ------------------------------------------------------
//
// Line 1 holds the dimension n; lines 2..n+1 each hold exactly n characters
// from {0,1}.  No other content is allowed apart from trailing whitespace.

BoolMatrix parse_matrix(std::istream& in);
BoolMatrix parse_matrix(const std::string& text);
std::string format_matrix(const BoolMatrix& m);

BoolMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const BoolMatrix& m);

}  // namespace gossip

#endif  // GOSSIP_BOOL_MATRIX_HPP_
