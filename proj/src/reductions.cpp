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

#include "gossip/reductions.hpp"

#include <algorithm>
#include <string>

#include "gossip/monoid.hpp"

namespace gossip {

namespace {

void check_same_dim(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("instance matrices have dimensions " +
                         std::to_string(a.dim()) + " and " +
                         std::to_string(b.dim()) + ", expected equal");
  }
}

std::vector<bool> column_of(const BoolMatrix& m, int col) {
  std::vector<bool> out(m.dim());
  for (int r = 0; r < m.dim(); ++r) out[r] = m.at(r, col);
  return out;
}

void fill_ones(BoolMatrix& m, int r0, int rows, int c0, int cols) {
  for (int r = r0; r < r0 + rows; ++r) {
    for (int c = c0; c < c0 + cols; ++c) m.set(r, c, true);
  }
}

void fill_identity(BoolMatrix& m, int r0, int c0, int size) {
  for (int i = 0; i < size; ++i) m.set(r0 + i, c0 + i, true);
}

void fill_copy(BoolMatrix& m, int r0, int c0, const BoolMatrix& src) {
  for (int r = 0; r < src.dim(); ++r) {
    for (int c = 0; c < src.dim(); ++c) {
      if (src.at(r, c)) m.set(r0 + r, c0 + c, true);
    }
  }
}

}  // namespace

MgtpInstance reduce_ds_to_mgtp(const Graph& h, int k) {
  const int n = h.n;
  if (k < 1 || k > n) {
    throw DimensionError("dominating set bound " + std::to_string(k) +
                         " out of range 1.." + std::to_string(n));
  }
  if (k == n) {
    // The full vertex set always dominates, so emit a trivially-yes
    // instance at the construction's 3n dimension.
    return {BoolMatrix::identity(3 * n), BoolMatrix::identity(3 * n)};
  }

  const BoolMatrix m = h.closed_adjacency();
  std::vector<std::vector<bool>> cols(n);
  for (int c = 0; c < n; ++c) cols[c] = column_of(m, c);
  auto strictly_below = [](const std::vector<bool>& lo,
                           const std::vector<bool>& hi) {
    if (lo == hi) return false;
    for (std::size_t r = 0; r < lo.size(); ++r) {
      if (lo[r] && !hi[r]) return false;
    }
    return true;
  };
  std::vector<bool> maximal(n, true);
  for (int c = 0; c < n; ++c) {
    for (int d = 0; d < n && maximal[c]; ++d) {
      if (strictly_below(cols[c], cols[d])) maximal[c] = false;
    }
  }
  // Deterministic choice: the lexicographically least maximal column,
  // comparing entries top to bottom with 0 < 1.
  int least = -1;
  for (int c = 0; c < n; ++c) {
    if (maximal[c] && (least < 0 || cols[c] < cols[least])) least = c;
  }

  BoolMatrix m_prime = m;
  for (int c = 0; c < n; ++c) {
    if (maximal[c]) continue;
    for (int r = 0; r < n; ++r) m_prime.set(r, c, cols[least][r]);
  }

  BoolMatrix a(3 * n);
  fill_copy(a, 0, 0, m_prime);
  fill_ones(a, n, n, n, 2 * n);

  BoolMatrix b(3 * n);
  fill_copy(b, 0, 0, m_prime);
  fill_copy(b, 0, n, m_prime);
  fill_ones(b, 0, n, 2 * n, k);
  fill_ones(b, n, n, 0, 3 * n);

  if (!check_maximal_column_condition(a)) {
    throw StructuralError(
        "emitted dominating-set instance violates the maximal column "
        "condition");
  }
  return {std::move(a), std::move(b)};
}

std::pair<BoolMatrix, NestingFactorization> nest_in_gossip(
    const BoolMatrix& a) {
  const int n = a.dim();
  if (n < 2) {
    throw DimensionError("nesting requires source dimension at least 2");
  }
  const int big = n * (n + 1);
  const int nn = n * n;

  BoolMatrix x(big);
  fill_ones(x, 0, n, 0, nn);
  fill_copy(x, 0, nn, a);
  fill_ones(x, n, nn, 0, big);

  NestingFactorization f;
  {
    std::vector<int> all_rows_block;
    for (int i = n + 1; i <= big; ++i) all_rows_block.push_back(i);
    f.x1 = ConferenceSet(std::move(all_rows_block));
  }
  for (int i = 1; i <= n; ++i) {
    std::vector<int> row_copies;
    for (int j = 1; j <= n; ++j) row_copies.push_back(i + n * (j - 1));
    f.x2.emplace_back(std::move(row_copies));
  }
  for (int j = 1; j <= n; ++j) {
    std::vector<int> sources;
    for (int i = 1; i <= n; ++i) {
      if (a.at(i - 1, j - 1)) sources.push_back(i + n * (j - 1));
    }
    sources.push_back(nn + j);
    f.x3.emplace_back(std::move(sources));
  }
  {
    std::vector<int> left_block;
    for (int i = 1; i <= nn; ++i) left_block.push_back(i);
    f.x4 = ConferenceSet(std::move(left_block));
  }

  f.expanded = factor_conference(big, f.x1);
  for (const ConferenceSet& s : f.x2) f.expanded.append(factor_conference(big, s));
  for (const ConferenceSet& s : f.x3) f.expanded.append(factor_conference(big, s));
  f.expanded.append(factor_conference(big, f.x4));

  if (word_product(big, f.expanded) != x) {
    throw StructuralError(
        "nesting factorization failed its multiplication check");
  }
  return {std::move(x), std::move(f)};
}

namespace {

// [M I; 0 1] in dimension 2n.
BoolMatrix corner_block(const BoolMatrix& m) {
  const int n = m.dim();
  BoolMatrix out(2 * n);
  fill_copy(out, 0, 0, m);
  fill_identity(out, 0, n, n);
  fill_ones(out, n, n, n, n);
  return out;
}

}  // namespace

GjpInstance reduce_gtp_to_gjp(const BoolMatrix& a, const BoolMatrix& b) {
  check_same_dim(a, b);
  BoolMatrix x = nest_in_gossip(corner_block(a)).first;
  BoolMatrix y = nest_in_gossip(corner_block(b)).first;
  return {std::move(x), std::move(y), a.dim()};
}

SearchOutcome solve_reduced_gjp(const GjpInstance& instance,
                                std::uint64_t budget) {
  // Asks whether y lies below x; both inputs were certified by their
  // construction-time factorizations, so membership checks are skipped.
  return solve_gjp(instance.y, instance.x, budget, MembershipCheck::kTrusted);
}

BoolMatrix extract_gjp_witness_block(const CallSequence& v_word,
                                     int source_n) {
  if (source_n < 1) {
    throw DimensionError("source dimension must be at least 1, got " +
                         std::to_string(source_n));
  }
  const int m = 2 * source_n;
  const int big = m * (m + 1);
  const int mm = m * m;
  const BoolMatrix v = word_product(big, v_word);
  auto block_of = [mm, source_n](int idx) {
    if (idx < mm) return 0;
    return idx < mm + source_n ? 1 : 2;
  };
  for (int r = 0; r < big; ++r) {
    for (int c = 0; c < big; ++c) {
      if (v.at(r, c) && block_of(r) != block_of(c)) {
        throw StructuralError(
            "witness product is not block-diagonal at entry (" +
            std::to_string(r + 1) + "," + std::to_string(c + 1) +
            "); the word does not come from a reduced instance");
      }
    }
  }
  BoolMatrix g(source_n);
  for (int r = 0; r < source_n; ++r) {
    for (int c = 0; c < source_n; ++c) {
      g.set(r, c, v.at(mm + r, mm + c));
    }
  }
  return g;
}

GmpBlockLayout::GmpBlockLayout(int source_n) : n(source_n) {
  if (n < 2) {
    throw DimensionError(
        "the block layout exists only for source dimension >= 2");
  }
}

int GmpBlockLayout::check(int i, int bound) {
  if (i < 1 || i > bound) {
    throw DimensionError("block index " + std::to_string(i) +
                         " out of range 1.." + std::to_string(bound));
  }
  return i;
}

int GmpBlockLayout::family(int index) const {
  if (index < 1 || index > dim()) {
    throw DimensionError("column index " + std::to_string(index) +
                         " out of range 1.." + std::to_string(dim()));
  }
  if (index <= n * n) return 0;
  return 1 + (index - n * n - 1) / n;
}

int GmpBlockLayout::family_offset(int index) const {
  if (family(index) == 0) return index;
  return (index - n * n - 1) % n + 1;
}

std::pair<int, int> GmpBlockLayout::row_band(int band) const {
  check(band, 5);
  // Heights n, n*n, n, n, n.
  const int starts[] = {1, n + 1, n + n * n + 1, 2 * n + n * n + 1,
                        3 * n + n * n + 1};
  const int heights[] = {n, n * n, n, n, n};
  return {starts[band - 1], starts[band - 1] + heights[band - 1] - 1};
}

std::pair<int, int> GmpBlockLayout::col_family(int family_no) const {
  check(family_no, 5);
  const int starts[] = {1, n * n + 1, n * n + n + 1, n * n + 2 * n + 1,
                        n * n + 3 * n + 1};
  const int widths[] = {n * n, n, n, n, n};
  return {starts[family_no - 1], starts[family_no - 1] + widths[family_no - 1] - 1};
}

GmpInstance reduce_mgtp_to_gmp(const BoolMatrix& a, const BoolMatrix& b) {
  check_same_dim(a, b);
  if (!check_maximal_column_condition(a)) {
    throw InstanceFormatError(
        "instance violates the maximal column condition: a has a zero "
        "column or a column strictly below another");
  }
  const int n = a.dim();
  if (n == 1) {
    BoolMatrix c(1);
    if (a == b) c.set(0, 0, true);
    return {n, std::move(c), std::nullopt};
  }

  GmpBlockLayout lay(n);
  BoolMatrix c(lay.dim());
  const int nn = n * n;
  // 0-based band/family starts.
  const int r1 = 0, r2 = n, r3 = n + nn, r4 = 2 * n + nn, r5 = 3 * n + nn;
  const int ca = 0, cb = nn, cc = nn + n, cd = nn + 2 * n, ce = nn + 3 * n;

  // Band 1: [1 A A 0 B].
  fill_ones(c, r1, n, ca, nn);
  fill_copy(c, r1, cb, a);
  fill_copy(c, r1, cc, a);
  fill_copy(c, r1, ce, b);
  // Band 2: [1 1 1 0 1].
  fill_ones(c, r2, nn, ca, nn);
  fill_ones(c, r2, nn, cb, 2 * n);
  fill_ones(c, r2, nn, ce, n);
  // Band 3: [0 0 1 I 1].
  fill_ones(c, r3, n, cc, n);
  fill_identity(c, r3, cd, n);
  fill_ones(c, r3, n, ce, n);
  // Bands 4 and 5: [0 I 1 I 1].
  for (int r0 : {r4, r5}) {
    fill_identity(c, r0, cb, n);
    fill_ones(c, r0, n, cc, n);
    fill_identity(c, r0, cd, n);
    fill_ones(c, r0, n, ce, n);
  }
  return {n, std::move(c), lay};
}

CallSequence witness_gmp_from_mgtp(const BoolMatrix& a, const BoolMatrix& b,
                                   const CallSequence& g_word) {
  check_same_dim(a, b);
  if (apply_word_right(a, g_word) != b) {
    throw InstanceFormatError(
        "g_word does not transform a into b, so it cannot be lifted");
  }
  GmpInstance instance = reduce_mgtp_to_gmp(a, b);
  if (instance.source_n == 1) {
    // a equals b here, and the 1x1 instance matrix is the empty product.
    return CallSequence{};
  }
  const GmpBlockLayout& lay = *instance.layout;
  const int n = lay.n;
  const int big = lay.dim();

  // Y1: the nested [1 a; 1 1] block, acting on the a/b columns only.
  CallSequence word = nest_in_gossip(a).second.expanded;
  // Y2..Y6 wire the c/d/e scaffolding.
  for (int i = 1; i <= n; ++i) word.calls.emplace_back(lay.d(i), lay.e(i));
  for (int i = 1; i <= n; ++i) word.calls.emplace_back(lay.c(i), lay.d(i));
  {
    std::vector<int> c_family;
    for (int i = 1; i <= n; ++i) c_family.push_back(lay.c(i));
    word.append(factor_conference(big, ConferenceSet(std::move(c_family))));
  }
  for (int i = 1; i <= n; ++i) word.calls.emplace_back(lay.b(i), lay.e(i));
  for (int i = 1; i <= n; ++i) word.calls.emplace_back(lay.c(i), lay.e(i));
  // Y7: the transformation word lifted to the e columns.
  for (const CallPair& p : g_word.calls) {
    word.calls.emplace_back(lay.e(p.i), lay.e(p.j));
  }

  if (word_product(big, word) != instance.c) {
    throw StructuralError(
        "membership witness failed its multiplication check");
  }
  return word;
}

CallSequence extract_mgtp_witness(const BoolMatrix& a, const BoolMatrix& b,
                                  const CallSequence& c_word) {
  GmpInstance instance = reduce_mgtp_to_gmp(a, b);
  const int n = instance.source_n;
  if (n == 1) {
    if (word_product(1, c_word) != instance.c) {
      throw InstanceFormatError(
          "word does not multiply to the reduced instance matrix");
    }
    // The 1x1 instance is a yes exactly when a = b, so the empty word works.
    return CallSequence{};
  }
  const GmpBlockLayout& lay = *instance.layout;
  const int big = lay.dim();
  if (word_product(big, c_word) != instance.c) {
    throw InstanceFormatError(
        "word does not multiply to the reduced instance matrix");
  }

  // Step 1: drop factors that do not strictly increase the prefix product.
  std::vector<CallPair> kept;
  BoolMatrix prefix = BoolMatrix::identity(big);
  for (const CallPair& p : c_word.calls) {
    BoolMatrix next = apply_call_right(prefix, p);
    if (next != prefix) {
      kept.push_back(p);
      prefix = std::move(next);
    }
  }
  if (prefix != instance.c) {
    throw StructuralError("redundancy stripping changed the product");
  }

  // Step 2 (marker invariant): the only factors joining the a/b columns to
  // the c/d/e columns are the markers C[b_k, e_k], one per k.
  const int q = static_cast<int>(kept.size());
  std::vector<int> marker_pos(n + 1, 0);
  for (int t = 1; t <= q; ++t) {
    const CallPair& p = kept[t - 1];
    const int fi = lay.family(p.i);
    const int fj = lay.family(p.j);
    if (fi > 1 || fj <= 1) continue;  // not a cross-family factor
    if (fi != 1 || fj != 4 ||
        lay.family_offset(p.i) != lay.family_offset(p.j)) {
      throw StructuralError(
          "marker invariant violated: cross-family factor C[" +
          std::to_string(p.i) + "," + std::to_string(p.j) +
          "] is not of the form C[b_k,e_k]");
    }
    const int k = lay.family_offset(p.i);
    if (marker_pos[k] != 0) {
      throw StructuralError("marker invariant violated: C[b_k,e_k] for k = " +
                            std::to_string(k) + " appears more than once");
    }
    marker_pos[k] = t;
  }
  for (int k = 1; k <= n; ++k) {
    if (marker_pos[k] == 0) {
      throw StructuralError("marker invariant violated: C[b_k,e_k] for k = " +
                            std::to_string(k) + " is missing");
    }
  }

  // Steps 3 and 4: walk the prefixes; the e1-block columns that grow after
  // their marker spell out the transformation word (column and growth
  // invariants).
  auto e1_column = [&lay, n](const BoolMatrix& m, int k) {
    std::vector<bool> col(n);
    for (int r = 0; r < n; ++r) col[r] = m.at(r, lay.e(k) - 1);
    return col;
  };
  prefix = BoolMatrix::identity(big);
  CallSequence g;
  for (int t = 1; t <= q; ++t) {
    const CallPair& p = kept[t - 1];
    BoolMatrix next = apply_call_right(prefix, p);
    for (int k = 1; k <= n; ++k) {
      if (marker_pos[k] != t) continue;
      std::vector<bool> before = e1_column(prefix, k);
      if (std::find(before.begin(), before.end(), true) != before.end()) {
        throw StructuralError(
            "column invariant violated: column " + std::to_string(k) +
            " of block e1 is non-zero before its marker C[b_k,e_k]");
      }
      if (e1_column(next, k) != column_of(a, k - 1)) {
        throw StructuralError(
            "column invariant violated: column " + std::to_string(k) +
            " of block e1 after its marker differs from column " +
            std::to_string(k) + " of the source matrix");
      }
    }
    bool grows_after_marker = false;
    for (int k = 1; k <= n; ++k) {
      if (marker_pos[k] < t && e1_column(next, k) != e1_column(prefix, k)) {
        grows_after_marker = true;
      }
    }
    if (grows_after_marker) {
      if (lay.family(p.i) != 4 || lay.family(p.j) != 4) {
        throw StructuralError(
            "growth invariant violated: factor C[" + std::to_string(p.i) +
            "," + std::to_string(p.j) +
            "] changes block e1 after a marker but is not of the form "
            "C[e_i,e_j]");
      }
      const int di = lay.family_offset(p.i);
      const int dj = lay.family_offset(p.j);
      if (marker_pos[di] >= t || marker_pos[dj] >= t) {
        throw StructuralError(
            "growth invariant violated: C[e_i,e_j] occurs before both "
            "markers C[b_i,e_i] and C[b_j,e_j]");
      }
      g.calls.emplace_back(di, dj);
    }
    prefix = std::move(next);
  }

  if (apply_word_right(a, g) != b) {
    throw StructuralError(
        "extraction failed: the extracted word does not transform a into b");
  }
  return g;
}

}  // namespace gossip
