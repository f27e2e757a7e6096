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

#include "gossip/bool_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace gossip {

namespace {

void check_dim(int n) {
  if (n < 1) {
    throw DimensionError("matrix dimension must be at least 1, got " +
                         std::to_string(n));
  }
}

void check_index_1based(int idx, int n, const char* what) {
  if (idx < 1 || idx > n) {
    throw DimensionError(std::string(what) + " index " + std::to_string(idx) +
                         " out of range 1.." + std::to_string(n));
  }
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

}  // namespace

CallPair::CallPair(int a, int b) {
  if (a == b) {
    throw DimensionError("call pair requires two distinct indices, got {" +
                         std::to_string(a) + "," + std::to_string(b) + "}");
  }
  if (a < 1 || b < 1) {
    throw DimensionError("call pair indices must be 1-based positive, got {" +
                         std::to_string(a) + "," + std::to_string(b) + "}");
  }
  i = std::min(a, b);
  j = std::max(a, b);
}

ConferenceSet::ConferenceSet(std::vector<int> elements)
    : members(std::move(elements)) {
  std::sort(members.begin(), members.end());
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (members[k] < 1) {
      throw DimensionError("conference set members must be 1-based positive");
    }
    if (k > 0 && members[k] == members[k - 1]) {
      throw DimensionError("conference set member " +
                           std::to_string(members[k]) + " repeated");
    }
  }
}

BoolMatrix::BoolMatrix(int n) : n_(n) {
  check_dim(n);
  stride_ = (n + 63) / 64;
  words_.assign(static_cast<std::size_t>(n) * stride_, 0);
}

BoolMatrix BoolMatrix::identity(int n) {
  BoolMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BoolMatrix BoolMatrix::ones(int n) {
  BoolMatrix m(n);
  for (int r = 0; r < n; ++r) {
    std::uint64_t* row = m.row_words(r);
    for (int w = 0; w < m.stride_; ++w) row[w] = ~0ULL;
    int tail = n % 64;
    if (tail != 0) row[m.stride_ - 1] = (1ULL << tail) - 1;
  }
  return m;
}

bool BoolMatrix::at(int row, int col) const {
  if (row < 0 || row >= n_ || col < 0 || col >= n_) {
    throw DimensionError("element (" + std::to_string(row) + "," +
                         std::to_string(col) + ") out of range for dimension " +
                         std::to_string(n_));
  }
  return (row_words(row)[col >> 6] >> (col & 63)) & 1;
}

void BoolMatrix::set(int row, int col, bool value) {
  if (row < 0 || row >= n_ || col < 0 || col >= n_) {
    throw DimensionError("element (" + std::to_string(row) + "," +
                         std::to_string(col) + ") out of range for dimension " +
                         std::to_string(n_));
  }
  std::uint64_t& w = row_words(row)[col >> 6];
  if (value) {
    w |= 1ULL << (col & 63);
  } else {
    w &= ~(1ULL << (col & 63));
  }
}

std::strong_ordering operator<=>(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  // Within a word the lowest bit is the smallest column, so the first
  // differing entry in row-major order is the lowest set bit of the xor.
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff != 0) {
      int bit = std::countr_zero(diff);
      bool a_bit = (a.words_[w] >> bit) & 1;
      return a_bit ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

BoolMatrix operator*(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("cannot multiply " + std::to_string(a.dim()) +
                         "-dim by " + std::to_string(b.dim()) + "-dim matrix");
  }
  const int n = a.dim();
  BoolMatrix out(n);
  for (int r = 0; r < n; ++r) {
    const std::uint64_t* arow = a.row_words(r);
    std::uint64_t* orow = out.row_words(r);
    for (int w = 0; w < a.stride(); ++w) {
      std::uint64_t bits = arow[w];
      while (bits != 0) {
        int k = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        const std::uint64_t* brow = b.row_words(k);
        for (int v = 0; v < b.stride(); ++v) orow[v] |= brow[v];
      }
    }
  }
  return out;
}

std::size_t BoolMatrixHasher::operator()(const BoolMatrix& m) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(m.n_);
  for (std::uint64_t w : m.words_) h = mix64(h ^ w);
  return static_cast<std::size_t>(h);
}

bool leq(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("cannot compare " + std::to_string(a.dim()) +
                         "-dim with " + std::to_string(b.dim()) +
                         "-dim matrix");
  }
  const int n = a.dim();
  for (int r = 0; r < n; ++r) {
    const std::uint64_t* arow = a.row_words(r);
    const std::uint64_t* brow = b.row_words(r);
    for (int w = 0; w < a.stride(); ++w) {
      if ((arow[w] & ~brow[w]) != 0) return false;
    }
  }
  return true;
}

BoolMatrix transpose(const BoolMatrix& m) {
  const int n = m.dim();
  BoolMatrix out(n);
  for (int r = 0; r < n; ++r) {
    const std::uint64_t* row = m.row_words(r);
    for (int w = 0; w < m.stride(); ++w) {
      std::uint64_t bits = row[w];
      while (bits != 0) {
        int c = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        out.set(c, r, true);
      }
    }
  }
  return out;
}

BoolMatrix call_matrix(int n, const CallPair& p) {
  check_dim(n);
  check_index_1based(p.i, n, "call");
  check_index_1based(p.j, n, "call");
  BoolMatrix m = BoolMatrix::identity(n);
  m.set(p.i - 1, p.j - 1, true);
  m.set(p.j - 1, p.i - 1, true);
  return m;
}

BoolMatrix conference_matrix(int n, const ConferenceSet& s) {
  check_dim(n);
  BoolMatrix m = BoolMatrix::identity(n);
  for (int a : s.members) check_index_1based(a, n, "conference");
  for (int a : s.members) {
    for (int b : s.members) m.set(a - 1, b - 1, true);
  }
  return m;
}

BoolMatrix apply_call_right(const BoolMatrix& m, const CallPair& p) {
  const int n = m.dim();
  check_index_1based(p.i, n, "call");
  check_index_1based(p.j, n, "call");
  BoolMatrix out = m;
  const int ci = p.i - 1, cj = p.j - 1;
  for (int r = 0; r < n; ++r) {
    bool v = m.at(r, ci) || m.at(r, cj);
    out.set(r, ci, v);
    out.set(r, cj, v);
  }
  return out;
}

BoolMatrix apply_call_left(const BoolMatrix& m, const CallPair& p) {
  const int n = m.dim();
  check_index_1based(p.i, n, "call");
  check_index_1based(p.j, n, "call");
  BoolMatrix out = m;
  const int ri = p.i - 1, rj = p.j - 1;
  std::uint64_t* a = out.row_words(ri);
  std::uint64_t* b = out.row_words(rj);
  for (int w = 0; w < m.stride(); ++w) {
    std::uint64_t v = a[w] | b[w];
    a[w] = v;
    b[w] = v;
  }
  return out;
}

bool is_equivalence_matrix(const BoolMatrix& m) {
  const int n = m.dim();
  for (int i = 0; i < n; ++i) {
    if (!m.at(i, i)) return false;
  }
  if (m != transpose(m)) return false;
  // With reflexivity, m*m == m is exactly transitivity.
  return leq(m * m, m);
}

BoolMatrix parse_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("matrix text is empty");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.empty() ||
      !std::all_of(line.begin(), line.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError("matrix dimension line must be a positive integer, got '" +
                     line + "'");
  }
  long n_long = 0;
  try {
    n_long = std::stol(line);
  } catch (const std::exception&) {
    throw ParseError("matrix dimension '" + line + "' does not fit an integer");
  }
  if (n_long < 1 || n_long > 1 << 20) {
    throw ParseError("matrix dimension " + line + " out of supported range");
  }
  const int n = static_cast<int>(n_long);
  BoolMatrix m(n);
  for (int r = 0; r < n; ++r) {
    if (!std::getline(in, line)) {
      throw ParseError("matrix row " + std::to_string(r + 1) +
                       " missing (expected " + std::to_string(n) + " rows)");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (static_cast<int>(line.size()) != n) {
      throw ParseError("matrix row " + std::to_string(r + 1) + " has " +
                       std::to_string(line.size()) + " characters, expected " +
                       std::to_string(n));
    }
    for (int c = 0; c < n; ++c) {
      if (line[c] == '1') {
        m.set(r, c, true);
      } else if (line[c] != '0') {
        throw ParseError(std::string("matrix row ") + std::to_string(r + 1) +
                         " contains '" + line[c] + "', expected 0 or 1");
      }
    }
  }
  while (std::getline(in, line)) {
    if (!std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); })) {
      throw ParseError("unexpected content after matrix rows: '" + line + "'");
    }
  }
  return m;
}

BoolMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

std::string format_matrix(const BoolMatrix& m) {
  std::string out = std::to_string(m.dim());
  out.push_back('\n');
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      out.push_back(m.at(r, c) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

BoolMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open matrix file '" + path + "'");
  }
  try {
    return parse_matrix(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_matrix_file(const std::string& path, const BoolMatrix& m) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot open matrix file '" + path + "' for writing");
  }
  out << format_matrix(m);
  if (!out) {
    throw ParseError("failed writing matrix file '" + path + "'");
  }
}

}  // namespace gossip
