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

#ifndef GOSSIP_CALL_SEQUENCE_HPP_
#define GOSSIP_CALL_SEQUENCE_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "gossip/bool_matrix.hpp"

namespace gossip {

// A word over the call generators, read left to right.
struct CallSequence {
  std::vector<CallPair> calls;

  CallSequence() = default;
  explicit CallSequence(std::vector<CallPair> c) : calls(std::move(c)) {}

  bool empty() const { return calls.empty(); }
  std::size_t size() const { return calls.size(); }
  void append(const CallSequence& tail) {
    calls.insert(calls.end(), tail.calls.begin(), tail.calls.end());
  }

  friend bool operator==(const CallSequence&, const CallSequence&) = default;
};

// The product of the word's call matrices in dimension n; the identity for
// the empty word.
BoolMatrix word_product(int n, const CallSequence& word);

// m * (product of word), computed one call at a time.
BoolMatrix apply_word_right(const BoolMatrix& m, const CallSequence& word);

// (product of word) * m.
BoolMatrix apply_word_left(const CallSequence& word, const BoolMatrix& m);

// -- Witness text format -----------------------------------------------------
//
// One call per line as "i j" with 1-based indices; an empty file is the
// empty word.  Pairs are normalized so the smaller index prints first.

CallSequence parse_witness(std::istream& in);
CallSequence parse_witness(const std::string& text);
std::string format_witness(const CallSequence& word);

CallSequence read_witness_file(const std::string& path);
void write_witness_file(const std::string& path, const CallSequence& word);

}  // namespace gossip

#endif  // GOSSIP_CALL_SEQUENCE_HPP_
