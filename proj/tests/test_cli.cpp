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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "gossip/bool_matrix.hpp"
#include "gossip/call_sequence.hpp"
#include "gossip/cli.hpp"
#include "gossip/graph.hpp"
#include "test_util.hpp"

using gossip::BoolMatrix;
using testutil::mk;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = gossip::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Files created by a test case, removed when the case ends.
class TempFiles {
 public:
  ~TempFiles() {
    for (const std::string& path : paths_) std::remove(path.c_str());
  }

  std::string write(const std::string& name, const std::string& content) {
    std::string path = "tmp_cli_" + name;
    std::ofstream(path) << content;
    paths_.push_back(path);
    return path;
  }

  // Registers a path the CLI is expected to create.
  std::string fresh(const std::string& name) {
    std::string path = "tmp_cli_" + name;
    paths_.push_back(path);
    return path;
  }

  std::string read(const std::string& path) const {
    std::ifstream in(path);
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
  }

 private:
  std::vector<std::string> paths_;
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("simulate prints the state after every call") {
  TempFiles files;
  std::string calls = files.write("sim.calls", "1 2\n2 3\n1 2\n");
  RunResult result = run_cli({"simulate", "--n", "3", "--calls", calls});
  CHECK(result.code == gossip::cli::kExitYes);
  CHECK(result.out ==
        "call 1 2\n110\n110\n001\n"
        "call 2 3\n111\n111\n011\n"
        "call 1 2\n111\n111\n111\n");
}

TEST_CASE("enumerate reports count and diameter") {
  RunResult result = run_cli({"enumerate", "--n", "4", "--mode", "all"});
  CHECK(result.code == gossip::cli::kExitYes);
  CHECK(result.out == "n=4 mode=all count=189 diameter=4\n");

  RunResult adjacent =
      run_cli({"enumerate", "--n", "5", "--mode", "adjacent"});
  CHECK(adjacent.out == "n=5 mode=adjacent count=103 diameter=8\n");

  RunResult capped = run_cli({"enumerate", "--n", "7", "--mode", "all"});
  CHECK(capped.code == gossip::cli::kExitMalformed);

  RunResult raised =
      run_cli({"enumerate", "--n", "7", "--mode", "adjacent", "--cap", "7"});
  CHECK(raised.code == gossip::cli::kExitYes);
  CHECK(raised.out == "n=7 mode=adjacent count=2761 diameter=16\n");
}

TEST_CASE("member answers with witnesses and exit codes") {
  TempFiles files;
  std::string member = files.write("member.bmat", "3\n110\n110\n001\n");
  std::string witness = files.fresh("member.witness");
  RunResult yes = run_cli({"member", member, "--witness", witness});
  CHECK(yes.code == gossip::cli::kExitYes);
  CHECK(yes.out == "yes\n");
  CHECK(files.read(witness) == "1 2\n");

  std::string outsider = files.write("outsider.bmat", "2\n11\n01\n");
  RunResult no = run_cli({"member", outsider});
  CHECK(no.code == gossip::cli::kExitNo);
  CHECK(no.out == "no\n");

  std::string big = files.write("big.bmat", gossip::format_matrix(
                                                BoolMatrix::ones(6)));
  RunResult inconclusive = run_cli({"--budget", "5", "member", big});
  CHECK(inconclusive.code == gossip::cli::kExitInconclusive);
  CHECK(inconclusive.out == "inconclusive\n");
}

TEST_CASE("member verify pipeline round-trips") {
  TempFiles files;
  std::string member = files.write(
      "roundtrip.bmat", gossip::format_matrix(BoolMatrix::ones(4)));
  std::string witness = files.fresh("roundtrip.witness");
  REQUIRE(run_cli({"member", member, "--witness", witness}).code == 0);

  RunResult valid = run_cli({"verify", "member", member,
                             "--witness", witness});
  CHECK(valid.code == gossip::cli::kExitYes);
  CHECK(valid.out == "valid\n");

  // Extra calls that keep the product are still valid: verification is by
  // multiplication, not by matching the emitted word.
  std::string padded = files.write("padded.witness",
                                   "1 3\n" + files.read(witness));
  CHECK(run_cli({"verify", "member", member, "--witness", padded}).out ==
        "valid\n");

  // Dropping a call from a minimal witness must be caught.
  std::string emitted = files.read(witness);
  std::string truncated = files.write(
      "truncated.witness", emitted.substr(0, emitted.rfind('\n', emitted.size() - 2) + 1));
  RunResult invalid = run_cli({"verify", "member", member,
                               "--witness", truncated});
  CHECK(invalid.code == gossip::cli::kExitNo);
  CHECK(invalid.out == "invalid\n");

  // Out-of-range calls in a witness fail verification, not parsing.
  std::string oversized = files.write("oversized.witness", "5 6\n");
  RunResult oob = run_cli({"verify", "member", member,
                           "--witness", oversized});
  CHECK(oob.code == gossip::cli::kExitNo);
  CHECK(oob.out == "invalid\n");
}

TEST_CASE("transform answers and verifies") {
  TempFiles files;
  std::string x = files.write("x.bmat", "3\n110\n110\n001\n");
  std::string y = files.write("y.bmat", "3\n111\n111\n011\n");
  std::string witness = files.fresh("t.witness");
  RunResult yes = run_cli({"transform", x, y, "--witness", witness});
  CHECK(yes.code == gossip::cli::kExitYes);
  CHECK(files.read(witness) == "2 3\n");

  RunResult verified = run_cli({"verify", "transform", x, y,
                                "--witness", witness});
  CHECK(verified.out == "valid\n");

  RunResult backwards = run_cli({"transform", y, x});
  CHECK(backwards.code == gossip::cli::kExitNo);
}

TEST_CASE("jorder solves the two-sided question") {
  TempFiles files;
  std::string top = files.write("top.bmat", "2\n11\n11\n");
  std::string unit = files.write("unit.bmat", "2\n10\n01\n");
  std::string left = files.fresh("j.left");
  std::string right = files.fresh("j.right");

  RunResult yes = run_cli({"jorder", top, unit,
                           "--witness-left", left,
                           "--witness-right", right});
  CHECK(yes.code == gossip::cli::kExitYes);
  RunResult verified = run_cli({"verify", "jorder", top, unit,
                                "--witness-left", left,
                                "--witness-right", right});
  CHECK(verified.out == "valid\n");

  RunResult no = run_cli({"jorder", unit, top});
  CHECK(no.code == gossip::cli::kExitNo);

  // Non-members are malformed instances unless membership is trusted.
  std::string outsider = files.write("j_outsider.bmat", "2\n11\n01\n");
  RunResult malformed = run_cli({"jorder", outsider, unit});
  CHECK(malformed.code == gossip::cli::kExitMalformed);
  RunResult trusted = run_cli({"jorder", "--trust-members", outsider, unit});
  CHECK(trusted.code == gossip::cli::kExitNo);
}

TEST_CASE("domset finds and checks dominating sets") {
  TempFiles files;
  std::string path4 = files.write("p4.graph", "4 3\n1 2\n2 3\n3 4\n");
  std::string witness = files.fresh("p4.domset");
  RunResult yes = run_cli({"domset", path4, "--k", "2",
                           "--witness", witness});
  CHECK(yes.code == gossip::cli::kExitYes);
  CHECK(yes.out == "yes\n1 3\n");
  CHECK(files.read(witness) == "1\n3\n");

  RunResult verified = run_cli({"verify", "domset", path4, "--k", "2",
                                "--witness", witness});
  CHECK(verified.out == "valid\n");
  RunResult too_small = run_cli({"verify", "domset", path4, "--k", "1",
                                 "--witness", witness});
  CHECK(too_small.out == "invalid\n");

  RunResult no = run_cli({"domset", path4, "--k", "1"});
  CHECK(no.code == gossip::cli::kExitNo);
  CHECK(no.out == "no\n");
}

TEST_CASE("reduce pipelines feed the solvers") {
  TempFiles files;
  std::string triangle = files.write("k3.graph", "3 3\n1 2\n1 3\n2 3\n");
  std::string a = files.fresh("red_a.bmat");
  std::string b = files.fresh("red_b.bmat");
  RunResult reduce = run_cli({"reduce", "ds-mgtp", triangle, "--k", "1",
                              "--out-a", a, "--out-b", b});
  CHECK(reduce.code == gossip::cli::kExitYes);
  CHECK(reduce.out == "REDUCTION ds-mgtp source_n=3 k=1\n");
  RunResult solve = run_cli({"transform", a, b});
  CHECK(solve.code == gossip::cli::kExitYes);

  std::string i2 = files.write("i2.bmat", "2\n10\n01\n");
  std::string top = files.write("top2.bmat", "2\n11\n11\n");
  std::string gx = files.fresh("red_x.bmat");
  std::string gy = files.fresh("red_y.bmat");
  RunResult gjp = run_cli({"reduce", "gtp-gjp", i2, top,
                           "--out-x", gx, "--out-y", gy});
  CHECK(gjp.code == gossip::cli::kExitYes);
  CHECK(gjp.out == "REDUCTION gtp-gjp source_n=2\n");
  // The encoded question is whether Y sits below X; membership of the
  // constructed instances is certified, so trust it for speed.
  RunResult jorder = run_cli({"jorder", "--trust-members", gy, gx});
  CHECK(jorder.code == gossip::cli::kExitYes);

  std::string c = files.fresh("red_c.bmat");
  RunResult gmp = run_cli({"reduce", "mgtp-gmp", i2, top, "--out-c", c});
  CHECK(gmp.code == gossip::cli::kExitYes);
  CHECK(gmp.out == "REDUCTION mgtp-gmp source_n=2\n");
  CHECK(gossip::read_matrix_file(c).dim() == 12);

  // Malformed restricted instances are rejected at reduction time.
  std::string bad = files.write("bad.bmat", "2\n11\n01\n");
  RunResult rejected = run_cli({"reduce", "mgtp-gmp", bad, top, "--out-c", c});
  CHECK(rejected.code == gossip::cli::kExitMalformed);
}

TEST_CASE("factor-conference prints a call word") {
  RunResult result = run_cli({"factor-conference", "--n", "3",
                              "--set", "1", "2", "3"});
  CHECK(result.code == gossip::cli::kExitYes);
  CHECK(result.out == "1 2\n2 3\n1 2\n");

  RunResult empty = run_cli({"factor-conference", "--n", "3"});
  CHECK(empty.code == gossip::cli::kExitYes);
  CHECK(empty.out.empty());
}

TEST_CASE("errors map to the documented exit codes") {
  TempFiles files;
  RunResult missing = run_cli({"member", "no_such_file.bmat"});
  CHECK(missing.code == gossip::cli::kExitParse);

  std::string ragged = files.write("ragged.bmat", "2\n10\n0\n");
  CHECK(run_cli({"member", ragged}).code == gossip::cli::kExitParse);

  std::string good = files.write("good.bmat", "2\n10\n01\n");
  RunResult zero_budget = run_cli({"--budget", "0", "member", good});
  CHECK(zero_budget.code == gossip::cli::kExitMalformed);

  CHECK(run_cli({"no-such-command"}).code == gossip::cli::kExitParse);
  CHECK(run_cli({"member"}).code == gossip::cli::kExitParse);
  CHECK(run_cli({}).code == gossip::cli::kExitParse);
  CHECK(run_cli({"--help"}).code == gossip::cli::kExitYes);
  CHECK(run_cli({"reduce"}).code == gossip::cli::kExitParse);

  std::string bad_graph = files.write("bad.graph", "3 1\n2 1\n");
  CHECK(run_cli({"domset", bad_graph, "--k", "1"}).code ==
        gossip::cli::kExitParse);
  std::string loops = files.write("loops.graph", "3 1\n1 1\n");
  CHECK(run_cli({"domset", loops, "--k", "1"}).code ==
        gossip::cli::kExitParse);
}

TEST_SUITE_END();
