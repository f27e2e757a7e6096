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

#include "gossip/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gossip/bool_matrix.hpp"
#include "gossip/call_sequence.hpp"
#include "gossip/graph.hpp"
#include "gossip/monoid.hpp"
#include "gossip/reductions.hpp"
#include "gossip/search.hpp"

namespace gossip::cli {

namespace {

int report_outcome(const SearchOutcome& outcome, std::ostream& out) {
  switch (outcome.status) {
    case SearchStatus::kFound:
      out << "yes\n";
      return kExitYes;
    case SearchStatus::kProvenAbsent:
      out << "no\n";
      return kExitNo;
    case SearchStatus::kInconclusive:
      out << "inconclusive\n";
      return kExitInconclusive;
  }
  return kExitMalformed;
}

void print_rows(const BoolMatrix& m, std::ostream& out) {
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) out << (m.at(r, c) ? '1' : '0');
    out << '\n';
  }
}

std::vector<int> read_vertex_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open vertex list file '" + path + "'");
  }
  std::vector<int> vertices;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream fields(line);
    long v = 0;
    std::string rest;
    if (!(fields >> v) || (fields >> rest) || v < 1 || v > 1 << 20) {
      throw ParseError(path + ": line " + std::to_string(line_no) +
                       ": expected one vertex index, got '" + line + "'");
    }
    vertices.push_back(static_cast<int>(v));
  }
  return vertices;
}

void write_vertex_list(const std::string& path,
                       const std::vector<int>& vertices) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot open vertex list file '" + path +
                     "' for writing");
  }
  for (int v : vertices) out << v << '\n';
  if (!out) {
    throw ParseError("failed writing vertex list file '" + path + "'");
  }
}

struct Options {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;  // reserved for randomized tooling

  struct {
    int n = 0;
    std::string calls_path;
  } simulate;
  struct {
    int n = 0;
    std::string mode = "all";
    int cap = 0;  // 0: keep the built-in cap
  } enumerate;
  struct {
    std::string file;
    std::string witness_path;
  } member;
  struct {
    std::string file_x, file_y;
    std::string witness_path;
  } transform;
  struct {
    std::string file_x, file_y;
    std::string left_path, right_path;
    bool trust_members = false;
  } jorder;
  struct {
    std::string file;
    int k = 0;
    std::string witness_path;
  } domset;
  struct {
    std::string graph_file;
    int k = 0;
    std::string out_a, out_b;
  } reduce_ds;
  struct {
    std::string file_a, file_b;
    std::string out_x, out_y;
  } reduce_gjp;
  struct {
    std::string file_a, file_b;
    std::string out_c;
  } reduce_gmp;
  struct {
    int n = 0;
    std::vector<int> members;
  } conference;
  struct {
    std::string file;
    std::string witness_path;
  } verify_member;
  struct {
    std::string file_x, file_y;
    std::string witness_path;
  } verify_transform;
  struct {
    std::string file_x, file_y;
    std::string left_path, right_path;
  } verify_jorder;
  struct {
    std::string file;
    int k = 0;
    std::string witness_path;
  } verify_domset;
};

int run_simulate(const Options& opt, std::ostream& out) {
  CallSequence word;
  if (opt.simulate.calls_path.empty() || opt.simulate.calls_path == "-") {
    word = parse_witness(std::cin);
  } else {
    word = read_witness_file(opt.simulate.calls_path);
  }
  BoolMatrix state = BoolMatrix::identity(opt.simulate.n);
  for (const CallPair& p : word.calls) {
    state = apply_call_right(state, p);
    out << "call " << p.i << ' ' << p.j << '\n';
    print_rows(state, out);
  }
  return kExitYes;
}

int run_enumerate(const Options& opt, std::ostream& out) {
  const GeneratorMode mode = opt.enumerate.mode == "all"
                                 ? GeneratorMode::kAllCalls
                                 : GeneratorMode::kAdjacentCalls;
  EnumerationLimits limits;
  if (opt.enumerate.cap > 0) {
    limits.all_calls_cap = opt.enumerate.cap;
    limits.adjacent_calls_cap = opt.enumerate.cap;
  }
  MonoidEnumeration monoid = enumerate(opt.enumerate.n, mode, limits);
  out << "n=" << opt.enumerate.n << " mode=" << opt.enumerate.mode
      << " count=" << monoid.size() << " diameter=" << monoid.diameter()
      << '\n';
  return kExitYes;
}

int run_member(const Options& opt, std::ostream& out) {
  BoolMatrix m = read_matrix_file(opt.member.file);
  SearchOutcome outcome = solve_gmp(m, opt.budget);
  if (outcome.found() && !opt.member.witness_path.empty()) {
    write_witness_file(opt.member.witness_path, outcome.word());
  }
  return report_outcome(outcome, out);
}

int run_transform(const Options& opt, std::ostream& out) {
  BoolMatrix x = read_matrix_file(opt.transform.file_x);
  BoolMatrix y = read_matrix_file(opt.transform.file_y);
  SearchOutcome outcome = solve_gtp(x, y, opt.budget);
  if (outcome.found() && !opt.transform.witness_path.empty()) {
    write_witness_file(opt.transform.witness_path, outcome.word());
  }
  return report_outcome(outcome, out);
}

int run_jorder(const Options& opt, std::ostream& out) {
  BoolMatrix x = read_matrix_file(opt.jorder.file_x);
  BoolMatrix y = read_matrix_file(opt.jorder.file_y);
  SearchOutcome outcome =
      solve_gjp(x, y, opt.budget,
                opt.jorder.trust_members ? MembershipCheck::kTrusted
                                         : MembershipCheck::kVerify);
  if (outcome.found()) {
    const TwoSidedWitness& w = outcome.two_sided();
    if (!opt.jorder.left_path.empty()) {
      write_witness_file(opt.jorder.left_path, w.left);
    }
    if (!opt.jorder.right_path.empty()) {
      write_witness_file(opt.jorder.right_path, w.right);
    }
  }
  return report_outcome(outcome, out);
}

int run_domset(const Options& opt, std::ostream& out) {
  Graph g = read_graph_file(opt.domset.file);
  std::optional<std::vector<int>> set = solve_dominating_set(g, opt.domset.k);
  if (!set.has_value()) {
    out << "no\n";
    return kExitNo;
  }
  out << "yes\n";
  for (std::size_t i = 0; i < set->size(); ++i) {
    out << (i > 0 ? " " : "") << (*set)[i];
  }
  out << '\n';
  if (!opt.domset.witness_path.empty()) {
    write_vertex_list(opt.domset.witness_path, *set);
  }
  return kExitYes;
}

int run_reduce_ds(const Options& opt, std::ostream& out) {
  Graph g = read_graph_file(opt.reduce_ds.graph_file);
  MgtpInstance instance = reduce_ds_to_mgtp(g, opt.reduce_ds.k);
  write_matrix_file(opt.reduce_ds.out_a, instance.a);
  write_matrix_file(opt.reduce_ds.out_b, instance.b);
  out << "REDUCTION ds-mgtp source_n=" << g.n << " k=" << opt.reduce_ds.k
      << '\n';
  return kExitYes;
}

int run_reduce_gjp(const Options& opt, std::ostream& out) {
  BoolMatrix a = read_matrix_file(opt.reduce_gjp.file_a);
  BoolMatrix b = read_matrix_file(opt.reduce_gjp.file_b);
  GjpInstance instance = reduce_gtp_to_gjp(a, b);
  write_matrix_file(opt.reduce_gjp.out_x, instance.x);
  write_matrix_file(opt.reduce_gjp.out_y, instance.y);
  out << "REDUCTION gtp-gjp source_n=" << instance.source_n << '\n';
  return kExitYes;
}

int run_reduce_gmp(const Options& opt, std::ostream& out) {
  BoolMatrix a = read_matrix_file(opt.reduce_gmp.file_a);
  BoolMatrix b = read_matrix_file(opt.reduce_gmp.file_b);
  GmpInstance instance = reduce_mgtp_to_gmp(a, b);
  write_matrix_file(opt.reduce_gmp.out_c, instance.c);
  out << "REDUCTION mgtp-gmp source_n=" << instance.source_n << '\n';
  return kExitYes;
}

int run_conference(const Options& opt, std::ostream& out) {
  CallSequence word =
      factor_conference(opt.conference.n, ConferenceSet(opt.conference.members));
  out << format_witness(word);
  return kExitYes;
}

// Witnesses that fail to multiply out (including out-of-range indices) are
// invalid rather than malformed: the files parsed, they just do not verify.
int report_validity(bool valid, std::ostream& out) {
  out << (valid ? "valid\n" : "invalid\n");
  return valid ? kExitYes : kExitNo;
}

int run_verify_member(const Options& opt, std::ostream& out) {
  BoolMatrix m = read_matrix_file(opt.verify_member.file);
  CallSequence w = read_witness_file(opt.verify_member.witness_path);
  bool valid = false;
  try {
    valid = word_product(m.dim(), w) == m;
  } catch (const DimensionError&) {
  }
  return report_validity(valid, out);
}

int run_verify_transform(const Options& opt, std::ostream& out) {
  BoolMatrix x = read_matrix_file(opt.verify_transform.file_x);
  BoolMatrix y = read_matrix_file(opt.verify_transform.file_y);
  CallSequence w = read_witness_file(opt.verify_transform.witness_path);
  bool valid = false;
  try {
    valid = apply_word_right(x, w) == y;
  } catch (const DimensionError&) {
  }
  return report_validity(valid, out);
}

int run_verify_jorder(const Options& opt, std::ostream& out) {
  BoolMatrix x = read_matrix_file(opt.verify_jorder.file_x);
  BoolMatrix y = read_matrix_file(opt.verify_jorder.file_y);
  CallSequence left = read_witness_file(opt.verify_jorder.left_path);
  CallSequence right = read_witness_file(opt.verify_jorder.right_path);
  bool valid = false;
  try {
    valid = apply_word_left(left, apply_word_right(y, right)) == x;
  } catch (const DimensionError&) {
  }
  return report_validity(valid, out);
}

int run_verify_domset(const Options& opt, std::ostream& out) {
  Graph g = read_graph_file(opt.verify_domset.file);
  std::vector<int> vertices = read_vertex_list(opt.verify_domset.witness_path);
  return report_validity(
      check_dominating_set(g, vertices, opt.verify_domset.k), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Exact solvers and reductions for the gossip monoid"};
  app.require_subcommand(1);
  app.add_option("--budget", opt.budget,
                 "node budget for searches (positive)")
      ->capture_default_str();
  app.add_option("--seed", opt.seed,
                 "seed for randomized tooling; deterministic commands "
                 "ignore it");

  CLI::App* simulate =
      app.add_subcommand("simulate", "print the knowledge matrix after "
                                     "each call of a sequence");
  simulate->add_option("--n", opt.simulate.n, "dimension")->required();
  simulate->add_option("--calls", opt.simulate.calls_path,
                       "call word file ('-' or omitted: stdin)");

  CLI::App* enumerate_cmd = app.add_subcommand(
      "enumerate", "enumerate the monoid for a dimension and generator mode");
  enumerate_cmd->add_option("--n", opt.enumerate.n, "dimension")->required();
  enumerate_cmd->add_option("--mode", opt.enumerate.mode, "generator mode")
      ->check(CLI::IsMember({"all", "adjacent"}))
      ->capture_default_str();
  enumerate_cmd->add_option("--cap", opt.enumerate.cap,
                            "override the dimension cap");

  CLI::App* member = app.add_subcommand(
      "member", "is the matrix a product of call matrices?");
  member->add_option("file", opt.member.file, "matrix file")->required();
  member->add_option("--witness", opt.member.witness_path,
                     "write a call word for yes answers");

  CLI::App* transform = app.add_subcommand(
      "transform", "is there a monoid member G with X*G = Y?");
  transform->add_option("file_x", opt.transform.file_x, "matrix file")
      ->required();
  transform->add_option("file_y", opt.transform.file_y, "matrix file")
      ->required();
  transform->add_option("--witness", opt.transform.witness_path,
                        "write a call word for yes answers");

  CLI::App* jorder = app.add_subcommand(
      "jorder", "does X lie below Y in the two-sided order?");
  jorder->add_option("file_x", opt.jorder.file_x, "matrix file")->required();
  jorder->add_option("file_y", opt.jorder.file_y, "matrix file")->required();
  jorder->add_option("--witness-left", opt.jorder.left_path,
                     "write the left call word for yes answers");
  jorder->add_option("--witness-right", opt.jorder.right_path,
                     "write the right call word for yes answers");
  jorder->add_flag("--trust-members", opt.jorder.trust_members,
                   "skip the membership pre-check (for instances certified "
                   "by construction)");

  CLI::App* domset = app.add_subcommand(
      "domset", "find a dominating set of size at most k");
  domset->add_option("file", opt.domset.file, "graph file")->required();
  domset->add_option("--k", opt.domset.k, "size bound")->required();
  domset->add_option("--witness", opt.domset.witness_path,
                     "write the vertex set for yes answers");

  CLI::App* reduce = app.add_subcommand("reduce", "emit a reduced instance");
  reduce->require_subcommand(1);
  CLI::App* reduce_ds = reduce->add_subcommand(
      "ds-mgtp", "dominating set to restricted transformation");
  reduce_ds->add_option("graph", opt.reduce_ds.graph_file, "graph file")
      ->required();
  reduce_ds->add_option("--k", opt.reduce_ds.k, "size bound")->required();
  reduce_ds->add_option("--out-a", opt.reduce_ds.out_a, "output matrix A")
      ->required();
  reduce_ds->add_option("--out-b", opt.reduce_ds.out_b, "output matrix B")
      ->required();
  CLI::App* reduce_gjp = reduce->add_subcommand(
      "gtp-gjp", "transformation to two-sided order");
  reduce_gjp->add_option("file_a", opt.reduce_gjp.file_a, "matrix file")
      ->required();
  reduce_gjp->add_option("file_b", opt.reduce_gjp.file_b, "matrix file")
      ->required();
  reduce_gjp->add_option("--out-x", opt.reduce_gjp.out_x, "output matrix X")
      ->required();
  reduce_gjp->add_option("--out-y", opt.reduce_gjp.out_y, "output matrix Y")
      ->required();
  CLI::App* reduce_gmp = reduce->add_subcommand(
      "mgtp-gmp", "restricted transformation to membership");
  reduce_gmp->add_option("file_a", opt.reduce_gmp.file_a, "matrix file")
      ->required();
  reduce_gmp->add_option("file_b", opt.reduce_gmp.file_b, "matrix file")
      ->required();
  reduce_gmp->add_option("--out-c", opt.reduce_gmp.out_c, "output matrix C")
      ->required();

  CLI::App* conference = app.add_subcommand(
      "factor-conference", "print a minimal call word for a conference");
  conference->add_option("--n", opt.conference.n, "dimension")->required();
  conference->add_option("--set", opt.conference.members, "members")
      ->delimiter(',');

  CLI::App* verify = app.add_subcommand("verify", "check an emitted witness");
  verify->require_subcommand(1);
  CLI::App* verify_member = verify->add_subcommand(
      "member", "check a membership call word by multiplication");
  verify_member->add_option("file", opt.verify_member.file, "matrix file")
      ->required();
  verify_member
      ->add_option("--witness", opt.verify_member.witness_path, "call word")
      ->required();
  CLI::App* verify_transform = verify->add_subcommand(
      "transform", "check a transformation call word by multiplication");
  verify_transform
      ->add_option("file_x", opt.verify_transform.file_x, "matrix file")
      ->required();
  verify_transform
      ->add_option("file_y", opt.verify_transform.file_y, "matrix file")
      ->required();
  verify_transform
      ->add_option("--witness", opt.verify_transform.witness_path,
                   "call word")
      ->required();
  CLI::App* verify_jorder = verify->add_subcommand(
      "jorder", "check a two-sided witness pair by multiplication");
  verify_jorder->add_option("file_x", opt.verify_jorder.file_x, "matrix file")
      ->required();
  verify_jorder->add_option("file_y", opt.verify_jorder.file_y, "matrix file")
      ->required();
  verify_jorder
      ->add_option("--witness-left", opt.verify_jorder.left_path, "call word")
      ->required();
  verify_jorder
      ->add_option("--witness-right", opt.verify_jorder.right_path,
                   "call word")
      ->required();
  CLI::App* verify_domset =
      verify->add_subcommand("domset", "check a dominating vertex set");
  verify_domset->add_option("file", opt.verify_domset.file, "graph file")
      ->required();
  verify_domset->add_option("--k", opt.verify_domset.k, "size bound")
      ->required();
  verify_domset
      ->add_option("--witness", opt.verify_domset.witness_path, "vertex list")
      ->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gossip");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (*simulate) return run_simulate(opt, out);
    if (*enumerate_cmd) return run_enumerate(opt, out);
    if (*member) return run_member(opt, out);
    if (*transform) return run_transform(opt, out);
    if (*jorder) return run_jorder(opt, out);
    if (*domset) return run_domset(opt, out);
    if (*reduce_ds) return run_reduce_ds(opt, out);
    if (*reduce_gjp) return run_reduce_gjp(opt, out);
    if (*reduce_gmp) return run_reduce_gmp(opt, out);
    if (*conference) return run_conference(opt, out);
    if (*verify_member) return run_verify_member(opt, out);
    if (*verify_transform) return run_verify_transform(opt, out);
    if (*verify_jorder) return run_verify_jorder(opt, out);
    if (*verify_domset) return run_verify_domset(opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    // Dimension, budget, instance-format and structural problems are all
    // semantic defects of otherwise readable input.
    err << "error: " << e.what() << '\n';
    return kExitMalformed;
  }
  err << "error: no command selected\n";
  return kExitParse;
}

}  // namespace gossip::cli
