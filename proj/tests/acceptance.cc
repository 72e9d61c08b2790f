// Copyright 2026 The ryserkit Authors
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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ryser/constructions.h"
#include "ryser/peeling.h"
#include "ryser/search.h"
#include "ryser/solvers.h"
#include "test_util.h"

namespace ryser {
namespace {

using Clock = std::chrono::steady_clock;

// Collects failure messages for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string Summary() const {
    std::string out;
    for (const std::string& f : failures_) out += (out.empty() ? "" : "; ") + f;
    if (count_ > static_cast<int>(failures_.size())) {
      out += "; ... " + std::to_string(count_) + " failures in total";
    }
    return out;
  }

 private:
  std::vector<std::string> failures_;
  int count_ = 0;
};

template <typename T>
std::string Str(const T& x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

void Criterion1(Check& check) {
  const int vertices[] = {6, 12, 20, 30};
  const int edges[] = {3, 6, 9, 15};
  for (int r = 3; r <= 6; ++r) {
    const Hypergraph h = ExtremalConstruction(r).hypergraph;
    const std::string tag = "r=" + Str(r) + " ";
    const int tau = CoverNumber(h).size;
    const int nu = MatchingNumber(h).size;
    check.Expect(tau == r - 1, tag + "tau=" + Str(tau));
    check.Expect(nu == 1, tag + "nu=" + Str(nu));
    check.Expect(IsIntersecting(h), tag + "not intersecting");
    check.Expect(h.num_vertices() == vertices[r - 3], tag + "vertices=" + Str(h.num_vertices()));
    check.Expect(h.num_edges() == edges[r - 3], tag + "edges=" + Str(h.num_edges()));
  }
}

void Criterion2(Check& check) {
  const NamedHypergraph named = CyclicSixEdges();
  const std::vector<std::vector<std::string>> listed = {
      {"a_1", "f_3", "e_5"}, {"a_1", "a_3", "c_4"}, {"a_1", "d_3", "b_4"}, {"b_1", "e_2", "e_5"},
      {"b_1", "d_2", "c_4"}, {"b_1", "b_2", "b_4"}, {"d_1", "c_2", "e_5"}, {"d_1", "d_2", "d_3"},
      {"d_1", "b_2", "a_3"}, {"c_1", "c_2", "c_4"}, {"c_1", "e_2", "d_3"}, {"c_1", "b_2", "f_3"},
      {"f_1", "c_2", "b_4"}, {"f_1", "e_2", "a_3"}, {"f_1", "d_2", "f_3"}};
  std::set<std::set<VertexRef>> expected;
  for (const auto& names : listed) {
    const std::vector<VertexRef> v = LookupNames(named.names, names);
    expected.insert(std::set<VertexRef>(v.begin(), v.end()));
  }
  std::set<std::set<VertexRef>> got;
  for (const CoverCertificate& c : EnumerateMinimumCovers(named.hypergraph)) {
    got.insert(std::set<VertexRef>(c.vertices.begin(), c.vertices.end()));
  }
  check.Expect(expected.size() == 15, "listed covers not distinct");
  check.Expect(got == expected, "enumerated " + Str(got.size()) + " covers, not the listed 15");
}

void Criterion3(Check& check) {
  const NamedHypergraph named = ExtremalConstruction(5);
  const std::vector<VertexRef> cover = LookupNames(named.names, {"4", "17", "18", "19"});
  check.Expect(VerifyCover(named.hypergraph, cover).covers, "{4,17,18,19} does not cover");
  const int tau = CoverNumber(named.hypergraph).size;
  check.Expect(tau == 4, "tau=" + Str(tau));
}

void Criterion4(Check& check) {
  for (int q : {2, 3, 4, 5}) {
    const Hypergraph h = TruncatedProjectivePlane(q);
    const std::string tag = "q=" + Str(q) + " ";
    check.Expect(h.r() == q + 1, tag + "r=" + Str(h.r()));
    check.Expect(h.num_edges() == q * q, tag + "m=" + Str(h.num_edges()));
    check.Expect(h.num_vertices() == q * q + q, tag + "vertices=" + Str(h.num_vertices()));
    bool exact_one = true;
    for (int a = 0; a < h.num_edges(); ++a) {
      for (int b = a + 1; b < h.num_edges(); ++b) {
        int shared = 0;
        for (int c = 0; c < h.r(); ++c) shared += h.edge(a)[c] == h.edge(b)[c];
        exact_one = exact_one && shared == 1;
      }
    }
    check.Expect(exact_one, tag + "some pair of edges does not meet in exactly one vertex");
    const DegreeProfile p = ComputeDegreeProfile(h);
    bool regular = true;
    for (const auto& cls : p.degrees) {
      for (int d : cls) regular = regular && d == q;
    }
    check.Expect(regular, tag + "not every degree equals q");
    const int tau = CoverNumber(h).size;
    check.Expect(tau == q, tag + "tau=" + Str(tau));
  }
}

void Criterion5(Check& check) {
  struct Case {
    int r;
    int m;
    SearchStatus expected;
  };
  for (const Case& c : {Case{3, 2, SearchStatus::kUnsat}, Case{3, 3, SearchStatus::kSat},
                        Case{4, 5, SearchStatus::kUnsat}, Case{4, 6, SearchStatus::kSat}}) {
    SearchConfig config;
    config.r = c.r;
    config.m = c.m;
    const SearchOutcome out = Search(config);
    const std::string tag = "search(" + Str(c.r) + "," + Str(c.m) + ") ";
    check.Expect(out.status == c.expected, tag + ToString(out.status));
    if (c.expected == SearchStatus::kSat && out.witness) {
      const Hypergraph& w = *out.witness;
      check.Expect(IsIntersecting(w), tag + "witness not intersecting");
      check.Expect(w.num_edges() == c.m, tag + "witness edge count");
      check.Expect(CoverNumber(w).size == c.r - 1, tag + "witness tau");
      check.Expect(testing::OracleTau(w) == c.r - 1, tag + "witness tau (oracle)");
    }
    if (c.expected == SearchStatus::kUnsat) {
      check.Expect(out.stats.level_sizes.size() == static_cast<size_t>(c.m) ||
                       (!out.stats.level_sizes.empty() && out.stats.level_sizes.back() == 0),
                   tag + "did not exhaust");
    }
  }
}

void Criterion6(Check& check) {
  const CountingResult five = CountingFeasibility(5, 8, 4);
  check.Expect(!five.feasible, "(5,8,4) feasible");
  check.Expect(five.CombinationText() == "x3", "(5,8,4) combination " + five.CombinationText());
  check.Expect(five.required == 8 && five.achievable == 5,
               "(5,8,4) x3 >= " + Str(five.required) + " vs cap " + Str(five.achievable));
  const CountingResult six = CountingFeasibility(6, 11, 5);
  check.Expect(!six.feasible, "(6,11,5) feasible");
  check.Expect(six.CombinationText() == "x3 + 3x4", "(6,11,5) combination " + six.CombinationText());
  check.Expect(six.required == 19 && six.achievable == 18,
               "(6,11,5) x3 + 3x4 >= " + Str(six.required) + " vs cap " + Str(six.achievable));
}

void Criterion7(Check& check) {
  const CurveBalance b = BalanceCurves(1, 1.0, 2.01, 1e-4);
  const double value = 3.0 - 1.0 / std::sqrt(18.0);
  const double gamma = 1.0 + 1.0 / std::sqrt(2.0);
  check.Expect(std::abs(b.value - value) <= 1e-4, "value " + Str(b.value));
  check.Expect(std::abs(b.gamma - gamma) <= 1e-3, "gamma " + Str(b.gamma));
}

void Criterion8(Check& check) {
  std::mt19937 rng(20260);
  int instances = 0;
  int intersecting = 0;
  while (instances < 600) {
    const int r = testing::Uniform(rng, 2, 6);
    const int m = testing::Uniform(rng, 1, 14);
    const Hypergraph h = (instances % 2 == 0) ? testing::RandomInstance(rng, r, 4, m)
                                              : testing::RandomIntersecting(rng, r, 4, m);
    if (!Validate(h).empty() || h.num_vertices() > kBruteForceMaxVertices) continue;
    ++instances;
    const std::string tag = "instance " + Str(instances) + " ";
    const int tau = CoverNumber(h).size;
    const int nu = MatchingNumber(h).size;
    check.Expect(nu <= tau, tag + "nu > tau");
    check.Expect(tau <= h.min_class_size(), tag + "tau > min class size");
    check.Expect(tau <= r * nu, tag + "tau > r nu");
    check.Expect(tau == CoverNumberBruteForce(h), tag + "branch-and-bound != brute force");
    if (!IsIntersecting(h)) continue;
    ++intersecting;
    const CoverCertificate g = GreedyPairCover(h);
    check.Expect(g.size >= tau && g.size <= (h.num_edges() + 1) / 2, tag + "greedy size");
    const PeelingReport rep = Analyze(h);
    check.Expect(rep.h3_size() <= 2 * r + 1, tag + "|E(H3)| cap");
    check.Expect(rep.h2_size() <= r + 1, tag + "|E(H2)| cap");
    check.Expect(rep.assembled_cover_verifies, tag + "assembled cover");
  }
  check.Expect(instances >= 500, "only " + Str(instances) + " instances");
  check.Expect(intersecting >= 250, "only " + Str(intersecting) + " intersecting instances");
}

std::string RunCli(const std::string& args) {
  const std::string command = std::string(RYSER_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  std::string out;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) out.append(buffer, n);
  const int status = pclose(pipe);
  return out + "\n<exit " + Str(WIFEXITED(status) ? WEXITSTATUS(status) : -1) + ">";
}

void Criterion9(Check& check) {
  const std::string dir = std::filesystem::temp_directory_path().string();
  const std::string input = dir + "/ryser_acceptance_r5.txt";
  const std::string cyclic = dir + "/ryser_acceptance_cyclic.txt";
  RunCli("gen r5 --out " + input);
  RunCli("gen r6-cyclic --out " + cyclic);
  const std::vector<std::string> commands = {
      "check " + input,   "tau " + input,          "nu " + input,
      "covers " + cyclic, "peel " + input,         "gen r6",
      "gen tpp --q 3",    "bounds --r 4",          "bounds --r 1 --gamma 1.5",
      "counting --r 5 --edges 8 --tau 4",           "search --r 4 --edges 6 --shards 1",
      "search --r 4 --edges 5 --shards 1"};
  for (const std::string& args : commands) {
    const std::string a = RunCli(args);
    const std::string b = RunCli(args);
    check.Expect(a == b, "'" + args + "' output differs between runs");
    check.Expect(a.find("<exit 2>") == std::string::npos, "'" + args + "' input error");
  }
  std::remove(input.c_str());
  std::remove(cyclic.c_str());
}

struct Criterion {
  int number;
  const char* name;
  double seconds;  // time budget
  std::function<void(Check&)> run;
};

}  // namespace
}  // namespace ryser

int main() {
  using namespace ryser;
  const std::vector<Criterion> criteria = {
      {1, "construction regression", 5.0, Criterion1},
      {2, "cover-list replay", 5.0, Criterion2},
      {3, "known-cover certificate", 1.0, Criterion3},
      {4, "truncated projective plane", 30.0, Criterion4},
      {5, "search replays", 600.0, Criterion5},
      {6, "counting replays", 10.0, Criterion6},
      {7, "bound-curve balance", 1.0, Criterion7},
      {8, "property suites", 120.0, Criterion8},
      {9, "determinism", 0.0, Criterion9},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Check check;
    const auto start = Clock::now();
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.seconds > 0.0) {
      check.Expect(elapsed < c.seconds, "took " + Str(elapsed) + " s, budget " + Str(c.seconds) + " s");
    }
    std::ostringstream line;
    line << (check.ok() ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " ("
         << std::fixed;
    line.precision(3);
    line << elapsed << " s)";
    if (!check.ok()) line << ": " << check.Summary();
    std::cout << line.str() << std::endl;
    failed += !check.ok();
  }
  std::cout << (failed ? "FAIL" : "PASS") << " acceptance: " << (criteria.size() - failed) << "/"
            << criteria.size() << " criteria" << std::endl;
  return failed ? 1 : 0;
}
