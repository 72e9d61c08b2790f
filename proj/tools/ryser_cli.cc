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

// ryser: command-line front end.
//
// Exit codes: 0 success (property holds, SAT), 1 semantic negative
// (non-intersecting input, UNSAT), 2 input error, 3 timeout.
// Machine-readable lines look like ":: key value".

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ryser/constructions.h"
#include "ryser/finite_field.h"
#include "ryser/hypergraph.h"
#include "ryser/peeling.h"
#include "ryser/search.h"
#include "ryser/solvers.h"

namespace {

using namespace ryser;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitTimeout = 3;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Hypergraph Load(const std::string& path) {
  try {
    return Parse(ReadInput(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string Vertices(const std::vector<VertexRef>& vs) {
  std::string out;
  for (const VertexRef& v : vs) out += (out.empty() ? "" : " ") + ToString(v);
  return out.empty() ? "-" : out;
}

template <typename T>
std::string Join(const std::vector<T>& xs) {
  std::ostringstream out;
  for (size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  return xs.empty() ? "-" : out.str();
}

std::string Fixed(double x) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << x;
  return out.str();
}

std::string RationalText(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

int CmdCheck(const std::string& input, std::ostream& out) {
  const Hypergraph h = Load(input);
  const auto violations = Validate(h);
  const IntersectionCheck inter = CheckIntersecting(h);
  const DegreeProfile profile = ComputeDegreeProfile(h);
  out << "check " << input << "\n";
  out << ":: valid " << (violations.empty() ? "true" : "false") << "\n";
  for (const Violation& v : violations) out << ":: violation " << v.message << "\n";
  out << ":: intersecting " << (inter.intersecting ? "true" : "false") << "\n";
  if (inter.disjoint_pair) {
    out << ":: disjoint_pair " << inter.disjoint_pair->first << " " << inter.disjoint_pair->second
        << "\n";
  }
  out << ":: r " << h.r() << "\n";
  out << ":: edges " << h.num_edges() << "\n";
  out << ":: vertices " << h.num_vertices() << "\n";
  out << ":: class_sizes " << Join(h.class_sizes()) << "\n";
  out << ":: max_degree " << profile.max_degree() << "\n";
  out << ":: degree_counts";
  for (int d = 0; d <= profile.max_degree(); ++d) out << " " << d << ":" << profile.count_by_degree[d];
  out << "\n";
  return violations.empty() && inter.intersecting ? kExitOk : kExitNegative;
}

int CmdTau(const std::string& input, std::ostream& out) {
  const Hypergraph h = Load(input);
  const CoverCertificate cert = CoverNumber(h);
  out << ":: tau " << cert.size << "\n";
  out << ":: cover " << Vertices(cert.vertices) << "\n";
  out << ":: verified " << (VerifyCover(h, cert.vertices).covers ? "true" : "false") << "\n";
  return kExitOk;
}

int CmdNu(const std::string& input, std::ostream& out) {
  const Hypergraph h = Load(input);
  const MatchingCertificate cert = MatchingNumber(h);
  out << ":: nu " << cert.size << "\n";
  out << ":: matching " << Join(cert.edge_indices) << "\n";
  out << ":: verified " << (VerifyMatching(h, cert.edge_indices) ? "true" : "false") << "\n";
  return kExitOk;
}

int CmdCovers(const std::string& input, std::ostream& out) {
  const Hypergraph h = Load(input);
  std::vector<CoverCertificate> covers;
  try {
    covers = EnumerateMinimumCovers(h);
  } catch (const InstanceTooLarge& e) {
    throw InputError(e.what());
  }
  out << ":: tau " << (covers.empty() ? 0 : covers.front().size) << "\n";
  out << ":: count " << covers.size() << "\n";
  for (const CoverCertificate& c : covers) out << ":: cover " << Vertices(c.vertices) << "\n";
  return kExitOk;
}

int CmdGen(const std::string& family, int q, std::ostream& out) {
  std::vector<std::string> comments;
  Hypergraph h;
  if (family == "tpp") {
    if (q < 2) throw InputError("gen tpp needs --q");
    if (!DefaultFieldSpec(q)) {
      throw InputError("q = " + std::to_string(q) +
                       " is not a supported prime power (supported: 2 3 4 5 7 8 9 11 13 16 25 27)");
    }
    h = TruncatedProjectivePlane(q);
    comments.push_back("family tpp q=" + std::to_string(q) + " r=" + std::to_string(q + 1));
    comments.push_back("truncated projective plane PG(2," + std::to_string(q) +
                       ") minus the point (1,0,0)");
  } else {
    NamedHypergraph named;
    if (family == "r3" || family == "r4" || family == "r5" || family == "r6") {
      named = ExtremalConstruction(family[1] - '0');
    } else if (family == "r6-cyclic") {
      named = CyclicSixEdges();
    } else {
      throw InputError("unknown family '" + family + "' (r3 r4 r5 r6 r6-cyclic tpp)");
    }
    h = named.hypergraph;
    comments.push_back("family " + family + " r=" + std::to_string(h.r()));
    for (int c = 0; c < h.r(); ++c) {
      std::string line = "class " + std::to_string(c) + ":";
      for (int v = 0; v < h.class_sizes()[c]; ++v) line += " " + NameOf(named.names, {c, v});
      comments.push_back(line);
    }
  }
  out << Serialize(h, comments);
  return kExitOk;
}

int CmdPeel(const std::string& input, std::ostream& out) {
  const Hypergraph h = Load(input);
  if (!IsIntersecting(h)) {
    out << ":: intersecting false\n";
    return kExitNegative;
  }
  const PeelingReport rep = Analyze(h);
  out << ":: r " << rep.r << "\n";
  out << ":: edges " << rep.num_edges << "\n";
  out << ":: x4 " << Vertices(rep.x4) << "\n";
  out << ":: x4_size " << rep.x4.size() << "\n";
  out << ":: h3_edges " << rep.h3_size() << "\n";
  out << ":: x3 " << Vertices(rep.x3) << "\n";
  out << ":: x3_size " << rep.x3.size() << "\n";
  out << ":: h2_edges " << rep.h2_size() << "\n";
  out << ":: gamma " << RationalText(rep.gamma) << "\n";
  out << ":: b1 " << Fixed(rep.curves.b1) << "\n";
  out << ":: b2 " << Fixed(rep.curves.b2) << "\n";
  out << ":: edge_lower_bound " << rep.edge_lower_bound << "\n";
  out << ":: h3_cap " << (rep.h3_cap_holds ? "holds" : "violated") << "\n";
  out << ":: h2_cap " << (rep.h2_cap_holds ? "holds" : "violated") << "\n";
  out << ":: x3_bound " << (rep.x3_bound_holds ? "holds" : "violated") << "\n";
  out << ":: assembled_cover " << Vertices(rep.assembled_cover.vertices) << "\n";
  out << ":: assembled_cover_size " << rep.assembled_cover.size << "\n";
  out << ":: assembled_cover_verified " << (rep.assembled_cover_verifies ? "true" : "false")
      << "\n";
  const DensityReport& d = rep.density;
  out << ":: density_x " << d.x1 << " " << d.x2 << " " << d.x3 << "\n";
  out << ":: density_alpha " << Fixed(d.alpha1) << " " << Fixed(d.alpha2) << " "
      << Fixed(d.alpha3) << "\n";
  out << ":: density_min_edge_slack " << d.min_edge_slack << "\n";
  out << ":: density_aggregate_slack " << d.aggregate_slack << "\n";
  out << ":: all_hold " << (rep.AllHold() ? "true" : "false") << "\n";
  return kExitOk;
}

int CmdBounds(int r, const std::optional<double>& gamma, std::ostream& out) {
  if (r < 1) throw InputError("bounds needs --r >= 1");
  out << ":: r " << r << "\n";
  const double hi = 2.0 + 1.0 / r;
  if (gamma) {
    if (!(*gamma >= 0.0 && *gamma <= hi)) throw InputError("--gamma must lie in [0, 2 + 1/r]");
    const CurveValues v = BoundCurves(*gamma, r);
    out << ":: gamma " << Fixed(*gamma) << "\n";
    out << ":: b1 " << Fixed(v.b1) << "\n";
    out << ":: b2 " << Fixed(v.b2) << "\n";
    out << ":: max " << Fixed(std::max(v.b1, v.b2)) << "\n";
    if (*gamma <= 1.0) out << ":: low_gamma_bound " << Fixed(LowGammaBound(*gamma, r)) << "\n";
    return kExitOk;
  }
  out << "gamma b1 b2\n";
  for (int i = 0; i * 0.25 <= hi; ++i) {
    const CurveValues v = BoundCurves(i * 0.25, r);
    out << Fixed(i * 0.25) << " " << Fixed(v.b1) << " " << Fixed(v.b2) << "\n";
  }
  const CurveBalance balance = BalanceCurves(r, 1.0, hi, 1e-4);
  out << ":: balance_gamma " << Fixed(balance.gamma) << "\n";
  out << ":: balance_value " << Fixed(balance.value) << "\n";
  out << ":: balance_exact_gamma " << Fixed(1.0 + 1.0 / std::sqrt(2.0)) << "\n";
  out << ":: balance_exact_value " << Fixed((3.0 - 1.0 / std::sqrt(18.0)) * r) << "\n";
  return kExitOk;
}

int CmdCounting(int r, int m, int tau, std::ostream& out) {
  CountingResult res;
  try {
    res = CountingFeasibility(r, m, tau);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  out << ":: feasible " << (res.feasible ? "true" : "false") << "\n";
  out << ":: max_degree " << res.max_degree << "\n";
  out << ":: combination " << res.CombinationText() << "\n";
  out << ":: required " << res.required << "\n";
  out << ":: achievable " << res.achievable << "\n";
  out << ":: combination_violated " << (res.combination_violated ? "true" : "false") << "\n";
  if (res.feasible) out << ":: witness_x " << Join(res.witness) << "\n";
  return res.feasible ? kExitOk : kExitNegative;
}

struct SearchFlags {
  int r = 0;
  int edges = 0;
  int max_class_size = 0;
  double timeout = 0.0;
  int shards = 1;
  bool no_prune_degree = false;
  bool no_prune_class = false;
  bool no_prune_budget = false;
  bool long_running = false;
  bool timing = false;
  std::string witness_path;
};

int CmdSearch(const SearchFlags& f, std::ostream& out) {
  SearchConfig config;
  config.r = f.r;
  config.m = f.edges;
  config.max_class_size = f.max_class_size;
  config.timeout_seconds = f.timeout;
  config.shards = f.shards;
  config.prune_max_degree = !f.no_prune_degree;
  config.prune_class_profile = !f.no_prune_class;
  config.prune_cover_budget = !f.no_prune_budget;
  try {
    ValidateSearchConfig(config);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (config.r >= 5 && !f.long_running) {
    throw InputError("search with r >= 5 can run for a very long time; pass --long-running");
  }
  const SearchOutcome res = Search(config);
  const SearchStats& s = res.stats;
  out << ":: status " << ToString(res.status) << "\n";
  out << ":: r " << config.r << "\n";
  out << ":: edges " << config.m << "\n";
  out << ":: candidates " << s.candidates << "\n";
  out << ":: non_intersecting " << s.non_intersecting << "\n";
  out << ":: unique_forms " << s.unique_forms << "\n";
  out << ":: duplicates " << s.duplicates << "\n";
  out << ":: expanded " << s.expanded << "\n";
  out << ":: pruned_max_degree " << s.pruned_max_degree << "\n";
  out << ":: pruned_class_profile " << s.pruned_class_profile << "\n";
  out << ":: pruned_cover_budget " << s.pruned_cover_budget << "\n";
  out << ":: level_sizes " << Join(s.level_sizes) << "\n";
  if (f.timing) out << ":: wall_seconds " << Fixed(s.wall_seconds) << "\n";
  if (res.witness) {
    const Hypergraph& w = *res.witness;
    out << ":: witness_tau " << CoverNumber(w).size << "\n";
    const std::vector<std::string> comments = {
        "search witness r=" + std::to_string(config.r) + " m=" + std::to_string(config.m)};
    const std::string text = Serialize(w, comments);
    out << text;
    if (!f.witness_path.empty()) {
      std::ofstream file(f.witness_path, std::ios::binary);
      if (!file) throw InputError("cannot write " + f.witness_path);
      file << text;
    }
  }
  switch (res.status) {
    case SearchStatus::kSat:
      return kExitOk;
    case SearchStatus::kUnsat:
      return kExitNegative;
    case SearchStatus::kTimeout:
      return kExitTimeout;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse intersecting r-partite hypergraphs: covers, constructions, search"};
  app.require_subcommand(1, 1);
  std::string out_path;

  std::string input = "-";
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", input, "Input hypergraph file, '-' for stdin")->required();
    sub->add_option("--out", out_path, "Write output to PATH");
  };
  CLI::App* check = app.add_subcommand("check", "Validate, intersecting test, degree profile");
  add_input(check);
  CLI::App* tau = app.add_subcommand("tau", "Exact cover number with witness");
  add_input(tau);
  CLI::App* nu = app.add_subcommand("nu", "Exact matching number with witness");
  add_input(nu);
  CLI::App* covers = app.add_subcommand("covers", "Enumerate all minimum covers");
  add_input(covers);
  CLI::App* peel = app.add_subcommand("peel", "Two-phase greedy peeling report");
  add_input(peel);

  std::string family;
  int q = 0;
  CLI::App* gen = app.add_subcommand("gen", "Generate a construction (r3 r4 r5 r6 r6-cyclic tpp)");
  gen->add_option("family", family, "Construction family")->required();
  gen->add_option("--q", q, "Field order for tpp");
  gen->add_option("--out", out_path, "Write output to PATH");

  int bounds_r = 0;
  std::optional<double> gamma;
  CLI::App* bounds = app.add_subcommand("bounds", "Evaluate the edge-count bound curves");
  bounds->add_option("--r", bounds_r, "Uniformity r")->required();
  bounds->add_option("--gamma", gamma, "Evaluate at this gamma instead of tabulating");
  bounds->add_option("--out", out_path, "Write output to PATH");

  int count_r = 0, count_m = 0, count_tau = 0;
  CLI::App* counting = app.add_subcommand("counting", "Degree-counting feasibility test");
  counting->add_option("--r", count_r, "Uniformity r")->required();
  counting->add_option("--edges", count_m, "Edge count m")->required();
  counting->add_option("--tau", count_tau, "Target cover number (default r - 1)");
  counting->add_option("--out", out_path, "Write output to PATH");

  SearchFlags sf;
  CLI::App* search = app.add_subcommand("search", "Exhaustive search for tau >= r - 1");
  search->add_option("--r", sf.r, "Uniformity r")->required();
  search->add_option("--edges", sf.edges, "Edge count m")->required();
  search->add_option("--max-class-size", sf.max_class_size, "Vertex cap per class (default m)");
  search->add_option("--timeout", sf.timeout, "Seconds before giving up (0 = none)");
  search->add_option("--shards", sf.shards, "Worker threads");
  search->add_flag("--no-prune-degree", sf.no_prune_degree, "Disable the max-degree rule");
  search->add_flag("--no-prune-class", sf.no_prune_class, "Disable the class-profile rule");
  search->add_flag("--no-prune-budget", sf.no_prune_budget, "Disable the cover-budget rule");
  search->add_flag("--long-running", sf.long_running, "Allow r >= 5");
  search->add_flag("--timing", sf.timing, "Print wall time (output no longer reproducible)");
  search->add_option("--witness", sf.witness_path, "Also write a SAT witness to PATH");
  search->add_option("--out", out_path, "Write output to PATH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  std::ostringstream out;
  int code = kExitOk;
  try {
    if (*check) code = CmdCheck(input, out);
    else if (*tau) code = CmdTau(input, out);
    else if (*nu) code = CmdNu(input, out);
    else if (*covers) code = CmdCovers(input, out);
    else if (*peel) code = CmdPeel(input, out);
    else if (*gen) code = CmdGen(family, q, out);
    else if (*bounds) code = CmdBounds(bounds_r, gamma, out);
    else if (*counting) code = CmdCounting(count_r, count_m, count_tau ? count_tau : count_r - 1, out);
    else if (*search) code = CmdSearch(sf, out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitInput;
    }
    file << out.str();
  }
  return code;
}
