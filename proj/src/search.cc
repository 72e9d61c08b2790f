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

#include "ryser/search.h"

#include <atomic>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>

namespace ryser {
namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(double seconds)
      : start_(Clock::now()), limit_(seconds), expired_(false) {}

  bool Expired() {
    if (expired_.load(std::memory_order_relaxed)) return true;
    if (limit_ > 0.0 && Elapsed() > limit_) expired_.store(true, std::memory_order_relaxed);
    return expired_.load(std::memory_order_relaxed);
  }
  double Elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_;
  double limit_;
  std::atomic<bool> expired_;
};

// Counters one shard accumulates while extending its share of a level.
struct ShardResult {
  std::set<std::string> keys;
  int64_t candidates = 0;
  int64_t non_intersecting = 0;
  int64_t inserted = 0;
  int64_t pruned_max_degree = 0;
  int64_t pruned_class_profile = 0;
};

class Searcher {
 public:
  explicit Searcher(const SearchConfig& config)
      : config_(config),
        max_class_size_(config.max_class_size > 0 ? config.max_class_size : config.m),
        deadline_(config.timeout_seconds) {}

  SearchOutcome Run() {
    SearchOutcome out;
    const int r = config_.r;
    Hypergraph root(r, std::vector<int>(r, 1), {Edge(r, 0)});

    std::vector<std::string> level;
    ShardResult first;
    if (PassesDegreeRules(root, first)) level.push_back(Canonicalize(root).key);
    Absorb(first, out.stats);
    out.stats.candidates += 1;
    out.stats.unique_forms += static_cast<int64_t>(level.size());
    level = ApplyCoverBudget(std::move(level), 1, out.stats);
    out.stats.level_sizes.push_back(static_cast<int64_t>(level.size()));

    for (int k = 1; k < config_.m; ++k) {
      if (deadline_.Expired()) return Finish(SearchStatus::kTimeout, std::move(out));
      level = Extend(level, out.stats);
      if (deadline_.Expired()) return Finish(SearchStatus::kTimeout, std::move(out));
      level = ApplyCoverBudget(std::move(level), k + 1, out.stats);
      out.stats.level_sizes.push_back(static_cast<int64_t>(level.size()));
    }

    for (const std::string& key : level) {
      if (deadline_.Expired()) return Finish(SearchStatus::kTimeout, std::move(out));
      ++out.stats.expanded;
      Hypergraph h = DecodeCanonicalKey(key);
      if (!HasCoverWithin(h, r - 2)) {
        out.witness = std::move(h);
        return Finish(SearchStatus::kSat, std::move(out));
      }
    }
    return Finish(SearchStatus::kUnsat, std::move(out));
  }

 private:
  SearchOutcome Finish(SearchStatus status, SearchOutcome out) {
    out.status = status;
    out.stats.wall_seconds = deadline_.Elapsed();
    return out;
  }

  bool PassesDegreeRules(const Hypergraph& h, ShardResult& shard) const {
    if (config_.prune_max_degree && PruneMaxDegree(h, config_.m).reject) {
      ++shard.pruned_max_degree;
      return false;
    }
    if (config_.prune_class_profile && PruneClassProfile(h, config_.m).reject) {
      ++shard.pruned_class_profile;
      return false;
    }
    return true;
  }

  static void Absorb(const ShardResult& shard, SearchStats& stats) {
    stats.candidates += shard.candidates;
    stats.non_intersecting += shard.non_intersecting;
    stats.pruned_max_degree += shard.pruned_max_degree;
    stats.pruned_class_profile += shard.pruned_class_profile;
  }

  // Every child of `parent`: per class an existing vertex or, capacity
  // permitting, a fresh one, enumerated lexicographically with fresh last.
  void ExpandParent(const std::string& key, ShardResult& shard) {
    const Hypergraph parent = DecodeCanonicalKey(key);
    const int r = parent.r();
    std::vector<int> limit(r);
    for (int c = 0; c < r; ++c) {
      limit[c] = parent.class_sizes()[c] + (parent.class_sizes()[c] < max_class_size_ ? 1 : 0);
    }
    Edge edge(r, 0);
    int64_t ticks = 0;
    while (true) {
      if ((++ticks & 63) == 0 && deadline_.Expired()) return;
      bool meets_all = true;
      bool duplicate = false;
      for (const Edge& e : parent.edges()) {
        if (!EdgesIntersect(e, edge)) {
          meets_all = false;
          break;
        }
        if (e == edge) duplicate = true;
      }
      if (!meets_all) {
        ++shard.non_intersecting;
      } else if (!duplicate) {
        ++shard.candidates;
        std::vector<int> sizes = parent.class_sizes();
        for (int c = 0; c < r; ++c) sizes[c] = std::max(sizes[c], edge[c] + 1);
        std::vector<Edge> edges = parent.edges();
        edges.push_back(edge);
        const Hypergraph child(r, std::move(sizes), std::move(edges));
        if (PassesDegreeRules(child, shard)) {
          ++shard.inserted;
          shard.keys.insert(Canonicalize(child).key);
        }
      }
      int c = r - 1;
      while (c >= 0 && ++edge[c] == limit[c]) edge[c--] = 0;
      if (c < 0) break;
    }
  }

  std::vector<std::string> Extend(const std::vector<std::string>& parents, SearchStats& stats) {
    const int shards = std::max(1, config_.shards);
    std::vector<ShardResult> results(shards);
    auto work = [&](int s) {
      for (size_t i = s; i < parents.size(); i += shards) {
        if (deadline_.Expired()) return;
        ExpandParent(parents[i], results[s]);
      }
    };
    if (shards == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (int s = 0; s < shards; ++s) threads.emplace_back(work, s);
      for (auto& t : threads) t.join();
    }
    stats.expanded += static_cast<int64_t>(parents.size());

    std::set<std::string> merged;
    int64_t inserted = 0;
    for (ShardResult& shard : results) {
      Absorb(shard, stats);
      inserted += shard.inserted;
      merged.merge(shard.keys);
    }
    stats.unique_forms += static_cast<int64_t>(merged.size());
    stats.duplicates += inserted - static_cast<int64_t>(merged.size());
    return {merged.begin(), merged.end()};
  }

  std::vector<std::string> ApplyCoverBudget(std::vector<std::string> level, int edges,
                                            SearchStats& stats) {
    if (!config_.prune_cover_budget || edges >= config_.m) return level;
    std::vector<std::string> kept;
    for (std::string& key : level) {
      if (PruneCoverBudget(DecodeCanonicalKey(key), config_.m).reject) {
        ++stats.pruned_cover_budget;
      } else {
        kept.push_back(std::move(key));
      }
    }
    return kept;
  }

  SearchConfig config_;
  int max_class_size_;
  Deadline deadline_;
};

}  // namespace

std::string ToString(SearchStatus s) {
  switch (s) {
    case SearchStatus::kSat:
      return "SAT";
    case SearchStatus::kUnsat:
      return "UNSAT";
    case SearchStatus::kTimeout:
      return "TIMEOUT";
  }
  return "?";
}

void ValidateSearchConfig(const SearchConfig& config) {
  if (config.r < 2 || config.r > 16) throw std::invalid_argument("search needs 2 <= r <= 16");
  if (config.m < 1 || config.m > 60) throw std::invalid_argument("search needs 1 <= m <= 60");
  if (config.max_class_size < 0) throw std::invalid_argument("max class size must be >= 1");
  if (config.timeout_seconds < 0.0) throw std::invalid_argument("timeout must be >= 0");
  if (config.shards < 1 || config.shards > 256) throw std::invalid_argument("shards must be in [1, 256]");
}

SearchOutcome Search(const SearchConfig& config) {
  ValidateSearchConfig(config);
  return Searcher(config).Run();
}

}  // namespace ryser
