// Copyright 2026 The PeerRank Authors.
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

#include "prs/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "prs/stats.hpp"

namespace prs {

namespace {

constexpr std::size_t kMaxSize = 1'000'000;

EmployeeId id_for(Vertex v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "e%06u", v);
  return EmployeeId(buf);
}

double config_cap_key(const SimConfig& c) {
  return c.cap ? *c.cap : std::numeric_limits<double>::infinity();
}

auto config_key(const SimConfig& c) {
  return std::make_tuple(c.size, c.density, c.peers, c.noise, c.rounds,
                         c.replications, c.base_seed, config_cap_key(c));
}

std::optional<double> median_of(std::vector<double>& values) {
  if (values.empty()) return std::nullopt;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

void SimConfig::validate() const {
  if (size < 2 || size > kMaxSize) {
    throw std::invalid_argument("sim config: size must be in [2, 1000000]");
  }
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("sim config: density must be in [0,1]");
  }
  if (peers < 1 || peers > max_placements(ReviewKind::Team)) {
    // A simulated review is a team review, so its placement limit applies.
    throw std::invalid_argument("sim config: peers must be in [1,20]");
  }
  if (!(noise >= 0.0 && noise <= 1.0)) {
    throw std::invalid_argument("sim config: noise must be in [0,1]");
  }
  if (replications < 1) {
    throw std::invalid_argument("sim config: replications must be >= 1");
  }
  if (cap && !(*cap > 0.0)) {
    throw std::invalid_argument("sim config: cap must be positive");
  }
}

std::vector<double> assign_performance(std::size_t n, Rng& rng) {
  if (n < 1) {
    throw std::invalid_argument("assign_performance: n must be >= 1");
  }
  std::vector<double> x(n);
  for (double& v : x) v = rng.normal();
  return x;
}

double noisy_score(double true_score, double noise, Rng& rng) {
  if (!(noise >= 0.0 && noise <= 1.0)) {
    throw std::domain_error("noisy_score: noise must be in [0,1]");
  }
  const double random = rng.normal();
  return true_score * (1.0 - noise) + random * noise;
}

SimWorld make_world(const SimConfig& config, std::uint64_t seed) {
  config.validate();
  Rng rng(seed);
  WeightedGraph graph = generate_network(config.size, config.density, rng);
  std::vector<double> performance = assign_performance(config.size, rng);

  std::vector<std::vector<Vertex>> peer_lists(config.size);
  std::vector<EmployeeId> ids(config.size);
  RatingBook book;
  for (Vertex v = 0; v < config.size; ++v) {
    peer_lists[v] = closest_peers(graph, v, config.peers);
    ids[v] = id_for(v);
    book.register_employee(ids[v]);
  }
  return SimWorld{std::move(graph), std::move(performance),
                  std::move(peer_lists), std::move(ids), std::move(book),
                  std::move(rng), 0};
}

void run_round(SimWorld& world, double noise, const UpdateOptions& options) {
  const std::size_t n = world.ids.size();
  const std::int64_t round_base =
      static_cast<std::int64_t>(world.rounds_done * n);
  std::vector<double> raw;
  for (Vertex v = 0; v < n; ++v) {
    const auto& peers = world.peer_lists[v];
    if (peers.size() < 2) continue;  // a lone peer yields no comparisons

    raw.clear();
    for (Vertex peer : peers) {
      raw.push_back(noisy_score(world.performance[peer], noise, world.rng));
    }
    const auto [lo_it, hi_it] = std::minmax_element(raw.begin(), raw.end());
    const double lo = *lo_it;
    const double range = *hi_it - lo;

    GridReview review;
    review.reviewer = world.ids[v];
    review.timestamp = round_base + static_cast<std::int64_t>(v);
    review.kind = ReviewKind::Team;
    review.placements.reserve(peers.size());
    for (std::size_t i = 0; i < peers.size(); ++i) {
      // Grid coordinate on the skill axis only; the affine map onto [0,1]
      // cannot change any comparison outcome (the spread normalization
      // cancels it).
      const double coord = range == 0.0 ? 0.5 : (raw[i] - lo) / range;
      review.placements.push_back(
          {world.ids[peers[i]], std::nullopt, coord});
    }
    world.book.apply_review(review, options);
  }
  ++world.rounds_done;
}

std::vector<std::optional<double>> run_simulation(
    const SimConfig& config, std::uint64_t replication_index) {
  config.validate();
  SimWorld world =
      make_world(config, replication_seed(config.base_seed, replication_index));
  const UpdateOptions options{config.cap, kDefaultSpreadFloor};

  std::vector<std::optional<double>> rho;
  rho.reserve(config.rounds);
  const std::span<const double> skill = world.book.scores(Axis::Skill);
  for (std::size_t round = 0; round < config.rounds; ++round) {
    run_round(world, config.noise, options);
    try {
      rho.push_back(stats::spearman(world.performance, skill));
    } catch (const std::domain_error&) {
      rho.push_back(std::nullopt);  // zero-variance ratings this round
    }
  }
  return rho;
}

SweepTable sweep(std::vector<SimConfig> configs, unsigned threads) {
  if (configs.empty()) {
    throw std::invalid_argument("sweep: empty config grid");
  }
  for (const SimConfig& c : configs) c.validate();
  std::sort(configs.begin(), configs.end(),
            [](const SimConfig& a, const SimConfig& b) {
              return config_key(a) < config_key(b);
            });

  struct Cell {
    std::size_t config_id;
    std::size_t replication;
  };
  std::vector<Cell> cells;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    for (std::size_t r = 0; r < configs[c].replications; ++r) {
      cells.push_back({c, r});
    }
  }

  SweepTable table;
  table.configs = configs;
  table.rows.resize(cells.size());

  // Cells are claimed by index and written positionally, so the merged
  // table does not depend on scheduling.
  const auto run_cell = [&](std::size_t i) {
    const Cell& cell = cells[i];
    table.rows[i] = ReplicationSeries{
        cell.config_id, cell.replication,
        run_simulation(configs[cell.config_id], cell.replication)};
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1 || cells.size() <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned worker_count =
        static_cast<unsigned>(std::min<std::size_t>(threads, cells.size()));
    pool.reserve(worker_count);
    for (unsigned t = 0; t < worker_count; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < cells.size();
             i = next.fetch_add(1)) {
          run_cell(i);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  table.medians.resize(configs.size());
  std::size_t row = 0;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    table.medians[c].resize(configs[c].rounds);
    const std::size_t first = row;
    row += configs[c].replications;
    for (std::size_t round = 0; round < configs[c].rounds; ++round) {
      std::vector<double> defined;
      for (std::size_t i = first; i < row; ++i) {
        if (table.rows[i].rho[round]) defined.push_back(*table.rows[i].rho[round]);
      }
      table.medians[c][round] = median_of(defined);
    }
  }
  return table;
}

}  // namespace prs
