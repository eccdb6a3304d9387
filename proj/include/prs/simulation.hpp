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

#ifndef PRS_SIMULATION_HPP_
#define PRS_SIMULATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "prs/graph.hpp"
#include "prs/rating_book.hpp"
#include "prs/rng.hpp"

namespace prs {

/// One simulated-organization configuration.
struct SimConfig {
  std::size_t size = 500;      // employees
  double density = 0.1;        // edge probability of the contact network
  std::size_t peers = 20;      // peers evaluated per review, at most 20
  double noise = 0.0;          // 0 = faithful scores, 1 = random feedback only
  std::size_t rounds = 10;     // evaluation cycles
  std::size_t replications = 30;
  std::uint64_t base_seed = 0;
  std::optional<double> cap;   // increment cap; nullopt = unbounded

  // Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/// A simulated organization: contact network, latent performance, fixed peer
/// lists, and the evolving rating book. Each replication owns one world;
/// worlds share no state, so replications can run concurrently.
struct SimWorld {
  WeightedGraph graph;
  std::vector<double> performance;          // latent x, drawn once
  std::vector<std::vector<Vertex>> peer_lists;
  std::vector<EmployeeId> ids;              // vertex -> employee id
  RatingBook book;
  Rng rng;
  std::size_t rounds_done = 0;
};

// n i.i.d. standard-normal draws.
std::vector<double> assign_performance(std::size_t n, Rng& rng);

// Peer evaluation with reviewer error mixed in:
//   true_score * (1 - noise) + Random * noise
// where Random is an independent standard-normal draw (consumed even at
// noise 0, so the random stream layout does not depend on the noise level).
// Throws std::domain_error for noise outside [0,1].
double noisy_score(double true_score, double noise, Rng& rng);

// Builds the world: network, performance, per-vertex peer lists (strongest
// edges first), and a fresh book with every employee at 0.
SimWorld make_world(const SimConfig& config, std::uint64_t seed);

// One evaluation cycle. In ascending id order, every employee with at least
// two peers scores each peer's latent performance through noisy_score, maps
// the raw scores affinely onto [0,1], and submits the result as a
// skill-axis review (teamwork left unevaluated).
void run_round(SimWorld& world, double noise, const UpdateOptions& options);

// Runs `rounds` cycles in a world seeded from
// replication_seed(config.base_seed, replication_index) and records the
// Spearman correlation between latent performance and the skill track after
// each round. A round where the rating vector still has zero variance (for
// example, no comparison ever applied) records nullopt instead of a number.
std::vector<std::optional<double>> run_simulation(
    const SimConfig& config, std::uint64_t replication_index);

struct ReplicationSeries {
  std::size_t config_id;
  std::size_t replication;
  std::vector<std::optional<double>> rho;  // one entry per round
};

struct SweepTable {
  std::vector<SimConfig> configs;        // indexed by config_id
  std::vector<ReplicationSeries> rows;   // sorted by (config_id, replication)
  // medians[config_id][round]: median over replications, over defined
  // entries only; nullopt when every replication was undefined that round.
  std::vector<std::vector<std::optional<double>>> medians;
};

// Runs every (config, replication) cell. Cells execute on up to `threads`
// workers (0 = hardware concurrency), but results are merged positionally,
// so the table is byte-identical regardless of thread count. Configs are
// ordered canonically by (size, density, peers, noise, rounds,
// replications, base_seed, cap) before ids are assigned.
SweepTable sweep(std::vector<SimConfig> configs, unsigned threads = 0);

}  // namespace prs

#endif  // PRS_SIMULATION_HPP_
