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

#include "prs/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace prs {

WeightedGraph generate_network(std::size_t n, double p, Rng& rng) {
  if (n < 2) {
    throw std::invalid_argument("generate_network: need at least 2 vertices");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(
        "generate_network: edge probability outside [0,1]");
  }
  WeightedGraph graph(n);
  for (Vertex u = 0; u + 1 < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) {
        graph.add_edge(u, v, rng.uniform_open01());
      }
    }
  }
  return graph;
}

std::vector<Vertex> closest_peers(const WeightedGraph& graph, Vertex v,
                                  std::size_t m) {
  auto span = graph.neighbors(v);
  std::vector<WeightedGraph::Neighbor> sorted(span.begin(), span.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const WeightedGraph::Neighbor& a,
               const WeightedGraph::Neighbor& b) {
              if (a.weight != b.weight) return a.weight > b.weight;
              return a.vertex < b.vertex;
            });
  if (sorted.size() > m) sorted.resize(m);
  std::vector<Vertex> peers;
  peers.reserve(sorted.size());
  for (const auto& n : sorted) peers.push_back(n.vertex);
  return peers;
}

}  // namespace prs
