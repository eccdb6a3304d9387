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

#ifndef PRS_GRAPH_HPP_
#define PRS_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "prs/rng.hpp"

namespace prs {

using Vertex = std::uint32_t;

/// Undirected graph with one weight per edge.
class WeightedGraph {
 public:
  struct Neighbor {
    Vertex vertex;
    double weight;
  };

  explicit WeightedGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_[v]; }

  void add_edge(Vertex u, Vertex v, double weight) {
    adjacency_[u].push_back({v, weight});
    adjacency_[v].push_back({u, weight});
    ++edge_count_;
  }

 private:
  std::vector<std::vector<Neighbor>> adjacency_;
  std::size_t edge_count_ = 0;
};

// G(n, p) with independent uniform-(0,1) edge weights. Every one of the
// n(n-1)/2 vertex pairs is visited in ascending (u, v) order, drawing one
// uniform for presence and, when present, one more for the weight.
WeightedGraph generate_network(std::size_t n, double p, Rng& rng);

// The min(m, degree(v)) neighbors with the largest edge weights, descending;
// weight ties break by ascending vertex id.
std::vector<Vertex> closest_peers(const WeightedGraph& graph, Vertex v,
                                  std::size_t m);

}  // namespace prs

#endif  // PRS_GRAPH_HPP_
