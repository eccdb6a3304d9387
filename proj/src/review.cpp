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

#include "prs/review.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace prs {

namespace {

void check_coordinate(const std::optional<double>& coord, const char* name,
                      const EmployeeId& peer) {
  if (!coord) return;
  if (!std::isfinite(*coord) || *coord < 0.0 || *coord > 1.0) {
    throw std::invalid_argument("placement for '" + peer + "': " + name +
                                " coordinate must be in [0,1]");
  }
}

}  // namespace

void validate_review(const GridReview& review) {
  if (review.reviewer.empty()) {
    throw std::invalid_argument("review has an empty reviewer id");
  }
  if (review.placements.size() > max_placements(review.kind)) {
    throw std::invalid_argument(
        "review by '" + review.reviewer + "' has " +
        std::to_string(review.placements.size()) + " placements; limit is " +
        std::to_string(max_placements(review.kind)) + " for this kind");
  }
  std::unordered_set<std::string_view> seen;
  seen.reserve(review.placements.size());
  for (const GridPlacement& p : review.placements) {
    if (p.peer.empty()) {
      throw std::invalid_argument("review by '" + review.reviewer +
                                  "' places an empty peer id");
    }
    if (p.peer == review.reviewer) {
      throw std::invalid_argument("self-review: '" + review.reviewer +
                                  "' appears among its own placements");
    }
    if (!seen.insert(p.peer).second) {
      throw std::invalid_argument("duplicate peer '" + p.peer +
                                  "' in review by '" + review.reviewer + "'");
    }
    check_coordinate(p.teamwork, "teamwork", p.peer);
    check_coordinate(p.skill, "skill", p.peer);
  }
}

namespace detail {

std::vector<AxisPair> expand_axis_pairs(const GridReview& review, Axis axis,
                                        double ss_floor) {
  std::vector<std::size_t> evaluated;
  std::vector<double> score;
  evaluated.reserve(review.placements.size());
  score.reserve(review.placements.size());
  for (std::size_t i = 0; i < review.placements.size(); ++i) {
    if (const auto& coord = review.placements[i].coordinate(axis)) {
      evaluated.push_back(i);
      score.push_back(*coord);
    }
  }
  if (evaluated.size() < 2) return {};

  const auto [lo_it, hi_it] = std::minmax_element(score.begin(), score.end());
  const double range = *hi_it - *lo_it;
  if (range == 0.0) return {};  // no information on this axis

  std::vector<AxisPair> pairs;
  pairs.reserve(evaluated.size() * (evaluated.size() - 1) / 2);
  for (std::size_t a = 0; a < evaluated.size(); ++a) {
    for (std::size_t b = a + 1; b < evaluated.size(); ++b) {
      std::size_t win = a, los = b;
      if (score[b] > score[a]) {
        win = b;
        los = a;
      } else if (score[a] == score[b]) {
        // Tied pair, spread 0: only reachable with a zero floor. Pick the
        // lexicographically smaller id as winner for determinism.
        if (review.placements[evaluated[b]].peer <
            review.placements[evaluated[a]].peer) {
          win = b;
          los = a;
        }
      }
      const double spread = std::abs(score[a] - score[b]) / range;
      if (spread < ss_floor) continue;
      pairs.push_back({evaluated[win], evaluated[los], spread});
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [&](const AxisPair& x, const AxisPair& y) {
              const auto& xw = review.placements[x.winner].peer;
              const auto& yw = review.placements[y.winner].peer;
              if (xw != yw) return xw < yw;
              return review.placements[x.loser].peer <
                     review.placements[y.loser].peer;
            });
  return pairs;
}

}  // namespace detail

std::vector<PairwiseComparison> expand_review(const GridReview& review,
                                              Axis axis, double ss_floor) {
  validate_review(review);
  const auto pairs = detail::expand_axis_pairs(review, axis, ss_floor);
  std::vector<PairwiseComparison> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) {
    out.push_back({axis, review.placements[p.winner].peer,
                   review.placements[p.loser].peer, p.spread});
  }
  return out;
}

}  // namespace prs
