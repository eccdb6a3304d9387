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

#ifndef PRS_REVIEW_HPP_
#define PRS_REVIEW_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace prs {

// Opaque identifier, unique within a rating book. Compared byte-wise.
using EmployeeId = std::string;

// The two rated dimensions. Every pairwise comparison carries exactly one.
enum class Axis { Teamwork, Skill };

constexpr std::size_t axis_index(Axis axis) {
  return axis == Axis::Teamwork ? 0 : 1;
}

constexpr Axis kAxes[] = {Axis::Teamwork, Axis::Skill};

// Team reviews cover up to 20 teammates; sampling reviews up to 5 recent
// contacts.
enum class ReviewKind { Team, Sampling };

constexpr std::size_t max_placements(ReviewKind kind) {
  return kind == ReviewKind::Team ? 20 : 5;
}

/// One peer's position on the 2D grid. A missing coordinate means the
/// reviewer declined to evaluate that peer on that axis; such peers take
/// part in no comparisons on that axis.
struct GridPlacement {
  EmployeeId peer;
  std::optional<double> teamwork;  // in [0,1] when present
  std::optional<double> skill;     // in [0,1] when present

  const std::optional<double>& coordinate(Axis axis) const {
    return axis == Axis::Teamwork ? teamwork : skill;
  }
};

/// One reviewer's simultaneous placement of several peers on the grid.
struct GridReview {
  EmployeeId reviewer;
  std::int64_t timestamp = 0;  // monotone sequence key, defines replay order
  ReviewKind kind = ReviewKind::Team;
  std::vector<GridPlacement> placements;
};

// Throws std::invalid_argument unless the review is well formed: non-empty
// ids, no self-review, no duplicate peer, placement count within the kind's
// limit, coordinates (when present) finite and in [0,1].
void validate_review(const GridReview& review);

/// A derived win/loss on one axis. `spread` is the normalized score distance
/// within the originating review; sub-floor pairs are filtered before this
/// type is constructed, so with the default floor spread is in [0.05, 1].
struct PairwiseComparison {
  Axis axis;
  EmployeeId winner;
  EmployeeId loser;
  double spread;
};

inline constexpr double kDefaultSpreadFloor = 0.05;

// Expands one review into pairwise comparisons on `axis`.
//
// With k evaluated placements on the axis there are k(k-1)/2 candidate
// pairs. Each pair's spread is |s1 - s2| / (max - min) over the review's
// evaluated scores on that axis; the higher-scored peer wins. Pairs whose
// spread falls below `ss_floor` are dropped. Output is sorted by
// (winner, loser) id.
//
// Degenerate inputs yield an empty list: fewer than two evaluated
// placements, or all evaluated scores equal (zero normalization range).
std::vector<PairwiseComparison> expand_review(
    const GridReview& review, Axis axis, double ss_floor = kDefaultSpreadFloor);

namespace detail {

// Comparison over placement indices; avoids id copies on the hot path.
struct AxisPair {
  std::size_t winner;  // index into review.placements
  std::size_t loser;
  double spread;
};

std::vector<AxisPair> expand_axis_pairs(const GridReview& review, Axis axis,
                                        double ss_floor);

}  // namespace detail

}  // namespace prs

#endif  // PRS_REVIEW_HPP_
