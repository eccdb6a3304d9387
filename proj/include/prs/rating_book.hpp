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

#ifndef PRS_RATING_BOOK_HPP_
#define PRS_RATING_BOOK_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "prs/review.hpp"

namespace prs {

// Aggregate of the two track scores: the hypotenuse. Throws
// std::domain_error on non-finite input.
double aggregate_score(double teamwork_prs, double skill_prs);

// Per-pair rating increment: the cube root of reviewer score, expectation
// score, and score spread, clamped to `cap` when given.
//
// Valid input ranges are rs in [1,4], es in [0.01,1], ss in [0.05,1],
// cap > 0; anything else throws std::domain_error. The unbounded result
// lies in [cbrt(0.0005), cbrt(4)], roughly [0.07937, 1.58740].
double pair_increment(double rs, double es, double ss,
                      std::optional<double> cap = std::nullopt);

// Per-axis distribution statistics of a book, recomputed after each batch.
struct AxisStats {
  double min = 0.0;
  double max = 0.0;
  double range() const { return max - min; }
};

// Knobs for applying a review. `ss_floor` must stay within [0.05, 1]; a
// lower floor would admit spreads outside the documented factor range.
struct UpdateOptions {
  std::optional<double> cap;  // increment clamp; nullopt = unbounded
  double ss_floor = kDefaultSpreadFloor;
};

/// Factor breakdown of one applied comparison.
struct AuditRecord {
  PairwiseComparison comparison;
  EmployeeId reviewer;
  double reviewer_score;     // in [1,4]
  double expectation_score;  // in [0.01,1]
  double score_spread;       // in [0.05,1] with the default floor
  double increment;          // cbrt(rs*es*ss), clamped to the cap
};

enum class Metric { Teamwork, Skill, Aggregate };

struct RankEntry {
  EmployeeId id;
  double score;
};

/// Per-employee, per-axis rating state.
///
/// Both tracks are independent: a comparison on one axis never moves the
/// other. Every employee enters at exactly 0 on both axes, and updates are
/// symmetric zero-sum, so each axis sums to ~0 over the whole book.
///
/// Mutation is single-writer and atomic per review; all read operations are
/// safe on a const book, and the book is a plain value type that can be
/// copied or moved between threads.
class RatingBook {
 public:
  RatingBook() = default;

  // Registers an employee at PRS 0 on both axes. Returns false if already
  // present.
  bool register_employee(const EmployeeId& id);

  bool contains(const EmployeeId& id) const {
    return index_.find(id) != index_.end();
  }
  std::size_t size() const { return ids_.size(); }

  // Registration order; parallel to the spans returned by scores().
  const std::vector<EmployeeId>& employees() const { return ids_; }

  // Raw per-axis values in registration order.
  std::span<const double> scores(Axis axis) const {
    return scores_[axis_index(axis)];
  }

  // Throws std::out_of_range for an unregistered employee.
  double score(const EmployeeId& id, Axis axis) const;

  AxisStats stats(Axis axis) const { return stats_[axis_index(axis)]; }

  // Reviewer weight: the reviewer's standing in the axis distribution,
  // mapped linearly from [min, max] onto [1, 4]. A zero-range distribution
  // (e.g. a fresh book) yields the midpoint 2.5.
  double reviewer_score(const EmployeeId& reviewer, Axis axis) const;

  // Surprise factor for a win of `winner` over `loser` on `axis`:
  //   equal ratings        -> 0.5
  //   expected outcome     -> max(0.01, 0.5 - gap/range)
  //   upset                -> min(0.5 + gap/range, 1)
  // where gap is the absolute rating difference. Zero range yields the
  // no-information value 0.5. Result is always in [0.01, 1].
  double expectation_score(const EmployeeId& winner, const EmployeeId& loser,
                           Axis axis) const;

  // Applies one review as a single batch: the review expands to pairwise
  // comparisons per axis, every factor is computed from the book state as
  // of entry (snapshot semantics), each winner gains the pair's increment
  // and each loser loses the same amount, then the distribution statistics
  // are recomputed once.
  //
  // Throws std::out_of_range if the reviewer or any placed peer is
  // unregistered and std::invalid_argument on a malformed review or
  // options; the book is unchanged on any throw.
  //
  // Returns the audit records in application order (teamwork axis first,
  // pairs sorted by winner then loser id).
  std::vector<AuditRecord> apply_review(const GridReview& review,
                                        const UpdateOptions& options = {});

  // Descending by score; ties broken by ascending id. The aggregate metric
  // is computed on demand and never stored.
  std::vector<RankEntry> leaderboard(Metric metric) const;

  // Overwrites one employee's scores, registering if needed. Intended for
  // restoring persisted snapshots; bypasses the zero-sum update scheme.
  void restore_scores(const EmployeeId& id, double teamwork, double skill);

 private:
  std::size_t index_of(const EmployeeId& id) const;
  void recompute_stats();

  std::unordered_map<EmployeeId, std::size_t> index_;
  std::vector<EmployeeId> ids_;
  std::array<std::vector<double>, 2> scores_;
  std::array<AxisStats, 2> stats_;
};

}  // namespace prs

#endif  // PRS_RATING_BOOK_HPP_
