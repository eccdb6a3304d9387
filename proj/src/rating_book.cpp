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

#include "prs/rating_book.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace prs {

namespace {

constexpr double kReviewerMin = 1.0;
constexpr double kReviewerMax = 4.0;
constexpr double kExpectationMin = 0.01;

double reviewer_score_from(double value, const AxisStats& stats) {
  const double range = stats.range();
  if (range == 0.0) return 0.5 * (kReviewerMin + kReviewerMax);
  return (value - stats.min) / range * (kReviewerMax - kReviewerMin) +
         kReviewerMin;
}

double expectation_score_from(double winner_prs, double loser_prs,
                              double range) {
  if (range == 0.0 || winner_prs == loser_prs) return 0.5;
  if (loser_prs < winner_prs) {
    // Expected outcome: the larger the gap, the less the result tells us.
    return std::max(kExpectationMin, 0.5 - (winner_prs - loser_prs) / range);
  }
  // Upset: the larger the gap, the stronger the correction.
  return std::min(0.5 + (loser_prs - winner_prs) / range, 1.0);
}

}  // namespace

double aggregate_score(double teamwork_prs, double skill_prs) {
  if (!std::isfinite(teamwork_prs) || !std::isfinite(skill_prs)) {
    throw std::domain_error("aggregate_score: inputs must be finite");
  }
  return std::sqrt(teamwork_prs * teamwork_prs + skill_prs * skill_prs);
}

double pair_increment(double rs, double es, double ss,
                      std::optional<double> cap) {
  if (!(rs >= kReviewerMin && rs <= kReviewerMax)) {
    throw std::domain_error("pair_increment: reviewer score outside [1,4]");
  }
  if (!(es >= kExpectationMin && es <= 1.0)) {
    throw std::domain_error(
        "pair_increment: expectation score outside [0.01,1]");
  }
  if (!(ss >= kDefaultSpreadFloor && ss <= 1.0)) {
    throw std::domain_error("pair_increment: score spread outside [0.05,1]");
  }
  if (cap && !(*cap > 0.0)) {
    throw std::domain_error("pair_increment: cap must be positive");
  }
  const double increment = std::cbrt(rs * es * ss);
  return cap ? std::min(*cap, increment) : increment;
}

bool RatingBook::register_employee(const EmployeeId& id) {
  if (id.empty()) {
    throw std::invalid_argument("employee id must be non-empty");
  }
  const auto [it, inserted] = index_.try_emplace(id, ids_.size());
  if (!inserted) return false;
  ids_.push_back(id);
  scores_[0].push_back(0.0);
  scores_[1].push_back(0.0);
  recompute_stats();
  return true;
}

std::size_t RatingBook::index_of(const EmployeeId& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) {
    throw std::out_of_range("unknown employee '" + id + "'");
  }
  return it->second;
}

double RatingBook::score(const EmployeeId& id, Axis axis) const {
  return scores_[axis_index(axis)][index_of(id)];
}

double RatingBook::reviewer_score(const EmployeeId& reviewer,
                                  Axis axis) const {
  const std::size_t a = axis_index(axis);
  return reviewer_score_from(scores_[a][index_of(reviewer)], stats_[a]);
}

double RatingBook::expectation_score(const EmployeeId& winner,
                                     const EmployeeId& loser,
                                     Axis axis) const {
  const std::size_t a = axis_index(axis);
  return expectation_score_from(scores_[a][index_of(winner)],
                                scores_[a][index_of(loser)],
                                stats_[a].range());
}

std::vector<AuditRecord> RatingBook::apply_review(
    const GridReview& review, const UpdateOptions& options) {
  if (!(options.ss_floor >= kDefaultSpreadFloor && options.ss_floor <= 1.0)) {
    throw std::invalid_argument("apply_review: ss_floor outside [0.05,1]");
  }
  if (options.cap && !(*options.cap > 0.0)) {
    throw std::invalid_argument("apply_review: cap must be positive");
  }
  validate_review(review);

  // Resolve every participant up front so a lookup failure leaves the book
  // untouched.
  const std::size_t reviewer_idx = index_of(review.reviewer);
  (void)reviewer_idx;
  std::vector<std::size_t> placed;
  placed.reserve(review.placements.size());
  for (const GridPlacement& p : review.placements) {
    placed.push_back(index_of(p.peer));
  }

  std::vector<AuditRecord> audits;
  std::array<std::vector<double>, 2> delta;

  for (const Axis axis : kAxes) {
    const auto pairs = detail::expand_axis_pairs(review, axis, options.ss_floor);
    if (pairs.empty()) continue;
    const std::size_t a = axis_index(axis);
    const std::vector<double>& prs = scores_[a];
    const double range = stats_[a].range();
    const double rs = reviewer_score(review.reviewer, axis);
    delta[a].assign(review.placements.size(), 0.0);

    for (const detail::AxisPair& pair : pairs) {
      const double es = expectation_score_from(prs[placed[pair.winner]],
                                               prs[placed[pair.loser]], range);
      const double inc = pair_increment(rs, es, pair.spread, options.cap);
      delta[a][pair.winner] += inc;
      delta[a][pair.loser] -= inc;
      audits.push_back({{axis, review.placements[pair.winner].peer,
                         review.placements[pair.loser].peer, pair.spread},
                        review.reviewer,
                        rs,
                        es,
                        pair.spread,
                        inc});
    }
  }

  // Batch application: every factor above read the pre-review state.
  for (std::size_t a = 0; a < 2; ++a) {
    if (delta[a].empty()) continue;
    for (std::size_t i = 0; i < placed.size(); ++i) {
      scores_[a][placed[i]] += delta[a][i];
    }
  }
  recompute_stats();
  return audits;
}

std::vector<RankEntry> RatingBook::leaderboard(Metric metric) const {
  std::vector<RankEntry> entries;
  entries.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    double value = 0.0;
    switch (metric) {
      case Metric::Teamwork:
        value = scores_[0][i];
        break;
      case Metric::Skill:
        value = scores_[1][i];
        break;
      case Metric::Aggregate:
        value = aggregate_score(scores_[0][i], scores_[1][i]);
        break;
    }
    entries.push_back({ids_[i], value});
  }
  std::sort(entries.begin(), entries.end(),
            [](const RankEntry& x, const RankEntry& y) {
              if (x.score != y.score) return x.score > y.score;
              return x.id < y.id;
            });
  return entries;
}

void RatingBook::restore_scores(const EmployeeId& id, double teamwork,
                                double skill) {
  if (!std::isfinite(teamwork) || !std::isfinite(skill)) {
    throw std::invalid_argument("restore_scores: values must be finite");
  }
  register_employee(id);
  const std::size_t i = index_.at(id);
  scores_[0][i] = teamwork;
  scores_[1][i] = skill;
  recompute_stats();
}

void RatingBook::recompute_stats() {
  for (std::size_t a = 0; a < 2; ++a) {
    if (scores_[a].empty()) {
      stats_[a] = AxisStats{};
      continue;
    }
    const auto [lo, hi] =
        std::minmax_element(scores_[a].begin(), scores_[a].end());
    stats_[a] = AxisStats{*lo, *hi};
  }
}

}  // namespace prs
