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

#ifndef PRS_STATS_HPP_
#define PRS_STATS_HPP_

#include <span>
#include <vector>

namespace prs::stats {

// All functions are pure and safe to call concurrently. Paired inputs must
// have equal length >= 2 (std::invalid_argument otherwise); a zero-variance
// input raises std::domain_error rather than silently returning 0.

// 1-based ranks with ties assigned the average of their positions.
std::vector<double> fractional_ranks(std::span<const double> values);

// Sample Pearson correlation, clamped to [-1, 1].
double pearson(std::span<const double> x, std::span<const double> y);

// Spearman rank correlation: Pearson over fractional ranks, so ties are
// handled by the average-rank convention rather than the simplified
// 6*sum(d^2) formula, which is wrong under ties.
double spearman(std::span<const double> x, std::span<const double> y);

struct MeanComparison {
  double mean_a;
  double mean_b;
  double statistic;  // Welch's t
  double df;         // Welch-Satterthwaite degrees of freedom
  double p_value;    // two-sided
};

// Welch's two-sample t-test. Both groups need >= 2 observations. When both
// groups are constant: equal values give p = 1 by convention, distinct
// values give p = 0 with an infinite statistic.
MeanComparison group_mean_compare(std::span<const double> a,
                                  std::span<const double> b);

// Two-sided tail probability of Student's t at |t| with `df` degrees of
// freedom, via the regularized incomplete beta function.
double student_t_two_sided_p(double t, double df);

}  // namespace prs::stats

#endif  // PRS_STATS_HPP_
