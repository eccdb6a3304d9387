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

#ifndef PRS_REVIEW_IO_HPP_
#define PRS_REVIEW_IO_HPP_

#include <cstdint>
#include <istream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "prs/rating_book.hpp"
#include "prs/review.hpp"
#include "prs/rng.hpp"

namespace prs {

// Raised for malformed or invalid records; line() is 1-based and the
// message names the line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Reads newline-delimited review records. One JSON object per line, blank
// lines ignored; a missing or null coordinate means the axis was not
// evaluated. Every record must satisfy the review invariants and
// timestamps must be non-decreasing down the file. Throws ParseError.
std::vector<GridReview> parse_reviews(std::istream& in);

// Inverse of parse_reviews: one canonical JSON object per line, both
// coordinates always present (null when unevaluated). parse(write(r)) == r.
std::string write_reviews(const std::vector<GridReview>& reviews);

// Replay order: by timestamp, ties by reviewer id. Stable for full dupes.
void sort_reviews_for_replay(std::vector<GridReview>& reviews);

// Snapshot: header line {as_of_timestamp, employee_count, format_version}
// followed by one {employee, prs_skill, prs_teamwork} record per employee,
// sorted by id. save(load(s)) reproduces s byte for byte.
inline constexpr std::uint64_t kSnapshotFormatVersion = 1;

std::string save_snapshot(const RatingBook& book, std::int64_t as_of_timestamp);

// Throws ParseError on structural problems: bad header, unsupported
// format_version, duplicate employees, record/count mismatch, non-finite
// scores. Returns the restored book; the header timestamp goes to
// *as_of_timestamp when non-null.
RatingBook load_snapshot(std::istream& in, std::int64_t* as_of_timestamp = nullptr);

// Everyone on the team reviews everyone: the full teammate set, ascending
// id, truncated to the placement limit (20). The employee must not appear
// in `teammates` (throws std::invalid_argument).
std::vector<EmployeeId> team_roster(const EmployeeId& employee,
                                    const std::set<EmployeeId>& teammates);

// Cross-team spot check: up to 5 contacts drawn uniformly without
// replacement, rejecting a draw once 2 teammates are already in; fewer
// when the contact pool cannot fill the roster under that cap. The
// employee must not appear in `contacts` (throws std::invalid_argument).
std::vector<EmployeeId> sampling_roster(const EmployeeId& employee,
                                        const std::set<EmployeeId>& contacts,
                                        const std::set<EmployeeId>& teammates,
                                        Rng& rng);

// Writes bytes to `path` via a sibling temp file plus rename, so readers
// never observe a torn file. Throws std::runtime_error on I/O failure.
void write_file_atomic(const std::string& path, const std::string& bytes);

}  // namespace prs

#endif  // PRS_REVIEW_IO_HPP_
