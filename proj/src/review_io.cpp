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

#include "prs/review_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <utility>

#include "json.hpp"

namespace prs {
namespace {

using nlohmann::json;

std::string with_line(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

const char* kind_name(ReviewKind kind) {
  return kind == ReviewKind::Team ? "team" : "sampling";
}

ReviewKind kind_from(const json& j, std::size_t line) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "team") return ReviewKind::Team;
    if (s == "sampling") return ReviewKind::Sampling;
  }
  throw ParseError(line, "kind must be \"team\" or \"sampling\"");
}

std::string string_field(const json& rec, const char* key, std::size_t line) {
  const auto it = rec.find(key);
  if (it == rec.end() || !it->is_string()) {
    throw ParseError(line, std::string(key) + " must be a string");
  }
  return it->get<std::string>();
}

// Absent and null both mean the axis was not evaluated.
std::optional<double> coordinate_field(const json& rec, const char* key,
                                       std::size_t line) {
  const auto it = rec.find(key);
  if (it == rec.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) {
    throw ParseError(line, std::string(key) + " must be a number or null");
  }
  return it->get<double>();
}

GridReview review_from(const json& rec, std::size_t line) {
  if (!rec.is_object()) throw ParseError(line, "record must be an object");
  GridReview review;
  review.reviewer = string_field(rec, "reviewer", line);
  const auto ts = rec.find("timestamp");
  if (ts == rec.end() || !ts->is_number_integer()) {
    throw ParseError(line, "timestamp must be an integer");
  }
  review.timestamp = ts->get<std::int64_t>();
  const auto kind = rec.find("kind");
  if (kind == rec.end()) throw ParseError(line, "missing kind");
  review.kind = kind_from(*kind, line);
  const auto placements = rec.find("placements");
  if (placements == rec.end() || !placements->is_array()) {
    throw ParseError(line, "placements must be an array");
  }
  for (const json& p : *placements) {
    if (!p.is_object()) {
      throw ParseError(line, "placement must be an object");
    }
    GridPlacement placement;
    placement.peer = string_field(p, "peer", line);
    placement.teamwork = coordinate_field(p, "teamwork", line);
    placement.skill = coordinate_field(p, "skill", line);
    review.placements.push_back(std::move(placement));
  }
  return review;
}

json review_to_json(const GridReview& review) {
  json placements = json::array();
  for (const GridPlacement& p : review.placements) {
    json rec;
    rec["peer"] = p.peer;
    rec["teamwork"] = p.teamwork ? json(*p.teamwork) : json(nullptr);
    rec["skill"] = p.skill ? json(*p.skill) : json(nullptr);
    placements.push_back(std::move(rec));
  }
  json rec;
  rec["reviewer"] = review.reviewer;
  rec["timestamp"] = review.timestamp;
  rec["kind"] = kind_name(review.kind);
  rec["placements"] = std::move(placements);
  return rec;
}

double score_field(const json& rec, const char* key, std::size_t line) {
  const auto it = rec.find(key);
  if (it == rec.end() || !it->is_number()) {
    throw ParseError(line, std::string(key) + " must be a number");
  }
  const double value = it->get<double>();
  if (!std::isfinite(value)) {
    throw ParseError(line, std::string(key) + " must be finite");
  }
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(with_line(line, what)), line_(line) {}

std::vector<GridReview> parse_reviews(std::istream& in) {
  std::vector<GridReview> reviews;
  std::string line;
  std::size_t line_no = 0;
  bool have_previous = false;
  std::int64_t previous_timestamp = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const json rec = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (rec.is_discarded()) throw ParseError(line_no, "malformed record");
    GridReview review = review_from(rec, line_no);
    try {
      validate_review(review);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (have_previous && review.timestamp < previous_timestamp) {
      throw ParseError(line_no, "timestamps must be non-decreasing");
    }
    previous_timestamp = review.timestamp;
    have_previous = true;
    reviews.push_back(std::move(review));
  }
  return reviews;
}

std::string write_reviews(const std::vector<GridReview>& reviews) {
  std::string out;
  for (const GridReview& review : reviews) {
    out += review_to_json(review).dump();
    out += '\n';
  }
  return out;
}

void sort_reviews_for_replay(std::vector<GridReview>& reviews) {
  std::stable_sort(reviews.begin(), reviews.end(),
                   [](const GridReview& a, const GridReview& b) {
                     if (a.timestamp != b.timestamp) {
                       return a.timestamp < b.timestamp;
                     }
                     return a.reviewer < b.reviewer;
                   });
}

std::string save_snapshot(const RatingBook& book,
                          std::int64_t as_of_timestamp) {
  json header;
  header["format_version"] = kSnapshotFormatVersion;
  header["as_of_timestamp"] = as_of_timestamp;
  header["employee_count"] = book.size();
  std::string out = header.dump();
  out += '\n';

  std::vector<EmployeeId> ids = book.employees();
  std::sort(ids.begin(), ids.end());
  for (const EmployeeId& id : ids) {
    json rec;
    rec["employee"] = id;
    rec["prs_teamwork"] = book.score(id, Axis::Teamwork);
    rec["prs_skill"] = book.score(id, Axis::Skill);
    out += rec.dump();
    out += '\n';
  }
  return out;
}

RatingBook load_snapshot(std::istream& in, std::int64_t* as_of_timestamp) {
  RatingBook book;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::size_t expected = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const json rec = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (rec.is_discarded() || !rec.is_object()) {
      throw ParseError(line_no, "malformed record");
    }
    if (!header_seen) {
      const auto version = rec.find("format_version");
      if (version == rec.end() || !version->is_number_integer()) {
        throw ParseError(line_no, "header must carry format_version");
      }
      if (version->get<std::uint64_t>() != kSnapshotFormatVersion) {
        throw ParseError(line_no, "unsupported format_version");
      }
      const auto as_of = rec.find("as_of_timestamp");
      if (as_of == rec.end() || !as_of->is_number_integer()) {
        throw ParseError(line_no, "header must carry as_of_timestamp");
      }
      const auto count = rec.find("employee_count");
      if (count == rec.end() || !count->is_number_integer() ||
          (count->is_number() && count->get<double>() < 0)) {
        throw ParseError(line_no, "header must carry employee_count");
      }
      if (as_of_timestamp != nullptr) {
        *as_of_timestamp = as_of->get<std::int64_t>();
      }
      expected = count->get<std::size_t>();
      header_seen = true;
      continue;
    }
    const std::string id = string_field(rec, "employee", line_no);
    if (book.contains(id)) {
      throw ParseError(line_no, "duplicate employee " + id);
    }
    book.restore_scores(id, score_field(rec, "prs_teamwork", line_no),
                        score_field(rec, "prs_skill", line_no));
  }
  if (!header_seen) throw ParseError(line_no, "missing snapshot header");
  if (book.size() != expected) {
    throw ParseError(line_no, "employee_count " + std::to_string(expected) +
                                  " does not match " +
                                  std::to_string(book.size()) + " records");
  }
  return book;
}

std::vector<EmployeeId> team_roster(const EmployeeId& employee,
                                    const std::set<EmployeeId>& teammates) {
  if (teammates.count(employee) != 0) {
    throw std::invalid_argument("employee cannot be their own teammate");
  }
  const std::size_t limit = max_placements(ReviewKind::Team);
  std::vector<EmployeeId> roster;
  roster.reserve(std::min(limit, teammates.size()));
  for (const EmployeeId& peer : teammates) {
    if (roster.size() == limit) break;
    roster.push_back(peer);
  }
  return roster;
}

std::vector<EmployeeId> sampling_roster(const EmployeeId& employee,
                                        const std::set<EmployeeId>& contacts,
                                        const std::set<EmployeeId>& teammates,
                                        Rng& rng) {
  if (contacts.count(employee) != 0) {
    throw std::invalid_argument("employee cannot be their own contact");
  }
  std::vector<EmployeeId> pool(contacts.begin(), contacts.end());
  for (std::size_t i = pool.size(); i > 1; --i) {
    std::swap(pool[i - 1], pool[rng.below(i)]);
  }
  const std::size_t limit = max_placements(ReviewKind::Sampling);
  constexpr std::size_t kTeammateCap = 2;
  std::vector<EmployeeId> roster;
  std::size_t teammates_taken = 0;
  for (EmployeeId& peer : pool) {
    if (roster.size() == limit) break;
    const bool teammate = teammates.count(peer) != 0;
    if (teammate && teammates_taken == kTeammateCap) continue;
    if (teammate) ++teammates_taken;
    roster.push_back(std::move(peer));
  }
  return roster;
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw std::runtime_error("write failed for " + tmp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw std::runtime_error("rename to " + path + " failed: " + ec.message());
  }
}

}  // namespace prs
