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

#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "prs/report.hpp"

namespace {

using namespace prs;

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

double reparse(const std::string& text) {
  double value = 0.0;
  const auto res =
      std::from_chars(text.data(), text.data() + text.size(), value);
  REQUIRE(res.ec == std::errc());
  REQUIRE(res.ptr == text.data() + text.size());
  return value;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// Two configs, one replication each, three rounds, with gaps.
SweepTable sample_table() {
  SweepTable table;
  SimConfig c0;
  c0.size = 100;
  c0.density = 0.25;
  c0.peers = 5;
  c0.noise = 0.0;
  SimConfig c1;
  c1.size = 40;
  c1.density = 0.5;
  c1.peers = 3;
  c1.noise = 1.0;
  table.configs = {c0, c1};
  table.rows = {
      {0, 0, {0.5, std::nullopt, 0.75}},
      {1, 0, {std::nullopt, -0.25, 1.0}},
  };
  table.medians = {
      {0.5, std::nullopt, 0.75},
      {std::nullopt, -0.25, 1.0},
  };
  return table;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("format_double picks the shortest exact form") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-0.0) == "-0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-0.25) == "-0.25");
  CHECK(format_double(1e100) == "1e+100");
  CHECK(format_double(1e-9) == "1e-09");
}

TEST_CASE("format_double round-trips awkward values exactly") {
  const double cases[] = {
      1.0 / 3.0,
      0.1 + 0.2,
      3.141592653589793,
      std::nextafter(1.0, 2.0),
      std::nextafter(0.0, 1.0),  // smallest subnormal
      -6.02214076e23,
      1e-300,
      123456789.123456789,
  };
  for (const double v : cases) {
    const double back = reparse(format_double(v));
    CHECK(back == v);
  }
  CHECK(std::signbit(reparse(format_double(-0.0))));
  // Shortest form distinguishes adjacent doubles.
  CHECK(reparse(format_double(std::nextafter(1.0, 2.0))) != 1.0);
}

TEST_CASE("csv layout: header, one row per round, NA for gaps") {
  const auto lines = lines_of(to_csv(sample_table()));
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "config_id,n,p,m,noise,replication,round,rho");
  CHECK(lines[1] == "0,100,0.25,5,0,0,1,0.5");
  CHECK(lines[2] == "0,100,0.25,5,0,0,2,NA");
  CHECK(lines[3] == "0,100,0.25,5,0,0,3,0.75");
  CHECK(lines[4] == "1,40,0.5,3,1,0,1,NA");
  CHECK(lines[5] == "1,40,0.5,3,1,0,2,-0.25");
  CHECK(lines[6] == "1,40,0.5,3,1,0,3,1");
}

TEST_CASE("csv bytes depend only on the table value") {
  const SweepTable table = sample_table();
  CHECK(to_csv(table) == to_csv(sample_table()));
  CHECK(to_svg(table) == to_svg(sample_table()));
}

TEST_CASE("empty tables are rejected") {
  CHECK_THROWS_AS(to_csv(SweepTable{}), std::invalid_argument);
  CHECK_THROWS_AS(to_svg(SweepTable{}), std::invalid_argument);
  SweepTable no_rows;
  no_rows.configs.resize(1);
  CHECK_THROWS_AS(to_csv(no_rows), std::invalid_argument);
}

TEST_CASE("svg structure: fixed canvas, legend, gap-split polylines") {
  SweepTable table = sample_table();
  table.medians = {
      {0.1, 0.2, std::nullopt, 0.4, 0.5},  // split into two runs
      {std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt},
  };
  const std::string svg = to_svg(table);
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
  CHECK(svg.find("width=\"800\" height=\"600\"") != std::string::npos);
  CHECK(count_of(svg, "<polyline ") == 2);
  CHECK(svg.find("c0 n=100 p=0.25 m=5 noise=0") != std::string::npos);
  CHECK(svg.find("c1 n=40 p=0.5 m=3 noise=1") != std::string::npos);
  // Well-formedness, naive: every opened tag closes.
  CHECK(count_of(svg, "<svg") == 1);
  CHECK(count_of(svg, "</svg>") == 1);
  CHECK(count_of(svg, "<text") == count_of(svg, "</text>"));
  CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
}

TEST_CASE("svg renders a single-round table without dividing by zero") {
  SweepTable table = sample_table();
  table.rows = {{0, 0, {0.5}}, {1, 0, {0.25}}};
  table.medians = {{0.5}, {0.25}};
  const std::string svg = to_svg(table);
  CHECK(count_of(svg, "<polyline ") == 2);
  // Coordinate data must stay purely numeric (a NaN would print letters).
  for (std::size_t pos = svg.find("points=\""); pos != std::string::npos;
       pos = svg.find("points=\"", pos + 1)) {
    const std::size_t begin = pos + 8;
    const std::size_t end = svg.find('"', begin);
    REQUIRE(end != std::string::npos);
    for (const char c : svg.substr(begin, end - begin)) {
      CHECK(std::isalpha(static_cast<unsigned char>(c)) == 0);
    }
  }
}

}  // TEST_SUITE
