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

#ifndef PRS_REPORT_HPP_
#define PRS_REPORT_HPP_

#include <string>

#include "prs/simulation.hpp"

namespace prs {

// Shortest decimal representation that round-trips the exact double.
// Locale-independent.
std::string format_double(double value);

// Flat CSV with header `config_id,n,p,m,noise,replication,round,rho`, rows
// sorted by (config_id, replication, round). Rounds are 1-based; an
// undefined correlation is written as NA. Output depends only on the table
// value. Throws std::invalid_argument on an empty table.
std::string to_csv(const SweepTable& table);

// SVG 1.1 chart on a fixed 800x600 canvas: one polyline per config tracing
// the per-round median correlation, deterministic bytes for equal input.
std::string to_svg(const SweepTable& table);

}  // namespace prs

#endif  // PRS_REPORT_HPP_
