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

#include "prs/report.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <system_error>

namespace prs {
namespace {

// Chart geometry, fixed so equal tables render equal bytes.
constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 776.0;
constexpr double kTop = 24.0;
constexpr double kBottom = 552.0;

// Correlations live in [-1, 1]; the axis never rescales to the data.
constexpr double kRhoMin = -1.0;
constexpr double kRhoMax = 1.0;

constexpr std::array<const char*, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

// Fixed two-decimal pixel coordinates, locale-independent.
std::string pixel(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double x_of(std::size_t round, std::size_t rounds) {
  if (rounds <= 1) return (kLeft + kRight) / 2.0;
  const double t =
      static_cast<double>(round) / static_cast<double>(rounds - 1);
  return kLeft + t * (kRight - kLeft);
}

double y_of(double rho) {
  const double t = (rho - kRhoMin) / (kRhoMax - kRhoMin);
  return kBottom - t * (kBottom - kTop);
}

void require_nonempty(const SweepTable& table) {
  if (table.configs.empty() || table.rows.empty()) {
    throw std::invalid_argument("render: empty result table");
  }
}

std::string config_label(std::size_t id, const SimConfig& c) {
  std::string label = "c" + std::to_string(id);
  label += " n=" + format_double(static_cast<double>(c.size));
  label += " p=" + format_double(c.density);
  label += " m=" + format_double(static_cast<double>(c.peers));
  label += " noise=" + format_double(c.noise);
  return label;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  if (res.ec != std::errc()) {
    throw std::invalid_argument("format_double: value does not fit");
  }
  return std::string(buf, res.ptr);
}

std::string to_csv(const SweepTable& table) {
  require_nonempty(table);
  std::string out = "config_id,n,p,m,noise,replication,round,rho\n";
  // rows are already sorted by (config_id, replication); rounds ascend.
  for (const ReplicationSeries& row : table.rows) {
    const SimConfig& c = table.configs[row.config_id];
    const std::string prefix = std::to_string(row.config_id) + "," +
                               std::to_string(c.size) + "," +
                               format_double(c.density) + "," +
                               std::to_string(c.peers) + "," +
                               format_double(c.noise) + "," +
                               std::to_string(row.replication) + ",";
    for (std::size_t round = 0; round < row.rho.size(); ++round) {
      out += prefix;
      out += std::to_string(round + 1);
      out += ',';
      out += row.rho[round] ? format_double(*row.rho[round]) : "NA";
      out += '\n';
    }
  }
  return out;
}

std::string to_svg(const SweepTable& table) {
  require_nonempty(table);
  std::size_t rounds = 0;
  for (const auto& med : table.medians) {
    if (med.size() > rounds) rounds = med.size();
  }

  std::string out;
  out +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
      "height=\"600\" viewBox=\"0 0 800 600\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" "
         "fill=\"white\"/>\n";

  // Horizontal grid at rho = -1, -0.5, 0, 0.5, 1 plus labels.
  for (int i = 0; i <= 4; ++i) {
    const double rho = -1.0 + 0.5 * i;
    const std::string y = pixel(y_of(rho));
    out += "<line x1=\"" + pixel(kLeft) + "\" y1=\"" + y + "\" x2=\"" +
           pixel(kRight) + "\" y2=\"" + y +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    char label[16];
    std::snprintf(label, sizeof label, "%.1f", rho);
    out += "<text x=\"" + pixel(kLeft - 8.0) + "\" y=\"" + y +
           "\" font-family=\"monospace\" font-size=\"12\" "
           "text-anchor=\"end\" dominant-baseline=\"middle\">" +
           label + "</text>\n";
  }

  // Round ticks along the x axis, thinned to at most ten labels.
  if (rounds > 0) {
    const std::size_t step = rounds <= 10 ? 1 : (rounds + 9) / 10;
    for (std::size_t round = 0; round < rounds; ++round) {
      if (round % step != 0 && round + 1 != rounds) continue;
      const std::string x = pixel(x_of(round, rounds));
      out += "<line x1=\"" + x + "\" y1=\"" + pixel(kBottom) + "\" x2=\"" +
             x + "\" y2=\"" + pixel(kBottom + 6.0) +
             "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
      out += "<text x=\"" + x + "\" y=\"" + pixel(kBottom + 20.0) +
             "\" font-family=\"monospace\" font-size=\"12\" "
             "text-anchor=\"middle\">" +
             std::to_string(round + 1) + "</text>\n";
    }
  }

  // Axes.
  out += "<line x1=\"" + pixel(kLeft) + "\" y1=\"" + pixel(kTop) +
         "\" x2=\"" + pixel(kLeft) + "\" y2=\"" + pixel(kBottom) +
         "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  out += "<line x1=\"" + pixel(kLeft) + "\" y1=\"" + pixel(kBottom) +
         "\" x2=\"" + pixel(kRight) + "\" y2=\"" + pixel(kBottom) +
         "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  // One polyline per config; gaps (undefined medians) split the line.
  for (std::size_t id = 0; id < table.medians.size(); ++id) {
    const char* color = kPalette[id % kPalette.size()];
    const auto& med = table.medians[id];
    std::string points;
    auto flush = [&] {
      if (!points.empty()) {
        out += "<polyline fill=\"none\" stroke=\"";
        out += color;
        out += "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
        points.clear();
      }
    };
    for (std::size_t round = 0; round < med.size(); ++round) {
      if (!med[round]) {
        flush();
        continue;
      }
      if (!points.empty()) points += ' ';
      points += pixel(x_of(round, rounds)) + "," + pixel(y_of(*med[round]));
    }
    flush();

    // Legend swatch and label, stacked below the top edge.
    const double ly = kTop + 16.0 * static_cast<double>(id);
    out += "<line x1=\"" + pixel(kLeft + 12.0) + "\" y1=\"" + pixel(ly) +
           "\" x2=\"" + pixel(kLeft + 36.0) + "\" y2=\"" + pixel(ly) +
           "\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + pixel(kLeft + 42.0) + "\" y=\"" + pixel(ly) +
           "\" font-family=\"monospace\" font-size=\"12\" "
           "dominant-baseline=\"middle\">" +
           config_label(id, table.configs[id]) + "</text>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace prs
