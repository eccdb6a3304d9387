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

// prs: peer-rank scoring over 2D-grid reviews.
//
// Subcommands: simulate (seeded sweep, CSV or SVG report), apply (replay a
// review file onto a snapshot), rank (leaderboard of a snapshot), pairs
// (factor breakdown of the comparisons a review file expands to).
//
// Exit codes: 0 success, 1 runtime or data error, 2 usage error. Data goes
// to stdout, diagnostics to stderr; output is locale-free and carries no
// timestamps, so equal inputs give equal bytes.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prs/rating_book.hpp"
#include "prs/report.hpp"
#include "prs/review.hpp"
#include "prs/review_io.hpp"
#include "prs/simulation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct SimulateArgs {
  prs::SimConfig base;
  std::vector<double> noise;
  double cap = 0.0;
  bool has_cap = false;
  std::string out;
  std::string format = "csv";
  unsigned threads = 0;
};

struct ApplyArgs {
  std::string reviews_path;
  std::string snapshot_in;
  std::string snapshot_out;
};

struct RankArgs {
  std::string snapshot_path;
  std::string metric = "aggregate";
  std::size_t top = 0;  // 0 = all
};

struct PairsArgs {
  std::string reviews_path;
  std::string axis;  // empty = both
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

void emit(const std::string& out_path, const std::string& bytes) {
  if (out_path.empty()) {
    std::cout << bytes;
  } else {
    prs::write_file_atomic(out_path, bytes);
  }
}

std::vector<prs::GridReview> load_reviews(const std::string& path) {
  std::ifstream in = open_input(path);
  return prs::parse_reviews(in);
}

// Reviews may introduce employees the snapshot has never seen; every
// participant enters at 0 before any comparison is applied.
void register_participants(prs::RatingBook& book,
                           const std::vector<prs::GridReview>& reviews) {
  for (const prs::GridReview& review : reviews) {
    book.register_employee(review.reviewer);
    for (const prs::GridPlacement& placement : review.placements) {
      book.register_employee(placement.peer);
    }
  }
}

int run_simulate(const SimulateArgs& args) {
  std::vector<double> noise = args.noise;
  if (noise.empty()) noise.push_back(0.0);
  std::vector<prs::SimConfig> configs;
  configs.reserve(noise.size());
  for (const double level : noise) {
    prs::SimConfig config = args.base;
    config.noise = level;
    if (args.has_cap) config.cap = args.cap;
    configs.push_back(config);
  }
  const prs::SweepTable table = prs::sweep(std::move(configs), args.threads);
  emit(args.out, args.format == "svg" ? prs::to_svg(table)
                                      : prs::to_csv(table));
  return kExitOk;
}

int run_apply(const ApplyArgs& args) {
  prs::RatingBook book;
  std::int64_t as_of = 0;
  if (!args.snapshot_in.empty()) {
    std::ifstream in = open_input(args.snapshot_in);
    book = prs::load_snapshot(in, &as_of);
  }
  std::vector<prs::GridReview> reviews = load_reviews(args.reviews_path);
  prs::sort_reviews_for_replay(reviews);
  register_participants(book, reviews);
  for (const prs::GridReview& review : reviews) {
    book.apply_review(review);
    if (review.timestamp > as_of) as_of = review.timestamp;
  }
  prs::write_file_atomic(args.snapshot_out, prs::save_snapshot(book, as_of));
  std::cerr << "applied " << reviews.size() << " reviews to " << book.size()
            << " employees\n";
  return kExitOk;
}

int run_rank(const RankArgs& args) {
  std::ifstream in = open_input(args.snapshot_path);
  const prs::RatingBook book = prs::load_snapshot(in);
  prs::Metric metric = prs::Metric::Aggregate;
  if (args.metric == "teamwork") metric = prs::Metric::Teamwork;
  if (args.metric == "skill") metric = prs::Metric::Skill;
  std::vector<prs::RankEntry> board = book.leaderboard(metric);
  if (args.top > 0 && board.size() > args.top) board.resize(args.top);
  std::string out;
  for (const prs::RankEntry& entry : board) {
    out += entry.id;
    out += '\t';
    out += prs::format_double(entry.score);
    out += '\n';
  }
  std::cout << out;
  return kExitOk;
}

int run_pairs(const PairsArgs& args) {
  std::vector<prs::GridReview> reviews = load_reviews(args.reviews_path);
  prs::sort_reviews_for_replay(reviews);
  prs::RatingBook book;
  register_participants(book, reviews);
  std::string out =
      "reviewer\taxis\twinner\tloser\trs\tes\tss\tincrement\n";
  for (const prs::GridReview& review : reviews) {
    for (const prs::AuditRecord& record : book.apply_review(review)) {
      const char* axis =
          record.comparison.axis == prs::Axis::Teamwork ? "teamwork"
                                                        : "skill";
      if (!args.axis.empty() && args.axis != axis) continue;
      out += record.reviewer;
      out += '\t';
      out += axis;
      out += '\t';
      out += record.comparison.winner;
      out += '\t';
      out += record.comparison.loser;
      out += '\t';
      out += prs::format_double(record.reviewer_score);
      out += '\t';
      out += prs::format_double(record.expectation_score);
      out += '\t';
      out += prs::format_double(record.score_spread);
      out += '\t';
      out += prs::format_double(record.increment);
      out += '\n';
    }
  }
  std::cout << out;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Peer-rank scoring from 2D-grid peer reviews"};
  app.require_subcommand(1);

  SimulateArgs sim;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Run a seeded simulation sweep");
  simulate->add_option("--size", sim.base.size, "Employees in the network")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  simulate->add_option("--density", sim.base.density, "Edge probability")
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--peers", sim.base.peers, "Peers rated per review")
      ->check(CLI::Range(std::size_t{1}, std::size_t{20}));
  simulate
      ->add_option("--noise", sim.noise,
                   "Reviewer noise level in [0,1]; repeat for a sweep")
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--rounds", sim.base.rounds, "Evaluation cycles");
  simulate->add_option("--replications", sim.base.replications,
                       "Independent replications per configuration")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  simulate->add_option("--seed", sim.base.base_seed, "Base RNG seed");
  CLI::Option* cap_opt =
      simulate->add_option("--cap", sim.cap, "Per-pair increment cap")
          ->check(CLI::PositiveNumber);
  simulate->add_option("--out", sim.out,
                       "Output file (stdout when omitted)");
  simulate->add_option("--format", sim.format, "Report format")
      ->check(CLI::IsMember({"csv", "svg"}));
  simulate->add_option("--threads", sim.threads,
                       "Worker threads (0 = hardware)");

  ApplyArgs apply;
  CLI::App* apply_cmd =
      app.add_subcommand("apply", "Replay a review file onto a snapshot");
  apply_cmd->add_option("--reviews", apply.reviews_path, "Review file")
      ->required();
  apply_cmd->add_option("--snapshot-in", apply.snapshot_in,
                        "Starting snapshot (fresh book when omitted)");
  apply_cmd->add_option("--snapshot-out", apply.snapshot_out,
                        "Where to write the updated snapshot")
      ->required();

  RankArgs rank;
  CLI::App* rank_cmd =
      app.add_subcommand("rank", "Print a leaderboard of a snapshot");
  rank_cmd->add_option("--snapshot", rank.snapshot_path, "Snapshot file")
      ->required();
  rank_cmd->add_option("--metric", rank.metric, "Score to rank by")
      ->check(CLI::IsMember({"teamwork", "skill", "aggregate"}));
  rank_cmd->add_option("--top", rank.top, "Print only the first K rows");

  PairsArgs pairs;
  CLI::App* pairs_cmd = app.add_subcommand(
      "pairs", "Print the factor breakdown of every expanded comparison");
  pairs_cmd->add_option("--reviews", pairs.reviews_path, "Review file")
      ->required();
  pairs_cmd->add_option("--axis", pairs.axis, "Restrict to one axis")
      ->check(CLI::IsMember({"teamwork", "skill"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  sim.has_cap = cap_opt->count() > 0;

  try {
    if (simulate->parsed()) return run_simulate(sim);
    if (apply_cmd->parsed()) return run_apply(apply);
    if (rank_cmd->parsed()) return run_rank(rank);
    if (pairs_cmd->parsed()) return run_pairs(pairs);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
