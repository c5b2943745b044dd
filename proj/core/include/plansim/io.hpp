#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plansim/ensemble.hpp"

namespace plansim {

const char* version();

// 64-bit FNV-1a over raw bytes, rendered as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);
std::string file_digest(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// Scores CSV: header `i,j,kind,score`, scores with 17 significant digits.
void write_scores(std::ostream& out, const PairwiseScores& scores);
PairwiseScores read_scores(std::istream& in);

// {"<kind>": {"count", "mean", "sd", "min", "max",
//             "histogram": {"edges": [...], "counts": [...]}}, ...}
void write_summary(std::ostream& out,
                   const std::vector<std::pair<WeightKind, ScoreSummary>>& by_kind);

// Score rounded to three decimals for human-facing output.
double round3(double value);

struct ChainRecord {
  int index = 0;
  std::uint64_t seed = 0;
  std::string plan_file;
  double population_deviation = 0.0;
};

// Everything needed to replay an `ensemble` run.
//
// Schema (JSON object):
//   format        "plansim-manifest/1"
//   tool_version  string
//   graph         {"path": string, "fnv1a64": hex string}
//   config        {"num_chains", "districts", "steps_per_chain",
//                  "trees_per_step", "base_seed", "jobs"}
//   seed_split    "splitmix64"   (chain i seed = split_seed(base_seed, i))
//   chains        [{"index", "seed", "plan", "population_deviation"}]
//   timings_ms    {"seed_and_chains", "write", "total"}
struct RunManifest {
  std::string tool_version;
  std::string graph_path;
  std::string graph_digest;
  EnsembleConfig config;
  std::vector<ChainRecord> chains;
  double chains_ms = 0.0;
  double write_ms = 0.0;
  double total_ms = 0.0;
};

void write_manifest(std::ostream& out, const RunManifest& manifest);
RunManifest read_manifest(std::istream& in);

// Plan file name for chain `index` out of `count`: plan_000.csv style, padded
// to at least three digits.
std::string plan_file_name(int index, int count);

// *.csv files directly under `dir`, sorted by file name.
std::vector<std::string> list_csv_files(const std::string& dir);

}  // namespace plansim
