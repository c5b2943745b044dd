#include "plansim/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "csv.hpp"
#include "json.hpp"
#include "plansim/error.hpp"

#ifndef PLANSIM_VERSION
#define PLANSIM_VERSION "0.0.0"
#endif

namespace plansim {

namespace {

using nlohmann::json;

std::string format_score(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

[[noreturn]] void bad_manifest(const std::string& what) {
  throw Error(ErrorKind::kInvalidInput, "malformed manifest: " + what);
}

}  // namespace

const char* version() { return PLANSIM_VERSION; }

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorKind::kIo, "failed writing '" + path + "'");
}

std::string file_digest(const std::string& path) {
  return fnv1a64_hex(read_file(path));
}

void write_scores(std::ostream& out, const PairwiseScores& scores) {
  out << "i,j,kind,score\n";
  for (const auto& s : scores.scores) {
    out << s.i << ',' << s.j << ',' << to_string(s.kind) << ','
        << format_score(s.value) << '\n';
  }
}

PairwiseScores read_scores(std::istream& in) {
  PairwiseScores out;
  std::string line;
  bool first = true;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view record = csv::trim_record(line, first);
    first = false;
    if (record.empty()) continue;
    auto fields = csv::split_line(record);
    if (!header_seen) {
      if (fields != std::vector<std::string>{"i", "j", "kind", "score"}) {
        throw Error(ErrorKind::kInvalidInput,
                    "scores CSV header must be 'i,j,kind,score'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 4) {
      throw Error(ErrorKind::kInvalidInput,
                  "scores CSV line " + std::to_string(line_no) +
                      ": expected 4 fields");
    }
    PairScore s;
    try {
      std::size_t used = 0;
      s.i = std::stoi(fields[0]);
      s.j = std::stoi(fields[1]);
      s.value = std::stod(fields[3], &used);
      if (used != fields[3].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorKind::kInvalidInput,
                  "scores CSV line " + std::to_string(line_no) +
                      ": bad number");
    }
    try {
      s.kind = parse_weight_kind(fields[2]);
    } catch (const Error& e) {
      throw Error(ErrorKind::kInvalidInput, e.what());
    }
    out.scores.push_back(s);
  }
  if (!header_seen) throw Error(ErrorKind::kInvalidInput, "scores CSV is empty");
  return out;
}

void write_summary(
    std::ostream& out,
    const std::vector<std::pair<WeightKind, ScoreSummary>>& by_kind) {
  json doc = json::object();
  for (const auto& [kind, s] : by_kind) {
    doc[to_string(kind)] = {
        {"count", s.count},
        {"mean", s.mean},
        {"sd", s.sd},
        {"min", s.min},
        {"max", s.max},
        {"histogram", {{"edges", s.bin_edges}, {"counts", s.counts}}},
    };
  }
  out << doc.dump(2) << '\n';
}

double round3(double value) { return std::round(value * 1000.0) / 1000.0; }

void write_manifest(std::ostream& out, const RunManifest& m) {
  json chains = json::array();
  for (const auto& c : m.chains) {
    chains.push_back({{"index", c.index},
                      {"seed", c.seed},
                      {"plan", c.plan_file},
                      {"population_deviation", c.population_deviation}});
  }
  json doc = {
      {"format", "plansim-manifest/1"},
      {"tool_version", m.tool_version},
      {"graph", {{"path", m.graph_path}, {"fnv1a64", m.graph_digest}}},
      {"config",
       {{"num_chains", m.config.num_chains},
        {"districts", m.config.districts},
        {"steps_per_chain", m.config.effective_steps()},
        {"trees_per_step", m.config.trees_per_step},
        {"base_seed", m.config.base_seed},
        {"jobs", m.config.parallelism}}},
      {"seed_split", "splitmix64"},
      {"chains", std::move(chains)},
      {"timings_ms",
       {{"seed_and_chains", m.chains_ms},
        {"write", m.write_ms},
        {"total", m.total_ms}}},
  };
  out << doc.dump(2) << '\n';
}

RunManifest read_manifest(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    bad_manifest(e.what());
  }
  RunManifest m;
  try {
    if (doc.at("format").get<std::string>() != "plansim-manifest/1") {
      bad_manifest("unsupported format");
    }
    if (doc.at("seed_split").get<std::string>() != "splitmix64") {
      bad_manifest("unsupported seed_split");
    }
    m.tool_version = doc.at("tool_version").get<std::string>();
    m.graph_path = doc.at("graph").at("path").get<std::string>();
    m.graph_digest = doc.at("graph").at("fnv1a64").get<std::string>();
    const auto& cfg = doc.at("config");
    m.config.num_chains = cfg.at("num_chains").get<int>();
    m.config.districts = cfg.at("districts").get<int>();
    m.config.steps_per_chain = cfg.at("steps_per_chain").get<int>();
    m.config.trees_per_step = cfg.at("trees_per_step").get<int>();
    m.config.base_seed = cfg.at("base_seed").get<std::uint64_t>();
    m.config.parallelism = cfg.at("jobs").get<int>();
    for (const auto& c : doc.at("chains")) {
      m.chains.push_back({c.at("index").get<int>(), c.at("seed").get<std::uint64_t>(),
                          c.at("plan").get<std::string>(),
                          c.at("population_deviation").get<double>()});
    }
    if (doc.contains("timings_ms")) {
      const auto& t = doc["timings_ms"];
      m.chains_ms = t.value("seed_and_chains", 0.0);
      m.write_ms = t.value("write", 0.0);
      m.total_ms = t.value("total", 0.0);
    }
  } catch (const json::exception& e) {
    bad_manifest(e.what());
  }
  return m;
}

std::string plan_file_name(int index, int count) {
  int width = 3;
  for (int x = std::max(count - 1, 0); x >= 1000; x /= 10) ++width;
  std::string digits = std::to_string(index);
  if (static_cast<int>(digits.size()) < width) {
    digits.insert(0, width - digits.size(), '0');
  }
  return "plan_" + digits + ".csv";
}

std::vector<std::string> list_csv_files(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorKind::kIo, "'" + dir + "' is not a directory");
  }
  std::vector<std::string> out;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") {
      out.push_back(entry.path().string());
    }
  }
  if (ec) throw Error(ErrorKind::kIo, "cannot list '" + dir + "'");
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return fs::path(a).filename() < fs::path(b).filename();
  });
  return out;
}

}  // namespace plansim
