// plansim: districting-plan ensembles and relabeling-invariant plan similarity.
//
// Exit codes: 0 success, 1 validation failure (including malformed input),
// 2 usage error, 3 I/O error. Errors go to stderr as one JSON line:
//   {"error":"<kind>","message":"..."}

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plansim/ensemble.hpp"
#include "plansim/error.hpp"
#include "plansim/generation.hpp"
#include "plansim/graph.hpp"
#include "plansim/io.hpp"
#include "plansim/plan.hpp"
#include "plansim/similarity.hpp"
#include "plansim/synth.hpp"

namespace {

using namespace plansim;
using Clock = std::chrono::steady_clock;

constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
    case ErrorKind::kValidation:
      return kExitValidation;
    case ErrorKind::kUsage:
      return kExitUsage;
    case ErrorKind::kIo:
      return kExitIo;
  }
  return kExitUsage;
}

void report(std::string_view kind, std::string_view message) {
  nlohmann::json line = {{"error", kind}, {"message", message}};
  std::cerr << line.dump() << '\n';
}

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Writes via `emit` to `path`, or stdout when path is empty or "-".
template <typename Emit>
void emit_to(const std::string& path, Emit emit) {
  if (path.empty() || path == "-") {
    emit(std::cout);
    return;
  }
  std::ostringstream buffer;
  emit(buffer);
  write_file(path, buffer.str());
}

std::vector<WeightKind> parse_kinds(const std::string& text) {
  if (text == "both") return {WeightKind::kArea, WeightKind::kPopulation};
  return {parse_weight_kind(text)};
}

struct Options {
  std::string graph;
  std::string plan;
  std::string plan_a;
  std::string plan_b;
  std::string reference;
  std::string target;
  std::string plans_dir;
  std::string scores;
  std::string output;
  std::string manifest;
  std::string kind = "area";
  std::optional<std::uint64_t> seed;
  int districts = 0;
  int chains = 0;
  int steps = 0;
  int trees = 1;
  int jobs = 1;
  int bins = 40;
  bool full_precision = false;

  int rows = 0;
  int cols = 0;
  std::int64_t cell_population = 100;
  double hotspot_q = 0.0;
  int hotspot_r = 0;
  int wedges = 0;
  int offset = 0;
};

int cmd_validate(const Options& o) {
  const DualGraph g = load_graph_file(o.graph);
  if (o.plan.empty()) {
    std::cout << "ok: " << g.num_nodes() << " precincts, " << g.num_edges()
              << " edges\n";
    return 0;
  }
  const Plan p = load_plan_file(o.plan, g);
  const auto violations = validate_plan(g, p);
  for (const auto& v : violations) std::cout << v.describe(g) << '\n';
  if (!violations.empty()) return kExitValidation;
  std::cout << "ok: " << p.num_districts() << " districts, deviation "
            << round3(population_deviation(g, p)) << '\n';
  return 0;
}

int cmd_seed(const Options& o) {
  const DualGraph g = load_graph_file(o.graph);
  const Plan p = seed_plan(g, o.districts);
  emit_to(o.output, [&](std::ostream& out) { write_plan(out, g, p); });
  return 0;
}

int cmd_chain(const Options& o) {
  const DualGraph g = load_graph_file(o.graph);
  const Plan start = load_plan_file(o.plan, g);
  const auto violations = validate_plan(g, start);
  if (!violations.empty()) {
    throw Error(ErrorKind::kValidation, "start plan: " + violations[0].describe(g));
  }
  const Plan result = run_chain(g, start, {o.steps, *o.seed, o.trees});
  emit_to(o.output, [&](std::ostream& out) { write_plan(out, g, result); });
  return 0;
}

int cmd_ensemble(const Options& o, const CLI::App& sub) {
  const auto started = Clock::now();
  const DualGraph g = load_graph_file(o.graph);
  const std::string digest = file_digest(o.graph);

  EnsembleConfig cfg;
  if (!o.manifest.empty()) {
    std::ifstream in(o.manifest);
    if (!in) throw Error(ErrorKind::kIo, "cannot open manifest '" + o.manifest + "'");
    const RunManifest previous = read_manifest(in);
    if (previous.graph_digest != digest) {
      throw Error(ErrorKind::kValidation,
                  "graph digest " + digest + " does not match manifest " +
                      previous.graph_digest);
    }
    cfg = previous.config;
    if (sub.count("--jobs") > 0) cfg.parallelism = o.jobs;
  } else {
    if (!o.seed) throw Error(ErrorKind::kUsage, "--seed is required");
    if (o.districts < 1 || o.chains < 1) {
      throw Error(ErrorKind::kUsage, "-m and -n are required and must be positive");
    }
    cfg.num_chains = o.chains;
    cfg.districts = o.districts;
    cfg.steps_per_chain = o.steps;
    cfg.base_seed = *o.seed;
    cfg.parallelism = o.jobs;
    cfg.trees_per_step = o.trees;
  }

  const auto chains_started = Clock::now();
  const std::vector<Plan> plans = run_ensemble(g, cfg);
  const double chains_ms = elapsed_ms(chains_started);

  const auto write_started = Clock::now();
  std::filesystem::create_directories(o.output);
  RunManifest manifest;
  manifest.tool_version = version();
  manifest.graph_path = o.graph;
  manifest.graph_digest = digest;
  manifest.config = cfg;
  for (int i = 0; i < cfg.num_chains; ++i) {
    const std::string name = plan_file_name(i, cfg.num_chains);
    std::ostringstream buffer;
    write_plan(buffer, g, plans[i]);
    write_file((std::filesystem::path(o.output) / name).string(), buffer.str());
    manifest.chains.push_back(
        {i, cfg.chain_seed(i), name, population_deviation(g, plans[i])});
  }
  manifest.chains_ms = chains_ms;
  manifest.write_ms = elapsed_ms(write_started);
  manifest.total_ms = elapsed_ms(started);
  std::ostringstream buffer;
  write_manifest(buffer, manifest);
  write_file((std::filesystem::path(o.output) / "manifest.json").string(),
             buffer.str());
  std::cout << "wrote " << cfg.num_chains << " plans to " << o.output << '\n';
  return 0;
}

int cmd_similarity(const Options& o) {
  const DualGraph g = load_graph_file(o.graph);
  const Plan a = load_plan_file(o.plan_a, g);
  const Plan b = load_plan_file(o.plan_b, g);
  for (const Plan* p : {&a, &b}) {
    const auto violations = validate_plan(g, *p);
    if (!violations.empty()) {
      throw Error(ErrorKind::kValidation, violations[0].describe(g));
    }
  }
  nlohmann::json out = nlohmann::json::object();
  for (WeightKind kind : parse_kinds(o.kind)) {
    const double value = similarity_score(g, a, b, kind).value;
    out[to_string(kind)] = o.full_precision ? value : round3(value);
  }
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_relabel(const Options& o) {
  const DualGraph g = load_graph_file(o.graph);
  const Plan reference = load_plan_file(o.reference, g);
  const Plan target = load_plan_file(o.target, g);
  for (const Plan* p : {&reference, &target}) {
    const auto violations = validate_plan(g, *p);
    if (!violations.empty()) {
      throw Error(ErrorKind::kValidation, violations[0].describe(g));
    }
  }
  const Plan out =
      relabel_to_reference(g, reference, target, parse_weight_kind(o.kind));
  emit_to(o.output, [&](std::ostream& s) { write_plan(s, g, out); });
  return 0;
}

int cmd_pairwise(const Options& o) {
  const DualGraph g = load_graph_file(o.graph);
  std::vector<Plan> plans;
  for (const auto& path : list_csv_files(o.plans_dir)) {
    plans.push_back(load_plan_file(path, g));
    const auto violations = validate_plan(g, plans.back());
    if (!violations.empty()) {
      throw Error(ErrorKind::kValidation, path + ": " + violations[0].describe(g));
    }
  }
  if (plans.size() < 2) {
    throw Error(ErrorKind::kUsage, "need at least two plan files in " + o.plans_dir);
  }
  const PairwiseScores scores =
      pairwise_similarity(g, plans, parse_kinds(o.kind), o.jobs);
  emit_to(o.output, [&](std::ostream& out) { write_scores(out, scores); });
  return 0;
}

int cmd_summarize(const Options& o) {
  std::ifstream in(o.scores);
  if (!in) throw Error(ErrorKind::kIo, "cannot open scores file '" + o.scores + "'");
  const PairwiseScores scores = read_scores(in);
  std::vector<std::pair<WeightKind, ScoreSummary>> by_kind;
  for (WeightKind kind : {WeightKind::kArea, WeightKind::kPopulation}) {
    const auto values = scores.values(kind);
    if (!values.empty()) by_kind.emplace_back(kind, summarize(values, o.bins));
  }
  if (by_kind.empty()) throw Error(ErrorKind::kUsage, "scores file has no rows");
  emit_to(o.output, [&](std::ostream& out) { write_summary(out, by_kind); });
  if (!o.output.empty() && o.output != "-") {
    for (const auto& [kind, s] : by_kind) {
      std::cout << to_string(kind) << ": n=" << s.count << " mean=" << round3(s.mean)
                << " sd=" << round3(s.sd) << " min=" << round3(s.min)
                << " max=" << round3(s.max) << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Districting ensembles and plan similarity", "plansim"};
  app.set_version_flag("--version", std::string(plansim::version()));
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check a graph and optionally a plan");
  validate->add_option("--graph", o.graph, "Graph JSON")->required();
  validate->add_option("--plan", o.plan, "Plan CSV");

  auto* seed = app.add_subcommand("seed", "Seed a plan by agglomerative merging");
  seed->add_option("--graph", o.graph, "Graph JSON")->required();
  seed->add_option("-m,--districts", o.districts, "District count")->required();
  seed->add_option("--seed", o.seed, "Accepted for symmetry; seeding is deterministic");
  seed->add_option("-o,--output", o.output, "Plan CSV (default stdout)");

  auto* chain = app.add_subcommand("chain", "Run optimal-recombination steps");
  chain->add_option("--graph", o.graph, "Graph JSON")->required();
  chain->add_option("--plan", o.plan, "Start plan CSV")->required();
  chain->add_option("--steps", o.steps, "Recombination steps")->required()
      ->check(CLI::NonNegativeNumber);
  chain->add_option("--seed", o.seed, "RNG seed")->required();
  chain->add_option("--trees", o.trees, "Spanning trees per step")
      ->check(CLI::PositiveNumber);
  chain->add_option("-o,--output", o.output, "Plan CSV (default stdout)");

  auto* ensemble = app.add_subcommand("ensemble", "Run N independent chains");
  ensemble->add_option("--graph", o.graph, "Graph JSON")->required();
  ensemble->add_option("-m,--districts", o.districts, "District count");
  ensemble->add_option("-n,--chains", o.chains, "Number of chains");
  ensemble->add_option("--steps", o.steps, "Steps per chain (default 50*m)")
      ->check(CLI::NonNegativeNumber);
  ensemble->add_option("--seed", o.seed, "Base seed");
  ensemble->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  ensemble->add_option("--trees", o.trees, "Spanning trees per step")
      ->check(CLI::PositiveNumber);
  ensemble->add_option("--manifest", o.manifest, "Replay configuration from a manifest");
  ensemble->add_option("-o,--output", o.output, "Output directory")->required();

  auto* similarity = app.add_subcommand("similarity", "Score two plans");
  similarity->add_option("--graph", o.graph, "Graph JSON")->required();
  similarity->add_option("--plan-a", o.plan_a, "First plan CSV")->required();
  similarity->add_option("--plan-b", o.plan_b, "Second plan CSV")->required();
  similarity->add_option("--kind", o.kind, "area, population or both")
      ->check(CLI::IsMember({"area", "population", "both"}));
  similarity->add_flag("--full-precision", o.full_precision,
                       "Print unrounded scores");

  auto* relabel = app.add_subcommand("relabel", "Renumber a plan to match a reference");
  relabel->add_option("--graph", o.graph, "Graph JSON")->required();
  relabel->add_option("--reference", o.reference, "Reference plan CSV")->required();
  relabel->add_option("--target", o.target, "Plan CSV to renumber")->required();
  relabel->add_option("--kind", o.kind, "area or population")
      ->check(CLI::IsMember({"area", "population"}));
  relabel->add_option("-o,--output", o.output, "Plan CSV (default stdout)");

  auto* pairwise = app.add_subcommand("pairwise", "Score every pair of plans in a directory");
  pairwise->add_option("--graph", o.graph, "Graph JSON")->required();
  pairwise->add_option("--plans", o.plans_dir, "Directory of plan CSVs")->required();
  pairwise->add_option("--kind", o.kind, "area, population or both")
      ->check(CLI::IsMember({"area", "population", "both"}));
  pairwise->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  pairwise->add_option("-o,--output", o.output, "scores CSV (default stdout)");

  auto* summarize_cmd = app.add_subcommand("summarize", "Summarize a scores CSV");
  summarize_cmd->add_option("--scores", o.scores, "scores CSV")->required();
  summarize_cmd->add_option("--bins", o.bins, "Histogram bins")->check(CLI::PositiveNumber);
  summarize_cmd->add_option("-o,--output", o.output, "summary JSON (default stdout)");

  auto* synth = app.add_subcommand("synth", "Synthetic geometries");
  synth->require_subcommand(1);
  auto* grid = synth->add_subcommand("grid", "Rectangular grid graph");
  grid->add_option("--rows", o.rows)->required()->check(CLI::PositiveNumber);
  grid->add_option("--cols", o.cols)->required()->check(CLI::PositiveNumber);
  grid->add_option("--cell-pop", o.cell_population, "Mean population per cell");
  grid->add_option("--hotspot-q", o.hotspot_q, "Population fraction in the corner block")
      ->check(CLI::Range(0.0, 1.0));
  grid->add_option("--hotspot-r", o.hotspot_r, "Corner block side length");
  grid->add_option("-o,--output", o.output, "Graph JSON (default stdout)");
  auto* circle = synth->add_subcommand("circle", "Radial wedges of a disc");
  circle->add_option("--wedges", o.wedges)->required();
  circle->add_option("-o,--output", o.output, "Graph JSON (default stdout)");
  auto* radial = synth->add_subcommand("radial", "Radial plan on a circle graph");
  radial->add_option("--wedges", o.wedges)->required();
  radial->add_option("-m,--districts", o.districts)->required();
  radial->add_option("--offset", o.offset);
  radial->add_option("-o,--output", o.output, "Plan CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report("usage", e.what());
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*seed) return cmd_seed(o);
    if (*chain) return cmd_chain(o);
    if (*ensemble) return cmd_ensemble(o, *ensemble);
    if (*similarity) return cmd_similarity(o);
    if (*relabel) return cmd_relabel(o);
    if (*pairwise) return cmd_pairwise(o);
    if (*summarize_cmd) return cmd_summarize(o);
    if (*grid) {
      const DualGraph g = grid_state(
          {o.rows, o.cols, o.cell_population, o.hotspot_q, o.hotspot_r});
      emit_to(o.output, [&](std::ostream& out) { write_graph(out, g); });
      return 0;
    }
    if (*circle) {
      const DualGraph g = circle_state(o.wedges);
      emit_to(o.output, [&](std::ostream& out) { write_graph(out, g); });
      return 0;
    }
    if (*radial) {
      const DualGraph g = circle_state(o.wedges);
      const Plan p = radial_plan(o.wedges, o.districts, o.offset);
      emit_to(o.output, [&](std::ostream& out) { write_plan(out, g, p); });
      return 0;
    }
  } catch (const Error& e) {
    report(to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    report("io", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    report("internal", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
