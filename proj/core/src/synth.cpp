#include "plansim/synth.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "plansim/error.hpp"

namespace plansim {

namespace {

// Splits `total` into `parts` near-equal integers, larger ones first.
std::vector<std::int64_t> spread(std::int64_t total, std::int64_t parts) {
  std::vector<std::int64_t> out(parts, parts > 0 ? total / parts : 0);
  for (std::int64_t i = 0; parts > 0 && i < total % parts; ++i) ++out[i];
  return out;
}

}  // namespace

DualGraph grid_state(const GridSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1) {
    throw Error(ErrorKind::kUsage, "grid needs at least one row and column");
  }
  if (spec.cell_population < 0) {
    throw Error(ErrorKind::kUsage, "cell population must be nonnegative");
  }
  const bool hotspot = spec.hotspot_fraction > 0.0;
  if (hotspot) {
    if (spec.hotspot_fraction > 1.0 || spec.hotspot_size < 1 ||
        spec.hotspot_size > spec.rows || spec.hotspot_size > spec.cols) {
      throw Error(ErrorKind::kUsage, "invalid hotspot fraction or block size");
    }
  }

  const int n = spec.rows * spec.cols;
  const std::int64_t total = static_cast<std::int64_t>(n) * spec.cell_population;
  std::vector<std::int64_t> population(n, spec.cell_population);
  if (hotspot) {
    const int r = spec.hotspot_size;
    const auto hot_total =
        static_cast<std::int64_t>(std::llround(spec.hotspot_fraction * total));
    auto hot = spread(hot_total, static_cast<std::int64_t>(r) * r);
    auto cold = spread(total - hot_total, n - static_cast<std::int64_t>(r) * r);
    std::size_t h = 0, c = 0;
    for (int row = 0; row < spec.rows; ++row) {
      for (int col = 0; col < spec.cols; ++col) {
        const bool in_block = row < r && col < r;
        population[row * spec.cols + col] = in_block ? hot[h++] : cold[c++];
      }
    }
  }

  std::vector<Precinct> precincts;
  precincts.reserve(n);
  std::vector<std::pair<int, int>> edges;
  for (int row = 0; row < spec.rows; ++row) {
    for (int col = 0; col < spec.cols; ++col) {
      const int v = row * spec.cols + col;
      precincts.push_back({std::to_string(row) + "_" + std::to_string(col), 1.0,
                           population[v]});
      if (col + 1 < spec.cols) edges.emplace_back(v, v + 1);
      if (row + 1 < spec.rows) edges.emplace_back(v, v + spec.cols);
    }
  }
  return DualGraph(std::move(precincts), edges);
}

DualGraph circle_state(int wedges) {
  if (wedges < 3) throw Error(ErrorKind::kUsage, "circle needs at least 3 wedges");
  std::vector<Precinct> precincts;
  std::vector<std::pair<int, int>> edges;
  for (int w = 0; w < wedges; ++w) {
    precincts.push_back({"w" + std::to_string(w), 1.0 / wedges, 1});
    edges.emplace_back(w, (w + 1) % wedges);
  }
  return DualGraph(std::move(precincts), edges);
}

Plan radial_plan(int wedges, int districts, int offset) {
  if (wedges < 3) throw Error(ErrorKind::kUsage, "circle needs at least 3 wedges");
  if (districts < 1 || wedges % districts != 0) {
    throw Error(ErrorKind::kUsage, "district count must divide the wedge count");
  }
  if (offset < 0 || offset >= wedges) {
    throw Error(ErrorKind::kUsage, "offset must lie in [0, wedges)");
  }
  const int span = wedges / districts;
  std::vector<int> district_of(wedges);
  for (int i = 0; i < districts; ++i) {
    for (int s = 0; s < span; ++s) {
      district_of[(offset + i * span + s) % wedges] = i;
    }
  }
  return Plan(std::move(district_of), districts);
}

}  // namespace plansim
