#pragma once

#include <cstdint>

#include "plansim/graph.hpp"
#include "plansim/plan.hpp"

namespace plansim {

// Rectangular grid of unit-area cells with rook adjacency. Cell (r, c) has id
// "r_c" and node index r * cols + c.
//
// Population: total = rows * cols * cell_population. With hotspot_fraction
// q > 0, round(q * total) persons are spread evenly over the hotspot_size x
// hotspot_size block at the (0, 0) corner and the remainder evenly over the
// other cells; uneven remainders go to the lowest node indices.
struct GridSpec {
  int rows = 1;
  int cols = 1;
  std::int64_t cell_population = 100;
  double hotspot_fraction = 0.0;
  int hotspot_size = 0;
};

DualGraph grid_state(const GridSpec& spec);

// Disc cut into `wedges` equal radial sectors: a cycle of nodes "w0".."w{n-1}",
// each with area 1 / wedges and population 1.
DualGraph circle_state(int wedges);

// District i holds wedges offset + i * (wedges / m) .. offset + (i + 1) *
// (wedges / m) - 1, taken mod wedges.
Plan radial_plan(int wedges, int districts, int offset);

}  // namespace plansim
