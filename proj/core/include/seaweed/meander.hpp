#pragma once

#include "seaweed/composition.hpp"
#include "seaweed/seaweed.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace seaweed {

// Vertices 1..n on a line; each part of the top composition pairs its
// vertices first-to-last above the line, the bottom composition likewise
// below it. Every vertex has at most one top and one bottom arc.
struct MeanderGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> top_edges;
  std::vector<std::pair<std::size_t, std::size_t>> bottom_edges;
};

struct MeanderCensus {
  std::size_t cycles = 0;
  std::size_t paths = 0;  // isolated vertices count as paths
};

// InputError when totals differ.
MeanderGraph meander(const Composition& a, const Composition& b);

MeanderCensus census(const MeanderGraph& m);

// 2 * cycles + paths for GL; one less for SL. PreconditionError for SP/SO.
std::size_t meander_index(const MeanderGraph& m, Family family);

// Standalone SVG: dots on a line, top arcs above, bottom arcs below.
std::string to_svg(const MeanderGraph& m);

}  // namespace seaweed
