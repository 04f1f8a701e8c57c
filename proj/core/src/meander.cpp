#include "seaweed/meander.hpp"

#include "seaweed/errors.hpp"

#include <sstream>

namespace seaweed {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> symmetric_arcs(const Composition& c) {
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  std::size_t start = 1;
  for (auto part : c.parts()) {
    for (std::size_t i = 0; i < part / 2; ++i) arcs.emplace_back(start + i, start + part - 1 - i);
    start += part;
  }
  return arcs;
}

}  // namespace

MeanderGraph meander(const Composition& a, const Composition& b) {
  if (a.total() != b.total()) throw InputError("meander: compositions have different totals");
  return MeanderGraph{a.total(), symmetric_arcs(a), symmetric_arcs(b)};
}

MeanderCensus census(const MeanderGraph& m) {
  std::vector<std::vector<std::size_t>> adj(m.n + 1);
  for (const auto& [u, v] : m.top_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (const auto& [u, v] : m.bottom_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  MeanderCensus out;
  std::vector<bool> seen(m.n + 1, false);
  for (std::size_t s = 1; s <= m.n; ++s) {
    if (seen[s]) continue;
    std::size_t vertices = 0;
    std::size_t degree_sum = 0;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      ++vertices;
      degree_sum += adj[v].size();
      for (auto w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    // Max degree 2: a component is a cycle iff it has as many edges as vertices.
    if (degree_sum / 2 == vertices) {
      ++out.cycles;
    } else {
      ++out.paths;
    }
  }
  return out;
}

std::size_t meander_index(const MeanderGraph& m, Family family) {
  const MeanderCensus c = census(m);
  const std::size_t gl_index = 2 * c.cycles + c.paths;
  switch (family) {
    case Family::GL: return gl_index;
    case Family::SL: return gl_index - 1;
    default: throw PreconditionError("meander_index is defined for GL and SL only");
  }
}

std::string to_svg(const MeanderGraph& m) {
  constexpr int step = 40;
  constexpr int margin = 30;
  const int width = 2 * margin + step * static_cast<int>(m.n > 0 ? m.n - 1 : 0);
  const int height = 2 * margin + step * static_cast<int>(m.n);
  const int axis = height / 2;
  auto x_of = [&](std::size_t v) { return margin + step * static_cast<int>(v - 1); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
      << width << ' ' << height << "\">\n";
  auto arc = [&](std::size_t u, std::size_t v, bool above) {
    const int x1 = x_of(u);
    const int x2 = x_of(v);
    const int r = (x2 - x1) / 2;
    svg << "  <path d=\"M " << x1 << ' ' << axis << " A " << r << ' ' << r << " 0 0 " << (above ? 1 : 0) << ' ' << x2
        << ' ' << axis << "\" fill=\"none\" stroke=\"" << (above ? "#1f77b4" : "#d62728")
        << "\" stroke-width=\"2\"/>\n";
  };
  for (const auto& [u, v] : m.top_edges) arc(u, v, true);
  for (const auto& [u, v] : m.bottom_edges) arc(u, v, false);
  for (std::size_t v = 1; v <= m.n; ++v) {
    svg << "  <circle cx=\"" << x_of(v) << "\" cy=\"" << axis << "\" r=\"4\" fill=\"black\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace seaweed
