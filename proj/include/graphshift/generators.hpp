#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "graphshift/dynamic_graph.hpp"
#include "graphshift/io.hpp"
#include "graphshift/types.hpp"

namespace graphshift {

// Regular finite-element lattice with 6-neighbour connectivity. Cubes are the
// common case (|V| = n^3, |E| = 3n^2(n-1)); general boxes are allowed so the
// 10x10x100 configuration (|V|=10^4, |E|=27900) is expressible.
struct MeshSpec {
  std::uint32_t nx = 1;
  std::uint32_t ny = 1;
  std::uint32_t nz = 1;
  static MeshSpec cube(std::uint32_t n) { return MeshSpec{n, n, n}; }
  std::uint64_t vertex_count() const {
    return std::uint64_t{nx} * ny * nz;
  }
  std::uint64_t edge_count() const;
};

// Growth with preferential attachment plus triad closure, seeded with a
// complete graph on m+1 vertices. Heavy-tailed degree distribution; average
// degree ~2m.
struct PowerLawSpec {
  std::uint64_t vertices = 0;
  std::uint32_t attachment = 1;          // m: edges added per new vertex
  double triangle_probability = 0.1;     // p: close a triangle after an attachment
  std::uint64_t seed = 0;
};

// Burst growth: each new vertex picks a random ambassador and recursively
// burns its neighbourhood with probability `forward_probability`, linking to
// every burned vertex.
struct ForestFireSpec {
  double growth = 0.0;               // fraction of current |V| to add
  double forward_probability = 0.35;
  std::uint64_t seed = 0;
};

using EdgeSink = std::function<void(VertexId, VertexId)>;

void generate_mesh(const MeshSpec& spec, const EdgeSink& sink);
std::vector<Edge> generate_mesh(const MeshSpec& spec);

void generate_powerlaw(const PowerLawSpec& spec, const EdgeSink& sink);
std::vector<Edge> generate_powerlaw(const PowerLawSpec& spec);

// Emits AddVertex/AddEdge events in arrival order; new ids continue past the
// largest live or retired id of the base graph.
std::vector<ChangeEvent> generate_forest_fire_changes(const DynamicGraph& base,
                                                      const ForestFireSpec& spec);

// Sliding-window expiry: treats AE events in `timed` as contact refreshes and
// appends RemoveEdge events once an edge has been inactive for more than
// `window` iterations, plus RemoveVertex once a vertex has no live edges and
// no activity inside the window. Input events must carry iterations.
std::vector<ScheduledEvent> expire_inactive(const std::vector<ScheduledEvent>& timed,
                                            std::uint64_t window);

}  // namespace graphshift
