#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cayley/component.hpp"
#include "cayley/integer.hpp"
#include "cayley/surface.hpp"

namespace cayley {

// Edge between two vertex indices, from < to. `moved` is the position in
// vertices[from] of the value that conjugation replaces.
struct GraphEdge {
  std::size_t from;
  std::size_t to;
  Component moved;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// An integral positive conjugate of vertices[vertex] that exceeds the bound.
struct FrontierMarker {
  std::size_t vertex;
  Component component;
  Integer value;
};

/// Conjugation closure of a seed solution, truncated at a bound on the
/// maximal component. Vertices are canonical (sorted) triples in ascending
/// order, so the structure is independent of traversal order.
struct SolutionGraph {
  Integer s;
  Integer bound;
  std::vector<Triple> vertices;
  std::vector<GraphEdge> edges;
  std::vector<FrontierMarker> frontier;

  std::optional<std::size_t> find(const Triple& t) const;
  bool adjacent(const Triple& x, const Triple& y) const;
};

inline constexpr std::size_t kDefaultMaxGraphVertices = 1'000'000;

/// Breadth-first closure of neighbors() from `seed`, admitting vertices whose
/// maximal component is <= bound. Throws NotASolution, InvalidArgument when
/// the seed exceeds the bound, or BudgetExceeded past `max_vertices`.
SolutionGraph solution_graph(const Triple& seed, const Integer& bound,
                             std::size_t max_vertices = kDefaultMaxGraphVertices);

// Vertex label "a,b,c", edge label = moved component name.
std::string to_dot(const SolutionGraph& graph);

// {"s":..,"bound":..,"vertices":[[a,b,c],..],"edges":[[i,j,"a"],..],
//  "frontier":[[i,"b",value],..]}
void write_json(std::ostream& out, const SolutionGraph& graph);

}  // namespace cayley
