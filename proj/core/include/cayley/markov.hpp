#pragma once

// Markov equation x^2 + y^2 + z^2 = 3xyz and its tree of solutions.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cayley/component.hpp"
#include "cayley/integer.hpp"

namespace cayley {

struct MarkovTriple {
  std::array<Integer, 3> values;

  const Integer& operator[](Component c) const { return values[index_of(c)]; }
  MarkovTriple canonical() const;
  std::string to_string() const;

  friend bool operator==(const MarkovTriple&, const MarkovTriple&) = default;
  friend std::strong_ordering operator<=>(const MarkovTriple& x,
                                          const MarkovTriple& y);
};

Integer eval_m(const MarkovTriple& t);

/// Replaces the selected component x by 3yz - x. Throws NotASolution when
/// eval_m(t) != 0, NonPositiveResult when the replacement is < 1.
MarkovTriple markov_neighbor(const MarkovTriple& t, Component which);

inline constexpr unsigned kMaxMarkovTreeDepth = 24;

// Sorted, deduplicated canonical triples reachable from (1,1,1) in at most
// `depth` neighbor moves. parent[i] is the vertex from which vertices[i] was
// first reached in breadth-first order (nullopt for the root), and
// depth[i] its distance from the root.
struct MarkovTree {
  std::vector<MarkovTriple> vertices;
  std::vector<std::optional<std::size_t>> parent;
  std::vector<unsigned> depth;
};

/// Throws InvalidArgument when depth > kMaxMarkovTreeDepth.
MarkovTree markov_tree(unsigned depth);

std::string to_dot(const MarkovTree& tree);
void write_json(std::ostream& out, const MarkovTree& tree);

}  // namespace cayley
