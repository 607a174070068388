#include "cayley/solution_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <tuple>

#include "cayley/error.hpp"
#include "cayley/json_writer.hpp"

namespace cayley {
namespace {

Component first_position_of(const Triple& t, const Integer& value) {
  for (Component c : kAllComponents) {
    if (t[c] == value) return c;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "value " + to_string(value) + " not in " + t.to_string());
}

struct RawEdge {
  Triple from;
  Triple to;
  Integer moved_value;  // value in `from` that conjugation replaces
};

}  // namespace

std::optional<std::size_t> SolutionGraph::find(const Triple& t) const {
  const Triple key = t.canonical();
  auto it = std::lower_bound(vertices.begin(), vertices.end(), key);
  if (it == vertices.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

bool SolutionGraph::adjacent(const Triple& x, const Triple& y) const {
  auto i = find(x);
  auto j = find(y);
  if (!i || !j) return false;
  if (*i > *j) std::swap(i, j);
  return std::any_of(edges.begin(), edges.end(), [&](const GraphEdge& e) {
    return e.from == *i && e.to == *j;
  });
}

SolutionGraph solution_graph(const Triple& seed, const Integer& bound,
                             std::size_t max_vertices) {
  require_solution(seed);
  if (seed.max() > bound) {
    throw Error(ErrorCode::kInvalidArgument,
                "bound " + to_string(bound) + " is below the seed maximum " +
                    to_string(seed.max()));
  }

  std::map<Triple, bool> seen;  // canonical triple -> expanded
  std::deque<Triple> queue;
  std::vector<RawEdge> raw_edges;
  std::vector<std::tuple<Triple, Component, Integer>> raw_frontier;

  const Triple start = seed.canonical();
  seen.emplace(start, false);
  queue.push_back(start);

  while (!queue.empty()) {
    const Triple v = queue.front();
    queue.pop_front();
    for (Component c : kAllComponents) {
      const ExactRatio conj = conjugate_component(v, c);
      if (!conj.is_integral() || !conj.is_positive()) continue;
      Integer value = conj.to_integer();
      if (value == v[c]) continue;
      if (value > bound) {
        raw_frontier.emplace_back(v, c, value);
        continue;
      }
      const Triple w = v.with(c, value).canonical();
      require_solution(w);
      if (v < w) {
        raw_edges.push_back({v, w, v[c]});
      } else {
        raw_edges.push_back({w, v, value});
      }
      if (seen.emplace(w, false).second) {
        if (seen.size() > max_vertices) {
          throw Error(ErrorCode::kBudgetExceeded,
                      "solution graph exceeds " +
                          std::to_string(max_vertices) + " vertices");
        }
        queue.push_back(w);
      }
    }
  }

  SolutionGraph graph;
  graph.s = seed.s();
  graph.bound = bound;
  graph.vertices.reserve(seen.size());
  for (const auto& [t, unused] : seen) graph.vertices.push_back(t);

  for (const RawEdge& e : raw_edges) {
    GraphEdge edge{*graph.find(e.from), *graph.find(e.to),
                   first_position_of(e.from, e.moved_value)};
    graph.edges.push_back(edge);
  }
  std::sort(graph.edges.begin(), graph.edges.end(),
            [](const GraphEdge& x, const GraphEdge& y) {
              return std::tie(x.from, x.to, x.moved) <
                     std::tie(y.from, y.to, y.moved);
            });
  // Keep one edge per vertex pair (the lowest moved position).
  graph.edges.erase(
      std::unique(graph.edges.begin(), graph.edges.end(),
                  [](const GraphEdge& x, const GraphEdge& y) {
                    return x.from == y.from && x.to == y.to;
                  }),
      graph.edges.end());

  for (auto& [v, c, value] : raw_frontier) {
    graph.frontier.push_back({*graph.find(v), c, std::move(value)});
  }
  std::sort(graph.frontier.begin(), graph.frontier.end(),
            [](const FrontierMarker& x, const FrontierMarker& y) {
              return std::tie(x.vertex, x.component) <
                     std::tie(y.vertex, y.component);
            });
  // Equal components of one vertex escape to the same triple.
  graph.frontier.erase(
      std::unique(graph.frontier.begin(), graph.frontier.end(),
                  [](const FrontierMarker& x, const FrontierMarker& y) {
                    return x.vertex == y.vertex && x.value == y.value;
                  }),
      graph.frontier.end());
  return graph;
}

std::string to_dot(const SolutionGraph& graph) {
  std::ostringstream out;
  out << "graph cayley_s" << graph.s.get_str() << " {\n";
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    out << "  v" << i << " [label=\"" << graph.vertices[i].to_string()
        << "\"];\n";
  }
  for (const GraphEdge& e : graph.edges) {
    out << "  v" << e.from << " -- v" << e.to << " [label=\""
        << name_of(e.moved) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

void write_json(std::ostream& out, const SolutionGraph& graph) {
  JsonWriter w(out);
  w.begin_object();
  w.key("s").value(graph.s);
  w.key("bound").value(graph.bound);
  w.key("vertices").begin_array();
  for (const Triple& t : graph.vertices) {
    w.begin_array();
    for (const Integer& v : t.values()) w.value(v);
    w.end_array();
  }
  w.end_array();
  w.key("edges").begin_array();
  for (const GraphEdge& e : graph.edges) {
    w.begin_array()
        .value(static_cast<std::uint64_t>(e.from))
        .value(static_cast<std::uint64_t>(e.to))
        .value(name_of(e.moved))
        .end_array();
  }
  w.end_array();
  w.key("frontier").begin_array();
  for (const FrontierMarker& f : graph.frontier) {
    w.begin_array()
        .value(static_cast<std::uint64_t>(f.vertex))
        .value(name_of(f.component))
        .value(f.value)
        .end_array();
  }
  w.end_array();
  w.end_object();
}

}  // namespace cayley
