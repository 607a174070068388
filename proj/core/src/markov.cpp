#include "cayley/markov.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cayley/error.hpp"
#include "cayley/json_writer.hpp"

namespace cayley {

MarkovTriple MarkovTriple::canonical() const {
  MarkovTriple out = *this;
  std::sort(out.values.begin(), out.values.end());
  return out;
}

std::string MarkovTriple::to_string() const {
  return cayley::to_string(values[0]) + "," + cayley::to_string(values[1]) +
         "," + cayley::to_string(values[2]);
}

std::strong_ordering operator<=>(const MarkovTriple& x, const MarkovTriple& y) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (int c = cmp(x.values[i], y.values[i]); c != 0) {
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

Integer eval_m(const MarkovTriple& t) {
  const auto& [x, y, z] = t.values;
  return Integer(x * x + y * y + z * z - 3 * x * y * z);
}

MarkovTriple markov_neighbor(const MarkovTriple& t, Component which) {
  if (sgn(eval_m(t)) != 0) {
    throw Error(ErrorCode::kNotASolution,
                "(" + t.to_string() + ") is not a Markov triple");
  }
  const std::size_t i = index_of(which);
  const Integer& y = t.values[(i + 1) % 3];
  const Integer& z = t.values[(i + 2) % 3];
  Integer replacement = 3 * y * z - t.values[i];
  if (sgn(replacement) <= 0) {
    throw Error(ErrorCode::kNonPositiveResult,
                "replacement " + to_string(replacement) + " is not positive");
  }
  MarkovTriple out = t;
  out.values[i] = std::move(replacement);
  return out;
}

MarkovTree markov_tree(unsigned depth) {
  if (depth > kMaxMarkovTreeDepth) {
    throw Error(ErrorCode::kInvalidArgument,
                "markov tree depth " + std::to_string(depth) + " exceeds cap " +
                    std::to_string(kMaxMarkovTreeDepth));
  }
  struct Info {
    std::optional<MarkovTriple> parent;
    unsigned depth;
  };
  std::map<MarkovTriple, Info> seen;
  const MarkovTriple root{{1, 1, 1}};
  seen.emplace(root, Info{std::nullopt, 0});
  std::vector<MarkovTriple> level{root};
  for (unsigned d = 1; d <= depth && !level.empty(); ++d) {
    std::vector<MarkovTriple> next;
    for (const MarkovTriple& v : level) {
      for (Component c : kAllComponents) {
        const MarkovTriple w = markov_neighbor(v, c).canonical();
        if (seen.emplace(w, Info{v, d}).second) next.push_back(w);
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }

  MarkovTree tree;
  for (const auto& [t, info] : seen) {
    tree.vertices.push_back(t);
    tree.depth.push_back(info.depth);
  }
  for (const auto& [t, info] : seen) {
    if (!info.parent) {
      tree.parent.push_back(std::nullopt);
      continue;
    }
    auto it = std::lower_bound(tree.vertices.begin(), tree.vertices.end(),
                               *info.parent);
    tree.parent.push_back(static_cast<std::size_t>(it - tree.vertices.begin()));
  }
  return tree;
}

std::string to_dot(const MarkovTree& tree) {
  std::ostringstream out;
  out << "digraph markov {\n";
  for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
    out << "  v" << i << " [label=\"" << tree.vertices[i].to_string()
        << "\"];\n";
  }
  for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
    if (tree.parent[i]) out << "  v" << *tree.parent[i] << " -> v" << i << ";\n";
  }
  out << "}\n";
  return out.str();
}

void write_json(std::ostream& out, const MarkovTree& tree) {
  JsonWriter w(out);
  w.begin_object();
  w.key("vertices").begin_array();
  for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
    w.begin_object();
    w.key("triple").begin_array();
    for (const Integer& v : tree.vertices[i].values) w.value(v);
    w.end_array();
    w.key("depth").value(tree.depth[i]);
    w.key("parent");
    if (tree.parent[i]) {
      w.value(static_cast<std::uint64_t>(*tree.parent[i]));
    } else {
      w.null();
    }
    w.end_object();
  }
  w.end_array();
  w.end_object();
}

}  // namespace cayley
