#include "cayley/surface.hpp"

#include <algorithm>
#include <string>

#include "cayley/error.hpp"

namespace cayley {
namespace {

// Positions of the two components other than `which`.
std::pair<std::size_t, std::size_t> others(Component which) {
  switch (which) {
    case Component::kA: return {1, 2};
    case Component::kB: return {0, 2};
    case Component::kC: return {0, 1};
  }
  return {1, 2};
}

bool has_shape_xx_s(const std::array<Integer, 3>& v, const Integer& s) {
  // The multiset {s, p, p}.
  for (std::size_t i = 0; i < 3; ++i) {
    if (v[i] != s) continue;
    const Integer& p = v[(i + 1) % 3];
    const Integer& q = v[(i + 2) % 3];
    if (p == q) return true;
  }
  return false;
}

}  // namespace

Triple::Triple(Integer s, std::array<Integer, 3> values)
    : s_(std::move(s)), values_(std::move(values)) {
  if (sgn(s_) <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "surface parameter must be positive, got " +
                    cayley::to_string(s_));
  }
  for (const Integer& v : values_) {
    if (sgn(v) <= 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "triple components must be positive, got " + to_string());
    }
  }
}

const Integer& Triple::max() const {
  return *std::max_element(values_.begin(), values_.end());
}

Triple Triple::canonical() const {
  std::array<Integer, 3> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  return Triple(s_, std::move(sorted));
}

bool Triple::is_canonical() const {
  return values_[0] <= values_[1] && values_[1] <= values_[2];
}

Triple Triple::with(Component c, Integer value) const {
  std::array<Integer, 3> next = values_;
  next[index_of(c)] = std::move(value);
  return Triple(s_, std::move(next));
}

std::string Triple::to_string() const {
  return cayley::to_string(values_[0]) + "," + cayley::to_string(values_[1]) +
         "," + cayley::to_string(values_[2]);
}

std::strong_ordering operator<=>(const Triple& x, const Triple& y) {
  auto order = [](int c) {
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  };
  if (int c = cmp(x.s_, y.s_); c != 0) return order(c);
  for (std::size_t i = 0; i < 3; ++i) {
    if (int c = cmp(x.values_[i], y.values_[i]); c != 0) return order(c);
  }
  return std::strong_ordering::equal;
}

std::optional<Component> parse_component(std::string_view text) {
  if (text == "a" || text == "0") return Component::kA;
  if (text == "b" || text == "1") return Component::kB;
  if (text == "c" || text == "2") return Component::kC;
  return std::nullopt;
}

Triple parse_triple(const Integer& s, std::string_view text) {
  std::array<Integer, 3> values;
  std::size_t field = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece =
        text.substr(start, comma == std::string_view::npos ? text.npos
                                                           : comma - start);
    if (field >= 3) {
      throw Error(ErrorCode::kInvalidArgument,
                  "triple needs exactly three values: '" + std::string(text) +
                      "'");
    }
    values[field++] = parse_integer(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (field != 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "triple needs exactly three values: '" + std::string(text) +
                    "'");
  }
  return Triple(s, std::move(values));
}

Integer eval_c(const Integer& s, const Integer& x, const Integer& y,
               const Integer& z) {
  return Integer(s * (x * x + y * y + z * z) - s * s * s - 2 * x * y * z);
}

Integer eval_c(const Triple& t) { return eval_c(t.s(), t[0], t[1], t[2]); }

bool is_solution(const Triple& t) { return sgn(eval_c(t)) == 0; }

void require_solution(const Triple& t) {
  if (!is_solution(t)) {
    throw Error(ErrorCode::kNotASolution,
                "C_" + to_string(t.s()) + "(" + t.to_string() +
                    ") = " + to_string(eval_c(t)));
  }
}

ExactRatio conjugate_component(const Triple& t, Component which) {
  require_solution(t);
  const auto [i, j] = others(which);
  const Integer numerator = 2 * t[i] * t[j] - t.s() * t[which];
  return ExactRatio(numerator, t.s());
}

std::vector<Triple> neighbors(const Triple& t) {
  require_solution(t);
  std::vector<Triple> out;
  for (Component c : kAllComponents) {
    const ExactRatio conj = conjugate_component(t, c);
    if (!conj.is_integral() || !conj.is_positive()) continue;
    Integer value = conj.to_integer();
    if (value == t[c]) continue;
    Triple next = t.with(c, std::move(value));
    require_solution(next);
    out.push_back(std::move(next));
  }
  return out;
}

std::array<Integer, 3> family_values(const RFamily& family, Index n, Index m) {
  RSequence seq(family);
  return {seq.at(n), seq.at(n + m), seq.at(m)};
}

Triple family_triple(const RFamily& family, Index n, Index m) {
  std::array<Integer, 3> values = family_values(family, n, m);
  for (const Integer& v : values) {
    if (sgn(v) <= 0) {
      throw Error(ErrorCode::kNonPositiveResult,
                  "R-family (s=" + to_string(family.s) + ", b=" +
                      to_string(family.b) + ") yields non-positive value " +
                      to_string(v));
    }
  }
  Triple t(family.s, std::move(values));
  require_solution(t);
  return t;
}

bool is_singular(const Triple& t) {
  return t.s() == 1 && has_shape_xx_s(t.values(), Integer(1));
}

bool is_base(const Triple& t) { return has_shape_xx_s(t.values(), t.s()); }

std::vector<Triple> reduce(const Triple& t) {
  require_solution(t);
  std::vector<Triple> trace{t};
  while (true) {
    const Triple& cur = trace.back();
    std::size_t top = 0;
    for (std::size_t i = 1; i < 3; ++i) {
      if (cur[i] > cur[top]) top = i;
    }
    const auto which = static_cast<Component>(top);
    const ExactRatio conj = conjugate_component(cur, which);
    if (!conj.is_integral() || !conj.is_positive()) break;
    Integer value = conj.to_integer();
    if (value >= cur[which]) break;
    trace.push_back(cur.with(which, std::move(value)));
  }
  return trace;
}

std::vector<IndexPair> euclid_index_path(Index n, Index m) {
  if (n == 0 && m == 0) {
    throw Error(ErrorCode::kBothZero, "euclid path of (0, 0)");
  }
  std::vector<IndexPair> path{{n, m}};
  while (n != 0 && m != 0) {
    if (m >= n) {
      m -= n;
    } else {
      n -= m;
    }
    path.emplace_back(n, m);
  }
  return path;
}

}  // namespace cayley
