#include "cayley/search.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "cayley/error.hpp"
#include "cayley/json_writer.hpp"

namespace cayley {
namespace {

void enumerate_rows(std::uint64_t s, std::uint64_t bound, std::uint64_t first_a,
                    std::uint64_t stride, std::vector<Triple>& out) {
  const Integer sz = static_cast<unsigned long>(s);
  const Integer s2 = sz * sz;
  const Integer bound_z = static_cast<unsigned long>(bound);
  Integer a, b, fa, disc, root, ab, num, c;
  for (std::uint64_t ai = first_a; ai <= bound; ai += stride) {
    a = static_cast<unsigned long>(ai);
    fa = a * a - s2;
    for (std::uint64_t bi = ai; bi <= bound; ++bi) {
      b = static_cast<unsigned long>(bi);
      disc = fa * (b * b - s2);
      if (sgn(disc) < 0 || !is_perfect_square(disc)) continue;
      root = isqrt(disc);
      ab = a * b;
      for (int sign : {-1, 1}) {
        if (sign < 0 && sgn(root) == 0) continue;
        num = sign < 0 ? Integer(ab - root) : Integer(ab + root);
        if (!divides(sz, num)) continue;
        c = num / sz;
        if (c < b || c > bound_z) continue;
        out.emplace_back(sz, std::array<Integer, 3>{a, b, c});
      }
    }
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // The smaller index becomes the root, so roots are first members.
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    parent_[y] = x;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<Triple> enumerate_solutions(std::uint64_t s, std::uint64_t bound,
                                        const SearchOptions& options) {
  if (s == 0 || bound == 0) {
    throw Error(ErrorCode::kInvalidArgument, "s and bound must be positive");
  }
  std::uint64_t twice_pairs = 0;
  if (__builtin_mul_overflow(bound, bound + 1, &twice_pairs) ||
      twice_pairs / 2 > options.budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "bound " + std::to_string(bound) + " needs more than " +
                    std::to_string(options.budget) + " quadratic solves");
  }
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(options.workers, 1, bound);
  std::vector<std::vector<Triple>> parts(workers);
  if (workers == 1) {
    enumerate_rows(s, bound, 1, 1, parts[0]);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back(
          [&, w] { enumerate_rows(s, bound, 1 + w, workers, parts[w]); });
    }
  }
  std::vector<Triple> out;
  for (auto& part : parts) {
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Membership family_membership(const Triple& t) {
  const std::vector<Triple> trace = reduce(t);
  const Triple& terminal = trace.back();
  if (!is_base(terminal)) {
    return {MembershipStatus::kNotBaseReducible, std::nullopt};
  }

  // Terminal labels: the component equal to s is R_0, the pair is R_1.
  std::array<Index, 3> label{1, 1, 1};
  std::size_t s_pos = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (terminal[i] == t.s() &&
        terminal[(i + 1) % 3] == terminal[(i + 2) % 3]) {
      s_pos = i;
      break;
    }
  }
  label[s_pos] = 0;
  const Integer b = terminal[(s_pos + 1) % 3];
  const RFamily family{t.s(), b};
  if (!family.is_integral()) {
    return {MembershipStatus::kNonIntegralFamily, std::nullopt};
  }

  // Undo the reduction: the component that was reduced carries the sum of
  // the other two labels.
  for (std::size_t k = trace.size() - 1; k > 0; --k) {
    const Triple& before = trace[k - 1];
    const Triple& after = trace[k];
    for (std::size_t p = 0; p < 3; ++p) {
      if (before[p] != after[p]) {
        label[p] = label[(p + 1) % 3] + label[(p + 2) % 3];
        break;
      }
    }
  }

  std::size_t sum_pos = 0;
  for (std::size_t p = 0; p < 3; ++p) {
    if (label[p] == label[(p + 1) % 3] + label[(p + 2) % 3]) {
      sum_pos = p;
      break;
    }
  }
  std::array<Index, 2> nm{};
  for (std::size_t p = 0, k = 0; p < 3; ++p) {
    if (p != sum_pos) nm[k++] = label[p];
  }
  // (n, m) and (m, n) give the same multiset; report n <= m.
  if (nm[0] > nm[1]) std::swap(nm[0], nm[1]);
  FamilyIndex index{b, nm[0], nm[1]};

  std::array<Integer, 3> expected = family_values(family, index.n, index.m);
  std::array<Integer, 3> actual = t.values();
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  if (expected != actual) {
    throw Error(ErrorCode::kInvariantViolation,
                "recovered R-family index does not reproduce " + t.to_string());
  }
  return {MembershipStatus::kMember, std::move(index)};
}

std::vector<std::string> Classification::tags() const {
  std::vector<std::string> out;
  if (base) out.push_back("base");
  if (r_family) {
    out.push_back("r_family:b=" + to_string(r_family->b) +
                  ":n=" + std::to_string(r_family->n) +
                  ":m=" + std::to_string(r_family->m));
  }
  out.push_back("component:" + std::to_string(component_id) +
                ":size=" + std::to_string(component_size));
  if (isolated) out.push_back("isolated");
  if (frontier_limited) out.push_back("frontier-limited");
  return out;
}

std::vector<Classification> classify(std::uint64_t s, std::uint64_t bound,
                                     const SearchOptions& options) {
  const std::vector<Triple> triples = enumerate_solutions(s, bound, options);
  const Integer bound_z = static_cast<unsigned long>(bound);
  DisjointSets sets(triples.size());
  std::vector<Classification> rows;
  rows.reserve(triples.size());

  for (std::size_t i = 0; i < triples.size(); ++i) {
    const Triple& t = triples[i];
    Classification row{.triple = t,
                       .conjugates = {conjugate_component(t, Component::kA),
                                      conjugate_component(t, Component::kB),
                                      conjugate_component(t, Component::kC)},
                       .base = is_base(t),
                       .r_family = std::nullopt,
                       .component_id = i,
                       .component_size = 1,
                       .isolated = true,
                       .frontier_limited = false};
    for (Component c : kAllComponents) {
      const ExactRatio& conj = row.conjugates[index_of(c)];
      if (!conj.is_integral() || !conj.is_positive()) continue;
      row.isolated = false;
      Integer value = conj.to_integer();
      if (value == t[c]) continue;
      if (value > bound_z) {
        row.frontier_limited = true;
        continue;
      }
      const Triple w = t.with(c, std::move(value)).canonical();
      auto it = std::lower_bound(triples.begin(), triples.end(), w);
      if (it == triples.end() || *it != w) {
        throw Error(ErrorCode::kInvariantViolation,
                    "conjugate " + w.to_string() + " missing from enumeration");
      }
      sets.unite(i, static_cast<std::size_t>(it - triples.begin()));
    }
    const Membership membership = family_membership(t);
    row.r_family = membership.index;
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> sizes(triples.size(), 0);
  for (std::size_t i = 0; i < triples.size(); ++i) ++sizes[sets.find(i)];
  for (std::size_t i = 0; i < triples.size(); ++i) {
    rows[i].component_id = sets.find(i);
    rows[i].component_size = sizes[rows[i].component_id];
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<Classification>& rows) {
  out << "s,a,b,c,tags,conj_a,conj_b,conj_c\n";
  for (const Classification& row : rows) {
    const Triple& t = row.triple;
    out << t.s().get_str() << ',' << t[0].get_str() << ',' << t[1].get_str()
        << ',' << t[2].get_str() << ',';
    const std::vector<std::string> tags = row.tags();
    for (std::size_t i = 0; i < tags.size(); ++i) {
      if (i) out << ';';
      out << tags[i];
    }
    for (const ExactRatio& conj : row.conjugates) out << ',' << conj.to_string();
    out << '\n';
  }
}

void write_jsonl(std::ostream& out, const std::vector<Classification>& rows) {
  for (const Classification& row : rows) {
    JsonWriter w(out);
    w.begin_object();
    w.key("s").value(row.triple.s());
    w.key("triple").begin_array();
    for (const Integer& v : row.triple.values()) w.value(v);
    w.end_array();
    w.key("tags").begin_array();
    for (const std::string& tag : row.tags()) w.value(tag);
    w.end_array();
    w.key("conjugates").begin_array();
    for (const ExactRatio& conj : row.conjugates) w.value(conj.to_string());
    w.end_array();
    w.key("base").value(row.base);
    w.key("r_family");
    if (row.r_family) {
      w.begin_object();
      w.key("b").value(row.r_family->b);
      w.key("n").value(row.r_family->n);
      w.key("m").value(row.r_family->m);
      w.end_object();
    } else {
      w.null();
    }
    w.key("component").begin_object();
    w.key("id").value(static_cast<std::uint64_t>(row.component_id));
    w.key("size").value(static_cast<std::uint64_t>(row.component_size));
    w.end_object();
    w.key("isolated").value(row.isolated);
    w.key("frontier_limited").value(row.frontier_limited);
    w.end_object();
    out << '\n';
  }
}

}  // namespace cayley
