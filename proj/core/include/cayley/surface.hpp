#pragma once

// Cayley's cubic C_s(x,y,z) = s(x^2 + y^2 + z^2) - s^3 - 2xyz over the
// positive integers: evaluation, Vieta conjugation and reduction.

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "cayley/component.hpp"
#include "cayley/exact_ratio.hpp"
#include "cayley/integer.hpp"
#include "cayley/sequences.hpp"

namespace cayley {

/// Positive triple (a, b, c) together with its surface parameter s.
///
/// Construction only checks positivity; whether the triple solves C_s is a
/// separate question answered by is_solution(). Display order is preserved;
/// canonical() sorts the components ascending.
class Triple {
 public:
  Triple(Integer s, std::array<Integer, 3> values);

  const Integer& s() const { return s_; }
  const Integer& operator[](Component c) const { return values_[index_of(c)]; }
  const Integer& operator[](std::size_t i) const { return values_[i]; }
  const std::array<Integer, 3>& values() const { return values_; }

  const Integer& max() const;
  Triple canonical() const;
  bool is_canonical() const;
  // Copy with one component replaced. Throws if the new value is not positive.
  Triple with(Component c, Integer value) const;

  // "a,b,c"
  std::string to_string() const;

  friend bool operator==(const Triple& x, const Triple& y) {
    return x.s_ == y.s_ && x.values_ == y.values_;
  }
  friend std::strong_ordering operator<=>(const Triple& x, const Triple& y);

 private:
  Integer s_;
  std::array<Integer, 3> values_;
};

// Parses "a,b,c".
Triple parse_triple(const Integer& s, std::string_view text);

Integer eval_c(const Triple& t);
// Same polynomial on arbitrary integers, for identities whose arguments may
// leave the positive octant.
Integer eval_c(const Integer& s, const Integer& x, const Integer& y,
               const Integer& z);

bool is_solution(const Triple& t);

// Throws Error(NotASolution) unless eval_c(t) == 0.
void require_solution(const Triple& t);

/// Other root of C_s viewed as a quadratic in the selected component:
/// x' = 2yz/s - x. Requires t to be a solution.
ExactRatio conjugate_component(const Triple& t, Component which);

/// Triples reached by replacing one component with an integral, positive
/// conjugate different from itself, in component order. Each is re-verified.
std::vector<Triple> neighbors(const Triple& t);

/// The raw values (R_n(b), R_{n+m}(b), R_m(b)). Throws NonIntegralFamily.
std::array<Integer, 3> family_values(const RFamily& family, Index n, Index m);

/// Verified triple (R_n(b), R_{n+m}(b), R_m(b)) on C_s.
/// Throws NonIntegralFamily, or NonPositiveResult when 2b = s makes the
/// sequence leave the positive integers.
Triple family_triple(const RFamily& family, Index n, Index m);

// Singular: s = 1 and the multiset is {x, x, 1}.
bool is_singular(const Triple& t);
// Base: the multiset is {s, p, p}.
bool is_base(const Triple& t);

/// Reduction trace starting at t. Each step replaces the maximal component
/// (lowest position on ties) by its conjugate while that conjugate is
/// integral, positive and strictly smaller. The last entry is terminal.
std::vector<Triple> reduce(const Triple& t);

using IndexPair = std::pair<Index, Index>;

/// Subtractive Euclid path from (n, m) to a pair containing 0:
/// (n, m) -> (n, m - n) when m >= n, else (n - m, m).
std::vector<IndexPair> euclid_index_path(Index n, Index m);

}  // namespace cayley
