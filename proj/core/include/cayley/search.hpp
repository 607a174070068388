#pragma once

// Bounded exhaustive enumeration of C_s solutions and their classification
// into the base family, R-families, conjugation components and isolated
// solutions.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cayley/exact_ratio.hpp"
#include "cayley/integer.hpp"
#include "cayley/sequences.hpp"
#include "cayley/surface.hpp"

namespace cayley {

// Upper limit on quadratic solves ((a, b) pairs) for one enumeration.
inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

struct SearchOptions {
  unsigned workers = 1;
  std::uint64_t budget = kDefaultSearchBudget;
};

/// All a <= b <= c <= bound with C_s(a, b, c) = 0, ascending. For each (a, b)
/// the quadratic in c is solved through its discriminant
/// (a^2 - s^2)(b^2 - s^2) and an exact square test.
/// Throws BudgetExceeded when the number of (a, b) pairs exceeds the budget.
std::vector<Triple> enumerate_solutions(std::uint64_t s, std::uint64_t bound,
                                        const SearchOptions& options = {});

struct FamilyIndex {
  Integer b;
  Index n;
  Index m;

  friend bool operator==(const FamilyIndex&, const FamilyIndex&) = default;
};

enum class MembershipStatus {
  kMember,
  kNotBaseReducible,   // reduction stops away from (s, p, p)
  kNonIntegralFamily,  // reduces to (s, p, p) but s does not divide 2p
};

struct Membership {
  MembershipStatus status;
  std::optional<FamilyIndex> index;
};

/// Whether t equals (R_n(b), R_{n+m}(b), R_m(b)) up to permutation, with
/// (b, n, m) recovered by labelling the reduction trace backwards from the
/// base triple (s, b, b) = (R_0, R_1, R_1). Reported with n <= m.
/// Throws NotASolution.
Membership family_membership(const Triple& t);

struct Classification {
  Triple triple;  // canonical
  std::array<ExactRatio, 3> conjugates;
  bool base = false;
  std::optional<FamilyIndex> r_family;
  std::size_t component_id = 0;  // index of the component's first triple
  std::size_t component_size = 1;
  bool isolated = false;          // no integral positive conjugate at all
  bool frontier_limited = false;  // some integral conjugate exceeds the bound

  std::vector<std::string> tags() const;
};

std::vector<Classification> classify(std::uint64_t s, std::uint64_t bound,
                                     const SearchOptions& options = {});

// Header "s,a,b,c,tags,conj_a,conj_b,conj_c"; tags joined by ';'.
void write_csv(std::ostream& out, const std::vector<Classification>& rows);
// One JSON object per line.
void write_jsonl(std::ostream& out, const std::vector<Classification>& rows);

}  // namespace cayley
