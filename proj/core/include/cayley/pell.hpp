#pragma once

// Pell equations solved by the Chebyshev / R-family sequences, together with
// an exhaustive-scan oracle used to check them.

#include <cstdint>
#include <ostream>
#include <string_view>
#include <vector>

#include "cayley/integer.hpp"
#include "cayley/sequences.hpp"

namespace cayley {

enum class PellForm {
  kZSquared,  // z^2 - d a^2 = rhs
  kASquared,  // a^2 - d z^2 = rhs
};

std::string_view to_string(PellForm form);  // "z2-da2" / "a2-dz2"
PellForm parse_pell_form(std::string_view text);

struct PellInstance {
  Integer d;
  Integer rhs;
  PellForm form = PellForm::kZSquared;

  // Throws DegenerateD unless d >= 2 and d is not a perfect square.
  void validate() const;
};

struct PellSolution {
  Integer z;
  Integer a;

  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// Instance z^2 - d a^2 = s^2 with d = y^2 - s^2, for the family (s, y).
PellInstance family_one_instance(const RFamily& family);

/// (z, a) = (R_n(y), R*_{n-1}(y)) for the family (s, y), n >= 1.
/// Throws NonIntegralFamily, DegenerateD, or InvalidArgument for n = 0.
PellSolution pell_family_one(const RFamily& family, Index n);

/// Instance a^2 - d z^2 = -s^2 d with y = R_n(p), d = y^2 - s^2.
PellInstance family_two_instance(const RFamily& family, Index n);

/// (z, a) = (R_m(p), s (R_{n+m}(p) - R_{|n-m|}(p)) / 2) for the family
/// (s, p), n, m >= 1. Throws NonIntegralFamily, DegenerateD, or NonIntegralA
/// when the scaled difference is odd.
PellSolution pell_family_two(const RFamily& family, Index n, Index m);

struct PellOracleOptions {
  bool include_zero = false;  // admit a = 0
  unsigned workers = 1;
};

/// Every solution with 1 <= z <= bound and a >= 1 (a >= 0 with include_zero),
/// found by scanning z with exact square tests. Ascending in z.
std::vector<PellSolution> pell_oracle(const PellInstance& instance,
                                      std::uint64_t bound,
                                      const PellOracleOptions& options = {});

bool verify_pell(const PellInstance& instance, const PellSolution& solution);

// {"d":..,"rhs":..,"form":"z2-da2","solutions":[[z,a],..],"provenance":".."}
void write_json(std::ostream& out, const PellInstance& instance,
                const std::vector<PellSolution>& solutions,
                std::string_view provenance);

}  // namespace cayley
