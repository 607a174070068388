#pragma once

// Exact evaluation of the Lucas, Chebyshev and scaled-Chebyshev (R-family)
// sequences. All values are computed by integer recurrence.

#include <cstdint>
#include <mutex>
#include <vector>

#include "cayley/integer.hpp"

namespace cayley {

// Sequence index n >= 0.
using Index = std::uint32_t;

// Parameters of the Lucas recurrence X_{k+1} = P X_k - Q X_{k-1}.
struct LucasParams {
  Integer p;
  Integer q;
};

// The R-family of surface parameter s evaluated at base value b:
//   R_0 = s, R_1 = b, R_{k+1} = (2b/s) R_k - R_{k-1}.
// The sequence is integer valued iff s | 2b.
struct RFamily {
  Integer s;
  Integer b;

  // Throws Error(InvalidArgument) unless s >= 1 and b >= 1.
  void validate() const;
  bool is_integral() const;
  // 2b/s; throws Error(NonIntegralFamily) when s does not divide 2b.
  Integer multiplier() const;
};

/// U_n(P,Q): U_0 = 0, U_1 = 1.
Integer lucas_u(const LucasParams& params, Index n);

/// V_n(P,Q): V_0 = 2, V_1 = P.
Integer lucas_v(const LucasParams& params, Index n);

/// Chebyshev polynomial of the first kind, T_0 = 1, T_1 = x,
/// T_{k+1} = 2x T_k - T_{k-1}. Requires x >= 1.
Integer cheb_t(Index n, const Integer& x);

/// Chebyshev polynomial of the second kind, U_0 = 1, U_1 = 2x. Requires x >= 1.
Integer cheb_u(Index n, const Integer& x);

/// R_n(b) for the family (s, b). Throws NonIntegralFamily unless s | 2b.
Integer r_val(const RFamily& family, Index n);

/// R*_n(b): R*_0 = 1, R*_1 = 2b/s, same recurrence as r_val.
Integer r_star_val(const RFamily& family, Index n);

// First `count` terms R_0, ..., R_{count-1}.
std::vector<Integer> r_prefix(const RFamily& family, Index count);
std::vector<Integer> r_star_prefix(const RFamily& family, Index count);
std::vector<Integer> cheb_t_prefix(const Integer& x, Index count);

// Memoizing view of one R-family. Extends its cached prefix on demand;
// safe to share across threads.
class RSequence {
 public:
  explicit RSequence(RFamily family);

  const RFamily& family() const { return family_; }
  Integer at(Index n) const;

 private:
  RFamily family_;
  Integer multiplier_;
  mutable std::mutex mutex_;
  mutable std::vector<Integer> terms_;
};

}  // namespace cayley
