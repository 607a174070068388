#include "cayley/sequences.hpp"

#include <string>
#include <utility>

#include "cayley/error.hpp"

namespace cayley {
namespace {

// X_n of X_{k+1} = p X_k - q X_{k-1} from seeds (x0, x1).
Integer recurrence(Integer x0, Integer x1, const Integer& p, const Integer& q,
                   Index n) {
  if (n == 0) return x0;
  for (Index k = 1; k < n; ++k) {
    Integer next = p * x1 - q * x0;
    x0 = std::move(x1);
    x1 = std::move(next);
  }
  return x1;
}

std::vector<Integer> recurrence_prefix(Integer x0, Integer x1,
                                       const Integer& p, const Integer& q,
                                       Index count) {
  std::vector<Integer> out;
  out.reserve(count);
  if (count > 0) out.push_back(x0);
  if (count > 1) out.push_back(x1);
  for (Index k = 2; k < count; ++k) {
    out.push_back(p * out[k - 1] - q * out[k - 2]);
  }
  return out;
}

void require_positive_argument(const Integer& x) {
  if (sgn(x) <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "sequence argument must be positive, got " + to_string(x));
  }
}

}  // namespace

void RFamily::validate() const {
  if (sgn(s) <= 0 || sgn(b) <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "R-family needs s >= 1 and b >= 1, got s=" + to_string(s) +
                    " b=" + to_string(b));
  }
}

bool RFamily::is_integral() const { return divides(s, Integer(2 * b)); }

Integer RFamily::multiplier() const {
  validate();
  if (!is_integral()) {
    throw Error(ErrorCode::kNonIntegralFamily,
                "s=" + to_string(s) + " does not divide 2b=" +
                    to_string(Integer(2 * b)));
  }
  return Integer(2 * b / s);
}

Integer lucas_u(const LucasParams& params, Index n) {
  return recurrence(0, 1, params.p, params.q, n);
}

Integer lucas_v(const LucasParams& params, Index n) {
  return recurrence(2, params.p, params.p, params.q, n);
}

Integer cheb_t(Index n, const Integer& x) {
  require_positive_argument(x);
  return recurrence(1, x, Integer(2 * x), 1, n);
}

Integer cheb_u(Index n, const Integer& x) {
  require_positive_argument(x);
  return recurrence(1, Integer(2 * x), Integer(2 * x), 1, n);
}

Integer r_val(const RFamily& family, Index n) {
  const Integer m = family.multiplier();
  return recurrence(family.s, family.b, m, 1, n);
}

Integer r_star_val(const RFamily& family, Index n) {
  const Integer m = family.multiplier();
  return recurrence(1, m, m, 1, n);
}

std::vector<Integer> r_prefix(const RFamily& family, Index count) {
  const Integer m = family.multiplier();
  return recurrence_prefix(family.s, family.b, m, 1, count);
}

std::vector<Integer> r_star_prefix(const RFamily& family, Index count) {
  const Integer m = family.multiplier();
  return recurrence_prefix(1, m, m, 1, count);
}

std::vector<Integer> cheb_t_prefix(const Integer& x, Index count) {
  require_positive_argument(x);
  return recurrence_prefix(1, x, Integer(2 * x), 1, count);
}

RSequence::RSequence(RFamily family)
    : family_(std::move(family)), multiplier_(family_.multiplier()) {
  terms_.push_back(family_.s);
  terms_.push_back(family_.b);
}

Integer RSequence::at(Index n) const {
  std::lock_guard lock(mutex_);
  while (terms_.size() <= n) {
    const std::size_t k = terms_.size();
    terms_.push_back(multiplier_ * terms_[k - 1] - terms_[k - 2]);
  }
  return terms_[n];
}

}  // namespace cayley
