#include "cayley/pell.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "cayley/error.hpp"
#include "cayley/json_writer.hpp"

namespace cayley {
namespace {

Integer degenerate_checked_d(const Integer& y, const Integer& s) {
  Integer d = y * y - s * s;
  if (d < 2 || is_perfect_square(d)) {
    throw Error(ErrorCode::kDegenerateD,
                "d = y^2 - s^2 = " + to_string(d) + " for y=" + to_string(y) +
                    ", s=" + to_string(s));
  }
  return d;
}

// Solutions with z in [first, last], stepping by `stride`.
std::vector<PellSolution> scan(const PellInstance& inst, std::uint64_t first,
                               std::uint64_t last, std::uint64_t stride,
                               bool include_zero) {
  std::vector<PellSolution> out;
  Integer z;
  Integer a_squared;
  if (first > last) return out;
  const std::uint64_t count = (last - first) / stride + 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    z = static_cast<unsigned long>(first + i * stride);
    if (inst.form == PellForm::kZSquared) {
      // d a^2 = z^2 - rhs
      Integer v = z * z - inst.rhs;
      if (sgn(v) < 0 || !divides(inst.d, v)) continue;
      a_squared = v / inst.d;
    } else {
      a_squared = inst.rhs + inst.d * z * z;
      if (sgn(a_squared) < 0) continue;
    }
    if (!is_perfect_square(a_squared)) continue;
    Integer a = isqrt(a_squared);
    if (sgn(a) == 0 && !include_zero) continue;
    out.push_back({z, std::move(a)});
  }
  return out;
}

}  // namespace

std::string_view to_string(PellForm form) {
  return form == PellForm::kZSquared ? "z2-da2" : "a2-dz2";
}

PellForm parse_pell_form(std::string_view text) {
  if (text == "z2-da2") return PellForm::kZSquared;
  if (text == "a2-dz2") return PellForm::kASquared;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown Pell form '" + std::string(text) + "'");
}

void PellInstance::validate() const {
  if (d < 2 || is_perfect_square(d)) {
    throw Error(ErrorCode::kDegenerateD,
                "d must be >= 2 and not a square, got " + to_string(d));
  }
}

PellInstance family_one_instance(const RFamily& family) {
  family.multiplier();
  return {degenerate_checked_d(family.b, family.s),
          Integer(family.s * family.s), PellForm::kZSquared};
}

PellSolution pell_family_one(const RFamily& family, Index n) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "family-one index n must be >= 1");
  }
  const PellInstance inst = family_one_instance(family);
  PellSolution sol{r_val(family, n), r_star_val(family, n - 1)};
  if (!verify_pell(inst, sol)) {
    throw Error(ErrorCode::kNotASolution,
                "family-one identity failed at n=" + std::to_string(n));
  }
  return sol;
}

PellInstance family_two_instance(const RFamily& family, Index n) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "family-two index n must be >= 1");
  }
  const Integer y = r_val(family, n);
  Integer d = degenerate_checked_d(y, family.s);
  Integer rhs = -family.s * family.s * d;
  return {std::move(d), std::move(rhs), PellForm::kASquared};
}

PellSolution pell_family_two(const RFamily& family, Index n, Index m) {
  if (m == 0) {
    throw Error(ErrorCode::kInvalidArgument, "family-two index m must be >= 1");
  }
  const PellInstance inst = family_two_instance(family, n);
  RSequence seq(family);
  const Integer scaled =
      family.s * (seq.at(n + m) - seq.at(n > m ? n - m : m - n));
  if (!divides(2, scaled)) {
    throw Error(ErrorCode::kNonIntegralA,
                "s (R_{n+m} - R_{|n-m|}) = " + to_string(scaled) + " is odd");
  }
  PellSolution sol{seq.at(m), Integer(scaled / 2)};
  if (!verify_pell(inst, sol)) {
    throw Error(ErrorCode::kNotASolution,
                "family-two identity failed at n=" + std::to_string(n) +
                    ", m=" + std::to_string(m));
  }
  return sol;
}

std::vector<PellSolution> pell_oracle(const PellInstance& instance,
                                      std::uint64_t bound,
                                      const PellOracleOptions& options) {
  instance.validate();
  if (bound == 0) return {};
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(options.workers, 1, bound);
  if (workers == 1) {
    return scan(instance, 1, bound, 1, options.include_zero);
  }
  std::vector<std::vector<PellSolution>> parts(workers);
  {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        parts[w] = scan(instance, 1 + w, bound, workers, options.include_zero);
      });
    }
  }
  std::vector<PellSolution> out;
  for (auto& part : parts) {
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end(),
            [](const PellSolution& x, const PellSolution& y) {
              return x.z < y.z;
            });
  return out;
}

bool verify_pell(const PellInstance& instance, const PellSolution& solution) {
  const Integer& z = solution.z;
  const Integer& a = solution.a;
  if (instance.form == PellForm::kZSquared) {
    return z * z - instance.d * a * a == instance.rhs;
  }
  return a * a - instance.d * z * z == instance.rhs;
}

void write_json(std::ostream& out, const PellInstance& instance,
                const std::vector<PellSolution>& solutions,
                std::string_view provenance) {
  JsonWriter w(out);
  w.begin_object();
  w.key("d").value(instance.d);
  w.key("rhs").value(instance.rhs);
  w.key("form").value(to_string(instance.form));
  w.key("solutions").begin_array();
  for (const PellSolution& s : solutions) {
    w.begin_array().value(s.z).value(s.a).end_array();
  }
  w.end_array();
  w.key("provenance").value(provenance);
  w.end_object();
}

}  // namespace cayley
