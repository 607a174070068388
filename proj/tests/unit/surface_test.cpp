#include "cayley/surface.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cayley/error.hpp"
#include "cayley/search.hpp"
#include "oracles.hpp"

namespace cayley {
namespace {

using testing::brute_force_solutions;
using testing::cayley_poly;
using testing::scan_roots;

Triple tri(long s, long a, long b, long c) { return Triple(s, {a, b, c}); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvariantViolation;
}

TEST(TripleTest, RejectsNonPositive) {
  EXPECT_EQ(code_of([] { tri(1, 0, 1, 1); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { tri(0, 1, 1, 1); }), ErrorCode::kInvalidArgument);
  EXPECT_THROW(parse_triple(3, "1,2"), Error);
  EXPECT_THROW(parse_triple(3, "1,2,x"), Error);
  EXPECT_EQ(parse_triple(3, "21,4053,291"), tri(3, 21, 4053, 291));
}

TEST(EvalTest, Examples) {
  EXPECT_EQ(eval_c(tri(3, 21, 4053, 291)), 0);
  EXPECT_EQ(eval_c(tri(3, 21, 56451, 4053)), 0);
  EXPECT_EQ(eval_c(tri(1, 2, 26, 7)), 0);
  EXPECT_EQ(eval_c(tri(24, 26, 51, 74)), 0);
  EXPECT_EQ(eval_c(tri(12, 13, 15, 20)), 0);
  EXPECT_EQ(eval_c(tri(12, 15, 20, 37)), 0);
  EXPECT_EQ(eval_c(tri(3, 21, 78, 291)), -679725);
  EXPECT_EQ(eval_c(tri(3, 21, 78, 291)), cayley_poly(3, 21, 78, 291));
  EXPECT_EQ(code_of([] { require_solution(tri(3, 21, 78, 291)); }),
            ErrorCode::kNotASolution);
}

TEST(ConjugateTest, IsolatedExample) {
  const Triple t = tri(24, 26, 74, 51);
  EXPECT_EQ(conjugate_component(t, Component::kA).to_string(), "577/2");
  EXPECT_EQ(conjugate_component(t, Component::kB).to_string(), "73/2");
  EXPECT_EQ(conjugate_component(t, Component::kC).to_string(), "328/3");
  EXPECT_TRUE(neighbors(t).empty());
}

TEST(ConjugateTest, RequiresSolution) {
  EXPECT_EQ(code_of([] { conjugate_component(tri(3, 1, 2, 3), Component::kA); }),
            ErrorCode::kNotASolution);
}

TEST(NeighborsTest, SurfaceOneExample) {
  const std::vector<Triple> expected{tri(1, 362, 26, 7), tri(1, 2, 2, 7),
                                     tri(1, 2, 26, 97)};
  EXPECT_EQ(neighbors(tri(1, 2, 26, 7)), expected);
}

TEST(NeighborsTest, ChainExample) {
  const auto n = neighbors(tri(3, 21, 4053, 291));
  ASSERT_EQ(n.size(), 3u);
  EXPECT_EQ(n[0], tri(3, 786261, 4053, 291));
  EXPECT_EQ(n[1], tri(3, 21, 21, 291));
  EXPECT_EQ(n[2], tri(3, 21, 4053, 56451));
}

// The other positive roots of the quadratic in each slot, found by scanning,
// must be exactly the neighbors.
TEST(NeighborsTest, AgreesWithRootScan) {
  for (long s = 1; s <= 6; ++s) {
    for (const auto& v : brute_force_solutions(s, 60)) {
      const Triple t = tri(s, v[0], v[1], v[2]);
      std::vector<Triple> expected;
      for (std::size_t i = 0; i < 3; ++i) {
        const mpz_class y = v[(i + 1) % 3], z = v[(i + 2) % 3];
        const long limit = mpz_class(2 * y * z / s + 1).get_si();
        const std::vector<long> roots = scan_roots(s, y, z, limit);
        for (long r : roots) {
          if (r == v[i]) continue;
          auto vals = t.values();
          vals[i] = r;
          expected.emplace_back(s, vals);
        }
      }
      EXPECT_EQ(neighbors(t), expected) << s << ": " << t.to_string();
    }
  }
}

TEST(NeighborsTest, ConjugationIsAnInvolution) {
  for (long s = 1; s <= 8; ++s) {
    for (const auto& v : brute_force_solutions(s, 70)) {
      const Triple t = tri(s, v[0], v[1], v[2]);
      for (const Triple& n : neighbors(t)) {
        std::size_t changed = 3;
        for (std::size_t i = 0; i < 3; ++i) {
          if (n[i] != t[i]) changed = i;
        }
        ASSERT_LT(changed, 3u);
        const ExactRatio back =
            conjugate_component(n, kAllComponents[changed]);
        EXPECT_TRUE(back.is_integral());
        EXPECT_EQ(back.to_integer(), t[changed]);
      }
    }
  }
}

TEST(VietaTest, SumAndProductOfConjugates) {
  for (std::uint64_t s = 1; s <= 6; ++s) {
    for (const Triple& t : enumerate_solutions(s, 600)) {
      for (std::size_t i = 0; i < 3; ++i) {
        const Integer& x = t[i];
        const Integer& y = t[(i + 1) % 3];
        const Integer& z = t[(i + 2) % 3];
        const ExactRatio xbar = conjugate_component(t, kAllComponents[i]);
        EXPECT_EQ(xbar + ExactRatio(x), ExactRatio(Integer(2 * y * z), t.s()));
        EXPECT_EQ(xbar * ExactRatio(x),
                  ExactRatio(Integer(y * y + z * z - t.s() * t.s())));
      }
    }
  }
}

TEST(FamilyTest, Examples) {
  EXPECT_EQ(family_triple({3, 6}, 2, 4), tri(3, 21, 4053, 291));
  EXPECT_EQ(family_triple({5, 10}, 0, 0), tri(5, 5, 5, 5));
  EXPECT_EQ(family_triple({1, 2}, 1, 1), tri(1, 2, 7, 2));
  EXPECT_EQ(code_of([] { family_triple({7, 9}, 0, 1); }),
            ErrorCode::kNonIntegralFamily);
  EXPECT_EQ(code_of([] { family_triple({2, 1}, 1, 2); }),
            ErrorCode::kNonPositiveResult);
}

TEST(FamilyTest, RandomizedDrawsLieOnSurface) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> s_dist(1, 10), b_dist(1, 30);
  std::uniform_int_distribution<Index> idx(0, 8);
  int drawn = 0;
  while (drawn < 200) {
    const long s = s_dist(rng), b = b_dist(rng);
    if ((2 * b) % s != 0) continue;
    const RFamily f{s, b};
    const Index n = idx(rng), m = idx(rng);
    const auto v = family_values(f, n, m);
    EXPECT_EQ(eval_c(s, v[0], v[1], v[2]), 0);
    if (2 * b > s) EXPECT_EQ(eval_c(family_triple(f, n, m)), 0);
    ++drawn;
  }
}

TEST(ShapeTest, SingularAndBase) {
  EXPECT_TRUE(is_singular(tri(1, 2, 1, 2)));
  EXPECT_FALSE(is_singular(tri(2, 2, 1, 2)));
  EXPECT_FALSE(is_singular(tri(1, 2, 26, 7)));
  EXPECT_TRUE(is_base(tri(3, 6, 3, 6)));
  EXPECT_TRUE(is_base(tri(3, 3, 3, 3)));
  EXPECT_FALSE(is_base(tri(3, 6, 6, 21)));
}

TEST(ReduceTest, Examples) {
  const std::vector<Triple> expected{tri(1, 2, 26, 7), tri(1, 2, 2, 7),
                                     tri(1, 2, 2, 1)};
  EXPECT_EQ(reduce(tri(1, 2, 26, 7)), expected);
  const auto trace = reduce(tri(3, 21, 4053, 291));
  ASSERT_FALSE(trace.empty());
  EXPECT_TRUE(is_base(trace.back()));
  EXPECT_EQ(reduce(tri(24, 26, 51, 74)).size(), 1u);
  EXPECT_THROW(reduce(tri(3, 21, 78, 291)), Error);
}

TEST(ReduceTest, ReplacedComponentStrictlyDecreases) {
  for (long s = 1; s <= 8; ++s) {
    for (const auto& v : brute_force_solutions(s, 70)) {
      const auto trace = reduce(tri(s, v[0], v[1], v[2]));
      for (std::size_t k = 1; k < trace.size(); ++k) {
        int changed = 0;
        for (std::size_t i = 0; i < 3; ++i) {
          if (trace[k][i] != trace[k - 1][i]) {
            ++changed;
            EXPECT_LT(trace[k][i], trace[k - 1][i]);
          }
        }
        EXPECT_EQ(changed, 1);
        EXPECT_TRUE(is_solution(trace[k]));
        if (s == 1) EXPECT_LT(trace[k].max(), trace[k - 1].max());
      }
    }
  }
}

TEST(ReduceTest, SurfaceOneTerminatesAtSingular) {
  for (const Triple& t : enumerate_solutions(1, 2000)) {
    const auto trace = reduce(t);
    EXPECT_TRUE(is_singular(trace.back())) << t.to_string();
  }
}

TEST(EuclidTest, Paths) {
  const std::vector<IndexPair> expected{{2, 4}, {2, 2}, {2, 0}};
  EXPECT_EQ(euclid_index_path(2, 4), expected);
  const std::vector<IndexPair> single{{0, 5}};
  EXPECT_EQ(euclid_index_path(0, 5), single);
  const std::vector<IndexPair> down{{3, 1}, {2, 1}, {1, 1}, {1, 0}};
  EXPECT_EQ(euclid_index_path(3, 1), down);
  EXPECT_EQ(code_of([] { euclid_index_path(0, 0); }), ErrorCode::kBothZero);
}

// Reducing a family triple walks the same number of steps as the index pair.
TEST(EuclidTest, TraceLengthMatchesReduction) {
  for (long s = 1; s <= 6; ++s) {
    for (long b = s; b <= 20; ++b) {
      if ((2 * b) % s != 0 || 2 * b <= 2 * s) continue;
      for (Index n = 1; n <= 6; ++n) {
        for (Index m = 1; m <= 6; ++m) {
          const Triple t = family_triple({s, b}, n, m);
          EXPECT_EQ(reduce(t).size(), euclid_index_path(n, m).size())
              << "s=" << s << " b=" << b << " n=" << n << " m=" << m;
        }
      }
    }
  }
}

}  // namespace
}  // namespace cayley
