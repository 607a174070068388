#include "cayley/sequences.hpp"

#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "cayley/error.hpp"
#include "oracles.hpp"

namespace cayley {
namespace {

using testing::chebyshev_power;
using testing::rational_chebyshev_t;

Integer abs_diff_index_t(Index n, Index m, const Integer& x) {
  return cheb_t(n > m ? n - m : m - n, x);
}

TEST(LucasTest, Examples) {
  EXPECT_EQ(lucas_u({1, -1}, 10), 55);
  EXPECT_EQ(lucas_u({3, 2}, 5), 31);
  EXPECT_EQ(lucas_u({17, 5}, 1), 1);
  EXPECT_EQ(lucas_u({17, 5}, 0), 0);
  EXPECT_EQ(lucas_v({2, 1}, 7), 2);
  EXPECT_EQ(lucas_v({3, 1}, 4), 47);
  EXPECT_EQ(lucas_v({-4, 9}, 0), 2);
  EXPECT_EQ(lucas_v({-4, 9}, 1), -4);
}

TEST(LucasTest, MersenneClosedForm) {
  for (Index n = 0; n <= 80; ++n) {
    Integer expected = 1;
    expected <<= n;
    EXPECT_EQ(lucas_u({3, 2}, n), expected - 1) << n;
  }
}

TEST(LucasTest, VIsConstantAtTwoOne) {
  for (Index n = 0; n < 30; ++n) EXPECT_EQ(lucas_v({2, 1}, n), 2);
}

TEST(ChebyshevTest, Examples) {
  for (long x : {1, 5, 1000}) EXPECT_EQ(cheb_t(0, x), 1);
  EXPECT_EQ(cheb_t(6, 2), 1351);
  EXPECT_EQ(cheb_t(2, 4), 31);
  EXPECT_EQ(cheb_u(0, 9), 1);
  EXPECT_EQ(cheb_u(2, 2), 15);
  EXPECT_EQ(cheb_u(5, 2), 780);
}

TEST(ChebyshevTest, MatchesQuadraticSurdPowers) {
  for (long x = 1; x <= 25; ++x) {
    for (Index n = 1; n <= 40; ++n) {
      const testing::Surd p = chebyshev_power(x, n);
      EXPECT_EQ(cheb_t(n, x), p.u) << "T_" << n << "(" << x << ")";
      EXPECT_EQ(cheb_u(n - 1, x), p.v) << "U_" << n - 1 << "(" << x << ")";
    }
  }
}

TEST(ChebyshevTest, RejectsNonPositiveArgument) {
  EXPECT_THROW(cheb_t(3, 0), Error);
  EXPECT_THROW(cheb_u(3, -2), Error);
}

TEST(ChebyshevTest, ProductIdentity) {
  for (long x = 1; x <= 10; ++x) {
    for (Index n = 0; n <= 12; ++n) {
      for (Index m = 0; m <= 12; ++m) {
        EXPECT_EQ(2 * cheb_t(n, x) * cheb_t(m, x),
                  cheb_t(n + m, x) + abs_diff_index_t(n, m, x));
      }
    }
  }
}

TEST(ChebyshevTest, SquareRootIdentity) {
  for (long x = 1; x <= 10; ++x) {
    for (Index n = 0; n <= 12; ++n) {
      for (Index m = 0; m <= 12; ++m) {
        const Integer tn = cheb_t(n, x);
        const Integer tm = cheb_t(m, x);
        const Integer diff = cheb_t(n + m, x) - abs_diff_index_t(n, m, x);
        EXPECT_EQ(4 * (tn * tn - 1) * (tm * tm - 1), diff * diff);
      }
    }
  }
}

TEST(ChebyshevTest, Composition) {
  for (long x = 1; x <= 6; ++x) {
    for (Index a = 1; a <= 6; ++a) {
      for (Index b = 1; b <= 6; ++b) {
        EXPECT_EQ(cheb_t(a * b, x), cheb_t(a, cheb_t(b, x)));
      }
    }
  }
}

TEST(LucasChebyshevTest, LucasVAtTwiceArgumentIsTwiceT) {
  for (long x = 1; x <= 8; ++x) {
    for (Index n = 0; n <= 12; ++n) {
      EXPECT_EQ(lucas_v({2 * x, 1}, n), 2 * cheb_t(n, x));
    }
  }
}

TEST(RFamilyTest, Examples) {
  EXPECT_EQ(r_val({3, 6}, 6), 4053);
  EXPECT_EQ(r_val({3, 6}, 0), 3);
  EXPECT_EQ(r_val({5, 5}, 9), 5);
  EXPECT_EQ(r_star_val({3, 6}, 0), 1);
  EXPECT_EQ(r_star_val({3, 6}, 2), 15);
  EXPECT_EQ(r_star_val({1, 2}, 3), 56);
  EXPECT_EQ(r_star_val({1, 2}, 3), cheb_u(3, 2));
  const std::vector<Integer> expected{3, 6, 21, 78, 291, 1086, 4053};
  EXPECT_EQ(r_prefix({3, 6}, 7), expected);
}

TEST(RFamilyTest, Errors) {
  try {
    r_val({4, 3}, 2);
    FAIL() << "expected NonIntegralFamily";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonIntegralFamily);
  }
  EXPECT_THROW(r_star_val({7, 3}, 1), Error);
  EXPECT_THROW(r_val({0, 3}, 1), Error);
  EXPECT_THROW(r_val({3, 0}, 1), Error);
  EXPECT_THROW(r_val({3, -6}, 1), Error);
}

std::vector<RFamily> integral_families(long max_s, long max_b) {
  std::vector<RFamily> out;
  for (long s = 1; s <= max_s; ++s) {
    for (long b = 1; b <= max_b; ++b) {
      if ((2 * b) % s == 0) out.push_back({s, b});
    }
  }
  return out;
}

TEST(RFamilyTest, EqualsScaledChebyshevAtRationalPoint) {
  for (const RFamily& f : integral_families(12, 40)) {
    const mpq_class x(f.b, f.s);
    for (Index n = 0; n <= 12; ++n) {
      const mpq_class expected = f.s * rational_chebyshev_t(n, x);
      EXPECT_EQ(mpq_class(r_val(f, n)), expected)
          << "s=" << f.s << " b=" << f.b << " n=" << n;
    }
  }
}

TEST(RFamilyTest, SquareRootIdentity) {
  for (const RFamily& f : integral_families(8, 40)) {
    const Integer s2 = f.s * f.s;
    for (Index n = 0; n <= 10; ++n) {
      for (Index m = 0; m <= 10; ++m) {
        const Integer rn = r_val(f, n);
        const Integer rm = r_val(f, m);
        const Integer diff = r_val(f, n + m) - r_val(f, n > m ? n - m : m - n);
        EXPECT_EQ(4 * (rn * rn - s2) * (rm * rm - s2), s2 * diff * diff);
      }
    }
  }
}

TEST(RFamilyTest, SurfaceTwoIsLucas) {
  for (long p = 1; p <= 10; ++p) {
    for (Index n = 0; n <= 12; ++n) {
      EXPECT_EQ(r_val({2, p}, n), lucas_v({p, 1}, n));
      if (n >= 1) EXPECT_EQ(r_star_val({2, p}, n - 1), lucas_u({p, 1}, n));
    }
  }
}

TEST(RSequenceTest, CachedMatchesUncachedAcrossThreads) {
  const RSequence seq({6, 9});
  std::vector<std::vector<Integer>> seen(4);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 4; ++t) {
      pool.emplace_back([&, t] {
        for (Index n = 0; n < 60; ++n) {
          seen[t].push_back(seq.at(t % 2 ? 59 - n : n));
        }
      });
    }
  }
  for (int t = 0; t < 4; ++t) {
    for (Index n = 0; n < 60; ++n) {
      const Index idx = t % 2 ? 59 - n : n;
      EXPECT_EQ(seen[t][n], r_val({6, 9}, idx));
    }
  }
}

}  // namespace
}  // namespace cayley
