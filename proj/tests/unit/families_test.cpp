#include <gtest/gtest.h>

#include "qlgh/error.hpp"
#include "qlgh/families.hpp"

using namespace qlgh;

namespace {

MPoly v(Var x) { return MPoly::variable(x); }

const Rational kQs[] = {Rational(1, 2), Rational(2, 3), Rational(3)};

Rational sign(int k) { return Rational(k % 2 == 0 ? 1 : -1); }

// Explicit sums written out independently of the library constructors.
MPoly laguerre_oracle(const QContext& c, int n, int m) {
  MPoly out;
  for (int k = 0; m * k <= n; ++k) {
    Rational coeff = c.q_factorial(1, n) * c.power(m * choose2(k)) /
                     (c.q_factorial(m, k) * c.q_factorial(m, k) *
                      c.q_factorial(1, n - m * k));
    out += v(Var::x).pow(k) * v(Var::y).pow(n - m * k) * coeff;
  }
  return out;
}

MPoly gould_hopper_oracle(const QContext& c, int n, int m) {
  MPoly out;
  for (int k = 0; m * k <= n; ++k) {
    Rational semi(1);
    for (int j = 1; j <= k; ++j) semi *= c.q_number(1, m * j);
    Rational coeff = sign(k) * c.q_factorial(1, n) * c.power(m * choose2(k)) /
                     (c.q_factorial(1, n - m * k) * semi);
    out += v(Var::x).pow(n - m * k) * v(Var::y).pow(k) * coeff;
  }
  return out;
}

MPoly lghp_oracle(const QContext& c, int n, int m, int s) {
  MPoly out;
  for (int k = 0; s * k <= n; ++k) {
    Rational coeff = c.q_factorial(1, n) * c.power(s * choose2(k)) /
                     (c.q_factorial(s, k) * c.q_factorial(1, n - s * k));
    out += v(Var::z).pow(k) * laguerre_oracle(c, n - s * k, m) * coeff;
  }
  return out;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(Families, ClassicalExamples) {
  MPoly x = v(Var::x), y = v(Var::y);
  EXPECT_EQ(classical_gh(2, 2), x * x + y * Rational(2));
  EXPECT_EQ(classical_gh(0, 3), MPoly(1));
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(substitute(classical_gh(n, 2), {{Var::y, MPoly()}}), x.pow(n));
  }
}

TEST(Families, ClassicalGouldHopperSum) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 8; ++n) {
      MPoly expected;
      for (int k = 0; m * k <= n; ++k) {
        expected += v(Var::x).pow(n - m * k) * v(Var::y).pow(k) *
                    Rational(factorial(n), factorial(k) * factorial(n - m * k));
      }
      EXPECT_EQ(classical_gh(n, m), expected);
    }
  }
}

TEST(Families, QExamples) {
  for (const auto& q : kQs) {
    QContext c(q);
    MPoly x = v(Var::x), y = v(Var::y), z = v(Var::z);
    Rational two = Rational(1) + q;
    EXPECT_EQ(q_gh(c, 2, 2), x * x - y);
    EXPECT_EQ(q_2dlp(c, 2, 2), y * y + x * two);
    EXPECT_EQ(q_lghp(c, 2, 2, 2), y * y + x * two + z * two);
    EXPECT_EQ(q_hermite(c, 2), y * y + z * two);
    for (int n = 0; n <= 5; ++n) {
      EXPECT_EQ(substitute(q_gh(c, n, 2), {{Var::y, MPoly()}}), x.pow(n));
      EXPECT_EQ(substitute(q_2dlp(c, n, 2), {{Var::x, MPoly()}}), y.pow(n));
      EXPECT_EQ(substitute(q_hermite(c, n), {{Var::z, MPoly()}}), y.pow(n));
    }
    EXPECT_EQ(q_2dlp(c, 0, 3), MPoly(1));
    EXPECT_EQ(q_lghp(c, 0, 2, 3), MPoly(1));
  }
}

TEST(Families, ExplicitSumsMatchIndependentOracles) {
  for (const auto& q : kQs) {
    QContext c(q);
    for (int m = 1; m <= 3; ++m) {
      for (int n = 0; n <= 8; ++n) {
        EXPECT_EQ(q_2dlp(c, n, m), laguerre_oracle(c, n, m));
        EXPECT_EQ(q_gh(c, n, m), gould_hopper_oracle(c, n, m));
        for (int s = 1; s <= 3; ++s) {
          EXPECT_EQ(q_lghp(c, n, m, s), lghp_oracle(c, n, m, s));
        }
      }
    }
  }
}

TEST(Families, ZReductionGivesLaguerre) {
  for (const auto& q : kQs) {
    QContext c(q);
    for (int m = 1; m <= 3; ++m) {
      for (int s = 1; s <= 3; ++s) {
        for (int n = 0; n <= 8; ++n) {
          EXPECT_EQ(substitute(q_lghp(c, n, m, s), {{Var::z, MPoly()}}),
                    q_2dlp(c, n, m));
        }
      }
    }
  }
}

TEST(Families, HermiteIsLghpAtXZero) {
  QContext c(Rational(2, 3));
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 8; ++n) {
      EXPECT_EQ(substitute(q_lghp(c, n, m, 2), {{Var::x, MPoly()}}), q_hermite(c, n));
    }
  }
}

TEST(Families, OperationalFormExamples) {
  QContext c(Rational(1, 2));
  MPoly x = v(Var::x), y = v(Var::y), z = v(Var::z);
  EXPECT_EQ(q_2dlp_operational(c, 0, 2), MPoly(1));
  EXPECT_EQ(q_2dlp_operational(c, 2, 2), y * y + x * Rational(3, 2));
  EXPECT_EQ(q_lghp_operational_b(c, 0, 2, 2), MPoly(1));
  EXPECT_EQ(q_lghp_operational_b(c, 2, 2, 2),
            y * y + x * Rational(3, 2) + z * Rational(3, 2));
}

TEST(Families, OperationalFormsAgreeWithExplicitSums) {
  for (const auto& q : kQs) {
    QContext c(q);
    for (int m = 1; m <= 3; ++m) {
      for (int n = 0; n <= 8; ++n) {
        EXPECT_EQ(q_2dlp_operational(c, n, m), q_2dlp(c, n, m));
        for (int s = 1; s <= 3; ++s) {
          MPoly explicit_sum = q_lghp(c, n, m, s);
          EXPECT_EQ(q_lghp_operational_a(c, n, m, s), explicit_sum);
          EXPECT_EQ(q_lghp_operational_b(c, n, m, s), explicit_sum);
        }
      }
    }
  }
}

TEST(Families, OperationalFormsNeedQOtherThanOne) {
  QContext one(Rational(1));
  EXPECT_THROW(q_2dlp_operational(one, 2, 2), DomainError);
  EXPECT_THROW(q_lghp_operational_b(one, 2, 2, 2), DomainError);
}

TEST(Families, QGouldHopperAtQOne) {
  // G(x,y|1) = g(x, -y/m)
  QContext one(Rational(1));
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 8; ++n) {
      MPoly rescaled = substitute(classical_gh(n, m),
                                  {{Var::y, v(Var::y) * Rational(-1, m)}});
      EXPECT_EQ(q_gh(one, n, m), rescaled);
    }
  }
}

TEST(Families, ClassicalLimitsOfLaguerreFamilies) {
  QContext one(Rational(1));
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 7; ++n) {
      EXPECT_EQ(q_2dlp(one, n, m), classical_2dlp(n, m));
      for (int s = 1; s <= 3; ++s) {
        EXPECT_EQ(q_lghp(one, n, m, s), classical_lghp(n, m, s));
      }
    }
  }
}

TEST(Families, VanishingDenominators) {
  QContext c(Rational(-1));
  EXPECT_THROW(q_2dlp(c, 4, 2), VanishingFactorError);
}

TEST(Families, CacheReturnsTheSameValues) {
  QContext c(Rational(3));
  FamilyCache cache(c);
  FamilySpec spec{FamilyKind::q_lghp, 5, 2, 3};
  EXPECT_EQ(cache.get(spec), q_lghp(c, 5, 2, 3));
  EXPECT_EQ(cache.get(spec), cache.get(spec));
  EXPECT_EQ(family_label(spec), "LH(5,2,3)");
  EXPECT_THROW(build_family(c, {FamilyKind::q_2dlp, -1, 1, 1}), DomainError);
}
