#include <gtest/gtest.h>

#include "qlgh/error.hpp"
#include "qlgh/qops.hpp"
#include "qlgh/qseries.hpp"

using namespace qlgh;

namespace {

MPoly v(Var x) { return MPoly::variable(x); }

}  // namespace

TEST(TSeries, KernelExamples) {
  QContext ctx(Rational(1, 2));
  MPoly x = v(Var::x), y = v(Var::y), z = v(Var::z);
  TSeries e = series_eq(ctx, y, 1, 2);
  EXPECT_EQ(e.coeff(0), MPoly(1));
  EXPECT_EQ(e.coeff(1), y);
  EXPECT_EQ(e.coeff(2), y * y * ctx.inverse_q_factorial(1, 2));

  TSeries E = series_EQm(ctx, 2, z, 2, 2);
  EXPECT_EQ(E.coeff(0), MPoly(1));
  EXPECT_TRUE(E.coeff(1).is_zero());
  EXPECT_EQ(E.coeff(2), z);

  TSeries eps = series_bessel_tricomi(ctx, 2, 0, -x, 2, 2);
  EXPECT_EQ(eps.coeff(0), MPoly(1));
  EXPECT_TRUE(eps.coeff(1).is_zero());
  EXPECT_EQ(eps.coeff(2), x);
}

TEST(TSeries, ProductExamples) {
  MPoly t1(1);
  TSeries a(2, {MPoly(1), MPoly(1), MPoly()});
  TSeries b(2, {MPoly(1), MPoly(-1), MPoly()});
  TSeries prod = a * b;
  EXPECT_EQ(prod.coeff(0), MPoly(1));
  EXPECT_TRUE(prod.coeff(1).is_zero());
  EXPECT_EQ(prod.coeff(2), MPoly(-1));
  EXPECT_EQ(a * TSeries::one(2), a);
  EXPECT_THROW(a.coeff(3), DomainError);
}

TEST(TSeries, ExponentialsAreInverse) {
  QContext ctx(Rational(2, 3));
  MPoly a = v(Var::u);
  for (unsigned N = 0; N <= 10; ++N) {
    TSeries prod = series_eq(ctx, a, 1, N) * series_EQm(ctx, 1, -a, 1, N);
    EXPECT_EQ(prod, TSeries::one(N)) << "N = " << N;
  }
}

TEST(TSeries, BesselTricomiCoefficients) {
  // Order-n kernel: sum_k (-1)^k q^{m C(k,2)} c^k t^{pk} / ([k]_{q^m}! [n+k]_{q^m}!)
  QContext ctx(Rational(3));
  MPoly c = v(Var::x);
  for (int m = 1; m <= 3; ++m) {
    for (unsigned n = 0; n <= 2; ++n) {
      TSeries s = series_bessel_tricomi(ctx, m, n, c, 1, 6);
      for (int k = 0; k <= 6; ++k) {
        Rational expected = Rational(k % 2 == 0 ? 1 : -1) * ctx.power(m * choose2(k)) *
                            ctx.inverse_q_factorial(m, k) *
                            ctx.inverse_q_factorial(m, static_cast<int>(n) + k);
        EXPECT_EQ(s.coeff(static_cast<unsigned>(k)), c.pow(static_cast<unsigned>(k)) * expected);
      }
    }
  }
}

TEST(TSeries, VanishingFactorialIsAnError) {
  // q = -1 kills [2]_q.
  QContext ctx(Rational(-1));
  EXPECT_NO_THROW(series_eq(ctx, v(Var::y), 1, 1));
  EXPECT_THROW(series_eq(ctx, v(Var::y), 1, 2), VanishingFactorError);
}

TEST(TSeries, RejectsDegenerateArguments) {
  QContext ctx(Rational(1, 2));
  EXPECT_THROW(series_eq(ctx, v(Var::y), 0, 3), DomainError);
  EXPECT_THROW(series_eq(ctx, v(Var::t), 1, 3), DomainError);
  EXPECT_EQ(series_eq(ctx, MPoly(), 0, 3), TSeries::one(3));
}
