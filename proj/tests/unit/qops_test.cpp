#include <gtest/gtest.h>

#include "qlgh/error.hpp"
#include "qlgh/qops.hpp"
#include "qlgh/qcontext.hpp"

using namespace qlgh;

namespace {

MPoly v(Var x) { return MPoly::variable(x); }

// D_x^{q^m} f = (f(q^m x) - f(x)) / ((q^m - 1) x), applied literally.
MPoly literal_qdiff(const QContext& ctx, int m, const MPoly& f) {
  MPoly x = v(Var::x);
  Rational qm = ctx.power(m);
  MPoly numer = substitute(f, {{Var::x, x * qm}}) - f;
  // Divide each term by x; every term of numer carries an x.
  MPoly out;
  for (const auto& [e, c] : numer.terms()) {
    Exponents lowered = e;
    --lowered[index(Var::x)];
    out.add_term(lowered, c / (qm - Rational(1)));
  }
  return out;
}

}  // namespace

TEST(QDiff, Examples) {
  QContext ctx(Rational(1, 2));
  QDiffOp d(ctx, 1, Var::x);
  MPoly x = v(Var::x), y = v(Var::y);
  EXPECT_EQ(d.apply(x.pow(3)), x * x * ctx.q_number(1, 3));
  EXPECT_EQ(d.apply(MPoly(Rational(7))), MPoly());
  EXPECT_EQ(d.apply(x * y * y), y * y);
}

TEST(QDiff, MatchesTheDifferenceQuotient) {
  for (const Rational& q : {Rational(1, 2), Rational(2, 3), Rational(3)}) {
    QContext ctx(q);
    for (int m = 1; m <= 3; ++m) {
      QDiffOp d(ctx, m, Var::x);
      for (int n = 0; n <= 6; ++n) {
        MPoly f = v(Var::x).pow(n) * v(Var::y) + v(Var::x).pow(n / 2);
        EXPECT_EQ(d.apply(f), literal_qdiff(ctx, m, f));
      }
    }
  }
}

TEST(QDiff, UndefinedAtBaseOne) {
  QContext one(Rational(1));
  EXPECT_THROW(QDiffOp(one, 1, Var::x), DomainError);
  QContext minus(Rational(-1));
  EXPECT_THROW(QDiffOp(minus, 2, Var::x), DomainError);
}

TEST(QDiff, InversePowerOfOne) {
  QContext ctx(Rational(2, 3));
  QDiffOp d(ctx, 1, Var::x);
  MPoly x = v(Var::x);
  EXPECT_EQ(d.inverse_pow(2, MPoly(1)), x * x * ctx.inverse_q_factorial(1, 2));
  MPoly p = x * v(Var::z) + MPoly(3);
  EXPECT_EQ(d.inverse_pow(0, p), p);
}

TEST(QDiff, InverseRoundTrip) {
  QContext ctx(Rational(3));
  for (int m = 1; m <= 2; ++m) {
    QDiffOp d(ctx, m, Var::x);
    for (int deg = 0; deg <= 6; ++deg) {
      MPoly p = v(Var::x).pow(deg) * v(Var::y);
      for (unsigned n = 0; n <= 3; ++n) {
        MPoly f = d.inverse_pow(n, p);
        for (unsigned i = 0; i < n; ++i) f = d.apply(f);
        EXPECT_EQ(f, p);
      }
    }
  }
}

TEST(Jhc, Examples) {
  QContext ctx(Rational(2, 3));
  MPoly x = v(Var::x), y = v(Var::y);
  Rational q = ctx.q();
  EXPECT_EQ(jhc_pow(ctx, x, y, 2, JhcSign::plus),
            x * x + x * y * (Rational(1) + q) + y * y * q);
  for (int n = 0; n <= 5; ++n) {
    EXPECT_EQ(jhc_pow(ctx, x, MPoly(), n, JhcSign::plus), x.pow(n));
  }
  EXPECT_TRUE(jhc_pow(ctx, x, x, 2, JhcSign::minus).is_zero());
  EXPECT_EQ(jhc_pow(ctx, x, y, 0, JhcSign::minus), MPoly(1));
}

TEST(Jhc, ProductForm) {
  // (a -_q b)^n = prod_{j<n} (a - q^j b)
  for (const Rational& q : {Rational(1, 2), Rational(-3), Rational(5, 4)}) {
    QContext ctx(q);
    MPoly a = v(Var::xi), b = v(Var::y);
    MPoly prod(1);
    for (int n = 0; n <= 7; ++n) {
      EXPECT_EQ(jhc_pow(ctx, a, b, n, JhcSign::minus), prod);
      prod *= a - b * q.pow(n);
    }
  }
}

TEST(Jhc, ReducesToBinomialAtQOne) {
  QContext ctx(Rational(1));
  MPoly x = v(Var::x), y = v(Var::y);
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(jhc_pow(ctx, x, y, n, JhcSign::plus), (x + y).pow(n));
    EXPECT_EQ(jhc_pow(ctx, x, y, n, JhcSign::minus), (x - y).pow(n));
  }
}

TEST(MixedSub, LowOrders) {
  QContext ctx(Rational(1, 2));
  MPoly a = v(Var::x), b = v(Var::z);
  for (int m = 1; m <= 3; ++m) {
    EXPECT_EQ(mixed_sub_pow(ctx, a, b, m, 0), MPoly(1));
    EXPECT_EQ(mixed_sub_pow(ctx, a, b, m, 1), a - b);
  }
  // m = 1 is the ordinary JHC difference.
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(mixed_sub_pow(ctx, a, b, 1, n), jhc_pow(ctx, a, b, n, JhcSign::minus));
  }
}

TEST(ComposeJhc, Examples) {
  QContext ctx(Rational(1, 2));
  MPoly x = v(Var::x), y = v(Var::y);
  EXPECT_EQ(compose_jhc(ctx, {MPoly(1), MPoly(1)}, x, y, JhcSign::plus),
            MPoly(1) + x + y);
  CoeffSeq eq;
  for (int k = 0; k <= 5; ++k) eq.push_back(MPoly(ctx.inverse_q_factorial(1, k)));
  MPoly truncated;
  for (int k = 0; k <= 5; ++k) truncated += x.pow(k) * ctx.inverse_q_factorial(1, k);
  EXPECT_EQ(compose_jhc(ctx, eq, x, MPoly(), JhcSign::plus), truncated);
}
