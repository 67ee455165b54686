#include <fjsa/series.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace fjsa;

namespace {

GDim random_gdim(std::mt19937& rng, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  return GDim(d(rng), d(rng));
}

SuperSeries random_series(std::mt19937& rng, int order) {
  SuperSeries s(order);
  for (int n = 0; n <= order; ++n) s.set(n, random_gdim(rng));
  return s;
}

SuperSeries random_unit_series(std::mt19937& rng, int order) {
  static const GDim units[] = {GDim(1, 0), GDim(-1, 0), GDim(0, 1), GDim(0, -1)};
  SuperSeries s = random_series(rng, order);
  s.set(0, units[rng() % 4]);
  return s;
}

SuperSeries from_list(int order, std::vector<GDim> c) { return SuperSeries(order, std::move(c)); }

}  // namespace

TEST(GDim, MultiplicationRule) {
  EXPECT_EQ(GDim(0, 1) * GDim(0, 1), GDim(1, 0));
  EXPECT_EQ(GDim(1, 0) * GDim(5, -3), GDim(5, -3));
  EXPECT_EQ(GDim(2, 3) * GDim(1, 1), GDim(5, 5));
  EXPECT_EQ(gdim_mul(GDim(2, 3), GDim(1, 1)), GDim(5, 5));
}

TEST(GDim, CommutativeRingAxioms) {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    const GDim a = random_gdim(rng), b = random_gdim(rng), c = random_gdim(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
  }
}

TEST(GDim, UnitsAreSelfInverse) {
  for (const GDim& u : {GDim(1, 0), GDim(-1, 0), GDim(0, 1), GDim(0, -1)}) {
    EXPECT_TRUE(u.is_unit());
    EXPECT_EQ(u * u, GDim::one());
  }
  EXPECT_FALSE(GDim(1, 1).is_unit());
  EXPECT_FALSE(GDim(2, 0).is_unit());
}

TEST(GDim, BigIntegersDoNotOverflow) {
  GDim a(BigInt("123456789012345678901234567890"), BigInt(-7));
  GDim sq = a * a;
  EXPECT_EQ(sq.even, BigInt("15241578753238836750495351562536198787501905199875019052100") + 49);
  EXPECT_EQ(sq.str(), "(15241578753238836750495351562536198787501905199875019052149,-1728395046172839504617283950460)");
}

TEST(SeriesMul, Examples) {
  const int N = 4;
  const SuperSeries p = from_list(N, {GDim(1, 0), GDim(0, 1)});
  const SuperSeries m = from_list(N, {GDim(1, 0), GDim(0, -1)});
  EXPECT_EQ(p * m, from_list(N, {GDim(1, 0), GDim(), GDim(-1, 0)}));

  std::mt19937 rng(3);
  const SuperSeries f = random_series(rng, N);
  EXPECT_EQ(f * SuperSeries::one(N), f);

  const SuperSeries g = from_list(2, {GDim(1, 0), GDim(1, 1)});
  EXPECT_EQ(g * g, from_list(2, {GDim(1, 0), GDim(2, 2), GDim(2, 2)}));
}

TEST(SeriesMul, OrderMismatchThrows) {
  EXPECT_THROW(SuperSeries::one(3) * SuperSeries::one(4), SeriesError);
  EXPECT_THROW(SuperSeries::one(3) + SuperSeries::one(4), SeriesError);
  EXPECT_THROW(SuperSeries(-1), SeriesError);
}

TEST(SeriesInv, Examples) {
  const int N = 8;
  const SuperSeries one_minus_z = from_list(N, {GDim(1, 0), GDim(-1, 0)});
  const SuperSeries inv = series_inv(one_minus_z);
  for (int n = 0; n <= N; ++n) EXPECT_EQ(inv[n], GDim(1, 0));

  const SuperSeries f = from_list(N, {GDim(1, 0), GDim(0, 1)});
  const SuperSeries g = series_inv(f);
  for (int n = 0; n <= N; ++n) EXPECT_EQ(g[n], n % 2 ? GDim(0, -1) : GDim(1, 0)) << n;

  EXPECT_EQ(series_inv(SuperSeries::one(N)), SuperSeries::one(N));
}

TEST(SeriesInv, TwoSidedOnRandomUnits) {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    const SuperSeries f = random_unit_series(rng, 10);
    const SuperSeries g = series_inv(f);
    EXPECT_EQ(f * g, SuperSeries::one(10));
    EXPECT_EQ(g * f, SuperSeries::one(10));
  }
}

TEST(SeriesInv, NonUnitThrows) {
  EXPECT_THROW(series_inv(from_list(3, {GDim(2, 0), GDim(1, 0)})), SeriesError);
  EXPECT_THROW(series_inv(from_list(3, {GDim(1, 1)})), SeriesError);
}

TEST(SeriesPow, Examples) {
  const int N = 6;
  const SuperSeries one_minus_z = from_list(N, {GDim(1, 0), GDim(-1, 0)});
  EXPECT_EQ(series_pow(one_minus_z, -1L), series_inv(one_minus_z));
  EXPECT_EQ(series_pow(one_minus_z, 0L), SuperSeries::one(N));

  TZSeries f = TZSeries::one(N);
  f.set(1, t_integer(2) * BigInt(-1));
  f.set(2, RLaurent::one());
  EXPECT_EQ(series_pow(f, 2L)[1], t_integer(2) * BigInt(-2));
}

TEST(SeriesPow, MatchesRepeatedMultiplication) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const SuperSeries f = random_unit_series(rng, 7);
    for (long k = -3; k <= 3; ++k) {
      SuperSeries expect = SuperSeries::one(7);
      const SuperSeries base = k >= 0 ? f : series_inv(f);
      for (long i = 0; i < std::labs(k); ++i) expect = expect * base;
      EXPECT_EQ(series_pow(f, k), expect) << "k=" << k;
    }
  }
}

TEST(SeriesPow, ExponentLaw) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<long> e(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const SuperSeries f = random_unit_series(rng, 6);
    const long a = e(rng), b = e(rng);
    EXPECT_EQ(series_pow(f, a + b), series_pow(f, a) * series_pow(f, b));
  }
}

TEST(SeriesPow, NonUnitBase) {
  const SuperSeries f = from_list(5, {GDim(2, 0), GDim(0, 1)});
  EXPECT_EQ(series_pow(f, 3L), f * f * f);
  EXPECT_THROW(series_pow(f, -1L), SeriesError);
  const SuperSeries z = from_list(5, {GDim(), GDim(1, 0)});
  EXPECT_TRUE(series_pow(z, BigInt("100000000000000000000")).is_zero());
}

TEST(SeriesPow, HugeExponentAgreesWithBinomial) {
  // (1 - z)^k has coefficients (-1)^n binom(k, n)
  const BigInt k("1000000000000000000007");
  const SuperSeries f = from_list(4, {GDim(1, 0), GDim(-1, 0)});
  const SuperSeries g = series_pow(f, k);
  BigInt binom = 1;
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(g[n], GDim(n % 2 ? BigInt(-binom) : binom, 0)) << n;
    binom = binom * (k - n) / (n + 1);
  }
}

TEST(TInteger, Examples) {
  EXPECT_EQ(t_integer(1), RLaurent::one());
  EXPECT_EQ(t_integer(2), RLaurent::from_terms({{-1, GDim(1, 0)}, {1, GDim(1, 0)}}));
  EXPECT_EQ(t_integer(3), RLaurent::from_terms({{-2, GDim(1, 0)}, {0, GDim(1, 0)}, {2, GDim(1, 0)}}));
  EXPECT_THROW(t_integer(0), std::invalid_argument);
}

TEST(TInteger, SymmetricAndClebschGordan) {
  for (int m = 1; m <= 20; ++m) EXPECT_TRUE(t_integer(m).is_symmetric());
  for (int m = 2; m <= 20; ++m) EXPECT_EQ(t_integer(m) * t_integer(2), t_integer(m + 1) + t_integer(m - 1)) << m;
  EXPECT_EQ(t_integer(2) * t_integer(2), t_integer(3) + RLaurent::one());
}

TEST(Residue, Examples) {
  const RLaurent tinv = RLaurent::monomial(GDim::one(), -1);
  for (int m = 1; m <= 12; ++m) EXPECT_EQ(residue(tinv * t_integer(m)), m % 2 ? GDim(1, 0) : GDim()) << m;
  EXPECT_EQ(residue(t_integer(2)), GDim(1, 0));
  EXPECT_EQ(residue(t_integer(3)), GDim());
}

TEST(Residue, Bilinear) {
  std::mt19937 rng(13);
  auto rand_laurent = [&] {
    std::map<int, GDim> terms;
    for (int e = -3; e <= 3; ++e) terms[e] = random_gdim(rng, -3, 3);
    return RLaurent::from_terms(terms);
  };
  for (int i = 0; i < 50; ++i) {
    const RLaurent f = rand_laurent(), g = rand_laurent(), h = rand_laurent();
    EXPECT_EQ(residue((f + g) * h), residue(f * h) + residue(g * h));
    EXPECT_EQ(residue(f * (g + h)), residue(f * g) + residue(f * h));
  }
}

TEST(Extract, ConstantSeriesAndAdditivity) {
  const TZSeries one = TZSeries::one(3);
  EXPECT_EQ(extract_L0(one), SuperSeries::one(3));
  EXPECT_TRUE(extract_L2(one).is_zero());

  TZSeries f(2), g(2);
  f.set(0, t_integer(3));
  f.set(1, t_integer(2) * GDim(0, 1));
  g.set(1, RLaurent::monomial(GDim(2, 1), -2));
  g.set(2, t_integer(4));
  EXPECT_EQ(extract_L0(f + g), extract_L0(f) + extract_L0(g));
  EXPECT_EQ(extract_L2(f + g), extract_L2(f) + extract_L2(g));
  // [3]_t = L(4) character at weights 0, +-4 in t-units of 2: L0 picks c0 - c_{-1}
  EXPECT_EQ(extract_L0(f)[0], GDim(1, 0));
  EXPECT_EQ(extract_L2(f)[1], GDim(0, 1));
}

TEST(Lift, EmbedsSeries) {
  const SuperSeries s = from_list(3, {GDim(1, 0), GDim(2, -1), GDim(), GDim(0, 4)});
  const TZSeries t = lift(s);
  EXPECT_EQ(residue_series(t * TZSeries::monomial(3, RLaurent::monomial(GDim::one(), -1), 0)), s);
  EXPECT_EQ(vanishing_order(SuperSeries(5)), 5);
  EXPECT_EQ(vanishing_order(from_list(5, {GDim(), GDim(), GDim(1, 0)})), 1);
}
