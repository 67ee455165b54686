#include <fjsa/solver.hpp>

#include <gtest/gtest.h>

using namespace fjsa;

namespace {

std::vector<GDim> prefix(const std::vector<GDim>& v, size_t n) { return {v.begin(), v.begin() + static_cast<long>(n)}; }

SuperSeries as_series(const std::vector<GDim>& dims, int order) {
  SuperSeries s(order);
  for (size_t i = 0; i < dims.size() && static_cast<int>(i) < order; ++i) s.set(static_cast<int>(i) + 1, dims[i]);
  return s;
}

IntMatrix minus_identity(size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, BigInt(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = -1;
  return m;
}

}  // namespace

TEST(SolveE, OneOddGenerator) {
  const SolveReport r = solve_E(0, 1, 10);
  ASSERT_EQ(r.a.size(), 10u);
  EXPECT_EQ(r.a[0], GDim(0, 1));
  for (size_t n = 1; n < r.a.size(); ++n) EXPECT_TRUE(r.a[n].is_zero()) << n + 1;
  EXPECT_GE(r.residual_order, 10);
}

TEST(SolveE, TwoOddGenerators) {
  const SolveReport r = solve_E(0, 2, 4);
  EXPECT_EQ(r.a, (std::vector<GDim>{GDim(0, 2), GDim(1, 0), GDim(0, 2), GDim(5, 0)}));
}

TEST(SolveE, OneEvenOneOdd) {
  const SolveReport r = solve_E(1, 1, 4);
  EXPECT_EQ(r.a, (std::vector<GDim>{GDim(1, 1), GDim(1, 1), GDim(2, 2), GDim(3, 3)}));
}

TEST(SolveE, OneEvenGeneratorIsPolynomialAlgebra) {
  const SolveReport r = solve_E(1, 0, 8);
  for (const auto& g : r.a) EXPECT_EQ(g, GDim(1, 0));
}

TEST(SolveE, TwoEvenGeneratorsMatchSpecialJordanCount) {
  // J(2|0) is special; dim J_n = (2^n + 2^{ceil(n/2)}) / 2
  const SolveReport r = solve_E(2, 0, 15);
  EXPECT_GE(r.residual_order, 15);
  for (int n = 1; n <= 15; ++n) {
    BigInt expect = (BigInt(1) << n);
    expect += BigInt(1) << ((n + 1) / 2);
    expect /= 2;
    EXPECT_EQ(r.a[static_cast<size_t>(n - 1)], GDim(expect, 0)) << n;
  }
}

TEST(SolveE, FirstCoefficientIsGeneratorCount) {
  for (long d1 = 0; d1 <= 4; ++d1)
    for (long d2 = 0; d2 <= 4; ++d2) {
      if (d1 + d2 == 0) continue;
      EXPECT_EQ(solve_E(d1, d2, 1).a[0], GDim(d1, d2));
    }
}

TEST(SolveE, StepMatrixIsMinusIdentity) {
  for (long d1 = 0; d1 <= 3; ++d1)
    for (long d2 = 0; d2 <= 3; ++d2) {
      if (d1 + d2 == 0) continue;
      const SolveReport r = solve_E(d1, d2, 8);
      for (const auto& m : r.step_matrices) EXPECT_EQ(m, minus_identity(2));
    }
}

TEST(SolveE, IncrementalMatchesFullRebuild) {
  for (auto [d1, d2] : {std::pair{1L, 1L}, {0L, 2L}, {2L, 1L}, {0L, 3L}}) {
    const SolveReport fast = solve_E(d1, d2, 9);
    const SolveReport slow = solve_E(d1, d2, 9, SolveOptions{.incremental = false});
    EXPECT_EQ(fast.a, slow.a);
    EXPECT_EQ(fast.step_matrices, slow.step_matrices);
  }
}

TEST(SolveE, Deterministic) {
  const SolveReport a = solve_E(2, 1, 10), b = solve_E(2, 1, 10);
  EXPECT_EQ(a.a, b.a);
  EXPECT_EQ(a.step_matrices, b.step_matrices);
  EXPECT_EQ(a.residual_order, b.residual_order);
}

TEST(SolveE, InvalidInput) {
  EXPECT_THROW(solve_E(0, 0, 3), std::invalid_argument);
  EXPECT_THROW(solve_E(1, 0, 0), std::invalid_argument);
  EXPECT_THROW(solve_E(-1, 2, 3), std::invalid_argument);
}

TEST(ResidualCheck, PaperHandValues) {
  const SuperSeries a11 = as_series({GDim(1, 1), GDim(1, 1), GDim(2, 2), GDim(3, 3)}, 4);
  EXPECT_TRUE(residual_check(a11, 1, 1).is_zero());
  const SuperSeries a02 = as_series({GDim(0, 2), GDim(1, 0), GDim(0, 2), GDim(5, 0)}, 4);
  EXPECT_TRUE(residual_check(a02, 0, 2).is_zero());
  // a perturbed coefficient is detected at exactly that degree
  const SuperSeries bad = as_series({GDim(1, 1), GDim(1, 1), GDim(2, 3), GDim(3, 3)}, 4);
  EXPECT_EQ(vanishing_order(residual_check(bad, 1, 1)), 2);
}

TEST(SolvePhiSystem, OneOddGenerator) {
  const SolveReport r = solve_phi_system(0, 1, 8);
  ASSERT_TRUE(r.b.has_value());
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(r.a[static_cast<size_t>(n - 1)], n == 1 ? GDim(0, 1) : GDim()) << n;
    EXPECT_EQ((*r.b)[static_cast<size_t>(n - 1)], n == 2 ? GDim(1, 0) : GDim()) << n;
  }
  EXPECT_GE(r.residual_order, 8);
}

TEST(SolvePhiSystem, AAgreesWithSingleEquation) {
  for (long d1 = 0; d1 <= 4; ++d1)
    for (long d2 = 0; d1 + d2 <= 4; ++d2) {
      if (d1 + d2 == 0) continue;
      const SolveReport phi = solve_phi_system(d1, d2, 12);
      const SolveReport e = solve_E(d1, d2, 12);
      EXPECT_EQ(phi.a, e.a) << d1 << "," << d2;
      EXPECT_GE(phi.residual_order, 12);
    }
}

TEST(SolvePhiSystem, StepMatrixIsSignedPermutation) {
  const SolveReport r = solve_phi_system(1, 2, 6);
  for (const auto& m : r.step_matrices) {
    ASSERT_EQ(m.size(), 4u);
    for (const auto& row : m) {
      int nonzero = 0;
      for (const auto& v : row) {
        if (sgn(v) != 0) ++nonzero;
        EXPECT_TRUE(v == 0 || v == -1);
      }
      EXPECT_EQ(nonzero, 1);
    }
  }
}

TEST(SolvePhiSystem, IncrementalMatchesFullRebuild) {
  const SolveReport fast = solve_phi_system(1, 1, 7);
  const SolveReport slow = solve_phi_system(1, 1, 7, SolveOptions{.incremental = false});
  EXPECT_EQ(fast.a, slow.a);
  EXPECT_EQ(*fast.b, *slow.b);
}

TEST(SolvePhiSystem, EliminationReproducesSingleEquationResidual) {
  // (D1,D2) z * L0-residual + L2-residual = Theta * Res(psi Psi) for arbitrary (a, b)
  for (auto [d1, d2] : {std::pair{1L, 1L}, {0L, 2L}, {2L, 0L}, {1L, 3L}}) {
    const int N = 6;
    const SolveReport sol = solve_phi_system(d1, d2, N);
    SuperSeries a = sol.a_series();
    SuperSeries b = *sol.b_series();
    a.add_to(3, GDim(1, -2));
    b.add_to(2, GDim(0, 3));
    const DimSeriesPair p(a, b);
    const PairResidual res = phi_system_residual(p, d1, d2);
    const SuperSeries dz = SuperSeries::monomial(N, GDim(d1, d2), 1);
    EXPECT_EQ(dz * res.l0 + res.l2, build_Theta(p) * residual_check(a, d1, d2));
  }
}

TEST(SolvePhiSystem, BSeriesRecoveredFromA) {
  const SolveReport r = solve_phi_system(0, 2, 6);
  const PairResidual res = phi_system_residual(DimSeriesPair(r.a_series(), *r.b_series()), 0, 2);
  EXPECT_TRUE(res.l0.is_zero());
  EXPECT_TRUE(res.l2.is_zero());
  EXPECT_EQ(prefix(r.a, 4), (std::vector<GDim>{GDim(0, 2), GDim(1, 0), GDim(0, 2), GDim(5, 0)}));
}

TEST(SolveIntegerSystem, Errors) {
  EXPECT_EQ(solve_integer_system({{BigInt(2), BigInt(0)}, {BigInt(0), BigInt(-1)}}, {BigInt(4), BigInt(3)}, 1),
            (std::vector<BigInt>{BigInt(2), BigInt(-3)}));
  try {
    solve_integer_system({{BigInt(2)}}, {BigInt(1)}, 7);
    FAIL();
  } catch (const SolveError& e) {
    EXPECT_EQ(e.kind(), SolveError::Kind::NonIntegralStep);
    EXPECT_EQ(e.step(), 7);
  }
  try {
    solve_integer_system({{BigInt(1), BigInt(1)}, {BigInt(1), BigInt(1)}}, {BigInt(1), BigInt(1)}, 2);
    FAIL();
  } catch (const SolveError& e) {
    EXPECT_EQ(e.kind(), SolveError::Kind::SingularStep);
  }
  try {
    solve_integer_system({{BigInt(1), BigInt(1)}, {BigInt(1), BigInt(1)}}, {BigInt(1), BigInt(2)}, 3);
    FAIL();
  } catch (const SolveError& e) {
    EXPECT_EQ(e.kind(), SolveError::Kind::InconsistentStep);
  }
}
