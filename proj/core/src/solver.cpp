#include <fjsa/solver.hpp>

#include <functional>

namespace fjsa {

namespace {

const char* kind_name(SolveError::Kind k) {
  switch (k) {
    case SolveError::Kind::SingularStep:
      return "SingularStep";
    case SolveError::Kind::NonIntegralStep:
      return "NonIntegralStep";
    case SolveError::Kind::InconsistentStep:
      return "InconsistentStep";
  }
  return "?";
}

void validate(long d1, long d2, int order) {
  if (d1 < 0 || d2 < 0) throw std::invalid_argument("generator counts must be >= 0");
  if (d1 + d2 < 1) throw std::invalid_argument("need d1 + d2 >= 1");
  if (order < 1) throw std::invalid_argument("order must be >= 1");
}

// z^n coefficient of Res(kernel * Q) given Q_{n-1}, Q_n (kernel has z-degree <= 1).
GDim kernel_residue_at(const TZSeries& kernel, const RLaurent& q_prev, const RLaurent& q_n) {
  RLaurent acc;
  acc.add_product(kernel[0], q_n);
  if (kernel.order() >= 1) acc.add_product(kernel[1], q_prev);
  return residue(acc);
}

// Evaluate the step-n residual vector at the unknown vector x (affine in x)
// and at x = 0, e_1, ..., e_k, then solve for the root.
std::vector<BigInt> linearize_and_solve(const std::function<std::vector<BigInt>(const std::vector<BigInt>&)>& eval,
                                        size_t unknowns, int step, IntMatrix& matrix_out) {
  const std::vector<BigInt> zero(unknowns, BigInt(0));
  const std::vector<BigInt> r0 = eval(zero);
  IntMatrix m(r0.size(), std::vector<BigInt>(unknowns));
  for (size_t j = 0; j < unknowns; ++j) {
    std::vector<BigInt> unit = zero;
    unit[j] = 1;
    const std::vector<BigInt> rj = eval(unit);
    for (size_t i = 0; i < r0.size(); ++i) m[i][j] = rj[i] - r0[i];
  }
  std::vector<BigInt> rhs(r0.size());
  for (size_t i = 0; i < r0.size(); ++i) rhs[i] = -r0[i];
  std::vector<BigInt> x = solve_integer_system(m, rhs, step);
  for (const auto& v : eval(x))
    if (sgn(v) != 0)
      throw SolveError(SolveError::Kind::InconsistentStep, step, "residual does not vanish after substitution");
  matrix_out = std::move(m);
  return x;
}

}  // namespace

SolveError::SolveError(Kind kind, int step, const std::string& what)
    : std::runtime_error(std::string(kind_name(kind)) + " at step " + std::to_string(step) + ": " + what),
      kind_(kind),
      step_(step) {}

SuperSeries SolveReport::a_series() const {
  SuperSeries s(order);
  for (size_t i = 0; i < a.size(); ++i) s.set(static_cast<int>(i) + 1, a[i]);
  return s;
}

std::optional<SuperSeries> SolveReport::b_series() const {
  if (!b) return std::nullopt;
  SuperSeries s(order);
  for (size_t i = 0; i < b->size(); ++i) s.set(static_cast<int>(i) + 1, (*b)[i]);
  return s;
}

std::vector<BigInt> solve_integer_system(const IntMatrix& m, const std::vector<BigInt>& rhs, int step) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
    aug[i][cols] = rhs[i];
  }
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && sgn(aug[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(aug[p], aug[r]);
    const Rational inv = 1 / aug[r][c];
    for (auto& v : aug[r]) v *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(aug[i][c]) == 0) continue;
      const Rational f = aug[i][c];
      for (size_t j = c; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (sgn(aug[i][cols]) != 0) throw SolveError(SolveError::Kind::InconsistentStep, step, "linearized system has no solution");
  if (r < cols) throw SolveError(SolveError::Kind::SingularStep, step, "linearization matrix is singular");
  std::vector<BigInt> x(cols);
  for (size_t i = 0; i < r; ++i) {
    const Rational& v = aug[i][cols];
    if (v.get_den() != 1) throw SolveError(SolveError::Kind::NonIntegralStep, step, "solution " + v.get_str() + " is not integral");
    x[pivot_col[i]] = v.get_num();
  }
  return x;
}

SuperSeries residual_check(const SuperSeries& a, long d1, long d2) {
  return residue_series(build_psi(d1, d2, a.order()) * build_Psi(a));
}

PairResidual phi_system_residual(const DimSeriesPair& p, long d1, long d2) {
  const TZSeries phi = build_Phi(p);
  SuperSeries l0 = extract_L0(phi);
  SuperSeries l2 = extract_L2(phi);
  l0.add_to(0, GDim(-1, 0));
  if (p.order() >= 1) l2.add_to(1, GDim(d1, d2));
  return {std::move(l0), std::move(l2)};
}

SolveReport solve_E(long d1, long d2, int order, SolveOptions opts) {
  validate(d1, d2, order);
  SolveReport rep;
  rep.d1 = d1;
  rep.d2 = d2;
  rep.order = order;
  const TZSeries kernel = build_psi(d1, d2, order);
  SuperSeries a(order);
  TZSeries fixed = TZSeries::one(order);  // product of factors 1..n-1

  for (int n = 1; n <= order; ++n) {
    auto eval = [&](const std::vector<BigInt>& x) {
      const GDim trial(x[0], x[1]);
      GDim res;
      if (opts.incremental) {
        const TZSeries factor = lambda_adjoint_line(trial, n, n);
        const RLaurent qn = coefficient_of_product(fixed.with_order(n), factor, n);
        res = kernel_residue_at(kernel, fixed[n - 1], qn);
      } else {
        SuperSeries at = a.with_order(n);
        at.set(n, trial);
        res = residual_check(at, d1, d2)[n];
      }
      return std::vector<BigInt>{res.even, res.odd};
    };
    IntMatrix m;
    const auto x = linearize_and_solve(eval, 2, n, m);
    rep.step_matrices.push_back(std::move(m));
    const GDim an(x[0], x[1]);
    a.set(n, an);
    rep.a.push_back(an);
    if (opts.incremental && !an.is_zero()) fixed = fixed * lambda_adjoint_line(an, n, order);
  }
  rep.residual_order = vanishing_order(residual_check(a, d1, d2));
  return rep;
}

SolveReport solve_phi_system(long d1, long d2, int order, SolveOptions opts) {
  validate(d1, d2, order);
  SolveReport rep;
  rep.d1 = d1;
  rep.d2 = d2;
  rep.order = order;
  rep.b.emplace();
  SuperSeries a(order);
  SuperSeries b(order);
  TZSeries fixed = TZSeries::one(order);
  const GDim target_l2_at_1(-d1, -d2);

  auto factor_at = [](const GDim& an, const GDim& bn, int n, int ord) {
    return lift(lambda_line(an + bn, n, ord)) * lambda_adjoint_line(an, n, ord);
  };

  for (int n = 1; n <= order; ++n) {
    auto eval = [&](const std::vector<BigInt>& x) {
      const GDim ta(x[0], x[1]);
      const GDim tb(x[2], x[3]);
      RLaurent qn;
      if (opts.incremental) {
        qn = coefficient_of_product(fixed.with_order(n), factor_at(ta, tb, n, n), n);
      } else {
        SuperSeries at = a.with_order(n);
        SuperSeries bt = b.with_order(n);
        at.set(n, ta);
        bt.set(n, tb);
        qn = build_Phi(DimSeriesPair(at, bt))[n];
      }
      GDim l0 = qn.coeff(0) - qn.coeff(-1);
      GDim l2 = qn.coeff(-1) - qn.coeff(-2);
      if (n == 1) l2 -= target_l2_at_1;
      return std::vector<BigInt>{l0.even, l0.odd, l2.even, l2.odd};
    };
    IntMatrix m;
    const auto x = linearize_and_solve(eval, 4, n, m);
    rep.step_matrices.push_back(std::move(m));
    const GDim an(x[0], x[1]);
    const GDim bn(x[2], x[3]);
    a.set(n, an);
    b.set(n, bn);
    rep.a.push_back(an);
    rep.b->push_back(bn);
    if (opts.incremental && !(an.is_zero() && bn.is_zero())) fixed = fixed * factor_at(an, bn, n, order);
  }
  const PairResidual res = phi_system_residual(DimSeriesPair(a, b), d1, d2);
  rep.residual_order = std::min(vanishing_order(res.l0), vanishing_order(res.l2));
  return rep;
}

}  // namespace fjsa
