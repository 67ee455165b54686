#pragma once

#include <fjsa/lambda_ops.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fjsa {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Failure of a single order-by-order step.
class SolveError : public std::runtime_error {
 public:
  enum class Kind { SingularStep, NonIntegralStep, InconsistentStep };

  SolveError(Kind kind, int step, const std::string& what);
  Kind kind() const { return kind_; }
  int step() const { return step_; }

 private:
  Kind kind_;
  int step_;
};

struct SolveReport {
  long d1 = 0;
  long d2 = 0;
  int order = 0;
  std::vector<GDim> a;                 ///< a[n-1] is the z^n coefficient, n = 1..order
  std::optional<std::vector<GDim>> b;  ///< present for the two-equation system
  std::vector<IntMatrix> step_matrices;
  int residual_order = -1;

  SuperSeries a_series() const;
  std::optional<SuperSeries> b_series() const;
};

struct SolveOptions {
  /// Keep the product of already-fixed factors between steps. When false,
  /// every trial evaluation rebuilds the full truncated product.
  bool incremental = true;
};

/// Solve Res_{t=0} kernel * build_Psi(a) dt = 0 through z^order.
SolveReport solve_E(long d1, long d2, int order, SolveOptions opts = {});

/// Solve [lambda : L(0)] = (1,0), [lambda : L(2)] = -(D1,D2) z for (a, b).
SolveReport solve_phi_system(long d1, long d2, int order, SolveOptions opts = {});

/// Res_{t=0} kernel * build_Psi(a) dt (not asserted to vanish).
SuperSeries residual_check(const SuperSeries& a, long d1, long d2);

/// Left-hand sides minus right-hand sides of the two-equation system.
struct PairResidual {
  SuperSeries l0;
  SuperSeries l2;
};
PairResidual phi_system_residual(const DimSeriesPair& p, long d1, long d2);

/// Exact solve of M x = rhs over the integers; throws SolveError tagged with step.
std::vector<BigInt> solve_integer_system(const IntMatrix& m, const std::vector<BigInt>& rhs, int step);

}  // namespace fjsa
