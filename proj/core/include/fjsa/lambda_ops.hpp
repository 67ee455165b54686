#pragma once

#include <fjsa/series.hpp>

#include <span>
#include <vector>

namespace fjsa {

/// Candidate classes of J and of B(J) restricted to graded dimensions.
/// Both series share one truncation order and have vanishing constant term.
struct DimSeriesPair {
  SuperSeries a;
  SuperSeries b;

  DimSeriesPair(SuperSeries a_, SuperSeries b_);
  int order() const { return a.order(); }
};

// Super lambda-operation on a single graded line (a_even, a_odd) z^m:
//   ((1 - z^m)^{a_even}, 0) * (1/(1 - z^{2m}), -z^m/(1 - z^{2m}))^{a_odd}
SuperSeries lambda_line(const GDim& a, int m, int order);

// lambda of a (t + t^{-1}) z^m, i.e. the weight +-2 part of a z^m [L(2)]:
//   (1 - [2]_t z^m + z^{2m}, 0)^{a_even}
//   * (sum_i [2i+1]_t z^{2im}, -sum_i [2i+2]_t z^{(2i+1)m})^{a_odd}
TZSeries lambda_adjoint_line(const GDim& a, int m, int order);

/// prod_n lambda_adjoint_line(a_n, n). Requires a_0 = 0.
TZSeries build_Psi(const SuperSeries& a);

/// prod_n lambda_line(a_n + b_n, n): the t-free factor of build_Phi.
SuperSeries build_Theta(const DimSeriesPair& p);

/// lambda(a [L(2)] + b) = build_Theta(p) * build_Psi(p.a).
TZSeries build_Phi(const DimSeriesPair& p);

/// (D1 z, D2 z) t^{-1} + (1 - D1 z, -D2 z) + (-1, 0) t
TZSeries build_psi(long d1, long d2, int order);

struct GradedPiece {
  GDim dims;   ///< number of even and odd basis vectors
  int degree;  ///< z-degree, >= 1
};

/**
 * sum_r (-1)^r sum_{p+q=r} [Lambda^p V_even (x) S^q V_odd] by direct
 * enumeration of exterior subsets and symmetric multisets over an explicit
 * graded basis. Exponential in the basis size; intended as a test oracle.
 */
SuperSeries lambda_s_direct(std::span<const GradedPiece> pieces, int order);

}  // namespace fjsa
