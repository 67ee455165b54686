#pragma once

#include <fjsa/linalg.hpp>
#include <fjsa/series.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fjsa {

/**
 * One homogeneous component J_n together with the products landing in it.
 *
 * J_n is the quotient of W_n = sum_{i<=j, i+j=n} J_i (x) J_j (supercommutative
 * canonical pairs) by the span of super Jordan identity instances. Columns of
 * W_n are ordered by parity (even first), then by (i, a, b). Basis elements
 * of J_n are the non-pivot columns; `projection[c]` is the image of column c.
 */
struct JordanComponent {
  int degree = 0;
  std::vector<Parity> parity;     ///< per basis element
  std::vector<std::string> name;  ///< monomial representative, e.g. "(y1·y2)·y1"
  std::vector<SparseVec> projection;
  std::size_t relation_rank = 0;

  std::size_t dim() const { return parity.size(); }
  GDim gdim() const;
};

struct JordanBuildOptions {
  /// Order of the generators in the degree-1 basis (a permutation of
  /// 0..d1+d2-1; indices below d1 are even). Empty means identity.
  std::vector<std::size_t> generator_order;
  /// Upper bound on stored rational entries of one relation echelon form.
  std::size_t entry_budget = 20'000'000;
};

/// Element of J_n in coordinates of the degree-n basis.
struct JordanElement {
  int degree = 0;
  DenseVec coords;
};

class GradedJordanAlgebra {
 public:
  GradedJordanAlgebra(long d1, long d2, JordanBuildOptions opts = {});

  long d1() const { return d1_; }
  long d2() const { return d2_; }
  int max_degree() const { return static_cast<int>(components_.size()); }
  const JordanComponent& component(int n) const { return components_.at(static_cast<std::size_t>(n - 1)); }
  const JordanBuildOptions& options() const { return opts_; }

  /// Build J_{max_degree()+1}, ..., J_n. Throws ResourceBudgetExceeded and
  /// leaves the algebra at the last completed degree.
  void extend(int n);

  JordanElement basis(int n, std::size_t index) const;
  JordanElement zero(int n) const;
  /// Product of basis elements as coordinates in J_{i+j}.
  SparseVec basis_product(int i, std::size_t a, int j, std::size_t b) const;
  JordanElement multiply(const JordanElement& u, const JordanElement& v) const;

  /// Number of canonical pairs spanning W_n (n <= max_degree() + 1).
  std::size_t pair_space_width(int n) const;

  /// SJ(x,y,z,w) in W_n coordinates for n = max_degree() + 1, i.e. before
  /// degree-n relations are imposed. Basis arguments given as (degree, index).
  DenseVec relation_in_pairs(std::pair<int, std::size_t> x, std::pair<int, std::size_t> y,
                             std::pair<int, std::size_t> z, std::pair<int, std::size_t> w) const;

  /// Restore from serialized components (degrees 1..k, in order).
  static GradedJordanAlgebra from_components(long d1, long d2, std::vector<JordanComponent> comps,
                                             JordanBuildOptions opts = {});

  const std::vector<JordanComponent>& components() const { return components_; }

 private:
  struct PairLayout {
    // column index of (i, a, b) for i <= j, or npos when the pair vanishes
    std::vector<std::vector<std::size_t>> col;  // [i-1][a * dim_j + b]
    std::vector<Parity> col_parity;
    std::vector<std::string> col_name;
    std::size_t width = 0;
  };
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  PairLayout layout_for(int n) const;
  /// Column and sign of e_a (in J_i) times e_b (in J_j) inside W_{i+j}.
  std::pair<std::size_t, int> canonical(const PairLayout& lay, int i, std::size_t a, int j, std::size_t b) const;
  void product_into_pairs(const PairLayout& lay, const JordanElement& u, const JordanElement& v, const Rational& scale,
                          DenseVec& out) const;
  DenseVec relation(const PairLayout& lay, std::pair<int, std::size_t> x, std::pair<int, std::size_t> y,
                    std::pair<int, std::size_t> z, std::pair<int, std::size_t> w) const;
  void build_degree_one();
  void build_degree(int n);

  long d1_;
  long d2_;
  JordanBuildOptions opts_;
  std::vector<JordanComponent> components_;
  std::vector<PairLayout> layouts_;  // layouts_[n-1], empty for n = 1
};

/// Build J(d1|d2) through degree n. Throws std::invalid_argument on bad input.
GradedJordanAlgebra build_free_jordan(long d1, long d2, int n, JordanBuildOptions opts = {});

/// Build as far as possible up to n; stops cleanly at the budget frontier.
struct FrontierBuild {
  GradedJordanAlgebra algebra;
  bool budget_hit = false;
};
FrontierBuild build_free_jordan_frontier(long d1, long d2, int n, JordanBuildOptions opts = {});

/// Parity of a homogeneous element (Even for zero); throws std::invalid_argument when mixed.
Parity parity_of(const GradedJordanAlgebra& alg, const JordanElement& u);

/// SJ(x,y,z,w) = sum over cyclic (x,y,z) of (-1)^{|x||z|} ((xy)(zw) - (-1)^{(|x|+|y|)|z|} z((xy)w)).
/// x, y, z must be parity-homogeneous; w is arbitrary.
JordanElement jordan_identity_residual(const GradedJordanAlgebra& alg, const JordanElement& x,
                                       const JordanElement& y, const JordanElement& z, const JordanElement& w);

/// dims[n-1] = graded dimension of J_n.
std::vector<GDim> graded_dims(const GradedJordanAlgebra& alg);
/// sum_n dims_n z^n truncated at `order` (unknown degrees are zero).
SuperSeries graded_dims_series(const GradedJordanAlgebra& alg, int order);

struct IdentityCheck {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};
/// Supercommutativity of every basis product.
IdentityCheck check_supercommutativity(const GradedJordanAlgebra& alg);
/// SJ residual on every basis quadruple of total degree <= max_degree().
IdentityCheck check_jordan_identity(const GradedJordanAlgebra& alg);

}  // namespace fjsa
