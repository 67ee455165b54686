#pragma once

#include <fjsa/free_jordan.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace fjsa {

/// A failed structural self-test (anticommutativity, Jacobi, d^2 = 0, ...).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Degree-n piece of B(J) = (J (x) J) / R(J).
 *
 * Columns of T_n are super-antisymmetric pairs {x (x) y}, x in J_i, y in J_j,
 * i + j = n, i <= j; for i = j only a < b, plus a = b when x is odd. Basis
 * elements are non-pivot columns of the cyclic relation space.
 */
struct BsComponent {
  int degree = 0;
  std::vector<Parity> parity;
  std::vector<std::string> name;
  /// Representative pair (i, a, b) of each basis element.
  std::vector<std::tuple<int, std::size_t, std::size_t>> representative;
  std::vector<SparseVec> projection;  ///< per T_n column
  std::size_t relation_rank = 0;

  std::size_t dim() const { return parity.size(); }
  GDim gdim() const;
};

/// B(J) through a given degree. Keeps a reference to the algebra, which must outlive it.
class BsAlgebra {
 public:
  BsAlgebra(const GradedJordanAlgebra& alg, int max_degree);

  const GradedJordanAlgebra& jordan() const { return *alg_; }
  int max_degree() const { return static_cast<int>(components_.size()); }
  /// Degree 1 is always zero-dimensional.
  const BsComponent& component(int n) const { return components_.at(static_cast<std::size_t>(n - 1)); }

  /// Class of e_a (x) e_b with e_a in J_i, e_b in J_j, in B_{i+j} coordinates.
  SparseVec pair_class(int i, std::size_t a, int j, std::size_t b) const;
  /// Bilinear extension of pair_class.
  DenseVec class_of(const JordanElement& x, const JordanElement& y) const;

 private:
  struct Layout {
    std::vector<std::vector<std::size_t>> col;  // [i-1][a * dim_j + b]
    std::vector<Parity> col_parity;
    std::vector<std::tuple<int, std::size_t, std::size_t>> col_pair;
    std::size_t width = 0;
  };
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Layout layout_for(int n) const;
  std::pair<std::size_t, int> canonical(const Layout& lay, int i, std::size_t a, int j, std::size_t b) const;
  void add_pairs(const Layout& lay, const JordanElement& x, const JordanElement& y, const Rational& scale,
                 DenseVec& out) const;

  const GradedJordanAlgebra* alg_;
  std::vector<BsComponent> components_;
  std::vector<Layout> layouts_;
};

/// Requires alg.max_degree() >= n - 1.
BsAlgebra build_Bs(const GradedJordanAlgebra& alg, int n);

/// d_{x,y} = L_x L_y - (-1)^{|x||y|} L_y L_x on J_m: images of the J_m basis in J_{m + deg x + deg y}.
std::vector<DenseVec> partial_derivation_matrix(const GradedJordanAlgebra& alg, const JordanElement& x,
                                                const JordanElement& y, int m);
/// d_{x,y}(z) for a single element.
JordanElement apply_partial_derivation(const GradedJordanAlgebra& alg, const JordanElement& x,
                                       const JordanElement& y, const JordanElement& z);

/**
 * Rank of B_n -> Inn(J)_n, {x (x) y} -> d_{x,y}, where each derivation is
 * recorded by its action on J_m for 1 <= m <= horizon - n. A lower bound on
 * dim Inn(J)_n that can only grow with the horizon.
 */
GDim inner_rank_diagnostic(const BsAlgebra& bs, int n, int horizon);

/// Basis element of TAG(J) = B(J) + sl2 (x) J.
struct TagBasisElement {
  enum class Kind { E, H, F, B };
  Kind kind;
  int degree;
  std::size_t index;  ///< in J_degree or B_degree
  int weight;         ///< h-eigenvalue
  Parity parity;
  std::string name;
};

struct TagSelfTest {
  IdentityCheck anticommutativity;
  IdentityCheck jacobi;
  bool ok() const { return anticommutativity.ok() && jacobi.ok(); }
};

/**
 * TAG(J) truncated above z-degree N (the quotient by the ideal of degree > N),
 * stored as a basis with exact structure constants.
 */
class TagAlgebra {
 public:
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<TagBasisElement>& basis() const { return basis_; }
  const TagBasisElement& element(std::size_t i) const { return basis_.at(i); }
  std::size_t index_of(TagBasisElement::Kind kind, int degree, std::size_t index) const;

  /// [u, v] on basis elements; zero when the degree exceeds the truncation.
  const SparseVec& bracket(std::size_t u, std::size_t v) const { return table_[u * basis_.size() + v]; }
  SparseVec bracket(const SparseVec& u, const SparseVec& v) const;

  TagSelfTest self_test() const;

 private:
  friend TagAlgebra build_tag(const BsAlgebra& bs, int n, bool self_test);
  friend TagAlgebra tag_from_table(int max_degree, std::vector<TagBasisElement> basis, std::vector<SparseVec> table);

  int max_degree_ = 0;
  std::vector<TagBasisElement> basis_;
  std::vector<std::size_t> offsets_;  // first index of each degree, size max_degree + 1
  std::vector<SparseVec> table_;
};

/// Requires bs.max_degree() >= n and bs.jordan().max_degree() >= n. When
/// self_test is set, throws InvariantViolation naming the first failing pair or triple.
TagAlgebra build_tag(const BsAlgebra& bs, int n, bool self_test = true);

/// Assemble from a stored table (used by deserialization).
TagAlgebra tag_from_table(int max_degree, std::vector<TagBasisElement> basis, std::vector<SparseVec> table);

}  // namespace fjsa
