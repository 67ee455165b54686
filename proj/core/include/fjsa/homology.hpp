#pragma once

#include <fjsa/laurent.hpp>
#include <fjsa/tag.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fjsa {

/// Chain monomial: TAG basis indices, even factors first (strictly
/// increasing), then odd factors (weakly increasing).
using ChainMonomial = std::vector<std::uint32_t>;

/// (r, z-degree, h-weight, parity) coordinates of one block of the complex.
struct BlockKey {
  int r = 0;
  int degree = 0;
  int weight = 0;
  Parity parity = Parity::Even;

  friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
  std::string str() const;
};

struct ChainBlock {
  std::vector<ChainMonomial> basis;
  /// d_r of each basis monomial, in coordinates of block (r-1, degree, weight, parity).
  std::vector<SparseVec> boundary;
  std::size_t rank = 0;  ///< rank of the outgoing boundary
};

struct ChainOptions {
  std::size_t monomial_budget = 5'000'000;
  /// false: ungraded Lie algebra signs, which break d o d = 0 once odd
  /// brackets are present. Diagnostic only.
  bool super_signs = true;
};

/**
 * Chevalley-Eilenberg complex Lambda(g_even) (x) S(g_odd) of a truncated TAG
 * with trivial coefficients, split into (r, degree, weight, parity) blocks.
 *
 * d(x_1 ... x_r) = sum_{i<j} s_ij [x_i, x_j] x_1 .. ^i .. ^j .. x_r, where
 * s_ij is the sign of moving x_i, x_j to the front under the super-wedge rule
 * a b = -(-1)^{|a||b|} b a.
 */
class ChainComplex {
 public:
  int r_max() const { return r_max_; }
  int d_max() const { return d_max_; }
  /// Highest chain degree built (r_max + 1, so that H_{r_max} is determined).
  int chain_top() const { return r_max_ + 1; }

  const std::map<BlockKey, ChainBlock>& blocks() const { return blocks_; }
  /// Null when the block is empty.
  const ChainBlock* block(const BlockKey& key) const;
  std::size_t dim(const BlockKey& key) const;

  std::string monomial_name(const ChainMonomial& m) const;
  /// Number of basis monomials on which d o d was evaluated.
  std::size_t d_squared_checks() const { return d_squared_checks_; }

 private:
  friend ChainComplex build_chain_complex(const TagAlgebra& tag, int r_max, int d_max, ChainOptions opts);

  const TagAlgebra* tag_ = nullptr;
  int r_max_ = 0;
  int d_max_ = 0;
  std::map<BlockKey, ChainBlock> blocks_;
  std::size_t d_squared_checks_ = 0;
};

/**
 * Chain spaces V_0 .. V_{r_max+1} in z-degrees 0 .. d_max with their boundary
 * matrices. Throws InvariantViolation naming the block when d o d != 0,
 * std::invalid_argument when the TAG is truncated below d_max, and
 * ResourceBudgetExceeded past the monomial budget.
 */
ChainComplex build_chain_complex(const TagAlgebra& tag, int r_max, int d_max, ChainOptions opts = {});

/// h-weight -> graded dimension of H_r in z-degree d. Zero weights are omitted.
std::map<int, GDim> homology_weights(const ChainComplex& cx, int r, int d);

struct Multiplicities {
  std::vector<GDim> mult;  ///< mult[m] = multiplicity of L(2m)
  GDim odd_weights;        ///< total over odd h-weights
  bool negative = false;   ///< some mult[m] has a negative entry
  bool symmetric = true;   ///< dim(w) = dim(-w) for every w
  bool ok() const { return !negative && symmetric && odd_weights.is_zero(); }
};

/// mult(2m) = dim(2m) - dim(2m + 2).
Multiplicities isotypic_multiplicities(const std::map<int, GDim>& weights);

struct HomologyBlock {
  int r = 0;
  int degree = 0;
  std::map<int, GDim> weights;
  Multiplicities multiplicities;
  GDim total;
  /// mult(0) = mult(2) = 0.
  bool invariants_vanish() const;
};

struct EulerCheck {
  int degree = 0;
  RLaurent chains;     ///< sum_r (-1)^r [V_r]_d, weight 2k as t^k
  RLaurent homology;   ///< sum_{r <= r_max} (-1)^r [H_r]_d
  RLaurent lambda;     ///< z^d coefficient of lambda([g])
  bool chains_complete = false;    ///< every nonzero V_r at degree d was built
  bool homology_complete = false;  ///< every nonzero H_r at degree d was computed
  bool chains_match() const { return chains == lambda; }
  bool homology_match() const { return homology == lambda; }
  bool ok() const {
    return (!chains_complete || chains_match()) && (!homology_complete || homology_match());
  }
};

struct HomologyReport {
  long d1 = 0;
  long d2 = 0;
  int r_max = 0;
  int d_max = 0;
  std::vector<HomologyBlock> blocks;  ///< r = 0..r_max, degree = 0..d_max
  std::vector<EulerCheck> euler;      ///< degree = 0..d_max
  std::size_t d_squared_checks = 0;

  const HomologyBlock& at(int r, int degree) const;
};

/// Low-degree statements checked against a report. Each flag is vacuously
/// true when the report does not reach the relevant homological degree.
struct HomologyChecks {
  bool h0_trivial = true;      ///< H_0 = k in degree 0, zero elsewhere
  bool h1_generators = true;   ///< H_1 = sl2 (x) J_1 in degree 1, zero elsewhere
  bool h2_l4_isotypic = true;  ///< every H_2 block is a multiple of L(4)
  bool weight_strings = true;  ///< multiplicities nonnegative, weights symmetric and even
  bool euler = true;           ///< every complete Euler check matches
  std::vector<std::string> failures;
  bool ok() const { return h0_trivial && h1_generators && h2_l4_isotypic && weight_strings && euler; }
};
HomologyChecks check_homology(const HomologyReport& rep);

/// Degrees d at which H_r has a nonzero L(0) or L(2) component.
std::vector<int> invariant_violations(const HomologyReport& rep, int r);

/// Full pipeline on an existing TAG truncated at tag.max_degree() >= d_max.
HomologyReport compute_homology(const TagAlgebra& tag, long d1, long d2, int r_max, int d_max, ChainOptions opts = {});

/// Build J, B(J) and the TAG through d_max, then compute_homology.
HomologyReport compute_homology(long d1, long d2, int r_max, int d_max);

}  // namespace fjsa
