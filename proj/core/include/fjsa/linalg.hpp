#pragma once

#include <fjsa/gdim.hpp>

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fjsa {

/// Sorted (column, value) pairs with no explicit zeros.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;
using DenseVec = std::vector<Rational>;

class ResourceBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SparseVec to_sparse(const DenseVec& v);
DenseVec to_dense(const SparseVec& v, std::size_t width);
bool is_zero(const DenseVec& v);
/// v += c * s
void axpy(DenseVec& v, const Rational& c, const SparseVec& s);

/**
 * Incrementally maintained reduced row echelon form over Q.
 *
 * The pivot of a row is its last nonzero column, normalized to 1, and every
 * pivot column is cleared from all other rows. The resulting row space basis
 * is the unique RREF with respect to reversed column order, so it does not
 * depend on the order in which vectors are inserted.
 */
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t width, std::size_t entry_budget = std::numeric_limits<std::size_t>::max());

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rank() == width_; }
  std::size_t stored_entries() const { return stored_; }

  /// Subtract the row space component; v must have size width().
  void reduce(DenseVec& v) const;
  /// Returns true when v was independent of the current rows.
  bool insert(DenseVec v);
  bool insert(const SparseVec& v);

  bool is_pivot(std::size_t col) const { return pivot_row_[col] != npos; }
  const SparseVec& pivot_row(std::size_t col) const { return rows_[pivot_row_[col]]; }
  /// Non-pivot columns in increasing order.
  std::vector<std::size_t> free_columns() const;

  /**
   * Images of the unit vectors under the quotient map onto k^width / rowspace,
   * in coordinates indexed by position within free_columns().
   */
  std::vector<SparseVec> quotient_images() const;

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::size_t width_;
  std::size_t budget_;
  std::size_t stored_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<std::size_t> pivot_row_;
};

/// Rank over Q of the matrix with the given rows (entries sorted by column).
std::size_t rank_of(const std::vector<SparseVec>& rows, std::size_t width);

}  // namespace fjsa
