#include <fjsa/linalg.hpp>

#include <algorithm>
#include <map>
#include <string>

namespace fjsa {

SparseVec to_sparse(const DenseVec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
  return out;
}

DenseVec to_dense(const SparseVec& v, std::size_t width) {
  DenseVec out(width);
  for (const auto& [i, c] : v) out.at(i) = c;
  return out;
}

bool is_zero(const DenseVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return sgn(c) == 0; });
}

void axpy(DenseVec& v, const Rational& c, const SparseVec& s) {
  for (const auto& [i, x] : s) v[i] += c * x;
}

namespace {

// a -= c * b on sparse vectors
void sparse_sub_scaled(SparseVec& a, const Rational& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -c * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - c * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

const Rational* find_entry(const SparseVec& v, std::size_t col) {
  auto it = std::lower_bound(v.begin(), v.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != v.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace

RowEchelon::RowEchelon(std::size_t width, std::size_t entry_budget)
    : width_(width), budget_(entry_budget), pivot_row_(width, npos) {}

void RowEchelon::reduce(DenseVec& v) const {
  // Rows touch only their pivot and non-pivot columns, so one pass suffices.
  for (std::size_t c = 0; c < width_; ++c) {
    if (sgn(v[c]) == 0 || pivot_row_[c] == npos) continue;
    const Rational f = v[c];
    axpy(v, -f, rows_[pivot_row_[c]]);
  }
}

bool RowEchelon::insert(DenseVec v) {
  if (v.size() != width_) throw std::invalid_argument("RowEchelon::insert: width mismatch");
  if (full()) return false;
  reduce(v);
  SparseVec row = to_sparse(v);
  if (row.empty()) return false;
  const std::size_t q = row.back().first;
  const Rational inv = 1 / row.back().second;
  for (auto& e : row) e.second *= inv;
  for (auto& other : rows_) {
    const Rational* c = find_entry(other, q);
    if (!c) continue;
    const Rational f = *c;
    stored_ -= other.size();
    sparse_sub_scaled(other, f, row);
    stored_ += other.size();
  }
  stored_ += row.size();
  pivot_row_[q] = rows_.size();
  rows_.push_back(std::move(row));
  if (stored_ > budget_)
    throw ResourceBudgetExceeded("row echelon storage " + std::to_string(stored_) + " exceeds budget " +
                                 std::to_string(budget_));
  return true;
}

bool RowEchelon::insert(const SparseVec& v) { return insert(to_dense(v, width_)); }

std::vector<std::size_t> RowEchelon::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < width_; ++c)
    if (pivot_row_[c] == npos) out.push_back(c);
  return out;
}

std::vector<SparseVec> RowEchelon::quotient_images() const {
  const auto free = free_columns();
  std::vector<std::size_t> position(width_, npos);
  for (std::size_t i = 0; i < free.size(); ++i) position[free[i]] = i;
  std::vector<SparseVec> out(width_);
  for (std::size_t c = 0; c < width_; ++c) {
    if (position[c] != npos) {
      out[c].emplace_back(position[c], Rational(1));
      continue;
    }
    // e_c = row - (row without its pivot), so e_c maps to -(non-pivot part)
    for (const auto& [col, val] : rows_[pivot_row_[c]]) {
      if (col == c) continue;
      out[c].emplace_back(position[col], -val);
    }
  }
  return out;
}

std::size_t rank_of(const std::vector<SparseVec>& rows, std::size_t width) {
  // sparse forward elimination keyed by leading column
  std::map<std::size_t, SparseVec> pivots;
  SparseVec scratch;
  for (const auto& r : rows) {
    if (pivots.size() == width) break;
    SparseVec v = r;
    while (!v.empty()) {
      const auto it = pivots.find(v.front().first);
      if (it == pivots.end()) break;
      const Rational c = v.front().second;
      scratch.clear();
      auto a = v.begin();
      auto b = it->second.begin();
      while (a != v.end() || b != it->second.end()) {
        if (b == it->second.end() || (a != v.end() && a->first < b->first)) {
          scratch.push_back(*a++);
        } else if (a == v.end() || b->first < a->first) {
          scratch.emplace_back(b->first, -c * b->second);
          ++b;
        } else {
          Rational x = a->second - c * b->second;
          if (sgn(x) != 0) scratch.emplace_back(a->first, std::move(x));
          ++a;
          ++b;
        }
      }
      v.swap(scratch);
    }
    if (v.empty()) continue;
    const Rational lead = v.front().second;
    for (auto& e : v) e.second /= lead;
    const std::size_t col = v.front().first;
    pivots.emplace(col, std::move(v));
  }
  return pivots.size();
}

}  // namespace fjsa
