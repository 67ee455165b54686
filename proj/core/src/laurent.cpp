#include <fjsa/laurent.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fjsa {

RLaurent::RLaurent(GDim constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

RLaurent RLaurent::monomial(GDim coeff, int exponent) {
  RLaurent r(std::move(coeff));
  if (!r.is_zero()) r.lo_ = exponent;
  return r;
}

RLaurent RLaurent::from_terms(const std::map<int, GDim>& terms) {
  RLaurent r;
  for (const auto& [e, c] : terms) r += monomial(c, e);
  return r;
}

GDim RLaurent::coeff(int exponent) const {
  if (coeffs_.empty() || exponent < lo_ || exponent > max_exponent()) return {};
  return coeffs_[static_cast<size_t>(exponent - lo_)];
}

std::map<int, GDim> RLaurent::terms() const {
  std::map<int, GDim> out;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) out.emplace(lo_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

RLaurent RLaurent::shifted(int k) const {
  RLaurent r = *this;
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

bool RLaurent::is_symmetric() const {
  if (is_zero()) return true;
  if (lo_ != -max_exponent()) return false;
  const size_t n = coeffs_.size();
  for (size_t i = 0; i < n / 2; ++i)
    if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
  return true;
}

bool RLaurent::is_unit() const { return coeffs_.size() == 1 && coeffs_.front().is_unit(); }

void RLaurent::trim() {
  size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first].is_zero()) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  size_t last = coeffs_.size();
  while (coeffs_[last - 1].is_zero()) --last;
  coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
  lo_ += static_cast<int>(first);
}

void RLaurent::ensure_range(int lo, int hi) {
  if (coeffs_.empty()) {
    lo_ = lo;
    coeffs_.assign(static_cast<size_t>(hi - lo + 1), GDim{});
    return;
  }
  if (lo < lo_) {
    coeffs_.insert(coeffs_.begin(), static_cast<size_t>(lo_ - lo), GDim{});
    lo_ = lo;
  }
  if (hi > max_exponent()) coeffs_.resize(static_cast<size_t>(hi - lo_ + 1));
}

RLaurent& RLaurent::operator+=(const RLaurent& o) {
  if (o.is_zero()) return *this;
  ensure_range(o.lo_, o.max_exponent());
  for (size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[static_cast<size_t>(o.lo_ - lo_) + i] += o.coeffs_[i];
  trim();
  return *this;
}

RLaurent& RLaurent::operator-=(const RLaurent& o) {
  if (o.is_zero()) return *this;
  ensure_range(o.lo_, o.max_exponent());
  for (size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[static_cast<size_t>(o.lo_ - lo_) + i] -= o.coeffs_[i];
  trim();
  return *this;
}

RLaurent& RLaurent::operator*=(const BigInt& k) {
  for (auto& c : coeffs_) c *= k;
  trim();
  return *this;
}

RLaurent& RLaurent::operator*=(const GDim& g) {
  for (auto& c : coeffs_) c = c * g;
  trim();
  return *this;
}

void RLaurent::divexact(unsigned long d) {
  for (auto& c : coeffs_) {
    mpz_divexact_ui(c.even.get_mpz_t(), c.even.get_mpz_t(), d);
    mpz_divexact_ui(c.odd.get_mpz_t(), c.odd.get_mpz_t(), d);
  }
}

void RLaurent::add_product(const RLaurent& a, const RLaurent& b) {
  if (a.is_zero() || b.is_zero()) return;
  ensure_range(a.lo_ + b.lo_, a.max_exponent() + b.max_exponent());
  const size_t off = static_cast<size_t>(a.lo_ + b.lo_ - lo_);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) coeffs_[off + i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
  }
  trim();
}

RLaurent operator*(const RLaurent& a, const RLaurent& b) {
  RLaurent r;
  r.add_product(a, b);
  return r;
}

std::string RLaurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].str();
    const int e = lo_ + static_cast<int>(i);
    if (e != 0) os << "t^" << e;
  }
  return os.str();
}

RLaurent t_integer(int m) {
  if (m < 1) throw std::invalid_argument("t_integer: m must be >= 1");
  std::map<int, GDim> terms;
  for (int i = 0; i < m; ++i) terms.emplace(m - 1 - 2 * i, GDim::one());
  return RLaurent::from_terms(terms);
}

GDim residue(const RLaurent& f) { return f.coeff(-1); }

}  // namespace fjsa
