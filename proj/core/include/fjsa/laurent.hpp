#pragma once

#include <fjsa/gdim.hpp>

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fjsa {

/**
 * Finitely supported Laurent polynomial in t with coefficients in R.
 *
 * Stored densely from the lowest nonzero exponent; the zero polynomial has no
 * coefficients. Exponents are plain ints: every Laurent polynomial this
 * library produces has t-degree bounded by the z-truncation order.
 */
class RLaurent {
 public:
  RLaurent() = default;
  explicit RLaurent(GDim constant);

  static RLaurent monomial(GDim coeff, int exponent);
  static RLaurent from_terms(const std::map<int, GDim>& terms);
  static RLaurent one() { return RLaurent(GDim::one()); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest / highest exponent with a nonzero coefficient. Zero polynomial: 0.
  int min_exponent() const { return lo_; }
  int max_exponent() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  GDim coeff(int exponent) const;
  std::map<int, GDim> terms() const;

  /// Multiplication by t^k.
  RLaurent shifted(int k) const;
  /// Coefficient at e equals coefficient at -e for every e.
  bool is_symmetric() const;

  /// Single term c*t^e with c a unit of R.
  bool is_unit() const;

  RLaurent& operator+=(const RLaurent& o);
  RLaurent& operator-=(const RLaurent& o);
  RLaurent& operator*=(const BigInt& k);
  RLaurent& operator*=(const GDim& g);

  friend RLaurent operator+(RLaurent a, const RLaurent& b) { return a += b; }
  friend RLaurent operator-(RLaurent a, const RLaurent& b) { return a -= b; }
  friend RLaurent operator-(RLaurent a) {
    a *= BigInt(-1);
    return a;
  }
  friend RLaurent operator*(const RLaurent& a, const RLaurent& b);
  friend RLaurent operator*(RLaurent a, const BigInt& k) { return a *= k; }
  friend RLaurent operator*(RLaurent a, const GDim& g) { return a *= g; }
  friend RLaurent operator*(const GDim& g, RLaurent a) { return a *= g; }
  friend bool operator==(const RLaurent& a, const RLaurent& b) {
    return a.lo_ == b.lo_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const RLaurent& a, const RLaurent& b) { return !(a == b); }

  /// Exact division of every coefficient by d.
  void divexact(unsigned long d);

  /// *this += a*b
  void add_product(const RLaurent& a, const RLaurent& b);

  std::string str() const;

 private:
  void trim();
  void ensure_range(int lo, int hi);

  int lo_ = 0;
  std::vector<GDim> coeffs_;
};

/// [m]_t = t^{m-1} + t^{m-3} + ... + t^{1-m}. Throws std::invalid_argument for m < 1.
RLaurent t_integer(int m);

inline std::ostream& operator<<(std::ostream& os, const RLaurent& f) { return os << f.str(); }

/// Coefficient of t^{-1}.
GDim residue(const RLaurent& f);

}  // namespace fjsa
