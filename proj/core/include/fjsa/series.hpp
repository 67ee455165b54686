#pragma once

#include <fjsa/gdim.hpp>
#include <fjsa/laurent.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fjsa {

/// Binary operation on series of different truncation orders, or a
/// non-invertible constant term where an inverse was required.
class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<GDim> {
  static GDim one() { return GDim::one(); }
  static std::optional<GDim> inverse(const GDim& c) {
    if (!c.is_unit()) return std::nullopt;
    return c;
  }
  static GDim unit_power(const GDim& unit, const BigInt& k) {
    return mpz_odd_p(k.get_mpz_t()) ? unit : GDim::one();
  }
  static void divexact(GDim& c, unsigned long d) {
    mpz_divexact_ui(c.even.get_mpz_t(), c.even.get_mpz_t(), d);
    mpz_divexact_ui(c.odd.get_mpz_t(), c.odd.get_mpz_t(), d);
  }
  static std::string str(const GDim& c) { return c.str(); }
};

template <>
struct CoeffTraits<RLaurent> {
  static RLaurent one() { return RLaurent::one(); }
  static std::optional<RLaurent> inverse(const RLaurent& c) {
    if (!c.is_unit()) return std::nullopt;
    const int e = c.min_exponent();
    return RLaurent::monomial(c.coeff(e), -e);
  }
  static RLaurent unit_power(const RLaurent& unit, const BigInt& k) {
    const int e = unit.min_exponent();
    const GDim c = unit.coeff(e);
    const GDim ck = mpz_odd_p(k.get_mpz_t()) ? c : GDim::one();
    if (e == 0) return RLaurent(ck);
    if (!k.fits_sint_p()) throw SeriesError("series_pow: t-exponent overflow");
    return RLaurent::monomial(ck, static_cast<int>(e * k.get_si()));
  }
  static void divexact(RLaurent& c, unsigned long d) { c.divexact(d); }
  static std::string str(const RLaurent& c) { return c.str(); }
};

}  // namespace detail

/**
 * Power series in z truncated above z^order, with coefficients in C.
 *
 * The order is fixed at construction; binary operations require equal
 * orders and throw SeriesError otherwise.
 */
template <class C>
class TruncatedSeries {
 public:
  using Coeff = C;

  explicit TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw SeriesError("truncation order must be >= 0");
    coeffs_.resize(static_cast<size_t>(order) + 1);
  }
  TruncatedSeries(int order, std::vector<C> coeffs) : TruncatedSeries(order) {
    for (size_t i = 0; i < coeffs.size() && i <= static_cast<size_t>(order); ++i) coeffs_[i] = std::move(coeffs[i]);
  }

  static TruncatedSeries one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = detail::CoeffTraits<C>::one();
    return s;
  }
  static TruncatedSeries monomial(int order, C coeff, int degree) {
    TruncatedSeries s(order);
    if (degree >= 0 && degree <= order) s.coeffs_[static_cast<size_t>(degree)] = std::move(coeff);
    return s;
  }

  int order() const { return order_; }
  const C& operator[](int n) const { return coeffs_.at(static_cast<size_t>(n)); }
  /// Coefficient of z^n; zero beyond the truncation order.
  C coeff(int n) const { return (n < 0 || n > order_) ? C{} : coeffs_[static_cast<size_t>(n)]; }
  const std::vector<C>& coeffs() const { return coeffs_; }

  void set(int n, C c) { coeffs_.at(static_cast<size_t>(n)) = std::move(c); }
  void add_to(int n, const C& c) {
    if (n <= order_) coeffs_.at(static_cast<size_t>(n)) += c;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }
  /// Lowest degree with a nonzero coefficient; order()+1 for the zero series.
  int valuation() const {
    for (int n = 0; n <= order_; ++n)
      if (!coeffs_[static_cast<size_t>(n)].is_zero()) return n;
    return order_ + 1;
  }

  /// Re-truncate to a new order (zero-padding when raising it).
  TruncatedSeries with_order(int order) const {
    TruncatedSeries s(order);
    for (int n = 0; n <= std::min(order, order_); ++n) s.coeffs_[static_cast<size_t>(n)] = coeffs_[static_cast<size_t>(n)];
    return s;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_order(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_order(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator*=(const BigInt& k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) { return a *= BigInt(-1); }
  friend TruncatedSeries operator*(TruncatedSeries a, const BigInt& k) { return a *= k; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_order(b);
    TruncatedSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
      const C& ai = a.coeffs_[static_cast<size_t>(i)];
      if (ai.is_zero()) continue;
      for (int j = 0; i + j <= a.order_; ++j) {
        const C& bj = b.coeffs_[static_cast<size_t>(j)];
        if (bj.is_zero()) continue;
        r.coeffs_[static_cast<size_t>(i + j)].add_product(ai, bj);
      }
    }
    return r;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

  std::string str() const {
    std::string out;
    for (int n = 0; n <= order_; ++n) {
      const C& c = coeffs_[static_cast<size_t>(n)];
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "[" + detail::CoeffTraits<C>::str(c) + "]z^" + std::to_string(n);
    }
    return out.empty() ? "0" : out + " + O(z^" + std::to_string(order_ + 1) + ")";
  }

 private:
  void check_order(const TruncatedSeries& o) const {
    if (o.order_ != order_)
      throw SeriesError("truncation order mismatch: " + std::to_string(order_) + " vs " + std::to_string(o.order_));
  }

  int order_;
  std::vector<C> coeffs_;
};

template <class C>
std::ostream& operator<<(std::ostream& os, const TruncatedSeries<C>& s) {
  return os << s.str();
}

using SuperSeries = TruncatedSeries<GDim>;
using TZSeries = TruncatedSeries<RLaurent>;

/// Coefficient of z^n in a*b, without forming the full product.
template <class C>
C coefficient_of_product(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b, int n) {
  C r{};
  for (int i = 0; i <= n; ++i) {
    const C ai = a.coeff(i);
    if (ai.is_zero()) continue;
    const C bj = b.coeff(n - i);
    if (bj.is_zero()) continue;
    r.add_product(ai, bj);
  }
  return r;
}

template <class C>
TruncatedSeries<C> series_inv(const TruncatedSeries<C>& f) {
  const auto inv0 = detail::CoeffTraits<C>::inverse(f[0]);
  if (!inv0) throw SeriesError("series_inv: constant term is not a unit");
  TruncatedSeries<C> g(f.order());
  g.set(0, *inv0);
  for (int n = 1; n <= f.order(); ++n) {
    C acc{};
    for (int k = 1; k <= n; ++k) {
      if (f[k].is_zero()) continue;
      acc.add_product(f[k], g[n - k]);
    }
    C gn{};
    gn.add_product(*inv0, acc);
    gn *= BigInt(-1);
    g.set(n, std::move(gn));
  }
  return g;
}

/**
 * f^k for any integer k. When f_0 is a unit, f = f_0 (1 + u) and (1 + u)^k is
 * expanded with the power recurrence n g_n = sum_j ((k+1) j - n) u_j g_{n-j},
 * whose cost is independent of the size of k. A non-unit constant term
 * requires k >= 0 and falls back to repeated squaring.
 */
template <class C>
TruncatedSeries<C> series_pow(const TruncatedSeries<C>& f, const BigInt& k) {
  using Traits = detail::CoeffTraits<C>;
  const int order = f.order();
  if (sgn(k) == 0) return TruncatedSeries<C>::one(order);
  const auto inv0 = Traits::inverse(f[0]);
  if (!inv0) {
    if (sgn(k) < 0) throw SeriesError("series_pow: negative power of a series with non-unit constant term");
    if (f.valuation() > 0 && k > order) return TruncatedSeries<C>(order);
    if (!k.fits_ulong_p()) throw SeriesError("series_pow: exponent too large for a non-unit series");
    unsigned long e = k.get_ui();
    TruncatedSeries<C> result = TruncatedSeries<C>::one(order);
    TruncatedSeries<C> base = f;
    while (e) {
      if (e & 1UL) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }
  const bool monic = f[0] == Traits::one();
  std::vector<int> support;
  std::vector<C> u(static_cast<size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) {
    if (f[n].is_zero()) continue;
    if (monic) {
      u[static_cast<size_t>(n)] = f[n];
    } else {
      u[static_cast<size_t>(n)].add_product(*inv0, f[n]);
    }
    support.push_back(n);
  }
  const BigInt k1 = k + 1;
  TruncatedSeries<C> g = TruncatedSeries<C>::one(order);
  BigInt w;
  for (int n = 1; n <= order; ++n) {
    C acc{};
    for (int j : support) {
      if (j > n) break;
      const C& gj = g[n - j];
      if (gj.is_zero()) continue;
      C term{};
      term.add_product(u[static_cast<size_t>(j)], gj);
      w = k1 * j - n;
      term *= w;
      acc += term;
    }
    Traits::divexact(acc, static_cast<unsigned long>(n));
    g.set(n, std::move(acc));
  }
  if (monic) return g;
  const C lead = Traits::unit_power(f[0], k);
  if (lead == Traits::one()) return g;
  TruncatedSeries<C> out(order);
  for (int n = 0; n <= order; ++n) {
    C c{};
    c.add_product(lead, g[n]);
    out.set(n, std::move(c));
  }
  return out;
}

template <class C>
TruncatedSeries<C> series_pow(const TruncatedSeries<C>& f, long k) {
  return series_pow(f, BigInt(k));
}

/// Embed a t-free series into the Laurent-coefficient ring.
TZSeries lift(const SuperSeries& s);

/// Res_{t=0} F_d dt at every z-degree d.
SuperSeries residue_series(const TZSeries& f);
/// [F : L(0)] functional: Res_{t=0} (t^{-1} - 1) F_d dt.
SuperSeries extract_L0(const TZSeries& f);
/// [F : L(2)] functional: Res_{t=0} (1 - t) F_d dt.
SuperSeries extract_L2(const TZSeries& f);

/// Largest k such that s vanishes mod z^{k+1}, i.e. valuation - 1 (order() when s == 0).
int vanishing_order(const SuperSeries& s);

}  // namespace fjsa
