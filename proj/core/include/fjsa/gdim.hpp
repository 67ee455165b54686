#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace fjsa {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class Parity : int { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}

/// (-1)^{|a||b|}
inline int koszul_sign(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

inline int parity_bit(Parity p) { return static_cast<int>(p); }

/**
 * Graded dimension (even, odd), read as the element even + odd*x of
 * R = Z[x]/(x^2 - 1). Entries may be negative for virtual classes.
 */
struct GDim {
  BigInt even{0};
  BigInt odd{0};

  GDim() = default;
  GDim(BigInt e, BigInt o) : even(std::move(e)), odd(std::move(o)) {}
  GDim(long e, long o) : even(e), odd(o) {}

  static GDim one() { return {1, 0}; }
  static GDim x() { return {0, 1}; }
  static GDim of_parity(Parity p) { return p == Parity::Even ? one() : x(); }

  bool is_zero() const { return sgn(even) == 0 && sgn(odd) == 0; }
  /// Units of R are exactly (+-1, 0) and (0, +-1); each is its own inverse.
  bool is_unit() const {
    return (sgn(odd) == 0 && abs(even) == 1) || (sgn(even) == 0 && abs(odd) == 1);
  }

  GDim& operator+=(const GDim& o) {
    even += o.even;
    odd += o.odd;
    return *this;
  }
  GDim& operator-=(const GDim& o) {
    even -= o.even;
    odd -= o.odd;
    return *this;
  }
  GDim& operator*=(const BigInt& k) {
    even *= k;
    odd *= k;
    return *this;
  }

  friend GDim operator+(GDim a, const GDim& b) { return a += b; }
  friend GDim operator-(GDim a, const GDim& b) { return a -= b; }
  friend GDim operator-(const GDim& a) { return {-a.even, -a.odd}; }
  friend GDim operator*(const GDim& a, const GDim& b) {
    return {a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even};
  }
  friend GDim operator*(GDim a, const BigInt& k) { return a *= k; }
  friend GDim operator*(const BigInt& k, GDim a) { return a *= k; }
  friend bool operator==(const GDim& a, const GDim& b) {
    return a.even == b.even && a.odd == b.odd;
  }
  friend bool operator!=(const GDim& a, const GDim& b) { return !(a == b); }

  /// Accumulate a*b without temporaries.
  void add_product(const GDim& a, const GDim& b) {
    mpz_addmul(even.get_mpz_t(), a.even.get_mpz_t(), b.even.get_mpz_t());
    mpz_addmul(even.get_mpz_t(), a.odd.get_mpz_t(), b.odd.get_mpz_t());
    mpz_addmul(odd.get_mpz_t(), a.even.get_mpz_t(), b.odd.get_mpz_t());
    mpz_addmul(odd.get_mpz_t(), a.odd.get_mpz_t(), b.even.get_mpz_t());
  }

  std::string str() const { return "(" + even.get_str() + "," + odd.get_str() + ")"; }
};

inline GDim gdim_mul(const GDim& a, const GDim& b) { return a * b; }

inline std::ostream& operator<<(std::ostream& os, const GDim& g) { return os << g.str(); }

}  // namespace fjsa
