#ifndef STARALG_SCALARS_HPP
#define STARALG_SCALARS_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "staralg/errors.hpp"

namespace staralg {

/// Arbitrary-precision rational, canonical form (lowest terms, positive
/// denominator) maintained by GMP.
using Rational = mpq_class;

/// Parses "3", "-3", "3/4", "-3/4". Throws StarError(SyntaxError) on
/// anything else (including zero denominators).
Rational rational_from_string(const std::string& s);

/// Always "num/den", e.g. "1/1", "-3/4".
std::string rational_to_fraction(const Rational& q);

/// "num" when the denominator is 1, otherwise "num/den".
std::string rational_str(const Rational& q);

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long re) : re_(re), im_(0) {}
  GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  /// |z|^2 = re^2 + im^2, exact.
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }

  GaussianRational pow(unsigned long e) const;

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Exact division; the divisor must be nonzero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  /// Compact display form: "0", "1/2", "i", "-i", "3*i", "1/2-3/4*i".
  /// Round-trips through the expression grammar.
  std::string str() const;

 private:
  Rational re_, im_;
};

/// Exact Laurent polynomial in two formal commuting symbols pi and k,
/// with GaussianRational coefficients. Zero coefficients are never stored.
class SymbolicScalar {
 public:
  /// (exponent of pi, exponent of k); either may be negative.
  using Key = std::pair<long, long>;

  SymbolicScalar() = default;

  static SymbolicScalar term(long e_pi, long e_k, GaussianRational c);
  static SymbolicScalar constant(GaussianRational c) { return term(0, 0, std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, GaussianRational>& terms() const { return terms_; }

  /// Coefficient at (e_pi, e_k); zero if absent.
  GaussianRational coeff(long e_pi, long e_k) const;

  /// Conjugates coefficients; pi and k are real symbols.
  SymbolicScalar conj() const;

  SymbolicScalar& operator+=(const SymbolicScalar& o);
  SymbolicScalar& operator-=(const SymbolicScalar& o);
  SymbolicScalar operator-() const;

  friend SymbolicScalar operator+(SymbolicScalar a, const SymbolicScalar& b) { return a += b; }
  friend SymbolicScalar operator-(SymbolicScalar a, const SymbolicScalar& b) { return a -= b; }
  friend SymbolicScalar operator*(const SymbolicScalar& a, const SymbolicScalar& b);
  friend SymbolicScalar operator*(const GaussianRational& c, const SymbolicScalar& x);

  friend bool operator==(const SymbolicScalar& a, const SymbolicScalar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const SymbolicScalar& a, const SymbolicScalar& b) {
    return !(a == b);
  }

  /// Display form, e.g. "1/2*pi*k^-2" or "1 + -3*pi^2*k^-4". Display only.
  std::string str() const;

 private:
  void add_term(const Key& key, const GaussianRational& c);

  std::map<Key, GaussianRational> terms_;
};

/// m-th moment of the normalized width-k Gaussian, as an exact symbolic
/// value: zero for odd m; for m = 2j a single term (2j-1)!!/2^j * pi^-j * k^2j.
SymbolicScalar gaussian_moment(unsigned long m);

/// Exact limit k -> infinity. Terms with e_k < 0 vanish. Throws
/// LimitDiverges if a term with e_k > 0 survives, TranscendentalResidue if a
/// k-free term still carries a power of pi.
GaussianRational k_limit(const SymbolicScalar& x);

}  // namespace staralg

#endif
