#ifndef STARALG_POLY_HPP
#define STARALG_POLY_HPP

#include <map>
#include <vector>

#include "staralg/scalars.hpp"

namespace staralg {

/// Signature of the U(1) action on C^{1+n}: nu_i = +1 for i < s, -1 for
/// i >= s.
struct Signature {
  int n, s;

  Signature(int n, int s) : n(n), s(s) {
    if (n < 1)
      throw StarError(ErrorCode::DimensionTooSmall, "n = " + std::to_string(n));
    if (s < 1 || s > n + 1)
      throw StarError(ErrorCode::IndexOutOfRange,
                      "s = " + std::to_string(s) + " outside 1.." +
                          std::to_string(n + 1));
  }

  int dim() const { return n + 1; }
  int nu(int i) const { return i < s ? 1 : -1; }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.n == b.n && a.s == b.s;
  }
};

/// Monomial z^a zbar^b; exponent vectors have length 1+n.
struct PolyMonomial {
  std::vector<unsigned> a, b;

  /// Holomorphic degree K.
  unsigned holo() const;
  /// Antiholomorphic degree L.
  unsigned anti() const;
  unsigned degree() const { return holo() + anti(); }
  bool diagonal() const { return holo() == anti(); }

  friend bool operator==(const PolyMonomial& x, const PolyMonomial& y) {
    return x.a == y.a && x.b == y.b;
  }
};

/// Graded lexicographic, leading term first.
struct PolyMonomialOrder {
  bool operator()(const PolyMonomial& x, const PolyMonomial& y) const;
};

/// Element of the polynomial *-algebra P(C^{1+n}).
class PolyElement {
 public:
  using TermMap = std::map<PolyMonomial, GaussianRational, PolyMonomialOrder>;

  explicit PolyElement(int n);

  static PolyElement zero(int n) { return PolyElement(n); }
  static PolyElement unit(int n);
  static PolyElement scalar(int n, const GaussianRational& c);
  static PolyElement z(int n, int i);
  static PolyElement zbar(int n, int i);
  static PolyElement monomial(int n, PolyMonomial m, GaussianRational c);

  int n() const { return n_; }
  int dim() const { return n_ + 1; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;
  GaussianRational coeff(const PolyMonomial& m) const;

  void add_term(const PolyMonomial& m, const GaussianRational& c);

  PolyElement operator-() const;
  PolyElement& operator+=(const PolyElement& o);
  PolyElement& operator-=(const PolyElement& o);

  friend PolyElement operator+(PolyElement a, const PolyElement& b) { return a += b; }
  friend PolyElement operator-(PolyElement a, const PolyElement& b) { return a -= b; }
  friend PolyElement operator*(const PolyElement& a, const PolyElement& b);
  friend PolyElement operator*(const GaussianRational& c, const PolyElement& a);

  PolyElement pow(unsigned e) const;

  friend bool operator==(const PolyElement& a, const PolyElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const PolyElement& a, const PolyElement& b) {
    return !(a == b);
  }

 private:
  int n_;
  TermMap terms_;
};

/// Pointwise conjugation: swaps z- and zbar-exponents, conjugates coefficients.
PolyElement poly_star(const PolyElement& f);

/// True when every monomial is bidegree-diagonal (K = L).
bool poly_is_invariant(const PolyElement& f);

/// (1/i) sum_j nu_j (df/dzbar_j dg/dz_j - df/dz_j dg/dzbar_j).
PolyElement poly_poisson(const PolyElement& f, const PolyElement& g,
                         const Signature& sig);

/// J = sum_i nu_i z_i zbar_i.
PolyElement poly_momentum(const Signature& sig);

/// Projection onto bidegree-diagonal monomials (the U(1) orbit average).
PolyElement poly_average(const PolyElement& f);

/// The bihomogeneous component of diagonal degree l.
PolyElement poly_diagonal_component(const PolyElement& f, unsigned l);

/// f_h = sum_l (J/mu)^{d-l} f_l and the cofactor with
/// f - f_h = (mu - J) * cofactor, both exact.
struct Homogenization {
  PolyElement fh, cofactor;
};
Homogenization poly_homogenize(const PolyElement& f, const Signature& sig,
                               const GaussianRational& mu);

/// Membership in the ideal <J - mu>: member iff f_h = 0. The witness is the
/// cofactor (f = (mu - J) * witness) when member, the obstruction f_h when not.
struct IdealMembership {
  bool member;
  PolyElement witness;
};
IdealMembership poly_ideal_member(const PolyElement& f, const Signature& sig,
                                  const GaussianRational& mu);

/// Equality in the reduced algebra: f - g in <J - mu>.
bool poly_reduced_equal(const PolyElement& f, const PolyElement& g,
                        const Signature& sig, const GaussianRational& mu);

/// Substitutes w_i for z_i and conj(w_i) for zbar_i.
GaussianRational poly_evaluate(const PolyElement& f,
                               const std::vector<GaussianRational>& w);

/// Point of CP^n given by homogeneous coordinates, not all zero.
struct ProjPoint {
  std::vector<GaussianRational> w;
};

/// Projective equality by exact cross-ratio tests w_i w'_j = w_j w'_i.
bool proj_equal(const ProjPoint& a, const ProjPoint& b);

/// J(w) = sum_i nu_i |w_i|^2, exact and real.
Rational poly_momentum_value(const ProjPoint& w, const Signature& sig);

/// delta_[w](f) = sum_l f_l(w) (mu / J(w))^l; independent of the projective
/// representative and of the ideal class of f.
GaussianRational poly_reduced_evaluate(const PolyElement& f, const ProjPoint& w,
                                       const Signature& sig,
                                       const GaussianRational& mu);

/// (1+n) x (1+n) Gaussian-rational matrix, row major.
struct HomMatrix {
  std::vector<std::vector<GaussianRational>> X;

  int dim() const { return static_cast<int>(X.size()); }

  friend bool operator==(const HomMatrix& a, const HomMatrix& b) {
    return a.X == b.X;
  }
};

/// X = (J(w)^{-1} w_i conj(w_j)); satisfies (nu X)^2 = nu X, X* = X,
/// tr(nu X) = 1 exactly.
HomMatrix poly_hom_matrix(const ProjPoint& w, const Signature& sig);

/// Inverse of poly_hom_matrix: checks the three matrix conditions exactly and
/// returns the unique projective point (first nonzero column).
ProjPoint poly_reconstruct_point(const HomMatrix& X, const Signature& sig);

enum class HomClass { InsideMred, OutsideMred };

/// InsideMred iff J(w) > 0; cross-checked against the sign of
/// delta_[w](sum_{i>=s} z_i zbar_i).
HomClass poly_classify_hom(const ProjPoint& w, const Signature& sig);

}  // namespace staralg

#endif
