#ifndef STARALG_WEYL_HPP
#define STARALG_WEYL_HPP

#include <map>
#include <string>
#include <vector>

#include "staralg/scalars.hpp"

namespace staralg {

/// Normal-ordered monomial p^k q^l: all momenta to the left of all
/// positions, coordinatewise exponents. k and l have length dim.
struct WeylMonomial {
  std::vector<unsigned> k, l;

  unsigned degree() const;
  bool coordinate_free(std::size_t j) const { return k[j] == 0 && l[j] == 0; }

  friend bool operator==(const WeylMonomial& a, const WeylMonomial& b) {
    return a.k == b.k && a.l == b.l;
  }
};

/// Graded lexicographic, leading term first: higher total degree wins,
/// ties broken lexicographically on k then l.
struct WeylMonomialOrder {
  bool operator()(const WeylMonomial& a, const WeylMonomial& b) const;
};

/// Element of the Weyl algebra W(R^dim) in the normal-ordered basis.
/// Monomials with zero coefficient are never stored.
class WeylElement {
 public:
  using TermMap = std::map<WeylMonomial, GaussianRational, WeylMonomialOrder>;

  explicit WeylElement(int dim);

  static WeylElement zero(int dim) { return WeylElement(dim); }
  static WeylElement unit(int dim);
  static WeylElement scalar(int dim, const GaussianRational& c);
  static WeylElement p(int dim, int j);
  static WeylElement q(int dim, int j);
  static WeylElement monomial(int dim, WeylMonomial m, GaussianRational c);

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Max total degree over monomials; 0 for the zero element.
  unsigned degree() const;
  GaussianRational coeff(const WeylMonomial& m) const;

  void add_term(const WeylMonomial& m, const GaussianRational& c);

  WeylElement operator-() const;
  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);

  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator*(const GaussianRational& c, const WeylElement& a);

  WeylElement pow(unsigned e) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) {
    return !(a == b);
  }

 private:
  int dim_;
  TermMap terms_;
};

/// Adjoint: reverses factor order and conjugates coefficients, result
/// re-expressed in the normal-ordered basis.
WeylElement weyl_star(const WeylElement& a);

/// {a, b} = -i(ab - ba), exact.
WeylElement weyl_poisson(const WeylElement& a, const WeylElement& b);

/// True when every monomial is free of q_0, i.e. a commutes with p_0.
bool weyl_is_invariant(const WeylElement& a);

/// a = sum_l (p_0 - mu)^l * parts[l] with every part free of p_0 and q_0.
struct CentralTaylor {
  Rational mu;
  std::vector<WeylElement> parts;
};
CentralTaylor weyl_central_taylor(const WeylElement& a, const GaussianRational& mu);

/// a = ideal_part + complement, ideal_part = (p_0 - mu) * cofactor,
/// complement free of p_0 and q_0.
struct WeylDecomposition {
  WeylElement ideal_part, cofactor, complement;
};
WeylDecomposition weyl_decompose(const WeylElement& a, const GaussianRational& mu);

/// Reduction at level mu: p^k q^l -> mu^{k_0} p^{k'} q^{l'} in W(R^{dim-1}),
/// coordinate 0 dropped. Kernel is the two-sided ideal generated by p_0 - mu.
WeylElement weyl_reduce(const WeylElement& a, const GaussianRational& mu);

/// Forgets coordinate 0 of an element carrying no p_0/q_0 exponents.
WeylElement weyl_drop0(const WeylElement& a);

/// Row l of the compression recurrence: alpha[m] for m = 0..l, with
/// alpha_{0,0} = 1 and
/// alpha_{l+1,m} = i*pi*k^-2 * alpha_{l,m-1} + pi*k^-2 * l * alpha_{l-1,m}.
std::vector<SymbolicScalar> weyl_alpha(unsigned l);

/// Element of W(R^{dim}) with exact symbolic coefficients in pi and k.
struct CompressedWeyl {
  int dim;
  std::map<WeylMonomial, SymbolicScalar, WeylMonomialOrder> terms;

  friend bool operator==(const CompressedWeyl& a, const CompressedWeyl& b) {
    return a.dim == b.dim && a.terms == b.terms;
  }
};

/// Exact expectation-compression of an invariant element through the
/// width-k coherent family at level mu: sum_l (sum_m alpha_{l,m} c_m) [a_l].
CompressedWeyl weyl_compress(const WeylElement& a, const GaussianRational& mu);

/// k -> infinity limit of weyl_compress; agrees with weyl_reduce.
WeylElement weyl_compress_limit(const WeylElement& a, const GaussianRational& mu);

}  // namespace staralg

#endif
