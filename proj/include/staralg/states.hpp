#ifndef STARALG_STATES_HPP
#define STARALG_STATES_HPP

#include <complex>
#include <memory>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "staralg/element.hpp"
#include "staralg/poly.hpp"
#include "staralg/scalars.hpp"
#include "staralg/weyl.hpp"

namespace staralg {

/// Expectation values: exact for evaluation-type states, complex float
/// for Hermite vector states and mixtures containing one.
using StateValue = std::variant<GaussianRational, std::complex<double>>;

bool state_value_is_exact(const StateValue& v);
const GaussianRational& state_value_exact(const StateValue& v);
std::complex<double> state_value_complex(const StateValue& v);

enum class StateKind { Point, ReducedPoint, Mixture, Hermite, Averaged };

struct StateSpec;
using StatePtr = std::shared_ptr<const StateSpec>;

struct MixtureEntry {
  Rational weight;
  StatePtr state;
};

/// Tagged union of the supported state families. Construct through the
/// state_* factories below, which validate the invariants; only the
/// fields of the active kind are meaningful.
struct StateSpec {
  StateKind kind = StateKind::Point;

  /// Point: evaluation at w in C^{1+n}.
  std::vector<GaussianRational> w;

  /// ReducedPoint: delta_[w] on the reduced algebra at (sig, mu).
  ProjPoint rep;
  Signature sig{1, 2};
  GaussianRational mu;

  /// Mixture: convex combination, weights positive, summing to 1.
  std::vector<MixtureEntry> entries;

  /// Hermite: product vector state, one coefficient array per coordinate.
  std::vector<std::vector<std::complex<double>>> coeffs;
  int truncation = 0;

  /// Averaged: inner state composed with poly_average.
  StatePtr inner;
};

StatePtr state_point(std::vector<GaussianRational> w);
StatePtr state_reduced_point(ProjPoint w, const Signature& sig,
                             const GaussianRational& mu);
StatePtr state_mixture(std::vector<MixtureEntry> entries);
StatePtr state_hermite(std::vector<std::vector<std::complex<double>>> coeffs,
                       int truncation = 64);

enum class StateAlgebra { Weyl, Poly };

/// Which algebra the state pairs with, and its size: the coordinate
/// count m for weyl(m), the index bound n for poly(n) (points then have
/// n+1 entries).
StateAlgebra state_algebra(const StateSpec& omega);
int state_dim(const StateSpec& omega);

StateValue state_expect(const StateSpec& omega, const AlgebraElement& x);

struct EigenstateResult {
  bool is_eigenstate;
  StateValue eigenvalue;
};

/// Tests omega(a* a) = |omega(a)|^2. Exact state kinds demand tol = 0 and
/// compare exactly; Hermite paths compare within tol.
EigenstateResult eigenstate_check(const StateSpec& omega,
                                  const AlgebraElement& a, double tol = 0.0);

/// |omega(a* b)|^2 <= omega(a* a) omega(b* b), exact for exact kinds,
/// 1e-9 slack on Hermite paths. False on a valid state means a bug.
bool cauchy_schwarz_check(const StateSpec& omega, const AlgebraElement& a,
                          const AlgebraElement& b);

/// Reduction of point evaluations (and mixtures of them) over poly(n):
/// succeeds iff J(w) = mu exactly for every support point.
StatePtr reduce_state(const StateSpec& omega, const Signature& sig,
                      const GaussianRational& mu);

/// omega composed with poly_average: defined on all of P(C^{1+n}) and
/// restricting back to omega on invariants.
StatePtr average_pullback(StatePtr omega);

/// Truncated ladder realization: q = (a + a*)/sqrt(2), p = i(a* - a)/sqrt(2).
/// Exact on the leading (N - degree) block.
Eigen::MatrixXcd hermite_q_matrix(int truncation);
Eigen::MatrixXcd hermite_p_matrix(int truncation);

/// Matrix image of a one-coordinate element; monomials map to the
/// products p^k q^l of the truncated matrices.
Eigen::MatrixXcd hermite_matrix(const WeylElement& a, int truncation);

}  // namespace staralg

#endif
