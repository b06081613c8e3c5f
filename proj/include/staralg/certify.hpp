#ifndef STARALG_CERTIFY_HPP
#define STARALG_CERTIFY_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "staralg/element.hpp"
#include "staralg/poly.hpp"
#include "staralg/scalars.hpp"

namespace staralg {

/// Index value marking the unit generator in certificate terms.
inline constexpr int kUnitGenerator = -1;

struct QMTerm {
  AlgebraElement a;
  int s_index = kUnitGenerator;
};

/// Witness for membership in the quadratic module generated by S:
/// target = sum_m a_m* s_m a_m with s_m = S[s_index] or the unit.
struct QMCertificate {
  std::vector<QMTerm> terms;
};

struct POTerm {
  PolyElement a;
  std::vector<int> gens;
};

/// Witness for membership in the preordering generated by S:
/// s_m is the product of the generators indexed by the gens multiset.
struct POCertificate {
  std::vector<POTerm> terms;
};

/// Witness for p^m2 (f + eps p^m1) = (J - mu) ideal_cofactor + qm over
/// the levelset generators. eps = 0 is the direct-membership variant.
struct PositivstellensatzCertificate {
  unsigned m1;
  Rational eps;
  unsigned m2;
  PolyElement ideal_cofactor;
  QMCertificate qm;
  PolyElement p;
};

bool verify_qm(const AlgebraElement& target,
               const std::vector<AlgebraElement>& S,
               const QMCertificate& cert);

bool verify_po(const AlgebraElement& target,
               const std::vector<AlgebraElement>& S,
               const POCertificate& cert);

/// {sum_{i >= s} z_i zbar_i}, the generator list of the levelset
/// criterion; empty for s = 1+n.
std::vector<PolyElement> levelset_generators(const Signature& sig);

bool verify_positivstellensatz(const PolyElement& f, const Signature& sig,
                               const GaussianRational& mu,
                               const PositivstellensatzCertificate& cert);

using ComplexPoint = std::vector<std::complex<double>>;

/// Deterministic seeded points with J(w) = mu up to float rounding:
/// normalized Gaussian directions on the sphere for s = 1+n, a
/// cosh/sinh-scaled two-block parametrization otherwise.
std::vector<ComplexPoint> sample_levelset(const Signature& sig, double mu,
                                          int count, std::uint64_t seed);

std::complex<double> poly_evaluate_complex(const PolyElement& f,
                                           const ComplexPoint& w);

struct FalsifyResult {
  bool counterexample = false;
  ComplexPoint w;
  double value = 0.0;
};

/// Evaluates f at sampled levelset points and reports the most negative
/// value below -1e-6. No counterexample is advisory, never a proof.
FalsifyResult pointwise_falsify(const PolyElement& f, const Signature& sig,
                                double mu, int count, std::uint64_t seed);

}  // namespace staralg

#endif
