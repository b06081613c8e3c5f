// Acceptance suite: one line per criterion, exit code = number of failures.
// Every comparison is exact unless it goes through a float path, in which
// case the tolerance is one of the pinned constants below.

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cli_runner.hpp"
#include "staralg/certify.hpp"
#include "staralg/element.hpp"
#include "staralg/errors.hpp"
#include "staralg/poly.hpp"
#include "staralg/scalars.hpp"
#include "staralg/states.hpp"
#include "staralg/weyl.hpp"
#include "testutil.hpp"

using namespace staralg;
using testutil::Rng;

namespace {

constexpr double kMomentTol = 1e-9;     // hermite moments at truncation 64
constexpr double kMemberTol = 1e-9;     // ideal members on sampled levelset points
constexpr double kEigTol = 1e-9;        // minimum eigenvalue of the (N-1)(N-2) matrix
constexpr double kNonzeroFloor = 1e-6;  // nonmembers must exceed this at some sample
constexpr double kLawsBudgetSec = 60.0;
constexpr double kCompressBudgetSec = 30.0;

struct Outcome {
  bool ok;
  std::string note;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

GaussianRational C(long re, long im = 0) {
  return GaussianRational(Rational(re), Rational(im));
}
const GaussianRational I = GaussianRational::i();

WeylElement P(int dim, int j) { return WeylElement::p(dim, j); }
WeylElement Q(int dim, int j) { return WeylElement::q(dim, j); }
PolyElement Z(int n, int i) { return PolyElement::z(n, i); }
PolyElement ZB(int n, int i) { return PolyElement::zbar(n, i); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt_sec(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(1) << s << "s";
  return o.str();
}

WeylMonomial random_weyl_monomial(Rng& rng, int dim, unsigned maxdeg,
                                  bool invariant) {
  WeylMonomial m{std::vector<unsigned>(dim, 0), std::vector<unsigned>(dim, 0)};
  std::uniform_int_distribution<unsigned> degd(0, maxdeg);
  std::uniform_int_distribution<int> slot(0, 2 * dim - 1);
  unsigned d = degd(rng);
  for (unsigned t = 0; t < d; ++t) {
    int s = slot(rng);
    for (;;) {
      if (s < dim) {
        m.k[s] += 1;
        break;
      }
      if (!invariant || s != dim) {
        m.l[s - dim] += 1;
        break;
      }
      s = slot(rng);
    }
  }
  return m;
}

WeylElement random_weyl(Rng& rng, int dim, unsigned maxdeg, int maxterms,
                        bool invariant = false) {
  WeylElement e(dim);
  std::uniform_int_distribution<int> nterms(0, maxterms);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t)
    e.add_term(random_weyl_monomial(rng, dim, maxdeg, invariant),
               testutil::random_gaussian(rng, 6, 4));
  return e;
}

PolyElement random_poly(Rng& rng, int n, unsigned maxexp = 2,
                        int maxterms = 3) {
  PolyElement out = PolyElement::zero(n);
  std::uniform_int_distribution<unsigned> e(0, maxexp);
  std::uniform_int_distribution<int> nterms(1, maxterms);
  const int t = nterms(rng);
  for (int s = 0; s < t; ++s) {
    PolyMonomial m;
    m.a.resize(n + 1);
    m.b.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
      m.a[j] = e(rng);
      m.b[j] = e(rng);
    }
    out.add_term(m, testutil::random_gaussian(rng, 3, 4));
  }
  return out;
}

PolyElement random_invariant_poly(Rng& rng, int n, unsigned maxhalf = 2,
                                  int maxterms = 3) {
  PolyElement out = PolyElement::zero(n);
  std::uniform_int_distribution<unsigned> degd(0, maxhalf);
  std::uniform_int_distribution<int> slot(0, n);
  std::uniform_int_distribution<int> nterms(1, maxterms);
  const int t = nterms(rng);
  for (int s = 0; s < t; ++s) {
    PolyMonomial m{std::vector<unsigned>(n + 1, 0),
                   std::vector<unsigned>(n + 1, 0)};
    unsigned d = degd(rng);
    for (unsigned u = 0; u < d; ++u) m.a[slot(rng)] += 1;
    for (unsigned u = 0; u < d; ++u) m.b[slot(rng)] += 1;
    out.add_term(m, testutil::random_gaussian(rng, 3, 4));
  }
  return out;
}

PolyElement random_nonzero_invariant(Rng& rng, int n, unsigned maxhalf = 2,
                                     int maxterms = 3) {
  for (;;) {
    PolyElement f = random_invariant_poly(rng, n, maxhalf, maxterms);
    if (!f.is_zero()) return f;
  }
}

GaussianRational random_positive_mu(Rng& rng) {
  std::uniform_int_distribution<long> num(1, 5), den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return GaussianRational(q);
}

/// Gaussian rational point with sum of |w_i|^2 exactly 1.
std::vector<GaussianRational> rational_sphere_point(Rng& rng, int len) {
  std::vector<GaussianRational> u(len - 1);
  for (auto& c : u) c = testutil::random_gaussian(rng, 3, 3);
  Rational s(0);
  for (const auto& c : u) s += c.norm_sq();
  const Rational d = 1 + s;
  std::vector<GaussianRational> w(len);
  const GaussianRational inv(Rational(1) / d);
  for (int i = 0; i + 1 < len; ++i) w[i] = C(2) * u[i] * inv;
  w[len - 1] = GaussianRational((1 - s) / d);
  return w;
}

ProjPoint random_proj_point(Rng& rng, const Signature& sig) {
  for (;;) {
    ProjPoint w;
    w.w.resize(sig.n + 1);
    bool nonzero = false;
    for (auto& c : w.w) {
      c = testutil::random_gaussian(rng, 4, 3);
      nonzero = nonzero || !c.is_zero();
    }
    if (nonzero && poly_momentum_value(w, sig) != 0) return w;
  }
}

std::vector<std::complex<double>> random_unit_vector(Rng& rng, int len) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<std::complex<double>> v(len);
  double n2 = 0;
  for (auto& c : v) {
    c = {g(rng), g(rng)};
    n2 += std::norm(c);
  }
  if (n2 < 1e-12) {
    v[0] = 1.0;
    n2 = 1.0;
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& c : v) c *= inv;
  return v;
}

// 1. Product, star, and bracket laws on random triples.
Outcome weyl_laws() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(977001);
  auto triple = [&](WeylElement& a, WeylElement& b, WeylElement& c) {
    const int dim = 1 + static_cast<int>(rng() % 3);
    a = random_weyl(rng, dim, 4, 3);
    b = random_weyl(rng, dim, 4, 3);
    c = random_weyl(rng, dim, 4, 3);
  };
  WeylElement a(1), b(1), c(1);
  for (int it = 0; it < 200; ++it) {
    triple(a, b, c);
    if ((a * b) * c != a * (b * c))
      return fail("associativity failed at iteration " + std::to_string(it));
  }
  for (int it = 0; it < 200; ++it) {
    triple(a, b, c);
    if (weyl_star(a * b) != weyl_star(b) * weyl_star(a))
      return fail("star antimultiplicativity failed at iteration " +
                  std::to_string(it));
  }
  for (int it = 0; it < 200; ++it) {
    triple(a, b, c);
    if (weyl_poisson(a, b) != -weyl_poisson(b, a))
      return fail("bracket antisymmetry failed at iteration " +
                  std::to_string(it));
  }
  for (int it = 0; it < 200; ++it) {
    triple(a, b, c);
    if (weyl_poisson(a, b * c) !=
        weyl_poisson(a, b) * c + b * weyl_poisson(a, c))
      return fail("leibniz failed at iteration " + std::to_string(it));
  }
  for (int it = 0; it < 200; ++it) {
    triple(a, b, c);
    auto cyc = weyl_poisson(a, weyl_poisson(b, c)) +
               weyl_poisson(b, weyl_poisson(c, a)) +
               weyl_poisson(c, weyl_poisson(a, b));
    if (!cyc.is_zero())
      return fail("jacobi failed at iteration " + std::to_string(it));
  }
  for (int it = 0; it < 200; ++it) {
    triple(a, b, c);
    if (weyl_star(weyl_poisson(a, b)) !=
        weyl_poisson(weyl_star(a), weyl_star(b)))
      return fail("bracket star compatibility failed at iteration " +
                  std::to_string(it));
  }
  const double el = seconds_since(t0);
  if (el >= kLawsBudgetSec)
    return fail("runtime " + fmt_sec(el) + " over budget " +
                fmt_sec(kLawsBudgetSec));
  return {true, "assoc, star antihom, bracket antisym/leibniz/jacobi/star "
                "(200 triples per law, " +
                    fmt_sec(el) + ")"};
}

// 2. Reduction respects product, star, bracket, and sends p_0 to mu.
Outcome reduction_homomorphism() {
  Rng rng(977002);
  const GaussianRational mus[3] = {C(1), GaussianRational(Rational(5, 2)),
                                   GaussianRational(Rational(-3, 4))};
  for (const auto& mu : mus) {
    for (int it = 0; it < 200; ++it) {
      const int dim = 2 + static_cast<int>(rng() % 2);
      const WeylElement a = random_weyl(rng, dim, 4, 3, true);
      const WeylElement b = random_weyl(rng, dim, 4, 3, true);
      if (weyl_reduce(a * b, mu) != weyl_reduce(a, mu) * weyl_reduce(b, mu))
        return fail("product not preserved at iteration " +
                    std::to_string(it) + ", mu = " + mu.str());
      if (weyl_reduce(weyl_star(a), mu) != weyl_star(weyl_reduce(a, mu)))
        return fail("star not preserved at iteration " + std::to_string(it));
      if (weyl_reduce(weyl_poisson(a, b), mu) !=
          weyl_poisson(weyl_reduce(a, mu), weyl_reduce(b, mu)))
        return fail("bracket not preserved at iteration " +
                    std::to_string(it));
      if (weyl_reduce(P(dim, 0), mu) != WeylElement::scalar(dim - 1, mu))
        return fail("p_0 does not map to mu at dim " + std::to_string(dim));
    }
  }
  return {true, "product, star, bracket, p_0 -> mu (200 invariant pairs x 3 "
                "levels)"};
}

// 3. Central decomposition reassembles and matches reduction.
Outcome decomposition() {
  Rng rng(977003);
  const GaussianRational mus[3] = {C(1), GaussianRational(Rational(5, 2)),
                                   GaussianRational(Rational(-3, 4))};
  for (int it = 0; it < 200; ++it) {
    const int dim = 2 + static_cast<int>(rng() % 2);
    const WeylElement a = random_weyl(rng, dim, 4, 4, true);
    const GaussianRational& mu = mus[it % 3];
    const WeylDecomposition d = weyl_decompose(a, mu);
    if (a != d.ideal_part + d.complement)
      return fail("reassembly failed at iteration " + std::to_string(it));
    if (d.ideal_part != (P(dim, 0) - WeylElement::scalar(dim, mu)) * d.cofactor)
      return fail("ideal part is not (p_0 - mu) * cofactor at iteration " +
                  std::to_string(it));
    for (const auto& [mono, coeff] : d.complement.terms())
      if (!mono.coordinate_free(0))
        return fail("complement touches coordinate 0 at iteration " +
                    std::to_string(it));
    if (weyl_reduce(a, mu) != weyl_drop0(d.complement))
      return fail("reduction does not match dropped complement at iteration " +
                  std::to_string(it));
  }
  return {true, "a = (p_0 - mu) g + c with c central, matches reduction (200 "
                "elements x 3 levels)"};
}

// 4. Compression limit equals reduction; the order-k gap is pi/(2 k^2).
Outcome compression() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(977004);
  for (int it = 0; it < 100; ++it) {
    const int dim = 2 + static_cast<int>(rng() % 2);
    const WeylElement a = random_weyl(rng, dim, 4, 4, true);
    const GaussianRational mu(testutil::random_rational(rng, 5, 4));
    if (weyl_compress_limit(a, mu) != weyl_reduce(a, mu))
      return fail("limit differs from reduction at iteration " +
                  std::to_string(it));
    for (const auto& [mono, sym] : weyl_compress(a, mu).terms)
      for (const auto& [key, coeff] : sym.terms())
        if (key.second > 0)
          return fail("positive k power in compressed coefficient at "
                      "iteration " +
                      std::to_string(it));
  }
  const SymbolicScalar gap =
      SymbolicScalar::term(1, -2, GaussianRational(Rational(1, 2)));
  const WeylMonomial one{{0}, {0}};
  for (const auto& mu : {C(1), GaussianRational(Rational(5, 2))}) {
    const WeylElement shifted = P(2, 0) - WeylElement::scalar(2, mu);
    const CompressedWeyl c = weyl_compress(shifted * shifted, mu);
    if (c.terms.size() != 1 || c.terms.count(one) == 0 ||
        c.terms.at(one) != gap)
      return fail("compressed (p_0 - mu)^2 is not pi/(2 k^2) at mu = " +
                  mu.str());
  }
  const double el = seconds_since(t0);
  if (el >= kCompressBudgetSec)
    return fail("runtime " + fmt_sec(el) + " over budget " +
                fmt_sec(kCompressBudgetSec));
  return {true, "limit = reduction, gap pi/(2 k^2), no positive k powers "
                "(100 elements, " +
                    fmt_sec(el) + ")"};
}

// 5. Commutator expectation is exactly i for every state on the Weyl
// algebra, and the compressed variance of p_0 is strictly positive.
Outcome obstruction() {
  Rng rng(977005);
  for (int dim = 1; dim <= 2; ++dim) {
    const WeylElement comm = Q(dim, 0) * P(dim, 0) - P(dim, 0) * Q(dim, 0);
    if (comm != I * WeylElement::unit(dim))
      return fail("commutator is not i at dim " + std::to_string(dim));
    const AlgebraElement xc(comm), xu(WeylElement::unit(dim));
    std::vector<StatePtr> states;
    std::vector<std::vector<std::complex<double>>> ground(dim, {1.0});
    states.push_back(state_hermite(ground, 64));
    for (int len : {2, 5, 8}) {
      std::vector<std::vector<std::complex<double>>> coeffs;
      for (int j = 0; j < dim; ++j)
        coeffs.push_back(random_unit_vector(rng, len));
      states.push_back(state_hermite(coeffs, 64));
    }
    states.push_back(state_mixture(
        {{Rational(1, 2), states[0]}, {Rational(1, 2), states[1]}}));
    states.push_back(state_mixture(
        {{Rational(1, 3), states[1]}, {Rational(2, 3), states[2]}}));
    for (std::size_t s = 0; s < states.size(); ++s) {
      const std::complex<double> vc =
          state_value_complex(state_expect(*states[s], xc));
      const std::complex<double> vu =
          state_value_complex(state_expect(*states[s], xu));
      if (vc != std::complex<double>(0, 1) * vu)
        return fail("commutator expectation differs from i * omega(1) for "
                    "state " +
                    std::to_string(s) + " at dim " + std::to_string(dim));
      if (std::abs(vu - 1.0) > 1e-12)
        return fail("omega(1) != 1 for state " + std::to_string(s));
    }
    // no state of the other kinds even pairs with the Weyl algebra
    const StatePtr pt = state_point({C(1), C(0)});
    try {
      state_expect(*pt, xc);
      return fail("point state accepted a Weyl element");
    } catch (const StarError& e) {
      if (e.code() != ErrorCode::AlgebraMismatch)
        return fail("point state refusal has the wrong code");
    }
    try {
      reduce_state(*states.back(), Signature(1, 2), C(1));
      return fail("a Weyl state claimed to reduce");
    } catch (const StarError& e) {
      if (e.code() != ErrorCode::WeylHasNoEigenstates)
        return fail("Weyl state reduction refusal has the wrong code");
    }
  }
  const auto ground1 = state_hermite({{1.0}}, 64);
  if (eigenstate_check(*ground1, AlgebraElement(P(1, 0)), kMomentTol)
          .is_eigenstate)
    return fail("ground state passed as an eigenstate of p_0");
  const GaussianRational mu(Rational(5, 2));
  const WeylElement shifted = P(2, 0) - WeylElement::scalar(2, mu);
  const CompressedWeyl c = weyl_compress(shifted * shifted, mu);
  const WeylMonomial one{{0}, {0}};
  if (c.terms.size() != 1 || c.terms.count(one) == 0)
    return fail("compressed variance is not a multiple of the unit");
  const SymbolicScalar& v = c.terms.at(one);
  if (v.is_zero() || v.terms().size() != 1)
    return fail("compressed variance is not a single term");
  const GaussianRational coeff = v.coeff(1, -2);
  if (!coeff.is_real() || coeff.re() <= 0)
    return fail("compressed variance coefficient is not positive");
  return {true, "omega(q_0 p_0 - p_0 q_0) = i for hermite vectors and "
                "mixtures, variance pi/(2 k^2) > 0 for all k"};
}

// 6. Ideal membership tracks levelset evaluation, and the vanishing
// ideal is a bracket ideal.
Outcome poly_reduction() {
  Rng rng(977006);
  const std::vector<Signature> sigs = {Signature(1, 1), Signature(1, 2),
                                       Signature(2, 1), Signature(2, 2),
                                       Signature(2, 3)};
  for (int it = 0; it < 200; ++it) {
    const Signature& sig = sigs[it % sigs.size()];
    const PolyElement f = random_invariant_poly(rng, sig.n, 2, 3);
    const GaussianRational mu = random_positive_mu(rng);
    const Homogenization h = poly_homogenize(f, sig, mu);
    const PolyElement ideal =
        (PolyElement::scalar(sig.n, mu) - poly_momentum(sig)) * h.cofactor;
    if (f - h.fh != ideal)
      return fail("homogenization identity failed at iteration " +
                  std::to_string(it));
  }
  const GaussianRational member_mus[3] = {
      C(1), GaussianRational(Rational(5, 2)), GaussianRational(Rational(1, 3))};
  for (int it = 0; it < 50; ++it) {
    const Signature& sig = sigs[it % sigs.size()];
    const GaussianRational& mu = member_mus[it % 3];
    const PolyElement h = random_invariant_poly(rng, sig.n, 2, 3);
    const PolyElement f =
        (poly_momentum(sig) - PolyElement::scalar(sig.n, mu)) * h;
    const IdealMembership m = poly_ideal_member(f, sig, mu);
    if (!m.member)
      return fail("constructed member rejected at iteration " +
                  std::to_string(it));
    if (f != (PolyElement::scalar(sig.n, mu) - poly_momentum(sig)) * m.witness)
      return fail("member witness does not reassemble at iteration " +
                  std::to_string(it));
    const auto pts =
        sample_levelset(sig, mu.re().get_d(), 100, 977100 + it);
    for (const auto& w : pts)
      if (std::abs(poly_evaluate_complex(f, w)) > kMemberTol)
        return fail("member exceeds 1e-9 on the levelset at iteration " +
                    std::to_string(it));
  }
  const std::vector<Signature> spheres = {Signature(1, 2), Signature(2, 3)};
  const std::vector<Signature> mixed = {Signature(1, 1), Signature(2, 1),
                                        Signature(2, 2)};
  for (int it = 0; it < 50; ++it) {
    const bool sphere = it % 2 == 0;
    const Signature& sig = sphere ? spheres[(it / 2) % 2] : mixed[(it / 2) % 3];
    const GaussianRational mu = sphere ? C(1) : random_positive_mu(rng);
    PolyElement f = PolyElement::zero(sig.n);
    for (;;) {
      f = random_nonzero_invariant(rng, sig.n, 2, 3);
      if (!poly_ideal_member(f, sig, mu).member) break;
    }
    double maxabs = 0;
    for (const auto& w :
         sample_levelset(sig, mu.re().get_d(), 100, 977200 + it))
      maxabs = std::max(maxabs, std::abs(poly_evaluate_complex(f, w)));
    if (maxabs <= kNonzeroFloor)
      return fail("nonmember stays below 1e-6 on 100 samples at iteration " +
                  std::to_string(it));
    if (sphere) {
      bool found = false;
      for (int trial = 0; trial < 500 && !found; ++trial) {
        const auto w = rational_sphere_point(rng, sig.n + 1);
        const GaussianRational v = poly_evaluate(f, w);
        if (v.is_zero()) continue;
        found = true;
        if (poly_reduced_evaluate(f, ProjPoint{w}, sig, mu) != v)
          return fail("delta and direct evaluation disagree at an exact "
                      "levelset point, iteration " +
                      std::to_string(it));
      }
      if (!found)
        return fail("no exact rational witness found at iteration " +
                    std::to_string(it));
    }
  }
  for (int it = 0; it < 100; ++it) {
    const Signature& sig = sigs[it % sigs.size()];
    const GaussianRational mu = random_positive_mu(rng);
    const PolyElement f = random_invariant_poly(rng, sig.n, 2, 3);
    const PolyElement h = random_invariant_poly(rng, sig.n, 2, 3);
    const PolyElement v =
        (poly_momentum(sig) - PolyElement::scalar(sig.n, mu)) * h;
    const PolyElement pb = poly_poisson(f, v, sig);
    if (!poly_is_invariant(pb))
      return fail("bracket left the invariants at iteration " +
                  std::to_string(it));
    if (!poly_ideal_member(pb, sig, mu).member)
      return fail("bracket left the vanishing ideal at iteration " +
                  std::to_string(it));
  }
  return {true, "homogenization (200), members vanish / nonmembers witness "
                "(50 + 50 f, 100 points each), bracket ideal (100 pairs)"};
}

// 7. Point evaluation on the reduced algebra is a star character,
// independent of projective and ideal representatives.
Outcome delta_functional() {
  Rng rng(977007);
  const std::vector<Signature> sigs = {Signature(1, 1), Signature(1, 2),
                                       Signature(2, 1), Signature(2, 3)};
  for (const Signature& sig : sigs) {
    for (int it = 0; it < 100; ++it) {
      const ProjPoint w = random_proj_point(rng, sig);
      const GaussianRational mu = random_positive_mu(rng);
      const PolyElement f = random_invariant_poly(rng, sig.n, 2, 3);
      const PolyElement g = random_invariant_poly(rng, sig.n, 2, 3);
      const PolyElement h = random_invariant_poly(rng, sig.n, 2, 3);
      auto d = [&](const PolyElement& x) {
        return poly_reduced_evaluate(x, w, sig, mu);
      };
      if (d(PolyElement::unit(sig.n)) != C(1))
        return fail("unit does not evaluate to 1");
      if (d(f * g) != d(f) * d(g))
        return fail("multiplicativity failed at s = " + std::to_string(sig.s) +
                    ", n = " + std::to_string(sig.n) + ", iteration " +
                    std::to_string(it));
      if (d(poly_star(f)) != d(f).conj())
        return fail("star compatibility failed at iteration " +
                    std::to_string(it));
      const GaussianRational lam = testutil::random_nonzero_gaussian(rng);
      ProjPoint scaled;
      scaled.w.reserve(w.w.size());
      for (const auto& c : w.w) scaled.w.push_back(lam * c);
      if (poly_reduced_evaluate(f, scaled, sig, mu) != d(f))
        return fail("projective representative changed the value at "
                    "iteration " +
                    std::to_string(it));
      const PolyElement shifted =
          f + (poly_momentum(sig) - PolyElement::scalar(sig.n, mu)) * h;
      if (d(shifted) != d(f))
        return fail("ideal representative changed the value at iteration " +
                    std::to_string(it));
    }
  }
  return {true, "character, star, projective and ideal independence (100 "
                "instances x 4 signatures)"};
}

// 8. The point <-> matrix correspondence round-trips, and each matrix
// condition is enforced.
Outcome matrix_roundtrip() {
  Rng rng(977008);
  const std::vector<Signature> sigs = {Signature(1, 1), Signature(1, 2),
                                       Signature(2, 1), Signature(2, 3)};
  for (const Signature& sig : sigs) {
    const int m = sig.n + 1;
    for (int it = 0; it < 100; ++it) {
      const ProjPoint w = random_proj_point(rng, sig);
      const HomMatrix X = poly_hom_matrix(w, sig);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          if (X.X[j][i] != X.X[i][j].conj())
            return fail("matrix is not hermitian");
          GaussianRational acc;
          for (int t = 0; t < m; ++t) {
            const GaussianRational prod = X.X[i][t] * X.X[t][j];
            acc += sig.nu(t) > 0 ? prod : -prod;
          }
          if (acc != X.X[i][j]) return fail("matrix is not nu-idempotent");
        }
      GaussianRational tr;
      for (int i = 0; i < m; ++i)
        tr += sig.nu(i) > 0 ? X.X[i][i] : -X.X[i][i];
      if (tr != C(1)) return fail("nu-trace is not 1");
      if (!proj_equal(poly_reconstruct_point(X, sig), w))
        return fail("reconstruction lost the point at s = " +
                    std::to_string(sig.s) + ", iteration " +
                    std::to_string(it));
    }
    // one surgical violation per condition
    auto expect_reject = [&](const HomMatrix& X, const char* marker) -> bool {
      try {
        poly_reconstruct_point(X, sig);
        return false;
      } catch (const StarError& e) {
        return e.code() == ErrorCode::NotAHomMatrix &&
               std::string(e.what()).find(marker) != std::string::npos;
      }
    };
    auto zeros = [&]() {
      return HomMatrix{std::vector<std::vector<GaussianRational>>(
          m, std::vector<GaussianRational>(m))};
    };
    HomMatrix bad = zeros();
    bad.X[0][0] = C(1);
    bad.X[0][1] = C(1);  // nu X idempotent with trace 1, not hermitian
    if (!expect_reject(bad, "X* != X"))
      return fail("non-hermitian matrix was not rejected");
    bad = zeros();
    bad.X[0][0] = GaussianRational(Rational(1, 2));
    bad.X[1][1] = GaussianRational(Rational(sig.nu(1), 2));
    if (!expect_reject(bad, "(nu X)^2"))
      return fail("non-idempotent matrix was not rejected");
    bad = zeros();
    for (int i = 0; i < m; ++i) bad.X[i][i] = C(sig.nu(i));
    if (!expect_reject(bad, "tr(nu X)"))
      return fail("wrong-trace matrix was not rejected");
    if (!expect_reject(zeros(), "tr(nu X)"))
      return fail("zero matrix was not rejected");
    HomMatrix bumped = poly_hom_matrix(random_proj_point(rng, sig), sig);
    bumped.X[0][1] += C(1);
    if (!expect_reject(bumped, "X* != X"))
      return fail("bumped off-diagonal entry was not rejected");
    bumped = poly_hom_matrix(random_proj_point(rng, sig), sig);
    bumped.X[0][0] += C(1);
    try {
      poly_reconstruct_point(bumped, sig);
      return fail("bumped diagonal entry was not rejected");
    } catch (const StarError& e) {
      if (e.code() != ErrorCode::NotAHomMatrix)
        return fail("bumped diagonal rejection has the wrong code");
    }
  }
  return {true, "roundtrip (100 points x 4 signatures), all three matrix "
                "conditions enforced"};
}

// 9. Membership classification matches the sign test and is vacuous on
// definite signatures.
Outcome classification() {
  Rng rng(977009);
  const std::vector<Signature> mixed = {Signature(1, 1), Signature(2, 1),
                                        Signature(2, 2)};
  int negatives = 0;
  for (int it = 0; it < 200; ++it) {
    const Signature& sig = mixed[it % mixed.size()];
    ProjPoint w = random_proj_point(rng, sig);
    if (it % 2 == 0) {
      // push mass onto the negative-weight coordinates
      for (;;) {
        for (int i = 0; i <= sig.n; ++i)
          w.w[i] = i < sig.s ? testutil::random_gaussian(rng, 2, 3)
                             : C(3) * testutil::random_nonzero_gaussian(rng);
        if (poly_momentum_value(w, sig) != 0) break;
      }
    }
    const Rational jw = poly_momentum_value(w, sig);
    if (jw < 0) ++negatives;
    const GaussianRational mu = random_positive_mu(rng);
    const PolyElement gensum = levelset_generators(sig).at(0);
    const GaussianRational v = poly_reduced_evaluate(gensum, w, sig, mu);
    if (!v.is_real()) return fail("sign test value is not real");
    const bool inside = poly_classify_hom(w, sig) == HomClass::InsideMred;
    if (inside != (v.re() >= 0))
      return fail("classification disagrees with the sign test at iteration " +
                  std::to_string(it));
    if (inside != (jw > 0))
      return fail("classification disagrees with the momentum sign at "
                  "iteration " +
                  std::to_string(it));
  }
  if (negatives < 20)
    return fail("only " + std::to_string(negatives) +
                " negative-momentum points were exercised");
  for (const Signature& sig : {Signature(1, 2), Signature(2, 3)}) {
    if (!levelset_generators(sig).empty())
      return fail("definite signature has levelset generators");
    for (int it = 0; it < 100; ++it) {
      const ProjPoint w = random_proj_point(rng, sig);
      if (poly_classify_hom(w, sig) != HomClass::InsideMred)
        return fail("definite signature produced an outside verdict");
    }
  }
  return {true, "sign test agreement on 200 points (" +
                    std::to_string(negatives) +
                    " with J < 0), no outside verdicts on definite "
                    "signatures (200 points)"};
}

// 10. Certificate verifiers accept the worked identities and random valid
// witnesses, reject single-coefficient mutations, and agree with the
// sampler.
Outcome certificates() {
  Rng rng(977010);
  {
    // 1 - z1 zbar1 = -(J - 1) + z0* z0 on the projective line
    const PolyElement f = PolyElement::unit(1) - Z(1, 1) * ZB(1, 1);
    const PositivstellensatzCertificate cert{
        0,
        Rational(0),
        0,
        PolyElement::scalar(1, C(-1)),
        QMCertificate{{{AlgebraElement(Z(1, 0)), kUnitGenerator}}},
        PolyElement::unit(1)};
    if (!verify_positivstellensatz(f, Signature(1, 2), C(1), cert))
      return fail("projective line identity rejected");
    if (pointwise_falsify(f, Signature(1, 2), 1.0, 500, 977300).counterexample)
      return fail("falsifier contradicts the projective line certificate");
  }
  {
    // z0 zbar0 - 1 = (J - 1) + z1 zbar1 on the disc
    const PolyElement f = Z(1, 0) * ZB(1, 0) - PolyElement::unit(1);
    const PositivstellensatzCertificate cert{
        0,
        Rational(0),
        0,
        PolyElement::unit(1),
        QMCertificate{{{AlgebraElement(PolyElement::unit(1)), 0}}},
        PolyElement::unit(1)};
    if (!verify_positivstellensatz(f, Signature(1, 1), C(1), cert))
      return fail("disc identity rejected");
    if (pointwise_falsify(f, Signature(1, 1), 1.0, 500, 977301).counterexample)
      return fail("falsifier contradicts the disc certificate");
  }
  const std::vector<Signature> sigs = {Signature(1, 1), Signature(1, 2),
                                       Signature(2, 1), Signature(2, 2),
                                       Signature(2, 3)};
  const Rational epses[3] = {Rational(1, 2), Rational(1, 3), Rational(2)};
  for (int it = 0; it < 100; ++it) {
    const Signature& sig = sigs[it % sigs.size()];
    const int n = sig.n;
    const GaussianRational mu = random_positive_mu(rng);
    const PolyElement h = random_invariant_poly(rng, n, 2, 2);
    const PolyElement g = h + poly_star(h);
    const bool has_gens = sig.s <= sig.n;
    QMCertificate qm;
    const int nterms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < nterms; ++t)
      qm.terms.push_back({AlgebraElement(random_nonzero_invariant(rng, n, 2, 2)),
                          has_gens && rng() % 2 ? 0 : kUnitGenerator});
    const auto qm_sum = [&]() {
      PolyElement acc = PolyElement::zero(n);
      const auto gens = levelset_generators(sig);
      for (const auto& term : qm.terms) {
        const PolyElement& a = std::get<PolyElement>(term.a);
        const PolyElement s = term.s_index == kUnitGenerator
                                  ? PolyElement::unit(n)
                                  : gens.at(term.s_index);
        acc += poly_star(a) * s * a;
      }
      return acc;
    };
    const PolyElement ideal =
        (poly_momentum(sig) - PolyElement::scalar(n, mu)) * g;
    PositivstellensatzCertificate cert{0, Rational(0), 0, g, qm,
                                       PolyElement::unit(n)};
    PolyElement f = ideal + qm_sum();
    if (it % 2 == 1) {
      cert.m1 = 1 + static_cast<unsigned>(rng() % 2);
      cert.eps = epses[it % 3];
      const PolyElement r = random_invariant_poly(rng, n, 1, 2);
      cert.p = PolyElement::unit(n) + poly_star(r) * r;
      f -= GaussianRational(cert.eps) * cert.p.pow(cert.m1);
    }
    if (!verify_positivstellensatz(f, sig, mu, cert))
      return fail("valid random certificate rejected at iteration " +
                  std::to_string(it));
    // single-coefficient mutations: a fresh high-degree monomial in one
    // square, a unit bump of the ideal cofactor, a unit bump of eps
    PositivstellensatzCertificate mut = cert;
    PolyElement a0 = std::get<PolyElement>(mut.qm.terms[0].a);
    PolyMonomial high{std::vector<unsigned>(n + 1, 0),
                      std::vector<unsigned>(n + 1, 0)};
    high.a[0] = a0.degree() + 1;
    a0.add_term(high, C(1));
    mut.qm.terms[0].a = AlgebraElement(a0);
    if (verify_positivstellensatz(f, sig, mu, mut))
      return fail("mutated square accepted at iteration " +
                  std::to_string(it));
    mut = cert;
    mut.ideal_cofactor += PolyElement::unit(n);
    if (verify_positivstellensatz(f, sig, mu, mut))
      return fail("mutated cofactor accepted at iteration " +
                  std::to_string(it));
    mut = cert;
    mut.eps += 1;
    if (verify_positivstellensatz(f, sig, mu, mut))
      return fail("mutated eps accepted at iteration " + std::to_string(it));
    // the certified combination is nonnegative on the levelset
    const PolyElement combo =
        f + GaussianRational(cert.eps) * cert.p.pow(cert.m1);
    if (pointwise_falsify(combo, sig, mu.re().get_d(), 60, 977400 + it)
            .counterexample)
      return fail("falsifier contradicts an accepted certificate at "
                  "iteration " +
                  std::to_string(it));
  }
  return {true, "worked identities, 100 random certificates, 3 mutations "
                "each rejected, falsifier agrees"};
}

// 11. State functionals: oscillator moments, positivity of (N-1)(N-2),
// Cauchy-Schwarz, and the reduction domain.
Outcome states() {
  Rng rng(977011);
  const auto ground = state_hermite({{1.0}}, 64);
  const AlgebraElement q2(Q(1, 0) * Q(1, 0));
  const AlgebraElement p2(P(1, 0) * P(1, 0));
  const AlgebraElement qp(Q(1, 0) * P(1, 0));
  const std::complex<double> vq2 =
      state_value_complex(state_expect(*ground, q2));
  const std::complex<double> vp2 =
      state_value_complex(state_expect(*ground, p2));
  const std::complex<double> vqp =
      state_value_complex(state_expect(*ground, qp));
  if (std::abs(vq2 - 0.5) > kMomentTol) return fail("<q^2> is not 1/2");
  if (std::abs(vp2 - 0.5) > kMomentTol) return fail("<p^2> is not 1/2");
  if (std::abs(vqp - std::complex<double>(0, 0.5)) > kMomentTol)
    return fail("<qp> is not i/2");

  const int N = 64;
  const GaussianRational half(Rational(1, 2));
  const WeylElement number =
      half * (Q(1, 0) * Q(1, 0) + P(1, 0) * P(1, 0) - WeylElement::unit(1));
  const WeylElement nn = (number - WeylElement::unit(1)) *
                         (number - WeylElement::scalar(1, C(2)));
  if (weyl_star(nn) != nn) return fail("(N-1)(N-2) is not hermitian");
  const Eigen::MatrixXcd M = hermite_matrix(nn, N);
  for (int j = 0; j < N; ++j) {
    if (M(j, j).real() < 0)
      return fail("diagonal entry " + std::to_string(j) + " is negative: " +
                  std::to_string(M(j, j).real()));
    const int deg = static_cast<int>(nn.degree());
    if (j < N - deg &&
        std::abs(M(j, j).real() - (j - 1) * (j - 2)) > kMomentTol)
      return fail("diagonal entry " + std::to_string(j) +
                  " is off (n-1)(n-2)");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
  if (es.eigenvalues().minCoeff() < -kEigTol)
    return fail("minimum eigenvalue " +
                std::to_string(es.eigenvalues().minCoeff()) + " below -1e-9");

  int cs = 0;
  auto check_cs = [&](const StateSpec& omega, const AlgebraElement& a,
                      const AlgebraElement& b) {
    ++cs;
    return cauchy_schwarz_check(omega, a, b);
  };
  for (int it = 0; it < 50; ++it) {  // point evaluations
    const int n = 1 + static_cast<int>(rng() % 2);
    std::vector<GaussianRational> w(n + 1);
    for (auto& c : w) c = testutil::random_gaussian(rng, 3, 3);
    const auto omega = state_point(w);
    if (!check_cs(*omega, AlgebraElement(random_poly(rng, n)),
                  AlgebraElement(random_poly(rng, n))))
      return fail("cauchy-schwarz failed on a point state, iteration " +
                  std::to_string(it));
  }
  for (int it = 0; it < 40; ++it) {  // reduced points with positive momentum
    const bool disc = it % 4 == 0;
    const Signature sig = disc ? Signature(1, 1)
                               : (it % 2 ? Signature(2, 3) : Signature(1, 2));
    ProjPoint w;
    if (disc) {
      for (;;) {
        w = random_proj_point(rng, sig);
        if (poly_momentum_value(w, sig) > 0) break;
      }
    } else {
      w.w = rational_sphere_point(rng, sig.n + 1);
    }
    const auto omega = state_reduced_point(w, sig, random_positive_mu(rng));
    if (!check_cs(*omega,
                  AlgebraElement(random_invariant_poly(rng, sig.n, 2, 3)),
                  AlgebraElement(random_invariant_poly(rng, sig.n, 2, 3))))
      return fail("cauchy-schwarz failed on a reduced point, iteration " +
                  std::to_string(it));
  }
  for (int it = 0; it < 40; ++it) {  // hermite vectors
    const int dim = 1 + static_cast<int>(rng() % 2);
    std::vector<std::vector<std::complex<double>>> coeffs;
    for (int j = 0; j < dim; ++j)
      coeffs.push_back(random_unit_vector(rng, 2 + static_cast<int>(rng() % 5)));
    const auto omega = state_hermite(coeffs, 64);
    if (!check_cs(*omega, AlgebraElement(random_weyl(rng, dim, 2, 3)),
                  AlgebraElement(random_weyl(rng, dim, 2, 3))))
      return fail("cauchy-schwarz failed on a hermite state, iteration " +
                  std::to_string(it));
  }
  for (int it = 0; it < 30; ++it) {  // mixtures
    if (it % 3 == 0) {
      const auto omega = state_mixture(
          {{Rational(1, 2), state_hermite({random_unit_vector(rng, 4)}, 64)},
           {Rational(1, 2), state_hermite({random_unit_vector(rng, 6)}, 64)}});
      if (!check_cs(*omega, AlgebraElement(random_weyl(rng, 1, 2, 3)),
                    AlgebraElement(random_weyl(rng, 1, 2, 3))))
        return fail("cauchy-schwarz failed on a weyl mixture, iteration " +
                    std::to_string(it));
    } else {
      const int n = 1 + static_cast<int>(rng() % 2);
      std::vector<GaussianRational> w1(n + 1), w2(n + 1);
      for (auto& c : w1) c = testutil::random_gaussian(rng, 3, 3);
      for (auto& c : w2) c = testutil::random_gaussian(rng, 3, 3);
      const auto omega =
          state_mixture({{Rational(1, 4), state_point(w1)},
                         {Rational(3, 4), state_point(w2)}});
      if (!check_cs(*omega, AlgebraElement(random_poly(rng, n)),
                    AlgebraElement(random_poly(rng, n))))
        return fail("cauchy-schwarz failed on a poly mixture, iteration " +
                    std::to_string(it));
    }
  }
  for (int it = 0; it < 40; ++it) {  // averaged evaluations
    const int n = 1 + static_cast<int>(rng() % 2);
    std::vector<GaussianRational> w(n + 1);
    for (auto& c : w) c = testutil::random_gaussian(rng, 3, 3);
    const auto omega = average_pullback(state_point(w));
    if (!check_cs(*omega, AlgebraElement(random_poly(rng, n)),
                  AlgebraElement(random_poly(rng, n))))
      return fail("cauchy-schwarz failed on an averaged state, iteration " +
                  std::to_string(it));
  }

  // reduction succeeds exactly on the levelset and nowhere else
  const GaussianRational levels[3] = {C(1), C(4),
                                      GaussianRational(Rational(9, 4))};
  const GaussianRational scales[3] = {C(1), C(2),
                                      GaussianRational(Rational(3, 2))};
  int reduced_ok = 0;
  for (int it = 0; it < 30; ++it) {
    const Signature sig = it % 2 ? Signature(2, 3) : Signature(1, 2);
    const GaussianRational& mu = levels[it % 3];
    auto w = rational_sphere_point(rng, sig.n + 1);
    for (auto& c : w) c = scales[it % 3] * c;
    const auto omega = state_point(w);
    const auto red = reduce_state(*omega, sig, mu);
    if (red->kind != StateKind::ReducedPoint)
      return fail("levelset point did not reduce to a point evaluation");
    const PolyElement f = random_invariant_poly(rng, sig.n, 2, 3);
    const StateValue via_state = state_expect(*red, AlgebraElement(f));
    if (!state_value_is_exact(via_state) ||
        state_value_exact(via_state) !=
            poly_reduced_evaluate(f, ProjPoint{w}, sig, mu))
      return fail("reduced state disagrees with direct evaluation");
    ++reduced_ok;
    try {
      reduce_state(*omega, sig, mu + C(1));
      return fail("off-level point reduced anyway");
    } catch (const StarError& e) {
      if (e.code() != ErrorCode::NotReducible)
        return fail("off-level refusal has the wrong code");
    }
  }
  {
    // disc levelset: |w0|^2 - |w1|^2 = 1 from scaled pythagorean pairs
    const Signature sig(1, 1);
    const auto phase = [&](long t_num, long t_den) {
      const Rational t(t_num, t_den);
      const Rational d = 1 + t * t;
      return GaussianRational((1 - t * t) / d, 2 * t / d);
    };
    const GaussianRational pairs[3][2] = {
        {GaussianRational(Rational(5, 4)) * phase(1, 2),
         GaussianRational(Rational(3, 4)) * phase(2, 3)},
        {GaussianRational(Rational(13, 12)) * phase(0, 1),
         GaussianRational(Rational(5, 12)) * phase(1, 3)},
        {GaussianRational(Rational(17, 15)) * phase(3, 1),
         GaussianRational(Rational(8, 15)) * phase(1, 1)}};
    for (const auto& pr : pairs) {
      const auto omega = state_point({pr[0], pr[1]});
      const auto red = reduce_state(*omega, sig, C(1));
      if (red->kind != StateKind::ReducedPoint)
        return fail("disc levelset point did not reduce");
      ++reduced_ok;
    }
    const auto m = state_mixture(
        {{Rational(1, 2), state_point(rational_sphere_point(rng, 2))},
         {Rational(1, 2), state_point(rational_sphere_point(rng, 2))}});
    const auto red = reduce_state(*m, Signature(1, 2), C(1));
    if (red->kind != StateKind::Mixture)
      return fail("levelset mixture did not reduce to a mixture");
    ++reduced_ok;
  }
  for (int it = 0; it < 20; ++it) {
    const Signature sig(1, 2);
    std::vector<GaussianRational> w(2);
    for (;;) {
      for (auto& c : w) c = testutil::random_gaussian(rng, 3, 3);
      ProjPoint p{w};
      if (!w[0].is_zero() || !w[1].is_zero()) {
        if (GaussianRational(poly_momentum_value(p, sig)) != C(1)) break;
      }
    }
    try {
      reduce_state(*state_point(w), sig, C(1));
      return fail("off-level point reduced at iteration " +
                  std::to_string(it));
    } catch (const StarError& e) {
      if (e.code() != ErrorCode::NotReducible)
        return fail("off-level refusal has the wrong code");
    }
  }
  {
    const auto rp = state_reduced_point(
        ProjPoint{rational_sphere_point(rng, 2)}, Signature(1, 2), C(1));
    try {
      reduce_state(*rp, Signature(1, 2), C(1));
      return fail("an already reduced state reduced again");
    } catch (const StarError& e) {
      if (e.code() != ErrorCode::NotReducible)
        return fail("reduced-point refusal has the wrong code");
    }
    const auto av =
        average_pullback(state_point(rational_sphere_point(rng, 2)));
    try {
      reduce_state(*av, Signature(1, 2), C(1));
      return fail("an averaged state reduced");
    } catch (const StarError& e) {
      if (e.code() != ErrorCode::NotReducible)
        return fail("averaged refusal has the wrong code");
    }
  }
  return {true, "moments at N=64, (N-1)(N-2) diagonal >= 0 exactly, "
                "cauchy-schwarz (" +
                    std::to_string(cs) + " triples), reduction on " +
                    std::to_string(reduced_ok) + " levelset states"};
}

// 12. The command line interface reproduces its golden transcripts.
Outcome cli_suite(const std::string& binary, const std::string& golden_dir) {
  const int failures = cliutil::run_cli_suite(binary, golden_dir, false, false);
  const std::size_t canonical = cliutil::golden_cases().size();
  const std::size_t malformed = cliutil::malformed_cases().size();
  if (failures > 0)
    return fail(std::to_string(failures) + " golden cases failed");
  return {true, std::to_string(canonical) + " canonical and " +
                    std::to_string(malformed) +
                    " malformed invocations, byte-identical across runs, "
                    "errors positioned"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <star-reduce-binary> <golden-dir>\n";
    return 2;
  }
  const std::string binary = argv[1];
  const std::string golden = argv[2];
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"weyl algebra laws", weyl_laws},
      {"reduction homomorphism", reduction_homomorphism},
      {"central decomposition", decomposition},
      {"compression limit", compression},
      {"eigenstate obstruction", obstruction},
      {"polynomial reduction", poly_reduction},
      {"reduced point evaluation", delta_functional},
      {"matrix correspondence", matrix_roundtrip},
      {"positivity classification", classification},
      {"certificate verification", certificates},
      {"state functionals", states},
      {"command line transcripts",
       [&] { return cli_suite(binary, golden); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out{false, ""};
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    if (!out.ok) ++failures;
    std::cout << std::setw(2) << i + 1 << (out.ok ? " pass  " : " FAIL  ")
              << criteria[i].name << ": " << out.note << "\n";
  }
  std::cout << "acceptance: " << criteria.size() - failures << "/"
            << criteria.size() << " criteria pass\n";
  return failures;
}
