#include "staralg/certify.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace staralg {

namespace {

Rational require_real_positive(const GaussianRational& mu) {
  if (!mu.is_real())
    throw StarError(ErrorCode::NonRealMu, "mu = " + mu.str());
  if (mu.re() <= 0)
    throw StarError(ErrorCode::NonPositiveMu, "mu = " + mu.str());
  return mu.re();
}

void require_compatible(const AlgebraElement& target,
                        const AlgebraElement& x, const char* what) {
  if (target.index() != x.index() || element_dim(target) != element_dim(x))
    throw StarError(ErrorCode::AlgebraMismatch,
                    std::string(what) + " over " + element_tag_str(x) +
                        ", target over " + element_tag_str(target));
}

AlgebraElement element_zero_like(const AlgebraElement& x) {
  if (element_is_weyl(x))
    return WeylElement::zero(element_dim(x));
  return PolyElement::zero(element_dim(x));
}

int checked_index(int s_index, std::size_t available) {
  if (s_index == kUnitGenerator) return s_index;
  if (s_index < 0 || static_cast<std::size_t>(s_index) >= available)
    throw StarError(ErrorCode::BadGeneratorIndex,
                    "index " + std::to_string(s_index) + " with " +
                        std::to_string(available) + " generators");
  return s_index;
}

double uniform01(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller; consumes exactly two draws per pair.
void gaussian_pair(std::mt19937_64& rng, double& g0, double& g1) {
  double u1;
  do {
    u1 = uniform01(rng);
  } while (u1 <= 0.0);
  const double u2 = uniform01(rng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * 3.14159265358979323846 * u2;
  g0 = r * std::cos(phi);
  g1 = r * std::sin(phi);
}

ComplexPoint gaussian_vector(std::mt19937_64& rng, int len) {
  ComplexPoint out(len);
  for (int i = 0; i < len; ++i) {
    double re, im;
    gaussian_pair(rng, re, im);
    out[i] = {re, im};
  }
  return out;
}

double norm2(const ComplexPoint& v) {
  double acc = 0;
  for (const auto& c : v) acc += std::norm(c);
  return acc;
}

// Unit direction with the given number of complex entries.
ComplexPoint direction(std::mt19937_64& rng, int len) {
  for (;;) {
    ComplexPoint g = gaussian_vector(rng, len);
    const double n2 = norm2(g);
    if (n2 < 1e-12) continue;
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& c : g) c *= inv;
    return g;
  }
}

}  // namespace

bool verify_qm(const AlgebraElement& target,
               const std::vector<AlgebraElement>& S,
               const QMCertificate& cert) {
  for (const auto& s : S) require_compatible(target, s, "generator");
  AlgebraElement sum = element_zero_like(target);
  for (const auto& t : cert.terms) {
    require_compatible(target, t.a, "certificate term");
    const int idx = checked_index(t.s_index, S.size());
    const AlgebraElement sa =
        idx == kUnitGenerator ? t.a : element_mul(S[idx], t.a);
    sum = element_add(sum, element_mul(element_star(t.a), sa));
  }
  return sum == target;
}

bool verify_po(const AlgebraElement& target,
               const std::vector<AlgebraElement>& S,
               const POCertificate& cert) {
  if (element_is_weyl(target))
    throw StarError(ErrorCode::NonCommutativeAlgebra,
                    "preorderings need a commutative algebra");
  for (const auto& s : S) {
    if (element_is_weyl(s))
      throw StarError(ErrorCode::NonCommutativeAlgebra,
                      "preorderings need commutative generators");
    require_compatible(target, s, "generator");
  }
  const PolyElement& tgt = std::get<PolyElement>(target);
  PolyElement sum = PolyElement::zero(tgt.n());
  for (const auto& t : cert.terms) {
    require_compatible(target, AlgebraElement(t.a), "certificate term");
    PolyElement s = PolyElement::unit(tgt.n());
    for (const int g : t.gens)
      s = s * std::get<PolyElement>(S[checked_index(g, S.size())]);
    sum += poly_star(t.a) * s * t.a;
  }
  return sum == tgt;
}

std::vector<PolyElement> levelset_generators(const Signature& sig) {
  if (sig.s == sig.n + 1) return {};
  PolyElement g = PolyElement::zero(sig.n);
  for (int i = sig.s; i <= sig.n; ++i)
    g += PolyElement::z(sig.n, i) * PolyElement::zbar(sig.n, i);
  return {g};
}

bool verify_positivstellensatz(const PolyElement& f, const Signature& sig,
                               const GaussianRational& mu,
                               const PositivstellensatzCertificate& cert) {
  if (f.n() != sig.n)
    throw StarError(ErrorCode::DimensionMismatch,
                    "f over poly(" + std::to_string(f.n()) +
                        "), signature over poly(" + std::to_string(sig.n) +
                        ")");
  require_real_positive(mu);
  if (!poly_is_invariant(f))
    throw StarError(ErrorCode::NotInvariant, "f is not invariant");
  if (poly_star(f) != f)
    throw StarError(ErrorCode::NotHermitian, "f is not hermitian");
  if (!poly_is_invariant(cert.p))
    throw StarError(ErrorCode::NotInvariant,
                    "scaling element is not invariant");
  if (cert.eps < 0)
    throw std::invalid_argument("eps must be nonnegative");
  if (cert.ideal_cofactor.n() != sig.n || cert.p.n() != sig.n)
    throw StarError(ErrorCode::AlgebraMismatch,
                    "certificate elements must live over poly(" +
                        std::to_string(sig.n) + ")");

  const PolyElement jmu =
      poly_momentum(sig) - PolyElement::scalar(sig.n, mu);
  const PolyElement ideal = jmu * cert.ideal_cofactor;
  if (poly_star(ideal) != ideal)
    throw StarError(ErrorCode::NotHermitian, "ideal part is not hermitian");

  const std::vector<PolyElement> gens = levelset_generators(sig);
  PolyElement qmsum = PolyElement::zero(sig.n);
  for (const auto& t : cert.qm.terms) {
    const PolyElement* a = std::get_if<PolyElement>(&t.a);
    if (!a)
      throw StarError(ErrorCode::AlgebraMismatch,
                      "qm term over weyl, target over poly");
    if (a->n() != sig.n)
      throw StarError(ErrorCode::AlgebraMismatch,
                      "qm term over poly(" + std::to_string(a->n()) +
                          "), target over poly(" + std::to_string(sig.n) +
                          ")");
    const int idx = checked_index(t.s_index, gens.size());
    const PolyElement sa = idx == kUnitGenerator ? *a : gens[idx] * *a;
    qmsum += poly_star(*a) * sa;
  }

  PolyElement lhs = f;
  if (cert.eps != 0)
    lhs += GaussianRational(cert.eps) * cert.p.pow(cert.m1);
  lhs = cert.p.pow(cert.m2) * lhs;
  return lhs == ideal + qmsum;
}

std::vector<ComplexPoint> sample_levelset(const Signature& sig, double mu,
                                          int count, std::uint64_t seed) {
  if (!(mu > 0))
    throw StarError(ErrorCode::NonPositiveMu, "mu = " + std::to_string(mu));
  if (count < 0)
    throw std::invalid_argument("count must be nonnegative");
  std::mt19937_64 rng(seed);
  const int dim = sig.n + 1;
  const double root_mu = std::sqrt(mu);
  std::vector<ComplexPoint> out;
  out.reserve(count);
  for (int t = 0; t < count; ++t) {
    if (sig.s == dim) {
      ComplexPoint w = direction(rng, dim);
      for (auto& c : w) c *= root_mu;
      out.push_back(std::move(w));
    } else {
      const double tpar = 1.5 * uniform01(rng);
      const double rpos = root_mu * std::cosh(tpar);
      const double rneg = root_mu * std::sinh(tpar);
      ComplexPoint u = direction(rng, sig.s);
      ComplexPoint v = direction(rng, dim - sig.s);
      ComplexPoint w;
      w.reserve(dim);
      for (const auto& c : u) w.push_back(c * rpos);
      for (const auto& c : v) w.push_back(c * rneg);
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::complex<double> poly_evaluate_complex(const PolyElement& f,
                                           const ComplexPoint& w) {
  if (w.size() != static_cast<std::size_t>(f.n()) + 1)
    throw StarError(ErrorCode::DimensionMismatch,
                    "point has " + std::to_string(w.size()) +
                        " coordinates, element needs " +
                        std::to_string(f.n() + 1));
  std::complex<double> acc = 0;
  for (const auto& [m, c] : f.terms()) {
    std::complex<double> term(c.re().get_d(), c.im().get_d());
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (unsigned t = 0; t < m.a[i]; ++t) term *= w[i];
      for (unsigned t = 0; t < m.b[i]; ++t) term *= std::conj(w[i]);
    }
    acc += term;
  }
  return acc;
}

FalsifyResult pointwise_falsify(const PolyElement& f, const Signature& sig,
                                double mu, int count, std::uint64_t seed) {
  if (f.n() != sig.n)
    throw StarError(ErrorCode::DimensionMismatch,
                    "f over poly(" + std::to_string(f.n()) +
                        "), signature over poly(" + std::to_string(sig.n) +
                        ")");
  if (!poly_is_invariant(f))
    throw StarError(ErrorCode::NotInvariant, "f is not invariant");
  if (poly_star(f) != f)
    throw StarError(ErrorCode::NotHermitian, "f is not hermitian");
  const std::vector<ComplexPoint> pts = sample_levelset(sig, mu, count, seed);
  FalsifyResult res;
  for (const auto& w : pts) {
    const double v = poly_evaluate_complex(f, w).real();
    if (v < -1e-6 && (!res.counterexample || v < res.value)) {
      res.counterexample = true;
      res.w = w;
      res.value = v;
    }
  }
  return res;
}

}  // namespace staralg
