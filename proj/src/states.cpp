#include "staralg/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace staralg {

namespace {

std::complex<double> to_complex(const GaussianRational& c) {
  return {c.re().get_d(), c.im().get_d()};
}

Rational require_real_positive(const GaussianRational& mu) {
  if (!mu.is_real())
    throw StarError(ErrorCode::NonRealMu, "mu = " + mu.str());
  if (mu.re() <= 0)
    throw StarError(ErrorCode::NonPositiveMu, "mu = " + mu.str());
  return mu.re();
}

std::string point_str(const std::vector<GaussianRational>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += w[i].str();
  }
  return out + ")";
}

struct AlgebraTag {
  StateAlgebra algebra;
  int dim;
};

AlgebraTag element_tag(const AlgebraElement& x) {
  if (const auto* a = std::get_if<WeylElement>(&x))
    return {StateAlgebra::Weyl, a->dim()};
  return {StateAlgebra::Poly, std::get<PolyElement>(x).n()};
}

std::string tag_str(const AlgebraTag& t) {
  return (t.algebra == StateAlgebra::Weyl ? "weyl(" : "poly(") +
         std::to_string(t.dim) + ")";
}

Eigen::MatrixXcd ladder_down(int truncation) {
  if (truncation < 2)
    throw std::invalid_argument("truncation must be at least 2");
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(truncation, truncation);
  for (int n = 1; n < truncation; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

void require_truncation(unsigned degree, int truncation) {
  if (2 * degree >= static_cast<unsigned>(truncation))
    throw StarError(ErrorCode::TruncationTooSmall,
                    "degree " + std::to_string(degree) + " with truncation " +
                        std::to_string(truncation) +
                        " (needs degree < truncation/2)");
}

std::complex<double> hermite_expect(const StateSpec& s, const WeylElement& x) {
  const int N = s.truncation;
  require_truncation(x.degree(), N);
  const std::size_t m = s.coeffs.size();
  const Eigen::MatrixXcd qm = hermite_q_matrix(N);
  const Eigen::MatrixXcd pm = hermite_p_matrix(N);
  std::vector<Eigen::VectorXcd> psi(m);
  std::vector<double> norm2(m);
  for (std::size_t j = 0; j < m; ++j) {
    psi[j] = Eigen::VectorXcd::Zero(N);
    for (std::size_t t = 0; t < s.coeffs[j].size(); ++t)
      psi[j](static_cast<Eigen::Index>(t)) = s.coeffs[j][t];
    norm2[j] = psi[j].squaredNorm();
  }
  std::complex<double> acc = 0;
  for (const auto& [mono, c] : x.terms()) {
    std::complex<double> val = to_complex(c);
    for (std::size_t j = 0; j < m; ++j) {
      const unsigned k = mono.k[j], l = mono.l[j];
      if (k == 0 && l == 0) continue;
      Eigen::VectorXcd v = psi[j];
      for (unsigned t = 0; t < l; ++t) v = qm * v;
      for (unsigned t = 0; t < k; ++t) v = pm * v;
      val *= psi[j].dot(v) / norm2[j];
    }
    acc += val;
  }
  return acc;
}

}  // namespace

bool state_value_is_exact(const StateValue& v) {
  return std::holds_alternative<GaussianRational>(v);
}

const GaussianRational& state_value_exact(const StateValue& v) {
  return std::get<GaussianRational>(v);
}

std::complex<double> state_value_complex(const StateValue& v) {
  if (const auto* g = std::get_if<GaussianRational>(&v)) return to_complex(*g);
  return std::get<std::complex<double>>(v);
}

StatePtr state_point(std::vector<GaussianRational> w) {
  if (w.size() < 2)
    throw StarError(ErrorCode::DimensionTooSmall,
                    "points need at least two coordinates");
  StateSpec s;
  s.kind = StateKind::Point;
  s.w = std::move(w);
  return std::make_shared<const StateSpec>(std::move(s));
}

StatePtr state_reduced_point(ProjPoint w, const Signature& sig,
                             const GaussianRational& mu) {
  if (static_cast<int>(w.w.size()) != sig.n + 1)
    throw StarError(ErrorCode::DimensionMismatch,
                    "point has " + std::to_string(w.w.size()) +
                        " coordinates, signature needs " +
                        std::to_string(sig.n + 1));
  require_real_positive(mu);
  if (poly_momentum_value(w, sig) == 0)
    throw StarError(ErrorCode::ZeroMomentumPoint, "J(w) = 0");
  StateSpec s;
  s.kind = StateKind::ReducedPoint;
  s.rep = std::move(w);
  s.sig = sig;
  s.mu = mu;
  return std::make_shared<const StateSpec>(std::move(s));
}

StatePtr state_mixture(std::vector<MixtureEntry> entries) {
  if (entries.empty())
    throw std::invalid_argument("mixture needs at least one entry");
  Rational total(0);
  for (const auto& e : entries) {
    if (!e.state)
      throw std::invalid_argument("mixture entry without a state");
    if (e.weight <= 0)
      throw std::invalid_argument("mixture weights must be positive");
    total += e.weight;
  }
  if (total != 1)
    throw std::invalid_argument("mixture weights must sum to 1");
  const AlgebraTag t{state_algebra(*entries.front().state),
                     state_dim(*entries.front().state)};
  for (const auto& e : entries) {
    const AlgebraTag u{state_algebra(*e.state), state_dim(*e.state)};
    if (u.algebra != t.algebra || u.dim != t.dim)
      throw StarError(ErrorCode::AlgebraMismatch,
                      "mixture entries over " + tag_str(t) + " and " +
                          tag_str(u));
  }
  StateSpec s;
  s.kind = StateKind::Mixture;
  s.entries = std::move(entries);
  return std::make_shared<const StateSpec>(std::move(s));
}

StatePtr state_hermite(std::vector<std::vector<std::complex<double>>> coeffs,
                       int truncation) {
  if (coeffs.empty())
    throw std::invalid_argument("hermite state needs at least one coordinate");
  if (truncation < 2)
    throw std::invalid_argument("truncation must be at least 2");
  for (const auto& psi : coeffs) {
    if (psi.empty() || psi.size() > static_cast<std::size_t>(truncation))
      throw std::invalid_argument(
          "coefficient arrays must have between 1 and truncation entries");
    double n2 = 0;
    for (const auto& c : psi) n2 += std::norm(c);
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
      throw std::invalid_argument("coefficient arrays must be normalized");
  }
  StateSpec s;
  s.kind = StateKind::Hermite;
  s.coeffs = std::move(coeffs);
  s.truncation = truncation;
  return std::make_shared<const StateSpec>(std::move(s));
}

StateAlgebra state_algebra(const StateSpec& omega) {
  switch (omega.kind) {
    case StateKind::Hermite:
      return StateAlgebra::Weyl;
    case StateKind::Mixture:
      return state_algebra(*omega.entries.front().state);
    default:
      return StateAlgebra::Poly;
  }
}

int state_dim(const StateSpec& omega) {
  switch (omega.kind) {
    case StateKind::Point:
      return static_cast<int>(omega.w.size()) - 1;
    case StateKind::ReducedPoint:
      return omega.sig.n;
    case StateKind::Mixture:
      return state_dim(*omega.entries.front().state);
    case StateKind::Hermite:
      return static_cast<int>(omega.coeffs.size());
    case StateKind::Averaged:
      return state_dim(*omega.inner);
  }
  throw std::logic_error("unreachable");
}

StateValue state_expect(const StateSpec& omega, const AlgebraElement& x) {
  const AlgebraTag et = element_tag(x);
  const AlgebraTag st{state_algebra(omega), state_dim(omega)};
  if (et.algebra != st.algebra || et.dim != st.dim)
    throw StarError(ErrorCode::AlgebraMismatch,
                    "state over " + tag_str(st) + ", element over " +
                        tag_str(et));
  switch (omega.kind) {
    case StateKind::Point:
      return poly_evaluate(std::get<PolyElement>(x), omega.w);
    case StateKind::ReducedPoint:
      return poly_reduced_evaluate(std::get<PolyElement>(x), omega.rep,
                                   omega.sig, omega.mu);
    case StateKind::Mixture: {
      std::vector<StateValue> vals;
      vals.reserve(omega.entries.size());
      bool exact = true;
      for (const auto& e : omega.entries) {
        vals.push_back(state_expect(*e.state, x));
        exact = exact && state_value_is_exact(vals.back());
      }
      if (exact) {
        GaussianRational out;
        for (std::size_t i = 0; i < vals.size(); ++i)
          out += GaussianRational(omega.entries[i].weight) *
                 state_value_exact(vals[i]);
        return out;
      }
      std::complex<double> out = 0;
      for (std::size_t i = 0; i < vals.size(); ++i)
        out += omega.entries[i].weight.get_d() * state_value_complex(vals[i]);
      return out;
    }
    case StateKind::Hermite:
      return hermite_expect(omega, std::get<WeylElement>(x));
    case StateKind::Averaged:
      return state_expect(*omega.inner,
                          AlgebraElement(poly_average(std::get<PolyElement>(x))));
  }
  throw std::logic_error("unreachable");
}

EigenstateResult eigenstate_check(const StateSpec& omega,
                                  const AlgebraElement& a, double tol) {
  if (tol < 0)
    throw std::invalid_argument("tol must be nonnegative");
  const StateValue va = state_expect(omega, a);
  const StateValue vaa = state_expect(omega, element_mul(element_star(a), a));
  if (state_value_is_exact(va) && state_value_is_exact(vaa)) {
    if (tol != 0.0)
      throw std::invalid_argument("exact state kinds demand tol = 0");
    const GaussianRational gap =
        state_value_exact(vaa) -
        GaussianRational(state_value_exact(va).norm_sq());
    return {gap.is_zero(), va};
  }
  const std::complex<double> ca = state_value_complex(va);
  const std::complex<double> gap =
      state_value_complex(vaa) - std::complex<double>(std::norm(ca), 0);
  return {std::abs(gap) <= tol, va};
}

bool cauchy_schwarz_check(const StateSpec& omega, const AlgebraElement& a,
                          const AlgebraElement& b) {
  const AlgebraElement as = element_star(a);
  const StateValue vab = state_expect(omega, element_mul(as, b));
  const StateValue vaa = state_expect(omega, element_mul(as, a));
  const StateValue vbb = state_expect(omega, element_mul(element_star(b), b));
  if (state_value_is_exact(vab) && state_value_is_exact(vaa) &&
      state_value_is_exact(vbb)) {
    const Rational lhs = state_value_exact(vab).norm_sq();
    const Rational rhs =
        state_value_exact(vaa).re() * state_value_exact(vbb).re();
    return lhs <= rhs;
  }
  const double lhs = std::norm(state_value_complex(vab));
  const double rhs =
      state_value_complex(vaa).real() * state_value_complex(vbb).real();
  return lhs <= rhs + 1e-9;
}

StatePtr reduce_state(const StateSpec& omega, const Signature& sig,
                      const GaussianRational& mu) {
  require_real_positive(mu);
  switch (omega.kind) {
    case StateKind::Point: {
      if (static_cast<int>(omega.w.size()) != sig.n + 1)
        throw StarError(ErrorCode::AlgebraMismatch,
                        "state over poly(" +
                            std::to_string(omega.w.size() - 1) +
                            "), signature over poly(" +
                            std::to_string(sig.n) + ")");
      ProjPoint rep{omega.w};
      const Rational jw = poly_momentum_value(rep, sig);
      if (GaussianRational(jw) != mu)
        throw StarError(ErrorCode::NotReducible,
                        "support point " + point_str(omega.w) + " has J = " +
                            rational_str(jw) + ", not " + mu.str());
      return state_reduced_point(std::move(rep), sig, mu);
    }
    case StateKind::Mixture: {
      if (state_algebra(omega) == StateAlgebra::Weyl)
        throw StarError(ErrorCode::WeylHasNoEigenstates,
                        "p_0 has no eigenstates, so no Weyl state reduces");
      std::vector<MixtureEntry> reduced;
      reduced.reserve(omega.entries.size());
      for (const auto& e : omega.entries)
        reduced.push_back({e.weight, reduce_state(*e.state, sig, mu)});
      return state_mixture(std::move(reduced));
    }
    case StateKind::Hermite:
      throw StarError(ErrorCode::WeylHasNoEigenstates,
                      "p_0 has no eigenstates, so no Weyl state reduces");
    default:
      throw StarError(
          ErrorCode::NotReducible,
          "state is not a point evaluation or a mixture of point evaluations");
  }
}

StatePtr average_pullback(StatePtr omega) {
  if (!omega)
    throw std::invalid_argument("null state");
  if (state_algebra(*omega) != StateAlgebra::Poly)
    throw StarError(ErrorCode::AlgebraMismatch,
                    "averaging pullback needs a polynomial-algebra state");
  StateSpec s;
  s.kind = StateKind::Averaged;
  s.inner = std::move(omega);
  return std::make_shared<const StateSpec>(std::move(s));
}

Eigen::MatrixXcd hermite_q_matrix(int truncation) {
  const Eigen::MatrixXcd a = ladder_down(truncation);
  return (a + a.adjoint()) / std::sqrt(2.0);
}

Eigen::MatrixXcd hermite_p_matrix(int truncation) {
  const Eigen::MatrixXcd a = ladder_down(truncation);
  return std::complex<double>(0, 1) * (a.adjoint() - a) / std::sqrt(2.0);
}

Eigen::MatrixXcd hermite_matrix(const WeylElement& x, int truncation) {
  if (x.dim() != 1)
    throw StarError(ErrorCode::DimensionMismatch,
                    "hermite matrices are built per coordinate (dim 1)");
  require_truncation(x.degree(), truncation);
  const Eigen::MatrixXcd qm = hermite_q_matrix(truncation);
  const Eigen::MatrixXcd pm = hermite_p_matrix(truncation);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(truncation, truncation);
  for (const auto& [mono, c] : x.terms()) {
    Eigen::MatrixXcd term =
        to_complex(c) * Eigen::MatrixXcd::Identity(truncation, truncation);
    for (unsigned t = 0; t < mono.l[0]; ++t) term = term * qm;
    for (unsigned t = 0; t < mono.k[0]; ++t) term = pm * term;
    out += term;
  }
  return out;
}

}  // namespace staralg
