#include "staralg/poly.hpp"

#include <algorithm>

namespace staralg {

namespace {

void require_same_n(const PolyElement& a, const PolyElement& b) {
  if (a.n() != b.n())
    throw StarError(ErrorCode::DimensionMismatch,
                    "n " + std::to_string(a.n()) + " vs " +
                        std::to_string(b.n()));
}

void require_invariant(const PolyElement& f) {
  if (!poly_is_invariant(f))
    throw StarError(ErrorCode::NotInvariant,
                    "element has a monomial with K != L");
}

Rational require_positive_mu(const GaussianRational& mu) {
  if (!mu.is_real()) throw StarError(ErrorCode::NonRealMu, "mu = " + mu.str());
  if (mu.re() <= 0)
    throw StarError(ErrorCode::NonPositiveMu, "mu = " + mu.str());
  return mu.re();
}

/// df/dz_i (holo = true) or df/dzbar_i (holo = false).
PolyElement derivative(const PolyElement& f, int i, bool holo) {
  PolyElement out(f.n());
  for (const auto& [m, c] : f.terms()) {
    const std::vector<unsigned>& e = holo ? m.a : m.b;
    if (e[i] == 0) continue;
    PolyMonomial m2 = m;
    (holo ? m2.a : m2.b)[i] -= 1;
    out.add_term(m2, GaussianRational(static_cast<long>(e[i])) * c);
  }
  return out;
}

}  // namespace

unsigned PolyMonomial::holo() const {
  unsigned d = 0;
  for (unsigned e : a) d += e;
  return d;
}

unsigned PolyMonomial::anti() const {
  unsigned d = 0;
  for (unsigned e : b) d += e;
  return d;
}

bool PolyMonomialOrder::operator()(const PolyMonomial& x,
                                   const PolyMonomial& y) const {
  unsigned dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx > dy;
  if (x.a != y.a) return x.a > y.a;
  return x.b > y.b;
}

PolyElement::PolyElement(int n) : n_(n) {
  if (n < 1)
    throw StarError(ErrorCode::DimensionTooSmall, "n = " + std::to_string(n));
}

PolyElement PolyElement::unit(int n) { return scalar(n, GaussianRational(1)); }

PolyElement PolyElement::scalar(int n, const GaussianRational& c) {
  PolyElement e(n);
  PolyMonomial one{std::vector<unsigned>(n + 1, 0), std::vector<unsigned>(n + 1, 0)};
  e.add_term(one, c);
  return e;
}

PolyElement PolyElement::z(int n, int i) {
  if (i < 0 || i > n)
    throw StarError(ErrorCode::IndexOutOfRange,
                    "z" + std::to_string(i) + " with n = " + std::to_string(n));
  PolyMonomial m{std::vector<unsigned>(n + 1, 0), std::vector<unsigned>(n + 1, 0)};
  m.a[i] = 1;
  return monomial(n, m, GaussianRational(1));
}

PolyElement PolyElement::zbar(int n, int i) {
  if (i < 0 || i > n)
    throw StarError(ErrorCode::IndexOutOfRange,
                    "zb" + std::to_string(i) + " with n = " + std::to_string(n));
  PolyMonomial m{std::vector<unsigned>(n + 1, 0), std::vector<unsigned>(n + 1, 0)};
  m.b[i] = 1;
  return monomial(n, m, GaussianRational(1));
}

PolyElement PolyElement::monomial(int n, PolyMonomial m, GaussianRational c) {
  if (static_cast<int>(m.a.size()) != n + 1 ||
      static_cast<int>(m.b.size()) != n + 1)
    throw StarError(ErrorCode::DimensionMismatch, "monomial exponent length");
  PolyElement e(n);
  e.add_term(m, c);
  return e;
}

unsigned PolyElement::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

GaussianRational PolyElement::coeff(const PolyMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void PolyElement::add_term(const PolyMonomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyElement PolyElement::operator-() const {
  PolyElement out(n_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

PolyElement& PolyElement::operator+=(const PolyElement& o) {
  require_same_n(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PolyElement& PolyElement::operator-=(const PolyElement& o) {
  require_same_n(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PolyElement operator*(const PolyElement& a, const PolyElement& b) {
  require_same_n(a, b);
  PolyElement out(a.n());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      PolyMonomial m = ma;
      for (std::size_t i = 0; i < m.a.size(); ++i) {
        m.a[i] += mb.a[i];
        m.b[i] += mb.b[i];
      }
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

PolyElement operator*(const GaussianRational& c, const PolyElement& a) {
  PolyElement out(a.n());
  for (const auto& [m, v] : a.terms()) out.add_term(m, c * v);
  return out;
}

PolyElement PolyElement::pow(unsigned e) const {
  PolyElement acc = unit(n_);
  PolyElement base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

PolyElement poly_star(const PolyElement& f) {
  PolyElement out(f.n());
  for (const auto& [m, c] : f.terms())
    out.add_term(PolyMonomial{m.b, m.a}, c.conj());
  return out;
}

bool poly_is_invariant(const PolyElement& f) {
  for (const auto& [m, c] : f.terms())
    if (!m.diagonal()) return false;
  return true;
}

PolyElement poly_poisson(const PolyElement& f, const PolyElement& g,
                         const Signature& sig) {
  require_same_n(f, g);
  if (f.n() != sig.n)
    throw StarError(ErrorCode::DimensionMismatch,
                    "signature n " + std::to_string(sig.n) + " vs element n " +
                        std::to_string(f.n()));
  PolyElement out(f.n());
  const GaussianRational minus_i = -GaussianRational::i();
  for (int j = 0; j <= f.n(); ++j) {
    GaussianRational w = minus_i * GaussianRational(static_cast<long>(sig.nu(j)));
    out += w * (derivative(f, j, false) * derivative(g, j, true) -
                derivative(f, j, true) * derivative(g, j, false));
  }
  return out;
}

PolyElement poly_momentum(const Signature& sig) {
  PolyElement out(sig.n);
  for (int i = 0; i <= sig.n; ++i) {
    PolyMonomial m{std::vector<unsigned>(sig.n + 1, 0),
                   std::vector<unsigned>(sig.n + 1, 0)};
    m.a[i] = 1;
    m.b[i] = 1;
    out.add_term(m, GaussianRational(static_cast<long>(sig.nu(i))));
  }
  return out;
}

PolyElement poly_average(const PolyElement& f) {
  PolyElement out(f.n());
  for (const auto& [m, c] : f.terms())
    if (m.diagonal()) out.add_term(m, c);
  return out;
}

PolyElement poly_diagonal_component(const PolyElement& f, unsigned l) {
  PolyElement out(f.n());
  for (const auto& [m, c] : f.terms())
    if (m.holo() == l && m.anti() == l) out.add_term(m, c);
  return out;
}

Homogenization poly_homogenize(const PolyElement& f, const Signature& sig,
                               const GaussianRational& mu) {
  require_invariant(f);
  if (f.n() != sig.n)
    throw StarError(ErrorCode::DimensionMismatch, "signature vs element");
  Rational mu_r = require_positive_mu(mu);
  Homogenization out{PolyElement::zero(f.n()), PolyElement::zero(f.n())};
  if (f.is_zero()) return out;

  const unsigned d = f.degree() / 2;
  const PolyElement J = poly_momentum(sig);
  std::vector<PolyElement> jpow{PolyElement::unit(f.n())};
  for (unsigned k = 1; k <= d; ++k) jpow.push_back(jpow.back() * J);

  for (unsigned l = 0; l <= d; ++l) {
    PolyElement fl = poly_diagonal_component(f, l);
    if (fl.is_zero()) continue;
    Rational scale_h = 1;
    for (unsigned t = 0; t < d - l; ++t) scale_h /= mu_r;
    out.fh += GaussianRational(scale_h) * (jpow[d - l] * fl);
    if (l < d) {
      PolyElement tail(f.n());
      for (unsigned k = 1; k <= d - l; ++k) {
        Rational c = scale_h;
        for (unsigned t = 0; t < d - l - k; ++t) c *= mu_r;
        tail += GaussianRational(c) * jpow[k - 1];
      }
      out.cofactor += fl * tail;
    }
  }
  return out;
}

IdealMembership poly_ideal_member(const PolyElement& f, const Signature& sig,
                                  const GaussianRational& mu) {
  Homogenization h = poly_homogenize(f, sig, mu);
  if (h.fh.is_zero()) return {true, h.cofactor};
  return {false, h.fh};
}

bool poly_reduced_equal(const PolyElement& f, const PolyElement& g,
                        const Signature& sig, const GaussianRational& mu) {
  require_invariant(f);
  require_invariant(g);
  return poly_ideal_member(f - g, sig, mu).member;
}

GaussianRational poly_evaluate(const PolyElement& f,
                               const std::vector<GaussianRational>& w) {
  if (static_cast<int>(w.size()) != f.n() + 1)
    throw StarError(ErrorCode::DimensionMismatch,
                    "point length " + std::to_string(w.size()) + " vs 1+n = " +
                        std::to_string(f.n() + 1));
  GaussianRational out;
  for (const auto& [m, c] : f.terms()) {
    GaussianRational v = c;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (m.a[i] != 0) v *= w[i].pow(m.a[i]);
      if (m.b[i] != 0) v *= w[i].conj().pow(m.b[i]);
    }
    out += v;
  }
  return out;
}

bool proj_equal(const ProjPoint& a, const ProjPoint& b) {
  if (a.w.size() != b.w.size()) return false;
  for (std::size_t i = 0; i < a.w.size(); ++i)
    for (std::size_t j = i + 1; j < a.w.size(); ++j)
      if (a.w[i] * b.w[j] != a.w[j] * b.w[i]) return false;
  return true;
}

Rational poly_momentum_value(const ProjPoint& w, const Signature& sig) {
  if (static_cast<int>(w.w.size()) != sig.n + 1)
    throw StarError(ErrorCode::DimensionMismatch,
                    "point length vs signature");
  Rational out = 0;
  for (std::size_t i = 0; i < w.w.size(); ++i) {
    Rational term = w.w[i].norm_sq();
    out += sig.nu(static_cast<int>(i)) > 0 ? term : -term;
  }
  return out;
}

GaussianRational poly_reduced_evaluate(const PolyElement& f, const ProjPoint& w,
                                       const Signature& sig,
                                       const GaussianRational& mu) {
  require_invariant(f);
  Rational mu_r = require_positive_mu(mu);
  Rational jw = poly_momentum_value(w, sig);
  if (jw == 0)
    throw StarError(ErrorCode::ZeroMomentumPoint, "J(w) = 0");
  GaussianRational ratio(mu_r / jw);
  GaussianRational out;
  const unsigned d = f.degree() / 2;
  for (unsigned l = 0; l <= d; ++l) {
    PolyElement fl = poly_diagonal_component(f, l);
    if (fl.is_zero()) continue;
    out += poly_evaluate(fl, w.w) * ratio.pow(l);
  }
  return out;
}

HomMatrix poly_hom_matrix(const ProjPoint& w, const Signature& sig) {
  Rational jw = poly_momentum_value(w, sig);
  if (jw == 0)
    throw StarError(ErrorCode::ZeroMomentumPoint, "J(w) = 0");
  GaussianRational inv(Rational(1) / jw);
  HomMatrix out;
  const std::size_t m = w.w.size();
  out.X.assign(m, std::vector<GaussianRational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out.X[i][j] = inv * w.w[i] * w.w[j].conj();
  return out;
}

ProjPoint poly_reconstruct_point(const HomMatrix& X, const Signature& sig) {
  const int m = X.dim();
  if (m != sig.n + 1)
    throw StarError(ErrorCode::DimensionMismatch, "matrix size vs signature");
  for (const auto& row : X.X)
    if (static_cast<int>(row.size()) != m)
      throw StarError(ErrorCode::NotAHomMatrix, "matrix is not square");

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (X.X[j][i] != X.X[i][j].conj())
        throw StarError(ErrorCode::NotAHomMatrix, "X* != X");

  // (nu X)^2 = nu X; the leading nu_i cancels, leaving
  // sum_t nu_t X_it X_tj = X_ij.
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      GaussianRational acc;
      for (int t = 0; t < m; ++t) {
        GaussianRational prod = X.X[i][t] * X.X[t][j];
        acc += sig.nu(t) > 0 ? prod : -prod;
      }
      if (acc != X.X[i][j])
        throw StarError(ErrorCode::NotAHomMatrix, "(nu X)^2 != nu X");
    }
  }

  GaussianRational tr;
  for (int i = 0; i < m; ++i)
    tr += sig.nu(i) > 0 ? X.X[i][i] : -X.X[i][i];
  if (tr != GaussianRational(1))
    throw StarError(ErrorCode::NotAHomMatrix,
                    "tr(nu X) = " + tr.str() + " != 1");

  for (int j = 0; j < m; ++j) {
    bool nonzero = false;
    for (int i = 0; i < m; ++i)
      if (!X.X[i][j].is_zero()) {
        nonzero = true;
        break;
      }
    if (nonzero) {
      ProjPoint w;
      w.w.reserve(m);
      for (int i = 0; i < m; ++i) w.w.push_back(X.X[i][j]);
      return w;
    }
  }
  throw StarError(ErrorCode::NotAHomMatrix, "zero matrix");
}

HomClass poly_classify_hom(const ProjPoint& w, const Signature& sig) {
  Rational jw = poly_momentum_value(w, sig);
  if (jw == 0)
    throw StarError(ErrorCode::ZeroMomentumPoint, "J(w) = 0");
  bool inside = jw > 0;

  // Cross-check against the sign of delta_[w](sum_{i>=s} z_i zbar_i).
  PolyElement gen(sig.n);
  for (int i = sig.s; i <= sig.n; ++i) {
    PolyMonomial m{std::vector<unsigned>(sig.n + 1, 0),
                   std::vector<unsigned>(sig.n + 1, 0)};
    m.a[i] = 1;
    m.b[i] = 1;
    gen.add_term(m, GaussianRational(1));
  }
  GaussianRational val =
      poly_reduced_evaluate(gen, w, sig, GaussianRational(1));
  bool nonneg = val.is_real() && val.re() >= 0;
  if (inside != nonneg)
    throw std::logic_error("classification cross-check failed");
  return inside ? HomClass::InsideMred : HomClass::OutsideMred;
}

}  // namespace staralg
