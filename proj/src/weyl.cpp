#include "staralg/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace staralg {

namespace {

GaussianRational i_pow(unsigned t) {
  switch (t % 4) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::i();
    case 2: return GaussianRational(-1);
    default: return -GaussianRational::i();
  }
}

/// i^t * t! * C(l, t) * C(m, t), the coefficient of p^{m-t} q^{l-t} in the
/// normal ordering of q^l p^m for one coordinate.
GaussianRational swap_coefficient(unsigned l, unsigned m, unsigned t) {
  mpz_class c;
  mpz_fac_ui(c.get_mpz_t(), t);
  mpz_class b1, b2;
  mpz_bin_uiui(b1.get_mpz_t(), l, t);
  mpz_bin_uiui(b2.get_mpz_t(), m, t);
  return i_pow(t) * GaussianRational(Rational(c * b1 * b2));
}

Rational require_real(const GaussianRational& mu) {
  if (!mu.is_real())
    throw StarError(ErrorCode::NonRealMu, "mu = " + mu.str());
  return mu.re();
}

void require_same_dim(const WeylElement& a, const WeylElement& b) {
  if (a.dim() != b.dim())
    throw StarError(ErrorCode::DimensionMismatch,
                    "dim " + std::to_string(a.dim()) + " vs " +
                        std::to_string(b.dim()));
}

void require_invariant(const WeylElement& a) {
  if (!weyl_is_invariant(a))
    throw StarError(ErrorCode::NotInvariant, "element depends on q_0");
}

}  // namespace

unsigned WeylMonomial::degree() const {
  unsigned d = 0;
  for (unsigned e : k) d += e;
  for (unsigned e : l) d += e;
  return d;
}

bool WeylMonomialOrder::operator()(const WeylMonomial& a,
                                   const WeylMonomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  if (a.k != b.k) return a.k > b.k;
  return a.l > b.l;
}

WeylElement::WeylElement(int dim) : dim_(dim) {
  if (dim < 1)
    throw StarError(ErrorCode::DimensionTooSmall,
                    "dim " + std::to_string(dim));
}

WeylElement WeylElement::unit(int dim) { return scalar(dim, GaussianRational(1)); }

WeylElement WeylElement::scalar(int dim, const GaussianRational& c) {
  WeylElement e(dim);
  WeylMonomial one{std::vector<unsigned>(dim, 0), std::vector<unsigned>(dim, 0)};
  e.add_term(one, c);
  return e;
}

WeylElement WeylElement::p(int dim, int j) {
  if (j < 0 || j >= dim)
    throw StarError(ErrorCode::IndexOutOfRange,
                    "p" + std::to_string(j) + " in dim " + std::to_string(dim));
  WeylMonomial m{std::vector<unsigned>(dim, 0), std::vector<unsigned>(dim, 0)};
  m.k[j] = 1;
  return monomial(dim, m, GaussianRational(1));
}

WeylElement WeylElement::q(int dim, int j) {
  if (j < 0 || j >= dim)
    throw StarError(ErrorCode::IndexOutOfRange,
                    "q" + std::to_string(j) + " in dim " + std::to_string(dim));
  WeylMonomial m{std::vector<unsigned>(dim, 0), std::vector<unsigned>(dim, 0)};
  m.l[j] = 1;
  return monomial(dim, m, GaussianRational(1));
}

WeylElement WeylElement::monomial(int dim, WeylMonomial m, GaussianRational c) {
  if (static_cast<int>(m.k.size()) != dim || static_cast<int>(m.l.size()) != dim)
    throw StarError(ErrorCode::DimensionMismatch, "monomial exponent length");
  WeylElement e(dim);
  e.add_term(m, c);
  return e;
}

unsigned WeylElement::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

GaussianRational WeylElement::coeff(const WeylMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void WeylElement::add_term(const WeylMonomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylElement WeylElement::operator-() const {
  WeylElement out(dim_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  require_same_dim(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  require_same_dim(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  require_same_dim(a, b);
  const int dim = a.dim();
  WeylElement out(dim);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      // p^{ma.k} q^{ma.l} p^{mb.k} q^{mb.l}: reorder the middle q^{ma.l} p^{mb.k}
      // one coordinate at a time.
      std::vector<std::pair<WeylMonomial, GaussianRational>> acc;
      WeylMonomial top;
      top.k.resize(dim);
      top.l.resize(dim);
      for (int j = 0; j < dim; ++j) {
        top.k[j] = ma.k[j] + mb.k[j];
        top.l[j] = ma.l[j] + mb.l[j];
      }
      acc.emplace_back(top, ca * cb);
      for (int j = 0; j < dim; ++j) {
        const unsigned l = ma.l[j], m = mb.k[j];
        const unsigned tmax = std::min(l, m);
        if (tmax == 0) continue;
        std::vector<std::pair<WeylMonomial, GaussianRational>> next;
        next.reserve(acc.size() * (tmax + 1));
        for (const auto& [mono, c] : acc) {
          for (unsigned t = 0; t <= tmax; ++t) {
            WeylMonomial m2 = mono;
            m2.k[j] -= t;
            m2.l[j] -= t;
            next.emplace_back(std::move(m2), c * swap_coefficient(l, m, t));
          }
        }
        acc = std::move(next);
      }
      for (const auto& [mono, c] : acc) out.add_term(mono, c);
    }
  }
  return out;
}

WeylElement operator*(const GaussianRational& c, const WeylElement& a) {
  WeylElement out(a.dim());
  for (const auto& [m, v] : a.terms()) out.add_term(m, c * v);
  return out;
}

WeylElement WeylElement::pow(unsigned e) const {
  WeylElement acc = unit(dim_);
  WeylElement base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

WeylElement weyl_star(const WeylElement& a) {
  const int dim = a.dim();
  WeylElement out(dim);
  for (const auto& [m, c] : a.terms()) {
    // (p^k q^l)* = q^l p^k; reorder coordinatewise.
    std::vector<std::pair<WeylMonomial, GaussianRational>> acc;
    acc.emplace_back(m, c.conj());
    for (int j = 0; j < dim; ++j) {
      const unsigned l = m.l[j], k = m.k[j];
      const unsigned tmax = std::min(l, k);
      if (tmax == 0) continue;
      std::vector<std::pair<WeylMonomial, GaussianRational>> next;
      for (const auto& [mono, cc] : acc) {
        for (unsigned t = 0; t <= tmax; ++t) {
          WeylMonomial m2 = mono;
          m2.k[j] -= t;
          m2.l[j] -= t;
          next.emplace_back(std::move(m2), cc * swap_coefficient(l, k, t));
        }
      }
      acc = std::move(next);
    }
    for (const auto& [mono, cc] : acc) out.add_term(mono, cc);
  }
  return out;
}

WeylElement weyl_poisson(const WeylElement& a, const WeylElement& b) {
  require_same_dim(a, b);
  return -GaussianRational::i() * (a * b - b * a);
}

bool weyl_is_invariant(const WeylElement& a) {
  for (const auto& [m, c] : a.terms())
    if (m.l[0] != 0) return false;
  return true;
}

CentralTaylor weyl_central_taylor(const WeylElement& a,
                                  const GaussianRational& mu) {
  Rational mu_r = require_real(mu);
  require_invariant(a);
  CentralTaylor out;
  out.mu = mu_r;
  for (const auto& [m, c] : a.terms()) {
    const unsigned k0 = m.k[0];
    if (out.parts.size() < k0 + 1)
      out.parts.resize(k0 + 1, WeylElement::zero(a.dim()));
    WeylMonomial rest = m;
    rest.k[0] = 0;
    for (unsigned t = 0; t <= k0; ++t) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), k0, t);
      GaussianRational w =
          c * GaussianRational(Rational(b)) *
          GaussianRational(mu_r).pow(k0 - t);
      out.parts[t].add_term(rest, w);
    }
  }
  while (!out.parts.empty() && out.parts.back().is_zero()) out.parts.pop_back();
  return out;
}

WeylDecomposition weyl_decompose(const WeylElement& a,
                                 const GaussianRational& mu) {
  CentralTaylor ct = weyl_central_taylor(a, mu);
  const int dim = a.dim();
  WeylElement shifted = WeylElement::p(dim, 0) - WeylElement::scalar(dim, GaussianRational(ct.mu));
  WeylDecomposition out{WeylElement::zero(dim), WeylElement::zero(dim),
                        WeylElement::zero(dim)};
  if (!ct.parts.empty()) out.complement = ct.parts[0];
  for (std::size_t l = 1; l < ct.parts.size(); ++l)
    out.cofactor += shifted.pow(static_cast<unsigned>(l - 1)) * ct.parts[l];
  out.ideal_part = a - out.complement;
  return out;
}

WeylElement weyl_reduce(const WeylElement& a, const GaussianRational& mu) {
  Rational mu_r = require_real(mu);
  require_invariant(a);
  if (a.dim() < 2)
    throw StarError(ErrorCode::DimensionTooSmall,
                    "reduction needs dim >= 2, got " + std::to_string(a.dim()));
  WeylElement out(a.dim() - 1);
  for (const auto& [m, c] : a.terms()) {
    WeylMonomial rest{std::vector<unsigned>(m.k.begin() + 1, m.k.end()),
                      std::vector<unsigned>(m.l.begin() + 1, m.l.end())};
    out.add_term(rest, c * GaussianRational(mu_r).pow(m.k[0]));
  }
  return out;
}

WeylElement weyl_drop0(const WeylElement& a) {
  if (a.dim() < 2)
    throw StarError(ErrorCode::DimensionTooSmall,
                    "dim " + std::to_string(a.dim()));
  WeylElement out(a.dim() - 1);
  for (const auto& [m, c] : a.terms()) {
    if (!m.coordinate_free(0))
      throw std::invalid_argument("element still involves coordinate 0");
    WeylMonomial rest{std::vector<unsigned>(m.k.begin() + 1, m.k.end()),
                      std::vector<unsigned>(m.l.begin() + 1, m.l.end())};
    out.add_term(rest, c);
  }
  return out;
}

std::vector<SymbolicScalar> weyl_alpha(unsigned l) {
  // rows[r][m] for r = 0..l
  std::vector<std::vector<SymbolicScalar>> rows;
  rows.push_back({SymbolicScalar::constant(GaussianRational(1))});
  const SymbolicScalar pik2 = SymbolicScalar::term(1, -2, GaussianRational(1));
  const SymbolicScalar ipik2 = SymbolicScalar::term(1, -2, GaussianRational::i());
  for (unsigned r = 1; r <= l; ++r) {
    std::vector<SymbolicScalar> row(r + 1);
    for (unsigned m = 0; m <= r; ++m) {
      SymbolicScalar v;
      if (m >= 1 && m - 1 < rows[r - 1].size()) v += ipik2 * rows[r - 1][m - 1];
      if (r >= 2 && m < rows[r - 2].size()) {
        SymbolicScalar grow = pik2 * rows[r - 2][m];
        v += GaussianRational(static_cast<long>(r - 1)) * grow;
      }
      row[m] = std::move(v);
    }
    rows.push_back(std::move(row));
  }
  return rows[l];
}

CompressedWeyl weyl_compress(const WeylElement& a, const GaussianRational& mu) {
  if (a.dim() < 2)
    throw StarError(ErrorCode::DimensionTooSmall,
                    "compression needs dim >= 2, got " + std::to_string(a.dim()));
  CentralTaylor ct = weyl_central_taylor(a, mu);
  CompressedWeyl out;
  out.dim = a.dim() - 1;
  for (std::size_t l = 0; l < ct.parts.size(); ++l) {
    if (ct.parts[l].is_zero()) continue;
    auto alpha = weyl_alpha(static_cast<unsigned>(l));
    SymbolicScalar weight;
    for (std::size_t m = 0; m < alpha.size(); ++m)
      weight += alpha[m] * gaussian_moment(static_cast<unsigned long>(m));
    if (weight.is_zero()) continue;
    WeylElement dropped = weyl_drop0(ct.parts[l]);
    for (const auto& [mono, c] : dropped.terms()) {
      SymbolicScalar add = c * weight;
      auto [it, inserted] = out.terms.emplace(mono, add);
      if (!inserted) {
        it->second += add;
        if (it->second.is_zero()) out.terms.erase(it);
      }
    }
  }
  return out;
}

WeylElement weyl_compress_limit(const WeylElement& a,
                                const GaussianRational& mu) {
  CompressedWeyl c = weyl_compress(a, mu);
  WeylElement out(c.dim);
  for (const auto& [mono, s] : c.terms) out.add_term(mono, k_limit(s));
  return out;
}

}  // namespace staralg
