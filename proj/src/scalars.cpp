#include "staralg/scalars.hpp"

#include <cctype>
#include <sstream>

namespace staralg {

Rational rational_from_string(const std::string& s) {
  auto bad = [&]() -> StarError {
    return StarError(ErrorCode::SyntaxError, "not a rational: \"" + s + "\"");
  };
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  std::size_t num_start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == num_start) throw bad();
  if (pos < s.size()) {
    if (s[pos] != '/') throw bad();
    ++pos;
    std::size_t den_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == den_start || pos != s.size()) throw bad();
  }
  Rational q;
  const std::string digits = s[0] == '+' ? s.substr(1) : s;
  if (mpq_set_str(q.get_mpq_t(), digits.c_str(), 10) != 0) throw bad();
  if (q.get_den() == 0) throw bad();
  q.canonicalize();
  return q;
}

std::string rational_to_fraction(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return rational_to_fraction(q);
}

GaussianRational GaussianRational::pow(unsigned long e) const {
  GaussianRational acc(1);
  GaussianRational base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  Rational n = o.norm_sq();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  auto imag_part = [](const Rational& v) -> std::string {
    if (v == 1) return "i";
    return rational_str(v) + "*i";
  };
  if (im_ == 0) return rational_str(re_);
  if (re_ == 0) {
    if (im_ == -1) return "-i";
    if (im_ < 0) return "-" + imag_part(Rational(-im_));
    return imag_part(im_);
  }
  std::string out = rational_str(re_);
  if (im_ < 0)
    out += "-" + imag_part(Rational(-im_));
  else
    out += "+" + imag_part(im_);
  return out;
}

SymbolicScalar SymbolicScalar::term(long e_pi, long e_k, GaussianRational c) {
  SymbolicScalar x;
  if (!c.is_zero()) x.terms_.emplace(Key{e_pi, e_k}, std::move(c));
  return x;
}

GaussianRational SymbolicScalar::coeff(long e_pi, long e_k) const {
  auto it = terms_.find(Key{e_pi, e_k});
  return it == terms_.end() ? GaussianRational() : it->second;
}

SymbolicScalar SymbolicScalar::conj() const {
  SymbolicScalar out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, c.conj());
  return out;
}

void SymbolicScalar::add_term(const Key& key, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymbolicScalar& SymbolicScalar::operator+=(const SymbolicScalar& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

SymbolicScalar& SymbolicScalar::operator-=(const SymbolicScalar& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

SymbolicScalar SymbolicScalar::operator-() const {
  SymbolicScalar out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

SymbolicScalar operator*(const SymbolicScalar& a, const SymbolicScalar& b) {
  SymbolicScalar out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

SymbolicScalar operator*(const GaussianRational& c, const SymbolicScalar& x) {
  SymbolicScalar out;
  for (const auto& [key, v] : x.terms_) out.add_term(key, c * v);
  return out;
}

std::string SymbolicScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::string cs = c.str();
    if (cs.find('+') != std::string::npos ||
        cs.find('-', 1) != std::string::npos)
      cs = "(" + cs + ")";
    out << cs;
    if (key.first != 0) {
      out << "*pi";
      if (key.first != 1) out << "^" << key.first;
    }
    if (key.second != 0) {
      out << "*k";
      if (key.second != 1) out << "^" << key.second;
    }
  }
  return out.str();
}

SymbolicScalar gaussian_moment(unsigned long m) {
  if (m % 2 != 0) return SymbolicScalar();
  unsigned long j = m / 2;
  mpz_class num(1);
  if (j >= 2)
    for (unsigned long t = 3; t <= 2 * j - 1; t += 2) num *= t;
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, j);
  Rational c(num, den);
  c.canonicalize();
  return SymbolicScalar::term(-static_cast<long>(j), static_cast<long>(m),
                              GaussianRational(c));
}

GaussianRational k_limit(const SymbolicScalar& x) {
  GaussianRational out;
  for (const auto& [key, c] : x.terms()) {
    auto [e_pi, e_k] = key;
    if (e_k > 0)
      throw StarError(ErrorCode::LimitDiverges,
                      "term with k^" + std::to_string(e_k) + " grows without bound");
    if (e_k == 0) {
      if (e_pi != 0)
        throw StarError(ErrorCode::TranscendentalResidue,
                        "k-free term retains pi^" + std::to_string(e_pi));
      out = c;
    }
  }
  return out;
}

}  // namespace staralg
