#include "staralg/serialize.hpp"

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "staralg/errors.hpp"

namespace staralg {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw StarError(ErrorCode::SyntaxError, what);
}

const Json& need(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

long need_long(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

unsigned need_unsigned(const Json& j, const char* key) {
  long v = need_long(j, key);
  if (v < 0) bad(std::string("field '") + key + "' must be nonnegative");
  return static_cast<unsigned>(v);
}

const Json& need_array(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_array()) bad(std::string("field '") + key + "' must be an array");
  return v;
}

std::vector<unsigned> exponent_vector(const Json& j, const char* key, std::size_t len) {
  const Json& v = need_array(j, key);
  if (v.size() != len)
    bad(std::string("field '") + key + "' must have length " + std::to_string(len));
  std::vector<unsigned> out;
  out.reserve(len);
  for (const Json& e : v) {
    if (!e.is_number_integer() || e.get<long>() < 0)
      bad(std::string("field '") + key + "' must hold nonnegative integers");
    out.push_back(e.get<unsigned>());
  }
  return out;
}

void require_kind(const Json& j, const char* kind) {
  const Json& v = need(j, "kind");
  if (!v.is_string() || v.get<std::string>() != kind)
    bad(std::string("expected \"kind\":\"") + kind + "\"");
}

double need_double(const Json& j) {
  if (!j.is_number()) bad("expected a number");
  return j.get<double>();
}

std::complex<double> complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("expected an [re, im] pair");
  return {need_double(j[0]), need_double(j[1])};
}

}  // namespace

Json json_parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StarError(ErrorCode::SyntaxError, e.what(),
                    static_cast<long>(e.byte) - 1);
  }
}

Json scalar_to_json(const GaussianRational& c) {
  return Json{{"re", rational_to_fraction(c.re())},
              {"im", rational_to_fraction(c.im())}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("expected a rational (string or integer)");
}

GaussianRational scalar_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer())
    return GaussianRational(rational_from_json(j));
  if (j.is_array()) {
    if (j.size() != 2) bad("scalar shorthand must be [re, im]");
    return GaussianRational(rational_from_json(j[0]), rational_from_json(j[1]));
  }
  if (j.is_object()) {
    Rational re = rational_from_json(need(j, "re"));
    Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
    return GaussianRational(std::move(re), std::move(im));
  }
  bad("expected a scalar");
}

Json symbolic_to_json(const SymbolicScalar& x) {
  Json terms = Json::array();
  for (const auto& [key, c] : x.terms())
    terms.push_back(Json{{"epi", key.first}, {"ek", key.second}, {"c", scalar_to_json(c)}});
  return terms;
}

SymbolicScalar symbolic_from_json(const Json& j) {
  if (!j.is_array()) bad("symbolic scalar must be an array of terms");
  SymbolicScalar out;
  for (const Json& t : j)
    out += SymbolicScalar::term(need_long(t, "epi"), need_long(t, "ek"),
                                scalar_from_json(need(t, "c")));
  return out;
}

Json weyl_to_json(const WeylElement& a) {
  Json terms = Json::array();
  for (const auto& [m, c] : a.terms())
    terms.push_back(Json{{"k", m.k}, {"l", m.l}, {"c", scalar_to_json(c)}});
  return Json{{"algebra", "weyl"}, {"dim", a.dim()}, {"terms", std::move(terms)}};
}

WeylElement weyl_from_json(const Json& j) {
  const Json& tag = need(j, "algebra");
  if (!tag.is_string() || tag.get<std::string>() != "weyl")
    bad("expected \"algebra\":\"weyl\"");
  long dim = need_long(j, "dim");
  WeylElement a(static_cast<int>(dim));
  for (const Json& t : need_array(j, "terms")) {
    WeylMonomial m{exponent_vector(t, "k", dim), exponent_vector(t, "l", dim)};
    a.add_term(m, scalar_from_json(need(t, "c")));
  }
  return a;
}

Json poly_to_json(const PolyElement& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms())
    terms.push_back(Json{{"a", m.a}, {"b", m.b}, {"c", scalar_to_json(c)}});
  return Json{{"algebra", "poly"}, {"n", f.n()}, {"terms", std::move(terms)}};
}

PolyElement poly_from_json(const Json& j) {
  const Json& tag = need(j, "algebra");
  if (!tag.is_string() || tag.get<std::string>() != "poly")
    bad("expected \"algebra\":\"poly\"");
  long n = need_long(j, "n");
  PolyElement f(static_cast<int>(n));
  std::size_t len = static_cast<std::size_t>(n) + 1;
  for (const Json& t : need_array(j, "terms")) {
    PolyMonomial m{exponent_vector(t, "a", len), exponent_vector(t, "b", len)};
    f.add_term(m, scalar_from_json(need(t, "c")));
  }
  return f;
}

Json element_to_json(const AlgebraElement& x) {
  if (std::holds_alternative<WeylElement>(x))
    return weyl_to_json(std::get<WeylElement>(x));
  return poly_to_json(std::get<PolyElement>(x));
}

AlgebraElement element_from_json(const Json& j) {
  const Json& tag = need(j, "algebra");
  if (!tag.is_string()) bad("field 'algebra' must be a string");
  std::string s = tag.get<std::string>();
  if (s == "weyl") return weyl_from_json(j);
  if (s == "poly") return poly_from_json(j);
  bad("unknown algebra '" + s + "'");
}

Json compressed_to_json(const CompressedWeyl& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms)
    terms.push_back(Json{{"k", m.k}, {"l", m.l}, {"c", symbolic_to_json(c)}});
  return Json{{"dim", x.dim}, {"terms", std::move(terms)}};
}

CompressedWeyl compressed_from_json(const Json& j) {
  long dim = need_long(j, "dim");
  CompressedWeyl out{static_cast<int>(dim), {}};
  for (const Json& t : need_array(j, "terms")) {
    WeylMonomial m{exponent_vector(t, "k", dim), exponent_vector(t, "l", dim)};
    SymbolicScalar c = symbolic_from_json(need(t, "c"));
    if (!c.is_zero()) out.terms[m] += c;
  }
  return out;
}

Json signature_to_json(const Signature& sig) {
  return Json{{"n", sig.n}, {"s", sig.s}};
}

Signature signature_from_json(const Json& j) {
  return Signature(static_cast<int>(need_long(j, "n")),
                   static_cast<int>(need_long(j, "s")));
}

Json projpoint_to_json(const ProjPoint& w) {
  Json coords = Json::array();
  for (const GaussianRational& c : w.w) coords.push_back(scalar_to_json(c));
  return Json{{"w", std::move(coords)}};
}

ProjPoint projpoint_from_json(const Json& j) {
  const Json& coords = j.is_array() ? j : need_array(j, "w");
  ProjPoint out;
  for (const Json& c : coords) out.w.push_back(scalar_from_json(c));
  return out;
}

Json hommatrix_to_json(const HomMatrix& X) {
  Json rows = Json::array();
  for (const auto& row : X.X) {
    Json r = Json::array();
    for (const GaussianRational& c : row) r.push_back(scalar_to_json(c));
    rows.push_back(std::move(r));
  }
  return rows;
}

HomMatrix hommatrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
  HomMatrix X;
  for (const Json& row : j) {
    if (!row.is_array() || row.size() != j.size())
      bad("matrix rows must all have length " + std::to_string(j.size()));
    std::vector<GaussianRational> r;
    for (const Json& c : row) r.push_back(scalar_from_json(c));
    X.X.push_back(std::move(r));
  }
  return X;
}

namespace {

Json coeffs_to_json(const std::vector<std::vector<std::complex<double>>>& coeffs) {
  auto one = [](const std::vector<std::complex<double>>& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(Json::array({c.real(), c.imag()}));
    return out;
  };
  if (coeffs.size() == 1) return one(coeffs[0]);
  Json out = Json::array();
  for (const auto& v : coeffs) out.push_back(one(v));
  return out;
}

std::vector<std::vector<std::complex<double>>> coeffs_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("field 'coeffs' must be a nonempty array");
  auto one = [](const Json& v) {
    if (!v.is_array() || v.empty()) bad("coefficient lists must be nonempty arrays");
    std::vector<std::complex<double>> out;
    for (const Json& c : v) out.push_back(complex_from_json(c));
    return out;
  };
  if (j[0].is_array() && !j[0].empty() && j[0][0].is_array()) {
    std::vector<std::vector<std::complex<double>>> out;
    for (const Json& v : j) out.push_back(one(v));
    return out;
  }
  return {one(j)};
}

}  // namespace

Json state_to_json(const StateSpec& omega) {
  switch (omega.kind) {
    case StateKind::Point: {
      Json w = Json::array();
      for (const GaussianRational& c : omega.w) w.push_back(scalar_to_json(c));
      return Json{{"kind", "point"}, {"w", std::move(w)}};
    }
    case StateKind::ReducedPoint: {
      Json w = Json::array();
      for (const GaussianRational& c : omega.rep.w) w.push_back(scalar_to_json(c));
      return Json{{"kind", "reduced-point"},
                  {"w", std::move(w)},
                  {"sig", signature_to_json(omega.sig)},
                  {"mu", rational_to_fraction(omega.mu.re())}};
    }
    case StateKind::Mixture: {
      Json entries = Json::array();
      for (const MixtureEntry& e : omega.entries)
        entries.push_back(Json::array(
            {rational_to_fraction(e.weight), state_to_json(*e.state)}));
      return Json{{"kind", "mixture"}, {"entries", std::move(entries)}};
    }
    case StateKind::Hermite:
      return Json{{"kind", "hermite"},
                  {"coeffs", coeffs_to_json(omega.coeffs)},
                  {"truncation", omega.truncation}};
    default:  // Averaged
      return Json{{"kind", "averaged"}, {"inner", state_to_json(*omega.inner)}};
  }
}

StatePtr state_from_json(const Json& j) {
  const Json& kind = need(j, "kind");
  if (!kind.is_string()) bad("field 'kind' must be a string");
  std::string k = kind.get<std::string>();
  if (k == "point") {
    std::vector<GaussianRational> w;
    for (const Json& c : need_array(j, "w")) w.push_back(scalar_from_json(c));
    return state_point(std::move(w));
  }
  if (k == "reduced-point") {
    ProjPoint w;
    for (const Json& c : need_array(j, "w")) w.w.push_back(scalar_from_json(c));
    return state_reduced_point(std::move(w), signature_from_json(need(j, "sig")),
                               scalar_from_json(need(j, "mu")));
  }
  if (k == "mixture") {
    std::vector<MixtureEntry> entries;
    for (const Json& e : need_array(j, "entries")) {
      if (!e.is_array() || e.size() != 2) bad("mixture entries must be [weight, state] pairs");
      entries.push_back(MixtureEntry{rational_from_json(e[0]), state_from_json(e[1])});
    }
    return state_mixture(std::move(entries));
  }
  if (k == "hermite") {
    int truncation = j.contains("truncation")
                         ? static_cast<int>(need_long(j, "truncation"))
                         : 64;
    return state_hermite(coeffs_from_json(need(j, "coeffs")), truncation);
  }
  if (k == "averaged") return average_pullback(state_from_json(need(j, "inner")));
  bad("unknown state kind '" + k + "'");
}

Json state_value_to_json(const StateValue& v) {
  if (state_value_is_exact(v)) return state_value_exact(v).str();
  std::complex<double> c = state_value_complex(v);
  return Json::array({c.real(), c.imag()});
}

Json qm_to_json(const QMCertificate& cert) {
  Json terms = Json::array();
  for (const QMTerm& t : cert.terms) {
    Json s = t.s_index == kUnitGenerator ? Json("unit") : Json(t.s_index);
    terms.push_back(Json{{"a", element_to_json(t.a)}, {"s", std::move(s)}});
  }
  return Json{{"kind", "qm"}, {"terms", std::move(terms)}};
}

QMCertificate qm_from_json(const Json& j) {
  require_kind(j, "qm");
  QMCertificate cert;
  for (const Json& t : need_array(j, "terms")) {
    const Json& s = need(t, "s");
    int s_index;
    if (s.is_string() && s.get<std::string>() == "unit")
      s_index = kUnitGenerator;
    else if (s.is_number_integer() && s.get<long>() >= 0)
      s_index = s.get<int>();
    else
      bad("field 's' must be a generator index or \"unit\"");
    cert.terms.push_back(QMTerm{element_from_json(need(t, "a")), s_index});
  }
  return cert;
}

Json po_to_json(const POCertificate& cert) {
  Json terms = Json::array();
  for (const POTerm& t : cert.terms)
    terms.push_back(Json{{"a", poly_to_json(t.a)}, {"gens", t.gens}});
  return Json{{"kind", "po"}, {"terms", std::move(terms)}};
}

POCertificate po_from_json(const Json& j) {
  require_kind(j, "po");
  POCertificate cert;
  for (const Json& t : need_array(j, "terms")) {
    std::vector<int> gens;
    for (const Json& g : need_array(t, "gens")) {
      if (!g.is_number_integer() || g.get<long>() < 0)
        bad("field 'gens' must hold generator indices");
      gens.push_back(g.get<int>());
    }
    cert.terms.push_back(POTerm{poly_from_json(need(t, "a")), std::move(gens)});
  }
  return cert;
}

Json psatz_to_json(const PositivstellensatzCertificate& cert) {
  return Json{{"kind", "psatz"},
              {"m1", cert.m1},
              {"eps", rational_to_fraction(cert.eps)},
              {"m2", cert.m2},
              {"g", poly_to_json(cert.ideal_cofactor)},
              {"qm", qm_to_json(cert.qm)},
              {"p", poly_to_json(cert.p)}};
}

PositivstellensatzCertificate psatz_from_json(const Json& j) {
  require_kind(j, "psatz");
  return PositivstellensatzCertificate{need_unsigned(j, "m1"),
                                       rational_from_json(need(j, "eps")),
                                       need_unsigned(j, "m2"),
                                       poly_from_json(need(j, "g")),
                                       qm_from_json(need(j, "qm")),
                                       poly_from_json(need(j, "p"))};
}

}  // namespace staralg
