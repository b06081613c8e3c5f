#ifndef STARALG_SERIALIZE_HPP
#define STARALG_SERIALIZE_HPP

#include <string>

#include "json.hpp"
#include "staralg/certify.hpp"
#include "staralg/element.hpp"
#include "staralg/poly.hpp"
#include "staralg/scalars.hpp"
#include "staralg/states.hpp"
#include "staralg/weyl.hpp"

namespace staralg {

/// Object key order follows the schema, so dumps are deterministic.
using Json = nlohmann::ordered_json;

/// Text -> JSON; malformed input surfaces as SyntaxError with the byte
/// offset of the failure.
Json json_parse(const std::string& text);

/// Canonical form {"re":"num/den","im":"num/den"}. Readers also accept a
/// bare rational string, a JSON integer, and the shorthand [re, im].
Json scalar_to_json(const GaussianRational& c);
GaussianRational scalar_from_json(const Json& j);

/// Rational as "num/den"; readers also accept integers and "num" strings.
Rational rational_from_json(const Json& j);

/// Ascending key order: [{"epi":..,"ek":..,"c":{..}}, ...].
Json symbolic_to_json(const SymbolicScalar& x);
SymbolicScalar symbolic_from_json(const Json& j);

/// {"algebra":"weyl","dim":m,"terms":[{"k":[..],"l":[..],"c":{..}}, ...]},
/// terms in graded-lex order, leading first.
Json weyl_to_json(const WeylElement& a);
WeylElement weyl_from_json(const Json& j);

/// {"algebra":"poly","n":n,"terms":[{"a":[..],"b":[..],"c":{..}}, ...]}.
Json poly_to_json(const PolyElement& f);
PolyElement poly_from_json(const Json& j);

/// Dispatches on the "algebra" tag.
Json element_to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const Json& j);

/// {"dim":d,"terms":[{"k":[..],"l":[..],"c":[symbolic terms]}, ...]}.
Json compressed_to_json(const CompressedWeyl& x);
CompressedWeyl compressed_from_json(const Json& j);

Json signature_to_json(const Signature& sig);
Signature signature_from_json(const Json& j);

/// {"w":[scalar, ...]}; readers also accept a bare array.
Json projpoint_to_json(const ProjPoint& w);
ProjPoint projpoint_from_json(const Json& j);

/// Row-major nested lists.
Json hommatrix_to_json(const HomMatrix& X);
HomMatrix hommatrix_from_json(const Json& j);

/// Tagged by "kind": point, reduced-point, mixture, hermite, averaged.
/// Hermite coefficients are [re,im] pairs, flat for one coordinate and
/// one list per coordinate otherwise.
Json state_to_json(const StateSpec& omega);
StatePtr state_from_json(const Json& j);

/// Exact values as their display string, floats as [re, im].
Json state_value_to_json(const StateValue& v);

/// {"kind":"qm","terms":[{"a":element,"s":index or "unit"}, ...]}.
Json qm_to_json(const QMCertificate& cert);
QMCertificate qm_from_json(const Json& j);

/// {"kind":"po","terms":[{"a":element,"gens":[indices]}, ...]}.
Json po_to_json(const POCertificate& cert);
POCertificate po_from_json(const Json& j);

/// {"kind":"psatz","m1":..,"eps":"num/den","m2":..,"g":element,
///  "qm":{..},"p":element}.
Json psatz_to_json(const PositivstellensatzCertificate& cert);
PositivstellensatzCertificate psatz_from_json(const Json& j);

}  // namespace staralg

#endif
