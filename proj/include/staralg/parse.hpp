#ifndef STARALG_PARSE_HPP
#define STARALG_PARSE_HPP

#include <string>
#include <vector>

#include "staralg/element.hpp"
#include "staralg/scalars.hpp"

namespace staralg {

enum class GenKind { Q, P, Z, Zb };

/// Expression AST. Sums and products keep their operand order; every
/// node remembers its source offset for error messages.
struct Expression {
  enum class Kind { Scalar, Generator, Sum, Product, Power, Star, Negate };

  Kind kind = Kind::Scalar;
  GaussianRational value;              // Scalar
  GenKind gen = GenKind::Q;            // Generator
  int index = 0;                       // Generator
  unsigned long exponent = 0;          // Power
  std::vector<Expression> children;    // Sum, Product, Power, Star, Negate
  long pos = -1;
};

/// expr := ('+'|'-')? term (('+'|'-') term)*
/// term := factor ('*' factor)*
/// factor := atom postfix*          postfix := '^' nat | "'"
/// atom := rational | 'i' | gen | '(' expr ')'
/// gen := ('q'|'p'|'z'|'zb') nat
/// Throws SyntaxError with the byte offset of the failure.
Expression parse_expression(const std::string& text);

struct ElaborationConfig {
  bool weyl;
  int dim;  // coordinate count for weyl(m), index bound n for poly(n)
};

/// Exact element of the configured algebra. Generator kinds must match
/// the algebra (MixedAlgebra) and indices its dimension (IndexOutOfRange).
AlgebraElement elaborate(const Expression& e, const ElaborationConfig& cfg);

/// parse + elaborate in one step.
AlgebraElement parse_element(const std::string& text,
                             const ElaborationConfig& cfg);

/// Normal-form rendering, reparseable: graded-lex terms, leading first,
/// exact rational coefficients.
std::string render_weyl(const WeylElement& a);
std::string render_poly(const PolyElement& f);
std::string render_element(const AlgebraElement& x);

}  // namespace staralg

#endif
