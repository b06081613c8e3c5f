#ifndef STARALG_ELEMENT_HPP
#define STARALG_ELEMENT_HPP

#include <string>
#include <variant>

#include "staralg/poly.hpp"
#include "staralg/weyl.hpp"

namespace staralg {

/// Element of either concrete algebra, for operations accepting both.
using AlgebraElement = std::variant<WeylElement, PolyElement>;

inline bool element_is_weyl(const AlgebraElement& x) {
  return std::holds_alternative<WeylElement>(x);
}

/// Coordinate count for weyl(m), index bound n for poly(n).
inline int element_dim(const AlgebraElement& x) {
  if (const auto* a = std::get_if<WeylElement>(&x)) return a->dim();
  return std::get<PolyElement>(x).n();
}

inline std::string element_tag_str(const AlgebraElement& x) {
  return (element_is_weyl(x) ? "weyl(" : "poly(") +
         std::to_string(element_dim(x)) + ")";
}

inline void require_same_algebra(const AlgebraElement& x,
                                 const AlgebraElement& y) {
  if (x.index() != y.index())
    throw StarError(ErrorCode::AlgebraMismatch,
                    element_tag_str(x) + " vs " + element_tag_str(y));
}

inline AlgebraElement element_star(const AlgebraElement& x) {
  if (const auto* a = std::get_if<WeylElement>(&x)) return weyl_star(*a);
  return poly_star(std::get<PolyElement>(x));
}

inline AlgebraElement element_mul(const AlgebraElement& x,
                                  const AlgebraElement& y) {
  require_same_algebra(x, y);
  if (const auto* a = std::get_if<WeylElement>(&x))
    return *a * std::get<WeylElement>(y);
  return std::get<PolyElement>(x) * std::get<PolyElement>(y);
}

inline AlgebraElement element_add(const AlgebraElement& x,
                                  const AlgebraElement& y) {
  require_same_algebra(x, y);
  if (const auto* a = std::get_if<WeylElement>(&x))
    return *a + std::get<WeylElement>(y);
  return std::get<PolyElement>(x) + std::get<PolyElement>(y);
}

}  // namespace staralg

#endif
