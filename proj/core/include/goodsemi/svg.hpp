#pragma once

#include <iosfwd>
#include <string>

#include "goodsemi/core_model.hpp"

namespace goodsemi {

/**
 * Plot of S on [0, c+e]: dots for irreducible elements, small circles for
 * reducible ones, double circles for I_A(S), dotted arrows for the rays and a
 * hatched block beyond c+e. 10px per unit, origin at the bottom left.
 */
void emit_svg(const GoodSemigroup& s, std::ostream& out);
std::string to_svg(const GoodSemigroup& s);

}  // namespace goodsemi
