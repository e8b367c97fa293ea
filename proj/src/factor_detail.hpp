#pragma once

#include <vector>

#include "newton/algebra.hpp"

namespace newton::detail {

// Monic irreducible factors over Q of a squarefree polynomial with rational
// coefficients (level 0).  Order is not canonical; callers sort.
std::vector<UniPoly> factor_squarefree_rational(const UniPoly& p);

// Replace the level-L generator of the tower by the variable tvar; scalars below
// level L become constant polynomials.
UniPoly generator_to_var(const AlgebraicScalar& x, int L, const TowerPtr& tower,
                         const std::string& tvar);

// Lagrange interpolation through (xs[i], ys[i]).
UniPoly interpolate(const TowerPtr& tower, const std::string& var,
                    const std::vector<AlgebraicScalar>& xs,
                    const std::vector<AlgebraicScalar>& ys);

}  // namespace newton::detail
