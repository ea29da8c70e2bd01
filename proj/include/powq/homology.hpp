#pragma once

#include <cstddef>

#include "powq/group.hpp"
#include "powq/int_matrix.hpp"

namespace powq {

/// Default largest group order accepted by bar_homology.
inline constexpr std::size_t kBarHomologyBound = 16;

/// Relation rows n[a] - [a^n] over the basis Z Cl(G), for every a and n = 0..exponent(G).
IntMatrix b_group_relations(const FiniteGroup& g);

/// Z Cl(G) modulo n[a] = [a^n].
AbelianInvariants b_group(const FiniteGroup& g);

/// Differential of the normalized bar complex from degree `degree` to
/// `degree - 1` (degree 2 or 3), one row per basis tuple of non-identity
/// elements. Tuple (g_1, ..., g_d) has index sum (g_i - 1) (k-1)^(d-i).
IntMatrix bar_differential(const FiniteGroup& g, int degree);

/// H_1(G; Z) or H_2(G; Z) from the normalized bar complex. Throws SizeBound
/// when |G| > bound and Error for other degrees.
AbelianInvariants bar_homology(const FiniteGroup& g, int degree,
                               std::size_t bound = kBarHomologyBound);

}  // namespace powq
