#pragma once

#include <vector>

#include "charbound/integer.hpp"
#include "charbound/variety.hpp"

namespace charbound {

// Ground-truth topology of complete intersections, used to check both the
// Chern engine and the Betti bounds.

/// Genus of a smooth plane curve of degree d: (d-1)(d-2)/2.
Integer genus_plane_curve(int d);

/// b_0..b_{2n}. Off the middle degree the Lefschetz hyperplane theorem and
/// Poincare duality give the Betti numbers of P^n; the middle one is fixed
/// by chi(X) = <c_n(T_X), [X]>. Throws InconsistencyError if b_n < 0.
std::vector<Integer> exact_betti(const CompleteIntersection& ci);

/// Sum of exact_betti.
Integer total_betti(const CompleteIntersection& ci);

}  // namespace charbound
