#pragma once

#include <span>
#include <vector>

#include "chiy/fixed_point_model.hpp"

namespace chiy {

/// P^n with the torus acting diagonally with linearization weights a_0..a_n.
/// Point p_i has tangent weights {a_j - a_i : j != i}.
VarietyModel projective_space(long n, std::span<const long> a);

/// G(k, n): fixed points are the k-subsets S of {1..n} (ids like "{1,2}"),
/// with tangent weights {a_j - a_i : i in S, j not in S}.
VarietyModel grassmannian(long k, long n, std::span<const long> a);

struct Fan {
  std::vector<std::vector<long>> rays;
  /// Maximal cones as ray-index sets, each of size dim.
  std::vector<std::vector<long>> cones;
  long dim() const { return rays.empty() ? 0 : static_cast<long>(rays.front().size()); }
};

/// Smooth complete toric variety. One fixed point per maximal cone; its
/// tangent weights are the pairings <u_i, cocharacter> with {u_i} the dual
/// basis of the cone's ray generators. With this convention the P^1 fan
/// (rays +1, -1) and cocharacter (1) put weight +1 at the cone <+1>.
VarietyModel toric_from_fan(const Fan& fan, std::span<const long> cocharacter);

/// Cartesian product: components pair up, chi_y and Poincare polynomials
/// multiply, weights concatenate.
VarietyModel product(const VarietyModel& m1, const VarietyModel& m2);

/// A single point (the unit for `product`).
VarietyModel point_model();

/// Standard fans used by fixtures and tests.
Fan projective_plane_fan();
Fan projective_line_fan();
/// Hirzebruch surface F_r: rays e1, e2, -e1, r e1 - e2.
Fan hirzebruch_fan(long r);

}  // namespace chiy
