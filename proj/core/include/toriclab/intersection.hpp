#pragma once

#include "toriclab/divisors.hpp"

#include <vector>

namespace toriclab {

/// A class in N_1(X) written as a relation Σ c_ρ v_ρ = 0; c_ρ = D_ρ · (class).
struct RelationClass {
  RatVector coeffs;
  bool operator==(const RelationClass &) const = default;
};

/// [V(ω)] for a wall of a complete simplicial fan. Throws
/// std::invalid_argument("non-simplicial fan") otherwise.
RelationClass curve_class(const Fan &f, const Wall &w);

/// Σ a_ρ c_ρ.
Rational intersect(const TDivisor &d, const RelationClass &c);

/// D · V(ω) computed without the wall relation: D is first moved by a
/// principal divisor so that it vanishes on one adjacent maximal cone,
/// leaving a single multiplicity ratio.
Rational intersect_by_shift(const Fan &f, const TDivisor &d, const Wall &w);

/// Coordinates w with c = K w for the fan's relation basis K.
RatVector n1_coordinates(const Fan &f, const RelationClass &c);
RelationClass relation_from_n1(const Fan &f, const RatVector &w);

/// Cones in class space. N_1 cones (Mori, Mov) use n1_coordinates; N^1
/// cones (Nef, Eff) use class_of. The pairing is the dot product.
Cone mori_cone(const Fan &f);
Cone nef_cone(const Fan &f);
Cone eff_cone(const Fan &f);
Cone mov_cone(const Fan &f);

bool is_nef(const Fan &f, const TDivisor &d);
bool is_ample(const Fan &f, const TDivisor &d);

/// False when the nef cone has empty interior, i.e. no divisor passes the
/// strict wall test and the fan may be non-projective.
bool has_ample_class(const Fan &f);

} // namespace toriclab
