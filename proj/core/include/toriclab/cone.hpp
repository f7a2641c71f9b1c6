#pragma once

#include "toriclab/exactmath.hpp"

#include <vector>

namespace toriclab {

/// {x : a·x ≥ 0 for a in inequalities, e·x = 0 for e in equations}
struct ConeHRep {
  std::vector<IntVector> inequalities;
  std::vector<IntVector> equations;
};

/// cone(rays) + span(lineality)
struct ConeVRep {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};

/// Extreme rays and lineality basis of an H-described cone in Z^dim.
/// Rays are primitive, lie in the orthogonal complement of the lineality
/// space, and are sorted; the lineality basis is in Hermite form.
ConeVRep rays_of(std::size_t dim, const ConeHRep &h);

/// Facets of a V-described cone: primitive inward normals (taken inside
/// the linear span of the cone) plus a basis of the span's orthogonal
/// complement as equations.
ConeHRep facets_of(std::size_t dim, const ConeVRep &v);

/// Standalone rational polyhedral cone.
struct Cone {
  std::size_t ambient = 0;
  std::vector<IntVector> generators;

  Cone() = default;
  /// Generators are made primitive, deduplicated and sorted.
  Cone(std::size_t ambient, std::vector<IntVector> generators);

  std::size_t dimension() const;
  bool is_simplicial() const;
  bool is_strongly_convex() const;
  bool contains(const RatVector &x) const;
  /// Extreme rays (empty for a cone that is not strongly convex).
  std::vector<IntVector> extreme_rays() const;
  bool operator==(const Cone &o) const;
};

/// Dual cone in M. Generators are the extreme rays plus ± the lineality
/// basis, so Cone(e_1) in R^2 dualizes to Cone(e_1, e_2, −e_2).
Cone dual_cone(const Cone &c);

/// Index of the generator sublattice in its saturation.
Integer multiplicity(const Cone &c);

} // namespace toriclab
