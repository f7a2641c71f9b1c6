#pragma once

#include "toriclab/polytope.hpp"

#include <vector>

namespace toriclab {

/// Coefficients h*_0..h*_d with h*_d ≠ 0.
struct HStarPolynomial {
  std::vector<Integer> coefficients;
  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  Integer sum() const;
  bool operator==(const HStarPolynomial &) const = default;
};

/// Integer points of P, sorted lexicographically.
std::vector<IntVector> lattice_points(const RationalPolytope &p);
std::vector<IntVector> lattice_points(const Polytope &p);
Integer count_lattice_points(const RationalPolytope &p);
Integer count_lattice_points(const Polytope &p);
bool has_lattice_point(const RationalPolytope &p);

/// Integer points strictly inside every facet of P.
std::vector<IntVector> interior_lattice_points(const Polytope &p);

/// Smallest k with an interior lattice point in kP; at most dim + 1.
Integer codegree(const Polytope &p);
/// dim + 1 − codegree.
Integer degree(const Polytope &p);

/// h*-polynomial from the Ehrhart values #(jP ∩ Z^n), j = 0..n.
HStarPolynomial h_star(const Polytope &p);

/// n! · Euclidean volume, summed over a pulling triangulation.
Integer normalized_volume(const Polytope &p);

/// Simplices (as vertex lists) of the pulling triangulation that cones the
/// lexicographically smallest vertex over the far faces, recursively.
std::vector<std::vector<IntVector>> pulling_triangulation(const Polytope &p);

} // namespace toriclab
