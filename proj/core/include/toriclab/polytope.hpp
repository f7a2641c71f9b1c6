#pragma once

#include "toriclab/fan.hpp"

#include <optional>
#include <vector>

namespace toriclab {

/// Half-space ⟨x, normal⟩ ≥ −offset with a primitive normal.
struct Facet {
  IntVector normal;
  Integer offset;
  bool operator==(const Facet &) const = default;
  bool operator<(const Facet &o) const {
    return normal != o.normal ? normal < o.normal : offset < o.offset;
  }
};

struct RationalFacet {
  IntVector normal;
  Rational offset;
  bool operator==(const RationalFacet &) const = default;
};

/// Full-dimensional lattice polytope with both presentations populated.
/// Vertices and facets are kept sorted.
class Polytope {
public:
  Polytope() = default;
  std::size_t dim() const { return dim_; }
  const std::vector<IntVector> &vertices() const { return vertices_; }
  const std::vector<Facet> &facets() const { return facets_; }
  bool operator==(const Polytope &o) const = default;

private:
  friend Polytope facets_from_vertices(const std::vector<IntVector> &, std::size_t);
  friend Polytope dilate(const Polytope &, const Integer &);
  std::size_t dim_ = 0;
  std::vector<IntVector> vertices_;
  std::vector<Facet> facets_;
};

/// Possibly lower-dimensional polytope with rational vertices. When
/// dimension() < ambient(), `equations` describe the affine hull
/// (⟨x, normal⟩ = −offset) and `facets` are taken inside it.
class RationalPolytope {
public:
  RationalPolytope() = default;
  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return dimension_; }
  bool is_full_dimensional() const { return dimension_ == ambient_; }
  const std::vector<RatVector> &vertices() const { return vertices_; }
  const std::vector<RationalFacet> &facets() const { return facets_; }
  const std::vector<RationalFacet> &equations() const { return equations_; }
  bool is_lattice() const;
  bool contains(const RatVector &x) const;
  bool operator==(const RationalPolytope &o) const { return vertices_ == o.vertices_; }

private:
  friend RationalPolytope convex_hull(const std::vector<RatVector> &, std::size_t);
  friend RationalPolytope to_rational(const Polytope &);
  std::size_t ambient_ = 0;
  std::size_t dimension_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<RationalFacet> facets_;
  std::vector<RationalFacet> equations_;
};

/// Irredundant facet presentation of conv(points). Throws if the points do
/// not affinely span R^dim.
Polytope facets_from_vertices(const std::vector<IntVector> &points, std::size_t dim);

/// Convex hull of rational points (any dimension, points nonempty).
RationalPolytope convex_hull(const std::vector<RatVector> &points, std::size_t ambient);

/// Solution set of ⟨x, normal⟩ ≥ −offset. nullopt for the empty set;
/// throws std::domain_error("not a polytope") when unbounded.
std::optional<RationalPolytope>
vertices_from_facets(const std::vector<RationalFacet> &system, std::size_t dim);

RationalPolytope to_rational(const Polytope &p);
/// Lattice polytope from a full-dimensional rational one with integral
/// vertices; nullopt otherwise.
std::optional<Polytope> as_lattice(const RationalPolytope &p);

Fan normal_fan(const Polytope &p);
Fan normal_fan(const RationalPolytope &p);

/// Every vertex cone of the normal fan is unimodular.
bool is_smooth(const Polytope &p);

Polytope dilate(const Polytope &p, const Integer &k);
/// x ↦ T x + shift with T unimodular.
Polytope transform(const Polytope &p, const IntMatrix &t, const IntVector &shift);
Polytope product(const Polytope &a, const Polytope &b);

/// k·Δ_n = conv(0, k e_1, ..., k e_n).
Polytope simplex(std::size_t n, const Integer &k = 1);

} // namespace toriclab
