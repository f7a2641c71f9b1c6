#pragma once

#include "toriclab/intersection.hpp"

#include <map>
#include <vector>

namespace toriclab {

/// Multiset of ray indices, sorted: the monomial Π x_ρ.
using Monomial = std::vector<std::size_t>;

/// Cohomology ring of a smooth complete toric variety, presented as the
/// polynomial ring on ray variables modulo Stanley–Reisner and linear
/// relations. Each degree has a monomial basis.
class ChowRing {
public:
  ChowRing() = default;
  /// Throws std::invalid_argument("non-smooth fan") / "fan not complete".
  explicit ChowRing(const Fan &f);

  const Fan &fan() const { return fan_; }
  std::size_t dim() const { return fan_.rank(); }
  std::size_t rank(std::size_t degree) const { return degrees_[degree].basis.size(); }
  std::vector<std::size_t> ranks() const;
  const std::vector<Monomial> &basis(std::size_t degree) const { return degrees_[degree].basis; }

  /// Coordinates of a monomial in the basis of its degree.
  RatVector normal_form(const Monomial &m) const;
  RatVector multiply(std::size_t da, const RatVector &a, std::size_t db, const RatVector &b) const;
  /// Degree-n functional with every maximal-cone monomial mapped to 1.
  Rational evaluate(const RatVector &top) const;
  /// rank(k) × rank(n−k) matrix of the pairing A^k × A^{n−k} → Q.
  RatMatrix pairing(std::size_t k) const;

private:
  struct Degree {
    std::map<Monomial, std::size_t> column; ///< cone-supported monomials
    std::vector<RatVector> rows;            ///< reduced relations
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> free;          ///< basis columns
    std::vector<Monomial> basis;
  };
  Fan fan_;
  std::vector<Degree> degrees_;
  Rational top_scale_;

  RatVector reduce(std::size_t degree, RatVector v) const;
};

inline ChowRing chow_ring(const Fan &f) { return ChowRing(f); }

/// Class of a k-dimensional cycle, in the basis of A^{n−k}.
struct CycleClass {
  std::size_t dimension = 0;
  RatVector coords;
  bool operator==(const CycleClass &) const = default;
};

/// [V(σ)] for a cone σ of the fan; throws std::invalid_argument otherwise.
CycleClass cycle_class(const ChowRing &ring, const RaySet &sigma);

/// Cone of k-cycles generated by the orbit closures of dimension k, in the
/// coordinates of A^{n−k}.
Cone ne_k_cone(const ChowRing &ring, std::size_t k);

/// D_ρ · C for every ray: the relation of a curve class.
RelationClass curve_relation(const ChowRing &ring, const CycleClass &curve);

/// Divisor classes pairing nonnegatively with every generator of ne_1, in
/// the coordinates of A^1.
Cone nef_divisor_cone(const ChowRing &ring);

/// The divisor Σ a_b D_b over the degree-1 basis rays.
TDivisor divisor_from_class(const ChowRing &ring, const RatVector &coords);

} // namespace toriclab
