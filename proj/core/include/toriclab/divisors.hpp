#pragma once

#include "toriclab/polytope.hpp"

#include <optional>
#include <vector>

namespace toriclab {

/// Σ a_ρ D_ρ, one rational coefficient per ray of the fan it is used with.
struct TDivisor {
  RatVector coeffs;

  TDivisor() = default;
  explicit TDivisor(RatVector c) : coeffs(std::move(c)) {}
  static TDivisor from_integers(const IntVector &c) { return TDivisor(to_rational(c)); }
  /// The prime divisor D_ρ of ray i among `count` rays.
  static TDivisor prime(std::size_t count, std::size_t i);

  bool is_integral() const { return toriclab::is_integral(coeffs); }
  bool operator==(const TDivisor &) const = default;
};

TDivisor operator+(const TDivisor &a, const TDivisor &b);
TDivisor operator*(const Rational &s, const TDivisor &d);

/// div(χ^u) = Σ ⟨u, v_ρ⟩ D_ρ.
TDivisor divisor_of_character(const Fan &f, const IntVector &u);
TDivisor divisor_of_character(const Fan &f, const RatVector &u);

/// K_X = −Σ D_ρ.
TDivisor canonical_divisor(const Fan &f);

/// Columns form a lattice basis of the relations {c : Σ c_ρ v_ρ = 0}
/// (#rays × (#rays − rank of the ray matrix)). Fixed per fan; N_1 and
/// class coordinates are taken with respect to it.
IntMatrix relation_basis(const Fan &f);

/// Coordinates of [D] in Cl(X)⊗Q: the pairings of D with the relation
/// basis. Two divisors have equal classes iff they differ by div(χ^u).
RatVector class_of(const Fan &f, const TDivisor &d);

/// Picard number #Σ(1) − rank of the ray matrix.
std::size_t picard_number(const Fan &f);

/// P_D = {m : ⟨m, v_ρ⟩ ≥ −a_ρ}. nullopt when empty; throws
/// std::domain_error("not a polytope") when unbounded.
std::optional<RationalPolytope> polytope_of_divisor(const Fan &f, const TDivisor &d);

/// Divisor D_P of a polytope on its normal fan: a_ρ = offset of facet ρ.
TDivisor divisor_of_polytope(const Polytope &p);

struct CartierData {
  /// u_σ per maximal cone (same order as Fan::max_cones), with
  /// ⟨u_σ, v_ρ⟩ = −a_ρ for ρ ∈ σ.
  std::vector<RatVector> local_data;
  bool is_cartier = false;
};

/// Throws std::domain_error("not Q-Cartier here") if some maximal cone's
/// system is inconsistent.
CartierData cartier_data(const Fan &f, const TDivisor &d);

} // namespace toriclab
