#pragma once

#include "toriclab/intersection.hpp"
#include "toriclab/latticepoints.hpp"

#include <optional>

namespace toriclab {

struct AdjunctionReport {
  Rational sigma;      ///< last t with P^(t) nonempty
  Rational lambda;     ///< last t with the normal fan of P^(t) unchanged
  Rational q_codegree; ///< 1 / sigma
  Rational nef_value;  ///< 1 / lambda
  bool is_q_normal = false;
  Integer codegree;
  /// ⌈q_codegree⌉ ≤ codegree, with equality when Q-normal.
  bool ceil_check = false;
  /// The normal fan is unchanged just below lambda and changes just above.
  bool lambda_verified = false;
};

/// P^(t) = {x : ⟨x, η_F⟩ ≥ −a_F + t}; nullopt when empty.
std::optional<RationalPolytope> adjoint_polytope(const Polytope &p, const Rational &t);

Rational sigma_value(const Polytope &p);
Rational q_codegree(const Polytope &p);

/// Nef value τ(L) of the polarized pair: the largest wall ratio
/// (−K·C)/(L·C). Needs an ample divisor on a complete simplicial fan.
Rational nef_value(const Fan &f, const TDivisor &l);
/// τ of the polytope's polarized toric variety. Throws
/// std::domain_error("Q-Gorenstein check unsupported") when the normal fan
/// is not simplicial.
Rational nef_value(const Polytope &p);
Rational lambda_value(const Polytope &p);

/// Checks that Σ_{P^(t)} = Σ_P at t = λ(1−ε) and differs at t = λ(1+ε),
/// with ε = 1 / (2 · den(λ) · #walls).
bool verify_lambda(const Polytope &p, const Rational &lambda);

/// μ(L) = min{t ≥ 0 : K + tL pseudo-effective}. Throws
/// std::invalid_argument("divisor is not ample") for non-ample L.
Rational spectral_value(const Fan &f, const TDivisor &l);

bool is_q_normal(const Polytope &p);

/// min{k : (kP)^(1) contains a lattice point}.
Integer codegree_via_adjoint(const Polytope &p);
/// min{k : (kP)^(1) nonempty}.
Integer first_nonempty_adjoint_dilation(const Polytope &p);

AdjunctionReport adjunction_report(const Polytope &p);

} // namespace toriclab
