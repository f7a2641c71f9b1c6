#pragma once

#include "toriclab/adjunction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toriclab {

/// Order-s Cayley polytope of factors P_0..P_k in R^m.
struct CayleySpec {
  Integer s = 1;
  std::vector<Polytope> factors;
};

/// Base fan plus divisors D_0..D_k on it; the fan of P(O(D_0)⊕...⊕O(D_k)).
struct BundleSpec {
  Fan base;
  std::vector<TDivisor> divisors;
};

/// conv(P_0 × {0}, P_1 × {s e_1}, ..., P_k × {s e_k}) in R^{m+k}.
Polytope build_cayley(const CayleySpec &spec);

/// Rays: lifted base rays (η_i, a_i1 − a_i0, ..., a_ik − a_i0), then the
/// fiber rays e_1..e_k and e_0 = −Σ e_j. Cones: lifted base cones joined
/// with all but one fiber ray.
Fan bundle_fan(const BundleSpec &spec);

/// Indices of the fiber rays e_1..e_k, e_0 inside bundle_fan(spec).
std::vector<std::size_t> bundle_fiber_rays(const BundleSpec &spec);

/// π*D: the base coefficients placed on the lifted base rays.
TDivisor pullback_to_bundle(const BundleSpec &spec, const TDivisor &d);

struct CayleySmoothness {
  bool smooth = false;
  bool base_smooth = false;
  /// (facet i, factor j) pairs where s ∤ a_ij − a_i0.
  std::vector<std::pair<std::size_t, std::size_t>> indivisible;
  /// On success: the bundle with E_j = (D_j − D_0)/s + D_0.
  std::optional<BundleSpec> bundle;
};

/// Smoothness criterion for strict specs (all factors share a normal
/// fan). Throws std::invalid_argument("factors have different normal
/// fans") otherwise.
CayleySmoothness cayley_smooth_check(const CayleySpec &spec);

struct ClosedForm {
  Rational tau;
  Rational mu;
  bool q_normal = false;
};

/// τ and μ of Cayley^s(d_0Δ_m, ..., d_kΔ_m). Requires
/// 0 < d_0 ≤ ... ≤ d_k and s | d_j − d_0.
ClosedForm closed_form_invariants(const Integer &s, std::size_t m, const std::vector<Integer> &d);

/// Polytope of sξ + aπ*H on P_{P^m}(O(a_0)⊕...⊕O(a_k)), with
/// ξ = V(e_0) + π*D_0. Requires a > −s a_0.
Polytope ample_on_bundle(const Integer &s, const Integer &a, std::size_t m,
                         const std::vector<Integer> &twists);

/// The divisor sξ + aπ*H itself on bundle_over_projective_space.
TDivisor bundle_polarization(const Integer &s, const Integer &a, std::size_t m,
                             const std::vector<Integer> &twists);

enum class CaseLabel {
  two_simplex,     ///< 2Δ_n
  three_simplex_3, ///< 3Δ_3
  line_segment,    ///< sΔ_1
  cayley_1,        ///< Cayley^1(P_0..P_k), k = codeg − 1
  cayley_2_odd,    ///< Cayley^2(d_0Δ_1, ..., d_kΔ_1), n odd, d_j ≡ d_0 mod 2
  not_classified,
};

std::string to_string(CaseLabel c);

struct ClassificationResult {
  CaseLabel label = CaseLabel::not_classified;
  Integer codegree;
  Rational nef_value;
  Integer k;                   ///< number of Cayley factors minus one
  Integer s;                   ///< order, or the dilation factor
  std::vector<Polytope> factors; ///< Cayley factors, translated to the origin
  std::vector<Integer> degrees;  ///< d_j for the Cayley^2 case
  std::string fano_model;        ///< set when K + τL = 0
  std::vector<std::string> notes;
};

/// Thrown when a hypothesis of the classification fails. `hypothesis` is
/// "smooth", "q-normal" or "codegree".
struct HypothesisError : std::domain_error {
  std::string hypothesis;
  HypothesisError(std::string which, const std::string &what)
      : std::domain_error(what), hypothesis(std::move(which)) {}
};

/// Classifies smooth Q-normal P with codeg(P) ≥ (n+1)/2.
ClassificationResult classify(const Polytope &p);

} // namespace toriclab
