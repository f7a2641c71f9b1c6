#pragma once

#include "toriclab/intersection.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace toriclab {

/// An extremal ray of the Mori cone with the first wall (in canonical wall
/// order) whose curve spans it.
struct ExtremalRay {
  IntVector n1;            ///< primitive N_1 coordinates
  Wall wall;
  RelationClass relation;  ///< curve_class of the wall
  Rational k_degree;       ///< K · relation
};

/// Extremal rays of the Mori cone, sorted by K-degree and then by n1.
std::vector<ExtremalRay> extremal_rays(const Fan &f);

enum class ContractionKind { fiber, divisorial, small };
std::string to_string(ContractionKind k);

struct ContractionResult {
  ContractionKind kind = ContractionKind::fiber;
  std::size_t alpha = 0; ///< negative coefficients
  std::size_t beta = 0;  ///< negative plus zero coefficients
  RaySet negative, zero, positive;
  /// Divisorial: Σ with the negative ray removed. Small: the non-simplicial
  /// fan Σ*. Fiber: Σ* projected to N/(U ∩ N).
  Fan target;
  Cone u_cone;
  RelationClass contracted_relation;
  /// Fiber kind: fan on the positive rays inside U ∩ N.
  std::optional<Fan> general_fiber;
};

/// Relation blocks of one wall; (α, β, U) do not depend on the wall.
ContractionResult wall_blocks(const Fan &f, const Wall &w);

/// Throws std::invalid_argument("not an extremal ray") unless r is an
/// extreme ray of mori_cone(f), and "non-simplicial fan" / "fan not
/// complete" on bad input.
ContractionResult contract(const Fan &f, const IntVector &r);

/// Throws std::invalid_argument("not a small contraction") unless the
/// contraction of r is small.
Fan flip(const Fan &f, const IntVector &r);

/// Fan Σ_0 of a positive relation: its support rays written in a lattice
/// basis of span ∩ N, with maximal cones omitting one ray each.
Fan relation_fan(const Fan &f, const RaySet &support);

/// A relation on the rays of `from` moved to `to` by matching ray vectors;
/// rays of `to` missing from `from` get 0.
RelationClass transport_relation(const Fan &from, const Fan &to, const RelationClass &c);

enum class StepKind { divisorial, flip, fiber_end, nef_end };
std::string to_string(StepKind k);

struct MMPStep {
  Fan before;
  StepKind kind = StepKind::nef_end;
  std::optional<IntVector> ray;
  RelationClass relation;
  /// Divisorial/flip: the new fan. Fiber end: the base. Nef end: before.
  Fan after;
  std::optional<Fan> general_fiber;
};

struct MMPTrace {
  std::vector<MMPStep> steps;
};

/// Chooses among the K-negative extremal rays (nonempty, in extremal_rays
/// order); returns N_1 coordinates.
using RayPolicy = std::function<IntVector(const Fan &, const std::vector<ExtremalRay> &)>;

/// Most K-negative class, then lexicographically smallest.
IntVector default_policy(const Fan &f, const std::vector<ExtremalRay> &candidates);

struct MMPOptions {
  RayPolicy policy = default_policy;
  bool audit = false; ///< re-check completeness and simpliciality per step
  std::size_t max_steps = 1000;
};

MMPTrace run_mmp(const Fan &f, const MMPOptions &options = {});

/// One leaf of the branching MMP.
struct MMPEnd {
  StepKind kind = StepKind::nef_end;
  Fan final_fan; ///< canonical
  std::optional<Fan> base;
  std::optional<Fan> general_fiber;
  /// Fiber ends: the fiber relation on the rays of the input fan.
  RelationClass fiber_relation;
  std::size_t steps = 0; ///< length of the shortest run reaching it
  std::size_t runs = 0;  ///< number of runs reaching it
};

struct MMPCensus {
  std::vector<MMPEnd> ends; ///< distinct ends, sorted
  std::size_t runs = 0;     ///< all runs
  /// Runs terminating with a Mori fiber space.
  std::size_t fiber_ends() const;
  /// Distinct fiber relations among the fiber ends.
  std::size_t distinct_fibers() const;
};

/// Explores every K-negative choice; with allow_k_trivial also K-trivial
/// rays, never revisiting a fan on the current run. Branches from the input
/// fan run in parallel.
MMPCensus mmp_census(const Fan &f, bool allow_k_trivial = false);

struct MinimalRelation {
  RaySet support;
  RatVector coeffs; ///< positive, first entry 1
  bool operator==(const MinimalRelation &) const = default;
};

/// Positive circuits of the ray configuration.
std::vector<MinimalRelation> minimal_relations(const Fan &f);

RelationClass to_relation(const Fan &f, const MinimalRelation &m);

struct MovRay {
  MinimalRelation relation;
  IntVector n1; ///< primitive N_1 coordinates
  Fan fiber;
};

std::vector<MovRay> mov_extremal_rays(const Fan &f);

/// Per ray: ρ(X) − 1 minimal relations with independent classes avoid it.
std::vector<bool> eff_extremal_flags(const Fan &f);

/// Per ray: [D_ρ] spans an extreme ray of eff_cone.
std::vector<bool> eff_extremal_by_cone(const Fan &f);

} // namespace toriclab
