#pragma once

#include "toriclab/cone.hpp"

#include <limits>
#include <vector>

namespace toriclab {

/// Sorted ray indices into a fan's ray table.
using RaySet = std::vector<std::size_t>;

/// A fan given by its primitive ray table and maximal cones. A nonempty
/// vertex subspace marks a degenerate fan whose cones all contain it.
class Fan {
public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  Fan() = default;
  Fan(std::size_t rank, std::vector<IntVector> rays,
      std::vector<RaySet> max_cones, std::vector<IntVector> vertex_subspace = {});

  std::size_t rank() const { return rank_; }
  const std::vector<IntVector> &rays() const { return rays_; }
  const IntVector &ray(std::size_t i) const { return rays_[i]; }
  std::size_t ray_count() const { return rays_.size(); }
  const std::vector<RaySet> &max_cones() const { return max_cones_; }
  const std::vector<IntVector> &vertex_subspace() const { return vertex_; }
  bool is_degenerate() const { return !vertex_.empty(); }

  std::size_t ray_index(const IntVector &v) const;
  Cone cone(const RaySet &s) const;
  /// rank × #rays matrix with the rays as columns.
  IntMatrix ray_matrix() const;
  /// True iff s is the ray set of a face of some maximal cone.
  bool contains_cone(const RaySet &s) const;
  /// Ray sets of the facets of a maximal cone.
  std::vector<RaySet> cone_facets(const RaySet &s) const;

  /// Same fan with rays sorted lexicographically.
  Fan canonical() const;

  /// Equal ray sets and equal maximal cones as sets of ray vectors.
  friend bool operator==(const Fan &a, const Fan &b);

private:
  std::size_t rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<RaySet> max_cones_;
  std::vector<IntVector> vertex_;
};

struct Wall {
  RaySet rays;
  std::size_t left;  ///< index of a maximal cone containing the wall
  std::size_t right; ///< index of the other one
  auto operator<=>(const Wall &) const = default;
};

bool is_simplicial(const Fan &f);
bool is_smooth(const Fan &f);
bool is_complete(const Fan &f);

/// Walls sorted by ray set. Throws "fan not complete" on a boundary wall.
std::vector<Wall> walls(const Fan &f);

/// Subdivision at a cone τ of f; all cones containing τ must be smooth.
Fan star_subdivision(const Fan &f, const RaySet &tau);
/// Fan of the orbit closure V(τ), living in N/N_τ.
Fan star_fan(const Fan &f, const RaySet &tau);
Fan product_fan(const Fan &a, const Fan &b);

/// Lattice isomorphism test for smooth complete fans: tries every ordered
/// basis of every maximal cone of b as the image of the first maximal cone
/// of a.
bool smooth_fans_isomorphic(const Fan &a, const Fan &b);

/// Fan of the point: rank 0, one maximal cone {0}.
Fan point_fan();

} // namespace toriclab
