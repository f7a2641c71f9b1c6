#include "toriclab/intersection.hpp"

#include <algorithm>
#include <stdexcept>

namespace toriclab {

namespace {

struct WallData {
  std::vector<IntVector> wall_rays;
  std::size_t left_ray;  // ray of the left cone outside the wall
  std::size_t right_ray; // ray of the right cone outside the wall
};

std::size_t outside(const RaySet &cone, const RaySet &wall) {
  for (auto i : cone)
    if (!std::binary_search(wall.begin(), wall.end(), i))
      return i;
  throw std::logic_error("maximal cone equals its wall");
}

WallData wall_data(const Fan &f, const Wall &w) {
  const RaySet &l = f.max_cones().at(w.left);
  const RaySet &r = f.max_cones().at(w.right);
  for (const RaySet *c : {&l, &r}) {
    std::vector<IntVector> gens;
    for (auto i : *c)
      gens.push_back(f.ray(i));
    if (c->size() != f.rank() || rank(IntMatrix::from_rows(gens, f.rank())) != f.rank())
      throw std::invalid_argument("non-simplicial fan");
  }
  WallData d;
  for (auto i : w.rays)
    d.wall_rays.push_back(f.ray(i));
  d.left_ray = outside(l, w.rays);
  d.right_ray = outside(r, w.rays);
  return d;
}

Integer wall_multiplicity(const Fan &f, const RaySet &rays) {
  if (rays.empty())
    return 1;
  return multiplicity(f.cone(rays));
}

} // namespace

RelationClass curve_class(const Fan &f, const Wall &w) {
  WallData d = wall_data(f, w);
  const std::size_t n = f.rank();
  IntMatrix q = d.wall_rays.empty() ? IntMatrix::identity(n)
                                    : quotient_map(IntMatrix::from_columns(d.wall_rays, n));
  Integer ql = (q * f.ray(d.left_ray))[0];
  Integer qr = (q * f.ray(d.right_ray))[0];
  Rational cl(1, abs(ql)), cr(1, abs(qr));
  cl.canonicalize();
  cr.canonicalize();

  RelationClass out;
  out.coeffs.assign(f.ray_count(), Rational(0));
  out.coeffs[d.left_ray] = cl;
  out.coeffs[d.right_ray] = cr;
  if (!d.wall_rays.empty()) {
    RatVector target = add(scale(to_rational(f.ray(d.left_ray)), -cl),
                           scale(to_rational(f.ray(d.right_ray)), -cr));
    auto b = rat_solve(to_rational(IntMatrix::from_columns(d.wall_rays, n)), target);
    if (!b)
      throw std::logic_error("wall relation is inconsistent");
    for (std::size_t k = 0; k < w.rays.size(); ++k)
      out.coeffs[w.rays[k]] = (*b)[k];
  }
  return out;
}

Rational intersect(const TDivisor &d, const RelationClass &c) {
  if (d.coeffs.size() != c.coeffs.size())
    throw std::invalid_argument("divisor and curve live on different fans");
  return dot(d.coeffs, c.coeffs);
}

Rational intersect_by_shift(const Fan &f, const TDivisor &d, const Wall &w) {
  WallData data = wall_data(f, w);
  const RaySet &left = f.max_cones()[w.left];
  std::vector<RatVector> rows;
  RatVector rhs;
  for (auto i : left) {
    rows.push_back(to_rational(f.ray(i)));
    rhs.push_back(-d.coeffs.at(i));
  }
  auto u = rat_solve(RatMatrix::from_rows(rows, f.rank()), rhs);
  if (!u)
    throw std::logic_error("simplicial cone system is inconsistent");
  TDivisor moved = d + divisor_of_character(f, *u);
  Rational ratio(wall_multiplicity(f, w.rays),
                 multiplicity(f.cone(f.max_cones()[w.right])));
  ratio.canonicalize();
  return moved.coeffs[data.right_ray] * ratio;
}

RatVector n1_coordinates(const Fan &f, const RelationClass &c) {
  if (c.coeffs.size() != f.ray_count())
    throw std::invalid_argument("relation has wrong length");
  IntMatrix k = relation_basis(f);
  if (k.cols() == 0)
    return {};
  auto w = rat_solve(to_rational(k), c.coeffs);
  if (!w)
    throw std::invalid_argument("coefficients are not a relation among the rays");
  return *w;
}

RelationClass relation_from_n1(const Fan &f, const RatVector &w) {
  return RelationClass{to_rational(relation_basis(f)) * w};
}

Cone mori_cone(const Fan &f) {
  const std::size_t rho = picard_number(f);
  std::vector<IntVector> gens;
  for (const auto &w : walls(f)) {
    RatVector c = n1_coordinates(f, curve_class(f, w));
    if (!is_zero(c))
      gens.push_back(primitive(c));
  }
  return Cone(rho, gens);
}

Cone nef_cone(const Fan &f) { return dual_cone(mori_cone(f)); }

Cone eff_cone(const Fan &f) {
  IntMatrix k = relation_basis(f);
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < k.rows(); ++i)
    if (!is_zero(k.row(i)))
      gens.push_back(k.row(i));
  return Cone(k.cols(), gens);
}

Cone mov_cone(const Fan &f) { return dual_cone(eff_cone(f)); }

bool is_nef(const Fan &f, const TDivisor &d) {
  for (const auto &w : walls(f))
    if (intersect(d, curve_class(f, w)) < 0)
      return false;
  return true;
}

bool is_ample(const Fan &f, const TDivisor &d) {
  for (const auto &w : walls(f))
    if (intersect(d, curve_class(f, w)) <= 0)
      return false;
  return true;
}

bool has_ample_class(const Fan &f) {
  // an ample class pairs to at least 1 with every Mori generator
  const Cone mori = mori_cone(f);
  if (mori.dimension() != mori.ambient)
    return false;
  return feasible_point(to_rational(IntMatrix::from_rows(mori.generators, mori.ambient)),
                        RatVector(mori.generators.size(), Rational(1)))
      .has_value();
}

} // namespace toriclab
