#include "oracles.hpp"
#include "toriclab/polytope.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace toriclab;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs)
    v.emplace_back(x);
  return v;
}

RatVector rv(std::initializer_list<Rational> xs) { return RatVector(xs); }

std::vector<oracle::HalfSpace> as_halfspaces(const std::vector<Facet> &fs) {
  std::vector<oracle::HalfSpace> out;
  for (const auto &f : fs)
    out.push_back({f.normal, Rational(f.offset)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::HalfSpace> as_halfspaces(const std::vector<RationalFacet> &fs) {
  std::vector<oracle::HalfSpace> out;
  for (const auto &f : fs)
    out.push_back({f.normal, f.offset});
  std::sort(out.begin(), out.end());
  return out;
}

Fan p2_fan() {
  return Fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
}

} // namespace

TEST(Cone, DualSpecExample) {
  Cone c(2, {iv({2, -1}), iv({0, 1})});
  Cone d = dual_cone(c);
  std::vector<IntVector> expected{iv({1, 0}), iv({1, 2})};
  EXPECT_EQ(d.generators, expected);
}

TEST(Cone, DualOfHalfLine) {
  Cone d = dual_cone(Cone(2, {iv({1, 0})}));
  // e_1 plus ±e_2
  EXPECT_TRUE(d.contains(rv({0, 5})));
  EXPECT_TRUE(d.contains(rv({0, -5})));
  EXPECT_TRUE(d.contains(rv({1, 0})));
  EXPECT_FALSE(d.contains(rv({-1, 0})));
  EXPECT_FALSE(d.is_strongly_convex());
}

TEST(Cone, DoubleDualIsIdentity) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 40; ++t) {
    std::vector<IntVector> gens;
    for (int k = 0; k < 4; ++k) {
      IntVector v{d(rng), d(rng), d(rng)};
      if (!is_zero(v))
        gens.push_back(v);
    }
    if (gens.empty())
      continue;
    Cone c(3, gens);
    EXPECT_EQ(dual_cone(dual_cone(c)), c);
  }
}

TEST(Cone, DualContainmentMatchesPairings) {
  // u is in the dual iff it pairs nonnegatively with every generator.
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 20; ++t) {
    std::vector<IntVector> gens;
    for (int k = 0; k < 3; ++k) {
      IntVector v{d(rng), d(rng), d(rng)};
      if (!is_zero(v))
        gens.push_back(v);
    }
    if (gens.empty())
      continue;
    Cone c(3, gens);
    Cone dual = dual_cone(c);
    for (const auto &u : oracle::box_points(iv({-2, -2, -2}), iv({2, 2, 2}),
                                            [](const IntVector &) { return true; })) {
      bool expected = true;
      for (const auto &g : gens)
        if (dot(g, u) < 0)
          expected = false;
      EXPECT_EQ(dual.contains(to_rational(u)), expected);
    }
  }
}

TEST(Cone, Multiplicity) {
  EXPECT_EQ(multiplicity(Cone(3, {iv({1, 1, 0}), iv({1, -1, 0})})), 2);
  EXPECT_EQ(multiplicity(Cone(2, {iv({1, 0}), iv({0, 1})})), 1);
  EXPECT_EQ(multiplicity(Cone(2, {iv({1, 0}), iv({1, 3})})), 3);
  EXPECT_THROW(multiplicity(Cone(2, {iv({1, 0}), iv({0, 1}), iv({1, 1})})),
               std::invalid_argument);
}

TEST(Cone, RaysOfHRep) {
  // x ≥ 0, y ≥ 0, z = 0 in R^3
  ConeVRep v = rays_of(3, ConeHRep{{iv({1, 0, 0}), iv({0, 1, 0})}, {iv({0, 0, 1})}});
  std::vector<IntVector> expected{iv({0, 1, 0}), iv({1, 0, 0})};
  EXPECT_EQ(v.rays, expected);
  EXPECT_TRUE(v.lineality.empty());

  ConeVRep half = rays_of(2, ConeHRep{{iv({1, 0})}, {}});
  ASSERT_EQ(half.rays.size(), 1u);
  EXPECT_EQ(half.rays[0], iv({1, 0}));
  ASSERT_EQ(half.lineality.size(), 1u);
}

TEST(Polytope, FacetsSpecExample) {
  Polytope p = facets_from_vertices({iv({0, 0}), iv({1, 1}), iv({0, 3})}, 2);
  std::vector<Facet> expected{{iv({-2, -1}), 3}, {iv({-1, 1}), 0}, {iv({1, 0}), 0}};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(p.facets(), expected);
  EXPECT_EQ(p.vertices().size(), 3u);
}

TEST(Polytope, FacetsMatchSubsetOracle) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + t % 2;
    std::vector<IntVector> pts;
    for (int k = 0; k < 7; ++k) {
      IntVector p(n);
      for (auto &x : p)
        x = d(rng);
      pts.push_back(p);
    }
    std::vector<RatVector> rp;
    for (const auto &p : pts)
      rp.push_back(to_rational(p));
    auto expected = oracle::facets_by_subsets(rp, n);
    if (expected.size() < n + 1)
      continue; // degenerate sample
    Polytope p = facets_from_vertices(pts, n);
    EXPECT_EQ(as_halfspaces(p.facets()), expected);

    auto verts = oracle::vertices_by_subsets(expected, n);
    std::vector<RatVector> got;
    for (const auto &v : p.vertices())
      got.push_back(to_rational(v));
    EXPECT_EQ(got, verts);
  }
}

TEST(Polytope, VerticesFromFacetsRoundTrip) {
  Polytope cube = product(product(simplex(1), simplex(1)), simplex(1));
  auto back = vertices_from_facets(to_rational(cube).facets(), 3);
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, to_rational(cube));
  EXPECT_EQ(back->vertices().size(), 8u);
}

TEST(Polytope, AdjointSpecExample) {
  // 2·conv((0,0),(1,1),(0,3)) shrunk by one lattice unit
  Polytope p = dilate(facets_from_vertices({iv({0, 0}), iv({1, 1}), iv({0, 3})}, 2), 2);
  std::vector<RationalFacet> moved;
  for (const auto &f : p.facets())
    moved.push_back({f.normal, Rational(f.offset) - 1});
  auto q = vertices_from_facets(moved, 2);
  ASSERT_TRUE(q);
  std::vector<RatVector> expected{rv({1, 2}), rv({1, 3}), rv({Rational(4, 3), Rational(7, 3)})};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(q->vertices(), expected);
  EXPECT_FALSE(q->is_lattice());
}

TEST(Polytope, EmptyAndUnbounded) {
  std::vector<RationalFacet> empty{{iv({1}), Rational(-2)}, {iv({-1}), Rational(1)}};
  EXPECT_FALSE(vertices_from_facets(empty, 1));
  std::vector<RationalFacet> ray{{iv({1}), Rational(0)}};
  EXPECT_THROW(vertices_from_facets(ray, 1), std::domain_error);
}

TEST(Polytope, LowerDimensionalHull) {
  RationalPolytope seg = convex_hull({rv({0, 0}), rv({2, 2}), rv({1, 1})}, 2);
  EXPECT_EQ(seg.dimension(), 1u);
  EXPECT_EQ(seg.vertices().size(), 2u);
  EXPECT_EQ(seg.equations().size(), 1u);
  EXPECT_TRUE(seg.contains(rv({Rational(1, 2), Rational(1, 2)})));
  EXPECT_FALSE(seg.contains(rv({1, 0})));

  RationalPolytope pt = convex_hull({rv({1, 2})}, 2);
  EXPECT_EQ(pt.dimension(), 0u);
  EXPECT_EQ(pt.vertices().size(), 1u);

  EXPECT_THROW(facets_from_vertices({iv({0, 0}), iv({1, 1})}, 2), std::invalid_argument);
}

TEST(Polytope, TransformPreservesCombinatorics) {
  std::mt19937 rng(23);
  Polytope p = facets_from_vertices({iv({0, 0, 0}), iv({2, 0, 0}), iv({0, 1, 0}),
                                     iv({0, 0, 1}), iv({1, 1, 1})},
                                    3);
  for (int t = 0; t < 10; ++t) {
    IntMatrix u = oracle::random_unimodular(3, rng, 8);
    Polytope q = transform(p, u, iv({1, -2, 3}));
    EXPECT_EQ(q.vertices().size(), p.vertices().size());
    EXPECT_EQ(q.facets().size(), p.facets().size());
    EXPECT_EQ(is_smooth(q), is_smooth(p));
  }
}

TEST(Polytope, SmoothnessOfStandardExamples) {
  EXPECT_TRUE(is_smooth(simplex(3, 2)));
  EXPECT_TRUE(is_smooth(product(simplex(1), simplex(2))));
  // Cone over a square: four facets meet at the apex.
  Polytope pyr = facets_from_vertices(
      {iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 0}), iv({0, 0, 1})}, 3);
  EXPECT_FALSE(is_smooth(pyr));
  EXPECT_FALSE(is_smooth(facets_from_vertices({iv({0, 0}), iv({1, 1}), iv({0, 3})}, 2)));
}

TEST(Fan, NormalFanOfSimplexIsProjectiveSpace) {
  Fan f = normal_fan(simplex(2, 3));
  EXPECT_EQ(f, p2_fan());
  EXPECT_TRUE(is_complete(f));
  EXPECT_TRUE(is_smooth(f));
  EXPECT_EQ(walls(f).size(), 3u);
}

TEST(Fan, BlowupWalls) {
  Fan bl = star_subdivision(p2_fan(), {0, 1});
  EXPECT_EQ(bl.ray_count(), 4u);
  // a complete 2D fan has one wall per ray
  EXPECT_EQ(walls(bl).size(), 4u);
  EXPECT_TRUE(is_smooth(bl));
  EXPECT_TRUE(is_complete(bl));
  EXPECT_EQ(star_subdivision(p2_fan(), {0}), p2_fan());
}

TEST(Fan, FaceMembership) {
  Fan f = p2_fan();
  EXPECT_TRUE(f.contains_cone({0}));
  EXPECT_TRUE(f.contains_cone({0, 1}));
  EXPECT_TRUE(f.contains_cone({}));
  Fan square(2, {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})},
             {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_FALSE(square.contains_cone({0, 2}));
  // Non-simplicial cone: opposite corners of a square base are not a face.
  Polytope oct = facets_from_vertices({iv({1, 0, 0}), iv({-1, 0, 0}), iv({0, 1, 0}),
                                       iv({0, -1, 0}), iv({0, 0, 1}), iv({0, 0, -1})},
                                      3);
  Fan cube_fan = normal_fan(oct);
  EXPECT_FALSE(is_simplicial(cube_fan));
  EXPECT_TRUE(is_complete(cube_fan));
  EXPECT_EQ(walls(cube_fan).size(), 12u);
  const RaySet &c = cube_fan.max_cones().front();
  ASSERT_EQ(c.size(), 4u);
  std::size_t faces = 0;
  oracle::subsets(4, 2, [&](const std::vector<std::size_t> &idx) {
    if (cube_fan.contains_cone({c[idx[0]], c[idx[1]]}))
      ++faces;
  });
  EXPECT_EQ(faces, 4u);
}

TEST(Fan, IncompleteFanHasNoWalls) {
  Fan f(2, {iv({1, 0}), iv({0, 1})}, {{0, 1}});
  EXPECT_FALSE(is_complete(f));
  EXPECT_THROW(walls(f), std::invalid_argument);
}

TEST(Fan, StarFanOfRayInBlowup) {
  Fan bl = star_subdivision(p2_fan(), {0, 1});
  std::size_t e = bl.ray_index(iv({1, 1}));
  ASSERT_NE(e, Fan::npos);
  Fan s = star_fan(bl, {e});
  EXPECT_EQ(s.rank(), 1u);
  EXPECT_EQ(s.ray_count(), 2u);
  EXPECT_TRUE(is_complete(s));
}

TEST(Fan, ProductOfFans) {
  Fan p1(1, {iv({1}), iv({-1})}, {{0}, {1}});
  Fan f = product_fan(p1, p1);
  EXPECT_EQ(f, normal_fan(product(simplex(1), simplex(1))));
  EXPECT_EQ(f.max_cones().size(), 4u);
}

TEST(Fan, RejectsBadInput) {
  EXPECT_THROW(Fan(2, {iv({2, 0})}, {{0}}), std::invalid_argument);
  EXPECT_THROW(Fan(2, {iv({1, 0}), iv({1, 0})}, {{0}}), std::invalid_argument);
  EXPECT_THROW(Fan(2, {iv({1, 0})}, {{3}}), std::invalid_argument);
  EXPECT_THROW(star_subdivision(p2_fan(), {0, 1, 2}), std::invalid_argument);
}
