#include "toriclab/adjunction.hpp"
#include "toriclab/catalog.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace toriclab;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs)
    v.emplace_back(x);
  return v;
}

/// e_0 = -(e_1 + ... + e_n), e_j the unit vectors.
IntVector e(std::size_t n, std::size_t j) {
  IntVector v(n);
  if (j == 0)
    for (auto &x : v)
      x = -1;
  else
    v[j - 1] = 1;
  return v;
}

/// Losev–Manin by explicit subdivisions with a chosen order inside each level.
Fan losev_manin_ordered(std::size_t n, bool reverse) {
  Fan f = projective_space(n);
  for (std::size_t size = 1; size + 1 <= n; ++size) {
    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask)
      if (static_cast<std::size_t>(__builtin_popcount(mask)) == size)
        masks.push_back(mask);
    if (reverse)
      std::reverse(masks.begin(), masks.end());
    for (unsigned mask : masks) {
      RaySet tau;
      for (std::size_t k = 0; k <= n; ++k)
        if (!(mask & (1u << k)))
          tau.push_back(f.ray_index(e(n, k)));
      std::sort(tau.begin(), tau.end());
      f = star_subdivision(f, tau);
    }
  }
  return f;
}

} // namespace

TEST(Catalog, ProjectiveSpace) {
  EXPECT_EQ(projective_space(1).ray_count(), 2u);
  Fan p2 = projective_space(2);
  EXPECT_EQ(p2.ray_count(), 3u);
  EXPECT_EQ(p2.max_cones().size(), 3u);
  EXPECT_NE(p2.ray_index(iv({-1, -1})), Fan::npos);
  EXPECT_EQ(projective_space(3).max_cones().size(), 4u);
}

TEST(Catalog, BundlesOverProjectiveSpace) {
  EXPECT_TRUE(smooth_fans_isomorphic(bundle_over_projective_space(1, {0, 1}), hirzebruch(1)));
  EXPECT_TRUE(smooth_fans_isomorphic(bundle_over_projective_space(1, {1, 1}),
                                     product_fan(projective_space(1), projective_space(1))));
  EXPECT_TRUE(is_smooth(bundle_over_projective_space(3, {1, 1, 2})));
  EXPECT_THROW(bundle_over_projective_space(2, {2, 1}), std::invalid_argument);
}

TEST(Catalog, Contra) {
  for (std::size_t m = 1; m <= 4; ++m) {
    auto c = contra(m);
    EXPECT_EQ(c.fan.ray_count(), m + 4);
    EXPECT_EQ(picard_number(c.fan), 3u);
    EXPECT_TRUE(is_ample(c.fan, c.polarization));
  }
  for (std::size_t m = 2; m <= 3; ++m) {
    auto c = contra(m);
    Rational mm(static_cast<unsigned long>(m));
    EXPECT_EQ(nef_value(c.fan, c.polarization), mm);
    EXPECT_EQ(spectral_value(c.fan, c.polarization), (mm + 1) / 2);
  }
}

TEST(Catalog, LosevManin) {
  for (std::size_t n = 1; n <= 4; ++n) {
    Fan f = losev_manin(n);
    EXPECT_EQ(f.ray_count(), (1u << (n + 1)) - 2);
    EXPECT_TRUE(is_smooth(f));
    EXPECT_TRUE(is_complete(f));
    EXPECT_TRUE(has_ample_class(f));
  }
  EXPECT_EQ(picard_number(losev_manin(2)), 4u);
  EXPECT_EQ(picard_number(losev_manin(3)), 11u);
  // u_α = -Σ_{j∈α} e_j for 1 ≤ |α| ≤ n-1
  const std::size_t n = 3;
  Fan f = losev_manin(n);
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size > n - 1)
      continue;
    IntVector u(n);
    for (std::size_t j = 0; j <= n; ++j)
      if (mask & (1u << j))
        u = add(u, scale(e(n, j), -1));
    EXPECT_NE(f.ray_index(u), Fan::npos);
  }
}

TEST(Catalog, LosevManinLevelOrderIndependent) {
  for (std::size_t n = 2; n <= 4; ++n) {
    EXPECT_EQ(losev_manin_ordered(n, false), losev_manin(n));
    EXPECT_EQ(losev_manin_ordered(n, true), losev_manin(n));
  }
}
