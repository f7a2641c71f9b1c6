#include "toriclab/catalog.hpp"
#include "toriclab/cayley.hpp"

#include <stdexcept>

namespace toriclab {

namespace {

void choose(std::size_t n, std::size_t k, std::size_t start, RaySet &cur,
            std::vector<RaySet> &out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<RaySet> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<RaySet> out;
  RaySet cur;
  choose(n, k, 0, cur, out);
  return out;
}

} // namespace

Fan projective_space(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("projective space needs n >= 1");
  std::vector<IntVector> rays;
  IntVector e0(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    rays.push_back(e);
    e0[i] = -1;
  }
  rays.push_back(e0);
  return Fan(n, rays, subsets_of_size(n + 1, n));
}

Fan bundle_over_projective_space(std::size_t m, const std::vector<Integer> &twists) {
  if (twists.empty())
    throw std::invalid_argument("bundle needs at least one twist");
  if (twists.front() < 0)
    throw std::invalid_argument("twists must be nonnegative");
  for (std::size_t j = 1; j < twists.size(); ++j)
    if (twists[j] < twists[j - 1])
      throw std::invalid_argument("twists must be nondecreasing");
  Fan base = projective_space(m);
  BundleSpec spec{base, {}};
  for (const auto &a : twists) {
    RatVector c(base.ray_count());
    c[m] = Rational(a);
    spec.divisors.emplace_back(c);
  }
  return bundle_fan(spec);
}

Fan hirzebruch(const Integer &a) {
  IntVector e1{1, 0}, e2{0, 1}, u{-1, a}, d{0, -1};
  return Fan(2, {e1, e2, u, d}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

ContraExample contra(std::size_t m) {
  Fan p1(1, {IntVector{1}, IntVector{-1}}, {{0}, {1}});
  Fan prod = product_fan(projective_space(m), p1);
  const std::size_t e = m + 1;
  Fan blown = star_subdivision(prod, {0, e});
  ContraExample out;
  out.d1 = 0;
  out.de = e;
  out.e = blown.ray_count() - 1;
  RatVector c(blown.ray_count());
  c[out.d1] = 2;
  c[out.de] = 2;
  c[out.e] = 3;
  out.fan = blown;
  out.polarization = TDivisor(c);
  return out;
}

Fan losev_manin(std::size_t n) {
  Fan f = projective_space(n);
  // index of e_k (k = 0..n) in the P^n ray table
  auto ray_of = [n](std::size_t k) { return k == 0 ? n : k - 1; };
  for (std::size_t level = 1; level + 1 <= n; ++level)
    for (const auto &alpha : subsets_of_size(n + 1, level)) {
      RaySet center;
      for (std::size_t k = 0; k <= n; ++k)
        if (!std::binary_search(alpha.begin(), alpha.end(), k))
          center.push_back(ray_of(k));
      std::sort(center.begin(), center.end());
      f = star_subdivision(f, center);
    }
  return f;
}

} // namespace toriclab
