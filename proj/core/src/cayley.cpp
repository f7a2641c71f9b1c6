#include "toriclab/cayley.hpp"
#include "toriclab/catalog.hpp"

#include <stdexcept>

namespace toriclab {

Polytope build_cayley(const CayleySpec &spec) {
  if (spec.factors.empty())
    throw std::invalid_argument("Cayley polytope needs at least one factor");
  if (spec.s <= 0)
    throw std::invalid_argument("Cayley order must be positive");
  const std::size_t m = spec.factors.front().dim();
  const std::size_t k = spec.factors.size() - 1;
  std::vector<IntVector> pts;
  for (std::size_t j = 0; j <= k; ++j) {
    const Polytope &p = spec.factors[j];
    if (p.dim() != m)
      throw std::invalid_argument("Cayley factors have different dimensions");
    for (const auto &v : p.vertices()) {
      IntVector x = v;
      x.resize(m + k);
      if (j > 0)
        x[m + j - 1] = spec.s;
      pts.push_back(x);
    }
  }
  return facets_from_vertices(pts, m + k);
}

std::vector<std::size_t> bundle_fiber_rays(const BundleSpec &spec) {
  std::vector<std::size_t> out;
  const std::size_t k = spec.divisors.empty() ? 0 : spec.divisors.size() - 1;
  if (k == 0)
    return out;
  for (std::size_t j = 0; j <= k; ++j)
    out.push_back(spec.base.ray_count() + j);
  return out;
}

Fan bundle_fan(const BundleSpec &spec) {
  if (spec.divisors.empty())
    throw std::invalid_argument("bundle needs at least one divisor");
  const Fan &base = spec.base;
  const std::size_t m = base.rank();
  const std::size_t k = spec.divisors.size() - 1;
  for (const auto &d : spec.divisors)
    if (d.coeffs.size() != base.ray_count() || !d.is_integral())
      throw std::invalid_argument("bundle divisors must be integral divisors on the base");
  if (k == 0)
    return base;

  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < base.ray_count(); ++i) {
    IntVector r = base.ray(i);
    r.resize(m + k);
    for (std::size_t j = 1; j <= k; ++j) {
      Rational diff = spec.divisors[j].coeffs[i] - spec.divisors[0].coeffs[i];
      r[m + j - 1] = diff.get_num();
    }
    rays.push_back(r);
  }
  IntVector e0(m + k);
  for (std::size_t j = 1; j <= k; ++j) {
    IntVector e(m + k);
    e[m + j - 1] = 1;
    rays.push_back(e);
    e0[m + j - 1] = -1;
  }
  rays.push_back(e0);

  // fiber ray indices: e_1..e_k then e_0
  std::vector<std::size_t> fiber;
  for (std::size_t j = 0; j <= k; ++j)
    fiber.push_back(base.ray_count() + j);
  std::vector<RaySet> cones;
  for (const auto &c : base.max_cones())
    for (std::size_t skip = 0; skip <= k; ++skip) {
      RaySet n = c;
      for (std::size_t j = 0; j <= k; ++j)
        if (j != skip)
          n.push_back(fiber[j]);
      cones.push_back(n);
    }
  return Fan(m + k, rays, cones);
}

TDivisor pullback_to_bundle(const BundleSpec &spec, const TDivisor &d) {
  if (d.coeffs.size() != spec.base.ray_count())
    throw std::invalid_argument("divisor does not live on the base");
  RatVector c = d.coeffs;
  c.resize(spec.base.ray_count() + bundle_fiber_rays(spec).size());
  return TDivisor(c);
}

CayleySmoothness cayley_smooth_check(const CayleySpec &spec) {
  if (spec.factors.empty())
    throw std::invalid_argument("Cayley polytope needs at least one factor");
  const Polytope &p0 = spec.factors.front();
  Fan base = normal_fan(p0);
  for (const auto &p : spec.factors)
    if (p.dim() != p0.dim() || normal_fan(p) != base)
      throw std::invalid_argument("factors have different normal fans");

  CayleySmoothness out;
  out.base_smooth = is_smooth(p0);
  for (std::size_t j = 1; j < spec.factors.size(); ++j)
    for (std::size_t i = 0; i < p0.facets().size(); ++i) {
      Integer diff = spec.factors[j].facets()[i].offset - p0.facets()[i].offset;
      if (diff % spec.s != 0)
        out.indivisible.emplace_back(i, j);
    }
  out.smooth = out.base_smooth && out.indivisible.empty();
  if (out.smooth) {
    BundleSpec b{base, {}};
    for (const auto &p : spec.factors) {
      RatVector c;
      for (std::size_t i = 0; i < p0.facets().size(); ++i) {
        Integer diff = p.facets()[i].offset - p0.facets()[i].offset;
        c.push_back(Rational(diff / spec.s + p0.facets()[i].offset));
      }
      b.divisors.emplace_back(c);
    }
    out.bundle = b;
  }
  return out;
}

ClosedForm closed_form_invariants(const Integer &s, std::size_t m, const std::vector<Integer> &d) {
  if (d.empty() || s <= 0)
    throw std::invalid_argument("closed form needs s > 0 and at least one degree");
  if (d.front() <= 0)
    throw std::invalid_argument("degrees must be positive");
  for (std::size_t j = 1; j < d.size(); ++j) {
    if (d[j] < d[j - 1])
      throw std::invalid_argument("degrees must be nondecreasing");
    if ((d[j] - d[0]) % s != 0)
      throw std::invalid_argument("s must divide d_j - d_0");
  }
  const std::size_t k = d.size() - 1;
  Integer total = 0;
  for (const auto &x : d)
    total += x;
  Rational base(Integer(static_cast<unsigned long>(k + 1)), s);
  base.canonicalize();
  Rational excess = Rational(Integer(static_cast<unsigned long>(m + 1))) - Rational(total) / Rational(s);
  ClosedForm out;
  out.tau = std::max(base, Rational(base + excess / Rational(d.front())));
  out.mu = std::max(base, Rational(base + excess / Rational(d.back())));
  out.tau.canonicalize();
  out.mu.canonicalize();
  out.q_normal = out.tau == out.mu;
  return out;
}

TDivisor bundle_polarization(const Integer &s, const Integer &a, std::size_t m,
                             const std::vector<Integer> &twists) {
  if (twists.empty())
    throw std::invalid_argument("bundle needs at least one twist");
  if (s <= 0 || a <= -s * twists.front())
    throw std::invalid_argument("polarization is not ample");
  Fan f = bundle_over_projective_space(m, twists);
  RatVector c(f.ray_count());
  // base ray e_0 of P^m sits at index m; the fiber ray e_0 is last
  c[m] = Rational(s * twists.front() + a);
  if (twists.size() > 1)
    c.back() = Rational(s);
  return TDivisor(c);
}

Polytope ample_on_bundle(const Integer &s, const Integer &a, std::size_t m,
                         const std::vector<Integer> &twists) {
  Fan f = bundle_over_projective_space(m, twists);
  auto p = polytope_of_divisor(f, bundle_polarization(s, a, m, twists));
  if (!p)
    throw std::logic_error("ample divisor has an empty polytope");
  auto lattice = as_lattice(*p);
  if (!lattice)
    throw std::logic_error("polytope of a Cartier ample divisor is not a lattice polytope");
  return *lattice;
}

std::string to_string(CaseLabel c) {
  switch (c) {
  case CaseLabel::two_simplex:
    return "2Delta_n";
  case CaseLabel::three_simplex_3:
    return "3Delta_3";
  case CaseLabel::line_segment:
    return "sDelta_1";
  case CaseLabel::cayley_1:
    return "Cayley^1";
  case CaseLabel::cayley_2_odd:
    return "Cayley^2-odd";
  case CaseLabel::not_classified:
    return "not-classified";
  }
  return "not-classified";
}

} // namespace toriclab
