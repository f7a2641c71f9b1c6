#include "toriclab/adjunction.hpp"

#include <stdexcept>

namespace toriclab {

namespace {

Rational inverse_of(const Rational &q) {
  if (q == 0)
    throw std::domain_error("division by zero");
  Rational r = 1 / q;
  r.canonicalize();
  return r;
}

} // namespace

std::optional<RationalPolytope> adjoint_polytope(const Polytope &p, const Rational &t) {
  if (t < 0)
    throw std::invalid_argument("adjoint parameter must be nonnegative");
  std::vector<RationalFacet> moved;
  for (const auto &f : p.facets())
    moved.push_back(RationalFacet{f.normal, Rational(f.offset) - t});
  return vertices_from_facets(moved, p.dim());
}

Rational sigma_value(const Polytope &p) {
  const std::size_t n = p.dim();
  RatMatrix a(p.facets().size(), n + 1);
  RatVector b;
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    const Facet &f = p.facets()[i];
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = f.normal[j];
    a(i, n) = -1;
    b.push_back(Rational(-f.offset));
  }
  RatVector c(n + 1);
  c[n] = 1;
  LpResult r = lp_maximize(a, b, c);
  if (r.status != LpStatus::optimal)
    throw std::logic_error("adjoint LP has no optimum");
  return r.value;
}

Rational q_codegree(const Polytope &p) { return inverse_of(sigma_value(p)); }

Rational nef_value(const Fan &f, const TDivisor &l) {
  const TDivisor k = canonical_divisor(f);
  Rational tau = 0;
  for (const auto &w : walls(f)) {
    RelationClass c = curve_class(f, w);
    Rational lc = intersect(l, c);
    if (lc <= 0)
      throw std::invalid_argument("divisor is not ample");
    Rational ratio = -intersect(k, c) / lc;
    if (ratio > tau)
      tau = ratio;
  }
  tau.canonicalize();
  return tau;
}

Rational nef_value(const Polytope &p) {
  Fan f = normal_fan(p);
  if (!is_simplicial(f))
    throw std::domain_error("Q-Gorenstein check unsupported");
  return nef_value(f, divisor_of_polytope(p));
}

Rational lambda_value(const Polytope &p) { return inverse_of(nef_value(p)); }

bool verify_lambda(const Polytope &p, const Rational &lambda) {
  Fan base = normal_fan(p);
  const std::size_t wall_count = walls(base).size();
  Rational eps(1, Integer(2) * lambda.get_den() * wall_count);
  eps.canonicalize();
  auto same_fan = [&](const Rational &t) {
    auto q = adjoint_polytope(p, t);
    return q && q->is_full_dimensional() && normal_fan(*q) == base;
  };
  return same_fan(lambda * (1 - eps)) && !same_fan(lambda * (1 + eps));
}

Rational spectral_value(const Fan &f, const TDivisor &l) {
  if (!is_ample(f, l))
    throw std::invalid_argument("divisor is not ample");
  RatVector k = class_of(f, canonical_divisor(f));
  RatVector d = class_of(f, l);
  Rational mu = 0;
  for (const auto &w : mov_cone(f).extreme_rays()) {
    Rational dw = dot(w, d);
    if (dw <= 0)
      throw std::logic_error("ample class pairs nonpositively with a moving curve");
    Rational ratio = -dot(w, k) / dw;
    if (ratio > mu)
      mu = ratio;
  }
  mu.canonicalize();
  return mu;
}

bool is_q_normal(const Polytope &p) { return q_codegree(p) == nef_value(p); }

Integer codegree_via_adjoint(const Polytope &p) {
  for (std::size_t k = 1; k <= p.dim() + 1; ++k) {
    Integer kk(static_cast<unsigned long>(k));
    auto q = adjoint_polytope(dilate(p, kk), 1);
    if (q && has_lattice_point(*q))
      return kk;
  }
  throw std::logic_error("no lattice point in ((n+1)P)^(1)");
}

Integer first_nonempty_adjoint_dilation(const Polytope &p) {
  for (std::size_t k = 1;; ++k) {
    Integer kk(static_cast<unsigned long>(k));
    if (adjoint_polytope(dilate(p, kk), 1))
      return kk;
  }
}

AdjunctionReport adjunction_report(const Polytope &p) {
  AdjunctionReport r;
  r.sigma = sigma_value(p);
  r.q_codegree = inverse_of(r.sigma);
  r.nef_value = nef_value(p);
  r.lambda = inverse_of(r.nef_value);
  r.is_q_normal = r.q_codegree == r.nef_value;
  r.codegree = codegree(p);
  Integer c = ceil(r.q_codegree);
  r.ceil_check = c <= r.codegree && (!r.is_q_normal || c == r.codegree);
  r.lambda_verified = verify_lambda(p, r.lambda);
  return r;
}

} // namespace toriclab
