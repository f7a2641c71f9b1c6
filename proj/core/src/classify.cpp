#include "toriclab/catalog.hpp"
#include "toriclab/cayley.hpp"

#include <algorithm>
#include <set>

namespace toriclab {

namespace {

std::string fano_model(const Fan &f) {
  const std::size_t n = f.rank();
  const std::size_t rho = picard_number(f);
  if (rho == 1 && smooth_fans_isomorphic(f, projective_space(n)))
    return "P^" + std::to_string(n);
  if (rho == 2 && n % 2 == 0) {
    Fan pa = projective_space(n / 2);
    if (smooth_fans_isomorphic(f, product_fan(pa, pa)))
      return "P^" + std::to_string(n / 2) + " x P^" + std::to_string(n / 2);
  }
  if (rho == 3 && n == 3) {
    Fan p1 = projective_space(1);
    if (smooth_fans_isomorphic(f, product_fan(product_fan(p1, p1), p1)))
      return "P^1 x P^1 x P^1";
  }
  if (rho == 2 && n % 2 == 1 && n >= 3) {
    const std::size_t r = (n + 1) / 2;
    std::vector<Integer> twists(r - 1, Integer(1));
    twists.push_back(2);
    if (smooth_fans_isomorphic(f, bundle_over_projective_space(r, twists)))
      return "P_{P^" + std::to_string(r) + "}(O(2)+O(1)^" + std::to_string(r - 1) + ")";
  }
  return {};
}

struct FaceWall {
  Wall wall;
  RelationClass cls;
  Integer degree; ///< L · C
};

/// Positive rays of a fiber-type relation whose coefficients are all 0 or 1.
std::optional<RaySet> unit_fiber(const RelationClass &c) {
  RaySet out;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    if (c.coeffs[i] == 0)
      continue;
    if (c.coeffs[i] != 1)
      return std::nullopt;
    out.push_back(i);
  }
  return out;
}

struct CayleyWitness {
  std::vector<Polytope> factors; ///< untranslated, in the order P_0..P_k
};

/// Rewrites P in coordinates (base, ⟨x, v_j⟩ + a_j) for the fiber rays and
/// reads off the Cayley factors of order s. nullopt when the rebuilt Cayley
/// polytope differs from P in those coordinates.
std::optional<CayleyWitness> cayley_factors(const Polytope &p, const Fan &f,
                                            const RaySet &fiber, const Integer &s) {
  const std::size_t n = p.dim();
  const std::size_t k = fiber.size() - 1;
  const std::size_t m = n - k;
  const RaySet *cone = nullptr;
  std::size_t skipped = 0;
  for (const auto &c : f.max_cones()) {
    std::size_t missing = 0, which = 0;
    for (std::size_t j = 0; j < fiber.size(); ++j)
      if (!std::binary_search(c.begin(), c.end(), fiber[j])) {
        ++missing;
        which = j;
      }
    if (missing == 1) {
      cone = &c;
      skipped = which;
      break;
    }
  }
  if (!cone)
    return std::nullopt;
  RaySet order{fiber[skipped]};
  for (std::size_t j = 0; j < fiber.size(); ++j)
    if (j != skipped)
      order.push_back(fiber[j]);
  RaySet base;
  for (auto i : *cone)
    if (!std::binary_search(fiber.begin(), fiber.end(), i))
      base.push_back(i);
  if (base.size() != m)
    return std::nullopt;

  IntMatrix t(n, n);
  IntVector shift(n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c)
      t(r, c) = f.ray(base[r])[c];
  for (std::size_t j = 1; j <= k; ++j) {
    for (std::size_t c = 0; c < n; ++c)
      t(m + j - 1, c) = f.ray(order[j])[c];
    shift[m + j - 1] = p.facets()[order[j]].offset;
  }
  if (abs(determinant(t)) != 1)
    return std::nullopt;
  Polytope q = transform(p, t, shift);

  std::vector<std::vector<IntVector>> pts(k + 1);
  for (const auto &v : q.vertices()) {
    std::size_t slot = 0;
    bool placed = true;
    for (std::size_t j = 1; j <= k; ++j) {
      const Integer &y = v[m + j - 1];
      if (y == s && slot == 0)
        slot = j;
      else if (y != 0)
        placed = false;
    }
    if (!placed)
      return std::nullopt;
    pts[slot].push_back(IntVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m)));
  }
  CayleyWitness w;
  for (const auto &group : pts) {
    if (group.empty())
      return std::nullopt;
    w.factors.push_back(facets_from_vertices(group, m));
  }
  if (build_cayley(CayleySpec{s, w.factors}) != q)
    return std::nullopt;
  return w;
}

Polytope to_origin(const Polytope &p) {
  IntVector shift = p.vertices().front();
  for (auto &x : shift)
    x = -x;
  IntMatrix id = IntMatrix::identity(p.dim());
  return transform(p, id, shift);
}

} // namespace

ClassificationResult classify(const Polytope &p) {
  const std::size_t n = p.dim();
  if (n == 0)
    throw std::invalid_argument("classification needs a positive-dimensional polytope");
  if (!is_smooth(p))
    throw HypothesisError("smooth", "polytope is not smooth");
  if (!is_q_normal(p))
    throw HypothesisError("q-normal", "polytope is not Q-normal");
  ClassificationResult out;
  out.codegree = codegree(p);
  if (2 * out.codegree < Integer(static_cast<unsigned long>(n + 1)))
    throw HypothesisError("codegree", "codegree is below (n+1)/2");
  out.nef_value = nef_value(p);

  if (n == 1) {
    out.label = CaseLabel::line_segment;
    out.s = p.vertices().back()[0] - p.vertices().front()[0];
    out.k = 0;
    return out;
  }

  const Fan f = normal_fan(p);
  const TDivisor l = divisor_of_polytope(p);
  const TDivisor kx = canonical_divisor(f);
  const TDivisor adjoint = kx + out.nef_value * l;

  // one wall per extremal class of the Mori cone inside the face
  const std::vector<IntVector> extremal = mori_cone(f).extreme_rays();
  std::set<IntVector> seen;
  std::vector<FaceWall> face;
  Integer top = 0;
  for (const auto &w : walls(f)) {
    RelationClass c = curve_class(f, w);
    if (intersect(adjoint, c) != 0)
      continue;
    IntVector ray = primitive(n1_coordinates(f, c));
    if (std::find(extremal.begin(), extremal.end(), ray) == extremal.end() || !seen.insert(ray).second)
      continue;
    Rational lc = intersect(l, c);
    if (!is_integral(RatVector{lc}))
      throw std::logic_error("L . C is not an integer on a smooth variety");
    face.push_back(FaceWall{w, c, lc.get_num()});
    top = std::max(top, lc.get_num());
  }
  if (face.empty())
    throw std::logic_error("nef-value face has no walls");
  const std::size_t rho = picard_number(f);

  if (top >= 3) {
    if (top == 3 && n == 3 && rho == 1) {
      out.label = CaseLabel::three_simplex_3;
      out.s = 3;
      out.k = 3;
    } else {
      out.notes.push_back("extremal curve with L.C = " + top.get_str() + " outside the listed cases");
    }
    return out;
  }

  if (top == 2) {
    if (rho == 1) {
      out.label = CaseLabel::two_simplex;
      out.s = 2;
      out.k = static_cast<unsigned long>(n);
      return out;
    }
    std::optional<CayleyWitness> found;
    std::size_t candidates = 0;
    for (const auto &fw : face) {
      if (fw.degree != 2)
        continue;
      auto fiber = unit_fiber(fw.cls);
      if (!fiber || fiber->size() != n)
        continue;
      ++candidates;
      auto w = cayley_factors(p, f, *fiber, 2);
      if (!w)
        continue;
      if (!found)
        found = w;
    }
    if (!found) {
      out.notes.push_back("no P^{n-1}-bundle structure over P^1 with L.C = 2");
      return out;
    }
    std::vector<Integer> degrees;
    for (const auto &q : found->factors)
      degrees.push_back(q.vertices().back()[0] - q.vertices().front()[0]);
    std::sort(degrees.begin(), degrees.end());
    bool congruent = std::all_of(degrees.begin(), degrees.end(), [&](const Integer &d) {
      return (d - degrees.front()) % 2 == 0;
    });
    if (n % 2 == 0 || !congruent) {
      out.notes.push_back("Cayley^2 structure found but n is even or degrees are not congruent mod 2");
      return out;
    }
    out.label = CaseLabel::cayley_2_odd;
    out.s = 2;
    out.k = static_cast<unsigned long>(n - 1);
    out.degrees = degrees;
    for (const auto &d : degrees)
      out.factors.push_back(simplex(1, d));
    if (candidates > 1)
      out.notes.push_back(std::to_string(candidates) + " fiber-type walls with L.C = 2; first used");
    return out;
  }

  // every wall in the face has L.C = 1
  if (is_zero(class_of(f, adjoint)))
    out.fano_model = fano_model(f);
  const Integer want = out.codegree - 1;
  std::optional<CayleyWitness> found;
  std::size_t candidates = 0;
  for (const auto &fw : face) {
    auto fiber = unit_fiber(fw.cls);
    if (!fiber || Integer(static_cast<unsigned long>(fiber->size())) != want + 1)
      continue;
    ++candidates;
    auto w = cayley_factors(p, f, *fiber, 1);
    if (w && !found)
      found = w;
  }
  if (!found) {
    out.notes.push_back("no projective-bundle structure with fiber dimension codeg - 1");
    return out;
  }
  out.label = CaseLabel::cayley_1;
  out.s = 1;
  out.k = want;
  for (const auto &q : found->factors)
    out.factors.push_back(q.dim() == 0 ? q : to_origin(q));
  if (candidates > 1)
    out.notes.push_back(std::to_string(candidates) + " fiber-type walls in the nef-value face; first used");
  return out;
}

} // namespace toriclab
