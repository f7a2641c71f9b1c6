#include "toriclab/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace toriclab {

namespace {

bool facet_less(const RationalFacet &a, const RationalFacet &b) {
  if (a.normal != b.normal)
    return a.normal < b.normal;
  return a.offset < b.offset;
}

IntVector homogenize(const RatVector &p) {
  RatVector h(p.size() + 1);
  h[0] = 1;
  std::copy(p.begin(), p.end(), h.begin() + 1);
  return primitive(h);
}

RationalFacet dehomogenize(const IntVector &row) {
  IntVector eta(row.begin() + 1, row.end());
  Integer g = content(eta);
  RationalFacet f;
  f.normal.resize(eta.size());
  for (std::size_t i = 0; i < eta.size(); ++i)
    f.normal[i] = eta[i] / g;
  f.offset = Rational(row[0], g);
  f.offset.canonicalize();
  return f;
}

bool tight(const RationalFacet &f, const RatVector &x) {
  return dot(f.normal, x) == -f.offset;
}

} // namespace

RationalPolytope convex_hull(const std::vector<RatVector> &points, std::size_t ambient) {
  if (points.empty())
    throw std::invalid_argument("convex hull of no points");
  std::vector<IntVector> gens;
  for (const auto &p : points) {
    if (p.size() != ambient)
      throw std::invalid_argument("point has wrong length");
    gens.push_back(homogenize(p));
  }
  ConeHRep h = facets_of(ambient + 1, ConeVRep{gens, {}});

  RationalPolytope out;
  out.ambient_ = ambient;
  for (const auto &e : h.equations)
    out.equations_.push_back(dehomogenize(e));
  out.dimension_ = ambient - out.equations_.size();

  if (out.dimension_ == 0) {
    out.vertices_ = {points.front()};
    return out;
  }
  for (const auto &a : h.inequalities) {
    IntVector eta(a.begin() + 1, a.end());
    if (!is_zero(eta))
      out.facets_.push_back(dehomogenize(a));
  }
  std::sort(out.facets_.begin(), out.facets_.end(), facet_less);

  for (const auto &p : points) {
    std::vector<IntVector> normals;
    for (const auto &f : out.facets_)
      if (tight(f, p))
        normals.push_back(f.normal);
    for (const auto &e : out.equations_)
      normals.push_back(e.normal);
    if (!normals.empty() && rank(IntMatrix::from_rows(normals, ambient)) == ambient)
      out.vertices_.push_back(p);
  }
  std::sort(out.vertices_.begin(), out.vertices_.end());
  out.vertices_.erase(std::unique(out.vertices_.begin(), out.vertices_.end()),
                      out.vertices_.end());
  return out;
}

Polytope facets_from_vertices(const std::vector<IntVector> &points, std::size_t dim) {
  std::vector<RatVector> rp;
  for (const auto &p : points)
    rp.push_back(to_rational(p));
  RationalPolytope h = convex_hull(rp, dim);
  if (!h.is_full_dimensional())
    throw std::invalid_argument("points are not full-dimensional");
  Polytope out;
  out.dim_ = dim;
  for (const auto &v : h.vertices())
    out.vertices_.push_back(to_integer(v));
  for (const auto &f : h.facets())
    out.facets_.push_back(Facet{f.normal, Integer(f.offset.get_num())});
  std::sort(out.facets_.begin(), out.facets_.end());
  return out;
}

std::optional<RationalPolytope>
vertices_from_facets(const std::vector<RationalFacet> &system, std::size_t dim) {
  std::vector<IntVector> rows;
  for (const auto &f : system) {
    if (f.normal.size() != dim)
      throw std::invalid_argument("facet normal has wrong length");
    IntVector r(dim + 1);
    Integer den = f.offset.get_den();
    r[0] = f.offset.get_num();
    for (std::size_t i = 0; i < dim; ++i)
      r[i + 1] = f.normal[i] * den;
    rows.push_back(r);
  }
  IntVector y0(dim + 1);
  y0[0] = 1;
  rows.push_back(y0);

  ConeVRep v = rays_of(dim + 1, ConeHRep{rows, {}});
  std::vector<RatVector> vertices;
  bool recession = !v.lineality.empty();
  for (const auto &r : v.rays) {
    if (r[0] == 0) {
      recession = true;
      continue;
    }
    RatVector x(dim);
    for (std::size_t i = 0; i < dim; ++i)
      x[i] = Rational(r[i + 1], r[0]);
    for (auto &q : x)
      q.canonicalize();
    vertices.push_back(x);
  }
  if (vertices.empty())
    return std::nullopt;
  if (recession)
    throw std::domain_error("not a polytope");
  return convex_hull(vertices, dim);
}

bool RationalPolytope::is_lattice() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const RatVector &v) { return is_integral(v); });
}

bool RationalPolytope::contains(const RatVector &x) const {
  for (const auto &f : facets_)
    if (dot(f.normal, x) < -f.offset)
      return false;
  for (const auto &e : equations_)
    if (dot(e.normal, x) != -e.offset)
      return false;
  return true;
}

RationalPolytope to_rational(const Polytope &p) {
  RationalPolytope out;
  out.ambient_ = out.dimension_ = p.dim();
  for (const auto &v : p.vertices())
    out.vertices_.push_back(to_rational(v));
  for (const auto &f : p.facets())
    out.facets_.push_back(RationalFacet{f.normal, Rational(f.offset)});
  return out;
}

std::optional<Polytope> as_lattice(const RationalPolytope &p) {
  if (!p.is_full_dimensional() || !p.is_lattice())
    return std::nullopt;
  std::vector<IntVector> pts;
  for (const auto &v : p.vertices())
    pts.push_back(to_integer(v));
  return facets_from_vertices(pts, p.ambient());
}

namespace {

template <typename Vertex, typename FacetT>
Fan normal_fan_of(std::size_t dim, const std::vector<Vertex> &vertices,
                  const std::vector<FacetT> &facets) {
  std::vector<IntVector> rays;
  for (const auto &f : facets)
    rays.push_back(f.normal);
  std::vector<RaySet> cones;
  for (const auto &v : vertices) {
    RaySet c;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (dot(facets[i].normal, v) == -facets[i].offset)
        c.push_back(i);
    cones.push_back(c);
  }
  return Fan(dim, rays, cones);
}

} // namespace

Fan normal_fan(const Polytope &p) {
  return normal_fan_of(p.dim(), p.vertices(), p.facets());
}

Fan normal_fan(const RationalPolytope &p) {
  if (!p.is_full_dimensional())
    throw std::invalid_argument("normal fan of a lower-dimensional polytope");
  return normal_fan_of(p.ambient(), p.vertices(), p.facets());
}

bool is_smooth(const Polytope &p) {
  for (const auto &v : p.vertices()) {
    std::vector<IntVector> normals;
    for (const auto &f : p.facets())
      if (dot(f.normal, v) == -f.offset)
        normals.push_back(f.normal);
    if (normals.size() != p.dim())
      return false;
    if (abs(determinant(IntMatrix::from_rows(normals, p.dim()))) != 1)
      return false;
  }
  return true;
}

Polytope dilate(const Polytope &p, const Integer &k) {
  if (k <= 0)
    throw std::invalid_argument("dilation factor must be positive");
  Polytope out = p;
  for (auto &v : out.vertices_)
    v = scale(v, k);
  for (auto &f : out.facets_)
    f.offset *= k;
  return out;
}

Polytope transform(const Polytope &p, const IntMatrix &t, const IntVector &shift) {
  if (abs(determinant(t)) != 1)
    throw std::invalid_argument("transform is not unimodular");
  std::vector<IntVector> pts;
  for (const auto &v : p.vertices())
    pts.push_back(add(t * v, shift));
  return facets_from_vertices(pts, p.dim());
}

Polytope product(const Polytope &a, const Polytope &b) {
  std::vector<IntVector> pts;
  for (const auto &u : a.vertices())
    for (const auto &w : b.vertices()) {
      IntVector v = u;
      v.insert(v.end(), w.begin(), w.end());
      pts.push_back(v);
    }
  return facets_from_vertices(pts, a.dim() + b.dim());
}

Polytope simplex(std::size_t n, const Integer &k) {
  std::vector<IntVector> pts(1, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    IntVector v(n);
    v[i] = k;
    pts.push_back(v);
  }
  return facets_from_vertices(pts, n);
}

} // namespace toriclab
