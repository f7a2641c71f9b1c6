#include "toriclab/latticepoints.hpp"
#include "toriclab/parallel.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>

namespace toriclab {

namespace {

// Coordinate-by-coordinate scan. Level j holds the H-presentation of the
// projection of P onto its first j coordinates; the fiber over an integer
// prefix of π_{j-1}(P) is then an exact interval in x_j.
class Scanner {
public:
  explicit Scanner(const RationalPolytope &p) : n_(p.ambient()) {
    for (std::size_t j = 1; j <= n_; ++j) {
      std::vector<RatVector> proj;
      for (const auto &v : p.vertices())
        proj.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(j));
      RationalPolytope q = convex_hull(proj, j);
      levels_.push_back(Level{q.facets(), q.equations()});
    }
  }

  /// Visits each lattice point of t·P; stops when visit returns false.
  /// Returns false if stopped early.
  bool scan(const Rational &t, const std::function<bool(const IntVector &)> &visit) const {
    IntVector x;
    x.reserve(n_);
    if (n_ == 0)
      return visit(x);
    return descend(t, x, visit);
  }

  Integer count(const Rational &t) const {
    if (n_ == 0)
      return 1;
    Integer total = 0;
    IntVector x;
    count_from(t, x, total);
    return total;
  }

private:
  struct Level {
    std::vector<RationalFacet> inequalities;
    std::vector<RationalFacet> equations;
  };

  // Interval of admissible x_j given the prefix x (length j).
  bool interval(const Rational &t, const IntVector &x, Integer &lo, Integer &hi) const {
    const std::size_t j = x.size();
    const Level &lv = levels_[j];
    std::optional<Integer> l, h;
    auto partial = [&](const RationalFacet &f) {
      Rational s = f.offset * t;
      for (std::size_t i = 0; i < j; ++i)
        s += Rational(f.normal[i] * x[i]);
      return s;
    };
    for (const auto &e : lv.equations) {
      Rational s = partial(e);
      const Integer &c = e.normal[j];
      if (c == 0) {
        if (s != 0)
          return false;
        continue;
      }
      Rational val = -s / Rational(c);
      if (val.get_den() != 1)
        return false;
      Integer v = val.get_num();
      if ((l && v < *l) || (h && v > *h))
        return false;
      l = h = v;
    }
    for (const auto &f : lv.inequalities) {
      const Integer &c = f.normal[j];
      if (c == 0)
        continue;
      Rational bound = -partial(f) / Rational(c);
      if (c > 0) {
        Integer b = ceil(bound);
        if (!l || b > *l)
          l = b;
      } else {
        Integer b = floor(bound);
        if (!h || b < *h)
          h = b;
      }
    }
    if (!l || !h)
      throw std::logic_error("lattice point scan hit an unbounded fiber");
    lo = *l;
    hi = *h;
    return lo <= hi;
  }

  bool descend(const Rational &t, IntVector &x,
               const std::function<bool(const IntVector &)> &visit) const {
    Integer lo, hi;
    if (!interval(t, x, lo, hi))
      return true;
    const bool last = x.size() + 1 == n_;
    for (Integer v = lo; v <= hi; ++v) {
      x.push_back(v);
      bool go = last ? visit(x) : descend(t, x, visit);
      x.pop_back();
      if (!go)
        return false;
    }
    return true;
  }

  void count_from(const Rational &t, IntVector &x, Integer &total) const {
    Integer lo, hi;
    if (!interval(t, x, lo, hi))
      return;
    if (x.size() + 1 == n_) {
      total += hi - lo + 1;
      return;
    }
    for (Integer v = lo; v <= hi; ++v) {
      x.push_back(v);
      count_from(t, x, total);
      x.pop_back();
    }
  }

  std::size_t n_;
  std::vector<Level> levels_;
};

std::optional<RationalPolytope> shrunk(const Polytope &p, const Integer &k) {
  std::vector<RationalFacet> moved;
  for (const auto &f : p.facets())
    moved.push_back(RationalFacet{f.normal, Rational(f.offset * k - 1)});
  return vertices_from_facets(moved, p.dim());
}

std::size_t affine_dimension(const std::vector<IntVector> &pts) {
  if (pts.size() <= 1)
    return 0;
  std::vector<IntVector> diff;
  for (std::size_t i = 1; i < pts.size(); ++i)
    diff.push_back(add(pts[i], scale(pts[0], -1)));
  return rank(IntMatrix::from_rows(diff, pts[0].size()));
}

} // namespace

Integer HStarPolynomial::sum() const {
  Integer s = 0;
  for (const auto &c : coefficients)
    s += c;
  return s;
}

std::vector<IntVector> lattice_points(const RationalPolytope &p) {
  std::vector<IntVector> out;
  Scanner(p).scan(1, [&](const IntVector &x) {
    out.push_back(x);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> lattice_points(const Polytope &p) { return lattice_points(to_rational(p)); }

Integer count_lattice_points(const RationalPolytope &p) { return Scanner(p).count(1); }

Integer count_lattice_points(const Polytope &p) { return count_lattice_points(to_rational(p)); }

bool has_lattice_point(const RationalPolytope &p) {
  return !Scanner(p).scan(1, [](const IntVector &) { return false; });
}

std::vector<IntVector> interior_lattice_points(const Polytope &p) {
  auto inner = shrunk(p, 1);
  if (!inner)
    return {};
  return lattice_points(*inner);
}

Integer codegree(const Polytope &p) {
  const std::size_t n = p.dim();
  Scanner scanner(to_rational(p));
  for (std::size_t k = 1; k <= n + 1; ++k) {
    const Integer kk(static_cast<unsigned long>(k));
    bool found = !scanner.scan(Rational(kk), [&](const IntVector &x) {
      for (const auto &f : p.facets())
        if (dot(f.normal, x) == -f.offset * kk)
          return true;
      return false;
    });
    if (found)
      return kk;
  }
  throw std::logic_error("no interior point in (n+1)P");
}

Integer degree(const Polytope &p) {
  return Integer(static_cast<unsigned long>(p.dim() + 1)) - codegree(p);
}

HStarPolynomial h_star(const Polytope &p) {
  const std::size_t n = p.dim();
  Scanner scanner(to_rational(p));
  std::vector<Integer> f = parallel_map<Integer>(n + 1, [&](std::size_t j) {
    return j == 0 ? Integer(1) : scanner.count(Rational(static_cast<unsigned long>(j)));
  });
  HStarPolynomial h;
  for (std::size_t i = 0; i <= n; ++i) {
    Integer c = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      Integer term = binomial(n + 1, i - j) * f[j];
      c += ((i - j) % 2 == 0) ? term : Integer(-term);
    }
    h.coefficients.push_back(c);
  }
  while (h.coefficients.size() > 1 && h.coefficients.back() == 0)
    h.coefficients.pop_back();
  return h;
}

std::vector<std::vector<IntVector>> pulling_triangulation(const Polytope &p) {
  const auto &verts = p.vertices();
  std::vector<std::vector<std::size_t>> incidence;
  for (const auto &f : p.facets()) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (dot(f.normal, verts[i]) == -f.offset)
        tight.push_back(i);
    incidence.push_back(tight);
  }
  auto points = [&](const std::vector<std::size_t> &s) {
    std::vector<IntVector> out;
    for (auto i : s)
      out.push_back(verts[i]);
    return out;
  };

  std::function<std::vector<std::vector<std::size_t>>(const std::vector<std::size_t> &,
                                                      std::size_t)>
      triangulate = [&](const std::vector<std::size_t> &face, std::size_t d) {
        std::vector<std::vector<std::size_t>> out;
        if (d == 0) {
          out.push_back({face.front()});
          return out;
        }
        const std::size_t apex = face.front();
        std::set<std::vector<std::size_t>> sub;
        for (const auto &inc : incidence) {
          std::vector<std::size_t> t;
          std::set_intersection(face.begin(), face.end(), inc.begin(), inc.end(),
                                std::back_inserter(t));
          if (t.size() < d || t == face || std::binary_search(t.begin(), t.end(), apex))
            continue;
          if (affine_dimension(points(t)) == d - 1)
            sub.insert(t);
        }
        for (const auto &t : sub)
          for (auto s : triangulate(t, d - 1)) {
            s.insert(s.begin(), apex);
            out.push_back(s);
          }
        return out;
      };

  std::vector<std::size_t> all(verts.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = i;
  std::vector<std::vector<IntVector>> out;
  for (const auto &s : triangulate(all, p.dim()))
    out.push_back(points(s));
  return out;
}

Integer normalized_volume(const Polytope &p) {
  Integer vol = 0;
  for (const auto &s : pulling_triangulation(p)) {
    std::vector<IntVector> diff;
    for (std::size_t i = 1; i < s.size(); ++i)
      diff.push_back(add(s[i], scale(s[0], -1)));
    vol += abs(determinant(IntMatrix::from_rows(diff, p.dim())));
  }
  return vol;
}

} // namespace toriclab
