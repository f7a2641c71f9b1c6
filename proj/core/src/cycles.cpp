#include "toriclab/cycles.hpp"

#include "toriclab/parallel.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace toriclab {

namespace {

RaySet support_of(const Monomial &m) {
  RaySet s = m;
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Monomial times(Monomial a, const Monomial &b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

std::vector<Monomial> cone_supported(const Fan &f, std::size_t degree) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t)> grow = [&](std::size_t start) {
    if (cur.size() == degree) {
      out.push_back(cur);
      return;
    }
    for (std::size_t r = start; r < f.ray_count(); ++r) {
      cur.push_back(r);
      if (f.contains_cone(support_of(cur)))
        grow(r);
      cur.pop_back();
    }
  };
  grow(0);
  return out;
}

IntVector integral_direction(const RatVector &v) { return primitive(v); }

} // namespace

ChowRing::ChowRing(const Fan &f) : fan_(f) {
  if (!is_smooth(f))
    throw std::invalid_argument("non-smooth fan");
  if (!is_complete(f))
    throw std::invalid_argument("fan not complete");
  const std::size_t n = f.rank();

  degrees_ = parallel_map<Degree>(n + 1, [&](std::size_t d) {
    Degree deg;
    for (const auto &m : cone_supported(f, d))
      deg.column.emplace(m, deg.column.size());
    const std::size_t width = deg.column.size();
    if (d > 0) {
      for (const auto &m : cone_supported(f, d - 1))
        for (std::size_t i = 0; i < n; ++i) {
          RatVector v(width);
          for (std::size_t r = 0; r < f.ray_count(); ++r) {
            const Integer &c = f.ray(r)[i];
            if (c == 0)
              continue;
            auto it = deg.column.find(times(m, {r}));
            if (it != deg.column.end())
              v[it->second] += c;
          }
          for (std::size_t k = 0; k < deg.rows.size(); ++k) {
            const Rational x = v[deg.pivots[k]];
            if (x != 0)
              for (std::size_t j = 0; j < width; ++j)
                v[j] -= x * deg.rows[k][j];
          }
          std::size_t p = width;
          for (std::size_t j = width; j-- > 0;)
            if (v[j] != 0) {
              p = j;
              break;
            }
          if (p == width)
            continue;
          const Rational lead = v[p];
          for (auto &x : v)
            x /= lead;
          for (auto &row : deg.rows) {
            const Rational x = row[p];
            if (x != 0)
              for (std::size_t j = 0; j < width; ++j)
                row[j] -= x * v[j];
          }
          deg.rows.push_back(std::move(v));
          deg.pivots.push_back(p);
        }
    }
    std::vector<bool> pivot(width, false);
    for (auto p : deg.pivots)
      pivot[p] = true;
    for (const auto &[m, c] : deg.column)
      if (!pivot[c]) {
        deg.free.push_back(c);
        deg.basis.push_back(m);
      }
    return deg;
  });

  if (rank(n) != 1)
    throw std::logic_error("top degree is not one-dimensional");
  RatVector top = normal_form(f.max_cones().front());
  top_scale_ = 1 / top[0];
  for (std::size_t k = 0; k <= n; ++k)
    if (toriclab::rank(pairing(k)) != rank(k) || rank(k) != rank(n - k))
      throw std::logic_error("degenerate pairing: numerical equivalence is not trivial");
}

std::vector<std::size_t> ChowRing::ranks() const {
  std::vector<std::size_t> out;
  for (const auto &d : degrees_)
    out.push_back(d.basis.size());
  return out;
}

RatVector ChowRing::reduce(std::size_t degree, RatVector v) const {
  const Degree &deg = degrees_[degree];
  for (std::size_t k = 0; k < deg.rows.size(); ++k) {
    const Rational x = v[deg.pivots[k]];
    if (x != 0)
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] -= x * deg.rows[k][j];
  }
  RatVector out;
  for (auto c : deg.free)
    out.push_back(v[c]);
  return out;
}

RatVector ChowRing::normal_form(const Monomial &m) const {
  const std::size_t d = m.size();
  if (d > dim())
    return {};
  Monomial s = m;
  std::sort(s.begin(), s.end());
  const Degree &deg = degrees_[d];
  auto it = deg.column.find(s);
  if (it == deg.column.end())
    return RatVector(deg.basis.size());
  RatVector v(deg.column.size());
  v[it->second] = 1;
  return reduce(d, std::move(v));
}

RatVector ChowRing::multiply(std::size_t da, const RatVector &a, std::size_t db, const RatVector &b) const {
  if (da + db > dim())
    return {};
  RatVector out(rank(da + db));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0)
        continue;
      RatVector p = normal_form(times(basis(da)[i], basis(db)[j]));
      for (std::size_t k = 0; k < out.size(); ++k)
        out[k] += a[i] * b[j] * p[k];
    }
  }
  return out;
}

Rational ChowRing::evaluate(const RatVector &top) const { return top[0] * top_scale_; }

RatMatrix ChowRing::pairing(std::size_t k) const {
  const std::size_t n = dim();
  RatMatrix p(rank(k), rank(n - k));
  for (std::size_t i = 0; i < rank(k); ++i)
    for (std::size_t j = 0; j < rank(n - k); ++j)
      p(i, j) = evaluate(normal_form(times(basis(k)[i], basis(n - k)[j])));
  return p;
}

CycleClass cycle_class(const ChowRing &ring, const RaySet &sigma) {
  RaySet s = sigma;
  std::sort(s.begin(), s.end());
  if (s.size() > ring.dim() || !ring.fan().contains_cone(s))
    throw std::invalid_argument("not a cone of the fan");
  return {ring.dim() - s.size(), ring.normal_form(s)};
}

Cone ne_k_cone(const ChowRing &ring, std::size_t k) {
  const std::size_t n = ring.dim();
  if (k > n)
    throw std::invalid_argument("cycle dimension exceeds the variety");
  const std::size_t d = n - k;
  std::set<RaySet> faces;
  for (const auto &mc : ring.fan().max_cones()) {
    std::vector<bool> pick(mc.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(d), true);
    do {
      RaySet s;
      for (std::size_t i = 0; i < mc.size(); ++i)
        if (pick[i])
          s.push_back(mc[i]);
      faces.insert(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::vector<IntVector> gens;
  for (const auto &s : faces) {
    RatVector c = cycle_class(ring, s).coords;
    if (!is_zero(c))
      gens.push_back(integral_direction(c));
  }
  return Cone(ring.rank(d), gens);
}

RelationClass curve_relation(const ChowRing &ring, const CycleClass &curve) {
  if (curve.dimension != 1)
    throw std::invalid_argument("not a curve class");
  const std::size_t n = ring.dim();
  RelationClass out;
  for (std::size_t r = 0; r < ring.fan().ray_count(); ++r)
    out.coeffs.push_back(ring.evaluate(ring.multiply(1, ring.normal_form({r}), n - 1, curve.coords)));
  return out;
}

Cone nef_divisor_cone(const ChowRing &ring) {
  const Cone curves = ne_k_cone(ring, 1);
  const RatMatrix p = ring.pairing(1);
  ConeHRep h;
  for (const auto &g : curves.generators) {
    RatVector row = p * to_rational(g);
    if (!is_zero(row))
      h.inequalities.push_back(integral_direction(row));
  }
  ConeVRep v = rays_of(ring.rank(1), h);
  std::vector<IntVector> gens = v.rays;
  for (const auto &l : v.lineality) {
    gens.push_back(l);
    gens.push_back(scale(l, -1));
  }
  return Cone(ring.rank(1), gens);
}

TDivisor divisor_from_class(const ChowRing &ring, const RatVector &coords) {
  RatVector a(ring.fan().ray_count());
  for (std::size_t i = 0; i < coords.size(); ++i)
    a[ring.basis(1)[i].front()] = coords[i];
  return TDivisor(a);
}

} // namespace toriclab
