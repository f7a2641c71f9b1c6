#include "toriclab/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace toriclab {

namespace {

bool is_subset(const RaySet &small, const RaySet &big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

RaySet intersect(const RaySet &a, const RaySet &b) {
  RaySet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

} // namespace

Fan::Fan(std::size_t rank, std::vector<IntVector> rays,
         std::vector<RaySet> max_cones, std::vector<IntVector> vertex_subspace)
    : rank_(rank), rays_(std::move(rays)), vertex_(std::move(vertex_subspace)) {
  std::set<IntVector> seen;
  for (const auto &r : rays_) {
    if (r.size() != rank_)
      throw std::invalid_argument("ray has wrong length");
    if (is_zero(r) || content(r) != 1)
      throw std::invalid_argument("ray is not primitive");
    if (!seen.insert(r).second)
      throw std::invalid_argument("duplicate ray");
  }
  for (auto &c : max_cones) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (auto i : c)
      if (i >= rays_.size())
        throw std::invalid_argument("cone refers to a missing ray");
  }
  std::sort(max_cones.begin(), max_cones.end());
  max_cones.erase(std::unique(max_cones.begin(), max_cones.end()), max_cones.end());
  max_cones_ = std::move(max_cones);
  if (!vertex_.empty()) {
    for (const auto &v : vertex_)
      if (v.size() != rank_)
        throw std::invalid_argument("vertex subspace vector has wrong length");
    vertex_ = hermite_rows(IntMatrix::from_rows(vertex_, rank_)).row_list();
  }
}

std::size_t Fan::ray_index(const IntVector &v) const {
  auto it = std::find(rays_.begin(), rays_.end(), v);
  return it == rays_.end() ? npos : static_cast<std::size_t>(it - rays_.begin());
}

Cone Fan::cone(const RaySet &s) const {
  std::vector<IntVector> gens;
  for (auto i : s)
    gens.push_back(rays_[i]);
  return Cone(rank_, gens);
}

IntMatrix Fan::ray_matrix() const {
  return IntMatrix::from_columns(rays_, rank_);
}

std::vector<RaySet> Fan::cone_facets(const RaySet &s) const {
  std::vector<RaySet> out;
  std::vector<IntVector> gens;
  for (auto i : s)
    gens.push_back(rays_[i]);
  if (!gens.empty() && toriclab::rank(IntMatrix::from_rows(gens, rank_)) == gens.size()) {
    for (std::size_t k = 0; k < s.size(); ++k) {
      RaySet f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
      out.push_back(f);
    }
    return out;
  }
  ConeHRep h = facets_of(rank_, ConeVRep{gens, vertex_});
  for (const auto &a : h.inequalities) {
    RaySet f;
    for (auto i : s)
      if (dot(a, rays_[i]) == 0)
        f.push_back(i);
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Fan::contains_cone(const RaySet &s) const {
  for (const auto &c : max_cones_) {
    if (!is_subset(s, c))
      continue;
    RaySet face = c;
    for (const auto &f : cone_facets(c))
      if (is_subset(s, f))
        face = intersect(face, f);
    // The intersection of the facets through s is the smallest face
    // containing s.
    if (face == s)
      return true;
  }
  return false;
}

Fan Fan::canonical() const {
  std::vector<std::size_t> order(rays_.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rays_[a] < rays_[b]; });
  std::vector<std::size_t> where(rays_.size());
  std::vector<IntVector> rays;
  for (std::size_t k = 0; k < order.size(); ++k) {
    where[order[k]] = k;
    rays.push_back(rays_[order[k]]);
  }
  std::vector<RaySet> cones;
  for (const auto &c : max_cones_) {
    RaySet n;
    for (auto i : c)
      n.push_back(where[i]);
    cones.push_back(n);
  }
  return Fan(rank_, rays, cones, vertex_);
}

bool operator==(const Fan &a, const Fan &b) {
  if (a.rank_ != b.rank_ || a.rays_.size() != b.rays_.size())
    return false;
  Fan ca = a.canonical(), cb = b.canonical();
  return ca.rays_ == cb.rays_ && ca.max_cones_ == cb.max_cones_ &&
         ca.vertex_ == cb.vertex_;
}

bool is_simplicial(const Fan &f) {
  for (const auto &c : f.max_cones())
    if (!f.cone(c).is_simplicial() || f.cone(c).generators.size() != c.size())
      return false;
  return true;
}

bool is_smooth(const Fan &f) {
  if (!is_simplicial(f))
    return false;
  for (const auto &c : f.max_cones())
    if (!c.empty() && multiplicity(f.cone(c)) != 1)
      return false;
  return true;
}

std::vector<Wall> walls(const Fan &f) {
  std::map<RaySet, std::vector<std::size_t>> incidence;
  for (std::size_t i = 0; i < f.max_cones().size(); ++i)
    for (const auto &facet : f.cone_facets(f.max_cones()[i]))
      incidence[facet].push_back(i);
  std::vector<Wall> out;
  for (const auto &[rays, cones] : incidence) {
    if (cones.size() != 2)
      throw std::invalid_argument("fan not complete");
    out.push_back(Wall{rays, cones[0], cones[1]});
  }
  return out;
}

bool is_complete(const Fan &f) {
  if (f.is_degenerate() || f.max_cones().empty())
    return false;
  for (const auto &c : f.max_cones())
    if (f.cone(c).dimension() != f.rank())
      return false;
  try {
    walls(f);
  } catch (const std::invalid_argument &) {
    return false;
  }
  return true;
}

Fan star_subdivision(const Fan &f, const RaySet &tau_in) {
  RaySet tau = tau_in;
  std::sort(tau.begin(), tau.end());
  if (tau.empty() || !f.contains_cone(tau))
    throw std::invalid_argument("center is not a cone of the fan");
  for (const auto &c : f.max_cones())
    if (is_subset(tau, c)) {
      Cone sc = f.cone(c);
      if (!sc.is_simplicial() || multiplicity(sc) != 1)
        throw std::invalid_argument("non-smooth star");
    }
  if (tau.size() == 1)
    return f;

  IntVector v(f.rank());
  for (auto i : tau)
    v = add(v, f.ray(i));
  v = primitive(v);
  if (f.ray_index(v) != Fan::npos)
    throw std::logic_error("subdivision ray already present");
  std::vector<IntVector> rays = f.rays();
  rays.push_back(v);
  const std::size_t vi = rays.size() - 1;

  std::vector<RaySet> cones;
  for (const auto &c : f.max_cones()) {
    if (!is_subset(tau, c)) {
      cones.push_back(c);
      continue;
    }
    for (auto drop : tau) {
      RaySet n;
      for (auto i : c)
        if (i != drop)
          n.push_back(i);
      n.push_back(vi);
      cones.push_back(n);
    }
  }
  return Fan(f.rank(), rays, cones);
}

Fan star_fan(const Fan &f, const RaySet &tau_in) {
  RaySet tau = tau_in;
  std::sort(tau.begin(), tau.end());
  if (!f.contains_cone(tau))
    throw std::invalid_argument("cone is not in the fan");
  std::vector<IntVector> gens;
  for (auto i : tau)
    gens.push_back(f.ray(i));
  IntMatrix q = gens.empty() ? IntMatrix::identity(f.rank())
                             : quotient_map(IntMatrix::from_columns(gens, f.rank()));

  std::vector<IntVector> rays;
  std::vector<RaySet> cones;
  for (const auto &c : f.max_cones()) {
    if (!is_subset(tau, c))
      continue;
    RaySet n;
    for (auto i : c) {
      if (std::binary_search(tau.begin(), tau.end(), i))
        continue;
      IntVector w = primitive(q * f.ray(i));
      auto it = std::find(rays.begin(), rays.end(), w);
      if (it == rays.end()) {
        rays.push_back(w);
        n.push_back(rays.size() - 1);
      } else {
        n.push_back(static_cast<std::size_t>(it - rays.begin()));
      }
    }
    cones.push_back(n);
  }
  return Fan(q.rows(), rays, cones);
}

Fan product_fan(const Fan &a, const Fan &b) {
  if (a.is_degenerate() || b.is_degenerate())
    throw std::invalid_argument("product of degenerate fans");
  const std::size_t n = a.rank() + b.rank();
  std::vector<IntVector> rays;
  for (const auto &r : a.rays()) {
    IntVector v(n);
    std::copy(r.begin(), r.end(), v.begin());
    rays.push_back(v);
  }
  for (const auto &r : b.rays()) {
    IntVector v(n);
    std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(a.rank()));
    rays.push_back(v);
  }
  std::vector<RaySet> cones;
  for (const auto &ca : a.max_cones())
    for (const auto &cb : b.max_cones()) {
      RaySet c = ca;
      for (auto i : cb)
        c.push_back(i + a.ray_count());
      cones.push_back(c);
    }
  return Fan(n, rays, cones);
}

Fan point_fan() { return Fan(0, {}, {RaySet{}}); }

bool smooth_fans_isomorphic(const Fan &a, const Fan &b) {
  if (a.rank() != b.rank() || a.ray_count() != b.ray_count() ||
      a.max_cones().size() != b.max_cones().size())
    return false;
  const std::size_t n = a.rank();
  const RaySet &src = a.max_cones().front();
  IntMatrix from(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      from(i, j) = a.ray(src[j])[i];
  const RatMatrix from_inv = *inverse(to_rational(from));

  auto cone_key = [](const Fan &f, const RaySet &c) {
    std::vector<IntVector> v;
    for (auto i : c)
      v.push_back(f.ray(i));
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<std::vector<IntVector>> target;
  for (const auto &c : b.max_cones())
    target.push_back(cone_key(b, c));
  std::sort(target.begin(), target.end());

  for (const auto &c : b.max_cones()) {
    RaySet perm = c;
    std::sort(perm.begin(), perm.end());
    do {
      RatMatrix to(n, n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
          to(i, j) = b.ray(perm[j])[i];
      RatMatrix map = to * from_inv;
      bool integral = true;
      IntMatrix m(n, n);
      for (std::size_t i = 0; i < n && integral; ++i)
        for (std::size_t j = 0; j < n && integral; ++j) {
          if (map(i, j).get_den() != 1)
            integral = false;
          else
            m(i, j) = map(i, j).get_num();
        }
      if (!integral || abs(determinant(m)) != 1)
        continue;
      std::vector<IntVector> image;
      for (const auto &r : a.rays())
        image.push_back(m * r);
      std::vector<std::vector<IntVector>> mapped;
      for (const auto &mc : a.max_cones()) {
        std::vector<IntVector> v;
        for (auto i : mc)
          v.push_back(image[i]);
        std::sort(v.begin(), v.end());
        mapped.push_back(v);
      }
      std::sort(mapped.begin(), mapped.end());
      if (mapped == target)
        return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

} // namespace toriclab
