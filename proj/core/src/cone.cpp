#include "toriclab/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace toriclab {

namespace {

class Bits {
public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t(1) << (i % 64); }
  bool subset_of(const Bits &o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i])
        return false;
    return true;
  }
  Bits operator&(const Bits &o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] &= o.words_[i];
    return r;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVector v;
  Bits zeros;
};

IntMatrix rows_matrix(const std::vector<IntVector> &rows, std::size_t dim) {
  IntMatrix m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = rows[i][j];
  return m;
}

// Extreme rays of {z in R^d : A z ≥ 0} where A has trivial kernel.
std::vector<IntVector> dd_pointed(const std::vector<IntVector> &a, std::size_t d) {
  if (d == 0)
    return {};
  const std::size_t m = a.size();

  // Greedy choice of d independent rows for the initial simplicial cone.
  std::vector<std::size_t> basis;
  {
    std::vector<IntVector> chosen;
    for (std::size_t i = 0; i < m && basis.size() < d; ++i) {
      chosen.push_back(a[i]);
      if (rank(rows_matrix(chosen, d)) == chosen.size())
        basis.push_back(i);
      else
        chosen.pop_back();
    }
  }
  if (basis.size() != d)
    throw std::logic_error("dd_pointed: constraint matrix has a kernel");

  RatMatrix sub(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      sub(i, j) = a[basis[i]][j];
  RatMatrix inv = *inverse(sub);

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < d; ++j) {
    Ray r{primitive(inv.column(j)), Bits(m)};
    for (std::size_t i = 0; i < d; ++i)
      if (i != j)
        r.zeros.set(basis[i]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> in_basis(m, false);
  for (auto b : basis)
    in_basis[b] = true;

  for (std::size_t row = 0; row < m; ++row) {
    if (in_basis[row])
      continue;
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(a[row], rays[k].v);
      if (val[k] > 0)
        pos.push_back(k);
      else if (val[k] < 0)
        neg.push_back(k);
      else
        rays[k].zeros.set(row);
    }
    if (neg.empty())
      continue;

    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (val[k] >= 0)
        next.push_back(rays[k]);
    for (auto p : pos)
      for (auto q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < d)
          continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
          if (k != p && k != q && common.subset_of(rays[k].zeros))
            adjacent = false;
        if (!adjacent)
          continue;
        IntVector v(d);
        for (std::size_t j = 0; j < d; ++j)
          v[j] = val[p] * rays[q].v[j] - val[q] * rays[p].v[j];
        Ray r{primitive(v), common};
        r.zeros.set(row);
        next.push_back(std::move(r));
      }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto &r : rays)
    out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Columns of a kernel basis of the stacked rows (identity when none).
IntMatrix kernel_of_rows(const std::vector<IntVector> &rows, std::size_t dim) {
  if (rows.empty())
    return IntMatrix::identity(dim);
  return hermite_kernel(rows_matrix(rows, dim));
}

std::vector<IntVector> apply_rows(const std::vector<IntVector> &rows,
                                  const IntMatrix &b) {
  std::vector<IntVector> out;
  for (const auto &a : rows) {
    IntVector r(b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t i = 0; i < b.rows(); ++i)
        r[j] += a[i] * b(i, j);
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace

ConeVRep rays_of(std::size_t dim, const ConeHRep &h) {
  IntMatrix b = kernel_of_rows(h.equations, dim);
  std::vector<IntVector> a1 = apply_rows(h.inequalities, b);

  ConeVRep out;
  IntMatrix l1 = kernel_of_rows(a1, b.cols());
  std::vector<IntVector> constraints = h.equations;
  if (l1.cols() > 0) {
    IntMatrix lx = hermite_rows((b * l1).transpose());
    for (std::size_t i = 0; i < lx.rows(); ++i) {
      out.lineality.push_back(lx.row(i));
      constraints.push_back(lx.row(i));
    }
  }

  IntMatrix c = kernel_of_rows(constraints, dim);
  std::vector<IntVector> a2 = apply_rows(h.inequalities, c);
  for (const auto &z : dd_pointed(a2, c.cols()))
    out.rays.push_back(primitive(c * z));
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

ConeHRep facets_of(std::size_t dim, const ConeVRep &v) {
  ConeVRep dual = rays_of(dim, ConeHRep{v.rays, v.lineality});
  return ConeHRep{dual.rays, dual.lineality};
}

Cone::Cone(std::size_t ambient_rank, std::vector<IntVector> gens)
    : ambient(ambient_rank) {
  std::set<IntVector> unique;
  for (const auto &g : gens) {
    if (g.size() != ambient)
      throw std::invalid_argument("cone generator has wrong length");
    if (!is_zero(g))
      unique.insert(primitive(g));
  }
  generators.assign(unique.begin(), unique.end());
}

std::size_t Cone::dimension() const {
  if (generators.empty())
    return 0;
  return rank(IntMatrix::from_rows(generators, ambient));
}

bool Cone::is_simplicial() const { return dimension() == generators.size(); }

bool Cone::is_strongly_convex() const {
  return rays_of(ambient, facets_of(ambient, ConeVRep{generators, {}}))
      .lineality.empty();
}

bool Cone::contains(const RatVector &x) const {
  ConeHRep h = facets_of(ambient, ConeVRep{generators, {}});
  for (const auto &a : h.inequalities)
    if (dot(a, x) < 0)
      return false;
  for (const auto &e : h.equations)
    if (dot(e, x) != 0)
      return false;
  return true;
}

std::vector<IntVector> Cone::extreme_rays() const {
  ConeVRep v = rays_of(ambient, facets_of(ambient, ConeVRep{generators, {}}));
  if (!v.lineality.empty())
    return {};
  return v.rays;
}

bool Cone::operator==(const Cone &o) const {
  if (ambient != o.ambient)
    return false;
  ConeHRep a = facets_of(ambient, ConeVRep{generators, {}});
  ConeHRep b = facets_of(ambient, ConeVRep{o.generators, {}});
  return a.inequalities == b.inequalities && a.equations == b.equations;
}

Cone dual_cone(const Cone &c) {
  ConeVRep d = rays_of(c.ambient, ConeHRep{c.generators, {}});
  std::vector<IntVector> gens = d.rays;
  for (const auto &l : d.lineality) {
    gens.push_back(l);
    gens.push_back(scale(l, -1));
  }
  return Cone(c.ambient, gens);
}

Integer multiplicity(const Cone &c) {
  if (!c.is_simplicial())
    throw std::invalid_argument("multiplicity of a non-simplicial cone");
  Integer m = 1;
  for (const auto &d : smith_diagonal(IntMatrix::from_columns(c.generators, c.ambient)))
    m *= d;
  return m;
}

} // namespace toriclab
