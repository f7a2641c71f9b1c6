#include "toriclab/mmp.hpp"

#include "toriclab/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toriclab {

namespace {

RaySet merge(const RaySet &a, const RaySet &b) {
  RaySet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const RaySet &small, const RaySet &big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

IntMatrix columns_of(const Fan &f, const RaySet &s) {
  std::vector<IntVector> cols;
  for (auto i : s)
    cols.push_back(f.ray(i));
  return IntMatrix::from_columns(cols, f.rank());
}

IntVector class_ray(const Fan &f, const RelationClass &c) { return primitive(n1_coordinates(f, c)); }

/// Walls whose curves span r, in canonical wall order; throws unless r is
/// an extreme ray of the Mori cone.
std::vector<Wall> walls_in_ray(const Fan &f, const IntVector &r) {
  if (!is_simplicial(f))
    throw std::invalid_argument("non-simplicial fan");
  std::vector<Wall> ws = walls(f);
  const auto ext = mori_cone(f).extreme_rays();
  if (std::find(ext.begin(), ext.end(), r) == ext.end())
    throw std::invalid_argument("not an extremal ray");
  std::vector<Wall> out;
  for (const auto &w : ws)
    if (class_ray(f, curve_class(f, w)) == r)
      out.push_back(w);
  return out;
}

RelationClass normalized(const RelationClass &c) {
  RelationClass out = c;
  for (const auto &x : c.coeffs)
    if (x != 0) {
      Rational s = 1 / abs(x);
      for (auto &y : out.coeffs)
        y *= s;
      break;
    }
  return out;
}

std::string fan_key(const Fan &f) {
  Fan c = f.canonical();
  std::ostringstream os;
  os << c.rank() << '|';
  for (const auto &r : c.rays()) {
    for (const auto &x : r)
      os << x.get_str() << ',';
    os << ';';
  }
  os << '|';
  for (const auto &mc : c.max_cones()) {
    for (auto i : mc)
      os << i << ',';
    os << ';';
  }
  return os.str();
}

std::string end_key(const MMPEnd &e) {
  std::ostringstream os;
  os << static_cast<int>(e.kind) << '#' << fan_key(e.final_fan) << '#';
  for (const auto &x : e.fiber_relation.coeffs)
    os << x.get_str() << ',';
  return os.str();
}

} // namespace

std::string to_string(ContractionKind k) {
  switch (k) {
  case ContractionKind::fiber:
    return "fiber";
  case ContractionKind::divisorial:
    return "divisorial";
  case ContractionKind::small:
    return "small";
  }
  return "";
}

std::string to_string(StepKind k) {
  switch (k) {
  case StepKind::divisorial:
    return "divisorial";
  case StepKind::flip:
    return "flip";
  case StepKind::fiber_end:
    return "fiber-end";
  case StepKind::nef_end:
    return "nef-end";
  }
  return "";
}

std::vector<ExtremalRay> extremal_rays(const Fan &f) {
  if (!is_simplicial(f))
    throw std::invalid_argument("non-simplicial fan");
  const auto ws = walls(f);
  const auto ext = mori_cone(f).extreme_rays();
  const TDivisor k = canonical_divisor(f);
  std::vector<ExtremalRay> out;
  std::set<IntVector> seen;
  for (const auto &w : ws) {
    RelationClass c = curve_class(f, w);
    IntVector r = class_ray(f, c);
    if (std::find(ext.begin(), ext.end(), r) == ext.end() || !seen.insert(r).second)
      continue;
    out.push_back({r, w, c, intersect(k, c)});
  }
  std::sort(out.begin(), out.end(), [](const ExtremalRay &a, const ExtremalRay &b) {
    if (a.k_degree != b.k_degree)
      return a.k_degree < b.k_degree;
    return a.n1 < b.n1;
  });
  return out;
}

ContractionResult wall_blocks(const Fan &f, const Wall &w) {
  ContractionResult res;
  res.contracted_relation = curve_class(f, w);
  const RaySet s = merge(f.max_cones()[w.left], f.max_cones()[w.right]);
  for (auto i : s) {
    const Rational &c = res.contracted_relation.coeffs[i];
    (c < 0 ? res.negative : c == 0 ? res.zero : res.positive).push_back(i);
  }
  res.alpha = res.negative.size();
  res.beta = res.alpha + res.zero.size();
  std::vector<IntVector> gens;
  for (auto i : merge(res.negative, res.positive))
    gens.push_back(f.ray(i));
  res.u_cone = Cone(f.rank(), gens);
  res.kind = res.alpha == 0 ? ContractionKind::fiber
             : res.alpha == 1 ? ContractionKind::divisorial
                              : ContractionKind::small;
  return res;
}

Fan relation_fan(const Fan &f, const RaySet &support) {
  const IntMatrix basis = saturation_basis(columns_of(f, support));
  const RatMatrix rb = to_rational(basis);
  std::vector<IntVector> rays;
  for (auto i : support)
    rays.push_back(to_integer(*rat_solve(rb, to_rational(f.ray(i)))));
  std::vector<RaySet> cones;
  for (std::size_t skip = 0; skip < support.size(); ++skip) {
    RaySet c;
    for (std::size_t j = 0; j < support.size(); ++j)
      if (j != skip)
        c.push_back(j);
    cones.push_back(c);
  }
  if (basis.cols() == 0)
    return point_fan();
  return Fan(basis.cols(), rays, cones);
}

ContractionResult contract(const Fan &f, const IntVector &r) {
  const std::vector<Wall> ws = walls_in_ray(f, r);
  ContractionResult res = wall_blocks(f, ws.front());
  const std::size_t n = f.rank();

  std::set<RaySet> fused;
  for (const auto &w : ws)
    fused.insert(merge(f.max_cones()[w.left], f.max_cones()[w.right]));
  std::vector<RaySet> untouched;
  for (const auto &mc : f.max_cones())
    if (std::none_of(fused.begin(), fused.end(), [&](const RaySet &s) { return is_subset(mc, s); }))
      untouched.push_back(mc);

  switch (res.kind) {
  case ContractionKind::small: {
    std::vector<RaySet> cones(fused.begin(), fused.end());
    cones.insert(cones.end(), untouched.begin(), untouched.end());
    res.target = Fan(n, f.rays(), cones);
    break;
  }
  case ContractionKind::divisorial: {
    const std::size_t v = res.negative.front();
    std::vector<IntVector> rays;
    std::vector<std::size_t> index(f.ray_count(), Fan::npos);
    for (std::size_t i = 0; i < f.ray_count(); ++i)
      if (i != v) {
        index[i] = rays.size();
        rays.push_back(f.ray(i));
      }
    std::vector<RaySet> cones;
    auto remap = [&](const RaySet &s) {
      RaySet out;
      for (auto i : s)
        if (i != v)
          out.push_back(index[i]);
      return out;
    };
    for (const auto &s : fused)
      cones.push_back(remap(s));
    for (const auto &s : untouched) {
      if (std::binary_search(s.begin(), s.end(), v))
        throw std::logic_error("exceptional ray outside the fused cones");
      cones.push_back(remap(s));
    }
    res.target = Fan(n, rays, cones);
    break;
  }
  case ContractionKind::fiber: {
    if (!untouched.empty())
      throw std::logic_error("fiber contraction left untouched cones");
    res.general_fiber = relation_fan(f, res.positive);
    const IntMatrix q = quotient_map(columns_of(f, res.positive));
    if (q.rows() == 0) {
      res.target = point_fan();
      break;
    }
    std::vector<IntVector> rays;
    std::vector<std::size_t> index(f.ray_count(), Fan::npos);
    for (std::size_t i = 0; i < f.ray_count(); ++i) {
      IntVector img = q * f.ray(i);
      if (is_zero(img))
        continue;
      img = primitive(img);
      auto it = std::find(rays.begin(), rays.end(), img);
      index[i] = static_cast<std::size_t>(it - rays.begin());
      if (it == rays.end())
        rays.push_back(img);
    }
    std::vector<RaySet> cones;
    for (const auto &s : fused) {
      RaySet c;
      for (auto i : s)
        if (index[i] != Fan::npos)
          c.push_back(index[i]);
      cones.push_back(c);
    }
    res.target = Fan(q.rows(), rays, cones);
    break;
  }
  }
  return res;
}

Fan flip(const Fan &f, const IntVector &r) {
  const std::vector<Wall> ws = walls_in_ray(f, r);
  std::map<RaySet, RaySet> fused; // σ(ω) -> negative block
  for (const auto &w : ws) {
    ContractionResult b = wall_blocks(f, w);
    if (b.kind != ContractionKind::small)
      throw std::invalid_argument("not a small contraction");
    fused.emplace(merge(f.max_cones()[w.left], f.max_cones()[w.right]), b.negative);
  }
  std::vector<RaySet> cones;
  for (const auto &mc : f.max_cones())
    if (std::none_of(fused.begin(), fused.end(), [&](const auto &e) { return is_subset(mc, e.first); }))
      cones.push_back(mc);
  for (const auto &[s, neg] : fused)
    for (auto i : neg) {
      RaySet c;
      for (auto j : s)
        if (j != i)
          c.push_back(j);
      cones.push_back(c);
    }
  return Fan(f.rank(), f.rays(), cones);
}

RelationClass transport_relation(const Fan &from, const Fan &to, const RelationClass &c) {
  RelationClass out{RatVector(to.ray_count())};
  for (std::size_t i = 0; i < from.ray_count(); ++i) {
    const std::size_t j = to.ray_index(from.ray(i));
    if (j == Fan::npos) {
      if (c.coeffs[i] != 0)
        throw std::invalid_argument("relation uses a ray missing from the target fan");
      continue;
    }
    out.coeffs[j] = c.coeffs[i];
  }
  return out;
}

IntVector default_policy(const Fan &, const std::vector<ExtremalRay> &candidates) {
  return candidates.front().n1;
}

MMPTrace run_mmp(const Fan &f, const MMPOptions &options) {
  MMPTrace trace;
  Fan cur = f;
  for (std::size_t step = 0; step < options.max_steps; ++step) {
    std::vector<ExtremalRay> negative;
    for (auto &e : extremal_rays(cur))
      if (e.k_degree < 0)
        negative.push_back(std::move(e));
    if (negative.empty()) {
      trace.steps.push_back({cur, StepKind::nef_end, std::nullopt, {}, cur, std::nullopt});
      return trace;
    }
    IntVector r = options.policy(cur, negative);
    if (std::none_of(negative.begin(), negative.end(), [&](const ExtremalRay &e) { return e.n1 == r; })) {
      (void)walls_in_ray(cur, r);
      throw std::invalid_argument("not a K-negative ray");
    }
    ContractionResult c = contract(cur, r);
    switch (c.kind) {
    case ContractionKind::fiber:
      trace.steps.push_back({cur, StepKind::fiber_end, r, c.contracted_relation, c.target, c.general_fiber});
      return trace;
    case ContractionKind::divisorial:
      trace.steps.push_back({cur, StepKind::divisorial, r, c.contracted_relation, c.target, std::nullopt});
      break;
    case ContractionKind::small:
      trace.steps.push_back({cur, StepKind::flip, r, c.contracted_relation, flip(cur, r), std::nullopt});
      break;
    }
    cur = trace.steps.back().after;
    if (options.audit && (!is_complete(cur) || !is_simplicial(cur)))
      throw std::logic_error("MMP step produced an incomplete or non-simplicial fan");
  }
  throw std::runtime_error("MMP step limit reached");
}

std::size_t MMPCensus::fiber_ends() const {
  std::size_t total = 0;
  for (const auto &e : ends)
    if (e.kind == StepKind::fiber_end)
      total += e.runs;
  return total;
}

std::size_t MMPCensus::distinct_fibers() const {
  std::set<RatVector> rels;
  for (const auto &e : ends)
    if (e.kind == StepKind::fiber_end)
      rels.insert(e.fiber_relation.coeffs);
  return rels.size();
}

namespace {

struct Branch {
  std::map<std::string, MMPEnd> ends;
  std::size_t runs = 0;
};

class CensusWalker {
public:
  CensusWalker(const Fan &input, bool allow_k_trivial) : input_(input), trivial_(allow_k_trivial) {}

  std::vector<ExtremalRay> candidates(const Fan &cur) const {
    std::vector<ExtremalRay> out;
    for (auto &e : extremal_rays(cur))
      if (e.k_degree < 0 || (trivial_ && e.k_degree == 0))
        out.push_back(std::move(e));
    return out;
  }

  Branch explore(const Fan &cur) {
    const std::string key = fan_key(cur);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    Branch out;
    const auto next = candidates(cur);
    if (std::none_of(next.begin(), next.end(), [](const ExtremalRay &e) { return e.k_degree < 0; })) {
      MMPEnd end{StepKind::nef_end, cur.canonical(), std::nullopt, std::nullopt, {}, 0, 1};
      out.ends.emplace(end_key(end), end);
      out.runs = 1;
    }
    path_.insert(key);
    for (const auto &e : next)
      absorb(out, step(cur, e.n1));
    path_.erase(key);
    if (!trivial_)
      memo_.emplace(key, out);
    return out;
  }

  Branch step(const Fan &cur, const IntVector &r) {
    ContractionResult c = contract(cur, r);
    if (c.kind == ContractionKind::fiber) {
      Branch out;
      MMPEnd end{StepKind::fiber_end, cur.canonical(), c.target, c.general_fiber,
                 normalized(transport_relation(cur, input_, c.contracted_relation)), 1, 1};
      out.ends.emplace(end_key(end), end);
      out.runs = 1;
      return out;
    }
    Fan next = c.kind == ContractionKind::divisorial ? c.target : flip(cur, r);
    if (path_.count(fan_key(next)))
      return {};
    Branch sub = explore(next);
    for (auto &[k, e] : sub.ends)
      ++e.steps;
    return sub;
  }

  void enter(const Fan &f) { path_.insert(fan_key(f)); }

  static void absorb(Branch &into, const Branch &from) {
    into.runs += from.runs;
    for (const auto &[k, e] : from.ends) {
      auto [it, fresh] = into.ends.emplace(k, e);
      if (!fresh) {
        it->second.steps = std::min(it->second.steps, e.steps);
        it->second.runs += e.runs;
      }
    }
  }

private:
  const Fan &input_;
  bool trivial_;
  std::map<std::string, Branch> memo_;
  std::set<std::string> path_;
};

} // namespace

MMPCensus mmp_census(const Fan &f, bool allow_k_trivial) {
  CensusWalker root(f, allow_k_trivial);
  const auto first = root.candidates(f);
  Branch all;
  if (std::none_of(first.begin(), first.end(), [](const ExtremalRay &e) { return e.k_degree < 0; }))
  {
    MMPEnd end{StepKind::nef_end, f.canonical(), std::nullopt, std::nullopt, {}, 0, 1};
    all.ends.emplace(end_key(end), end);
    all.runs = 1;
  }
  auto branches = parallel_map<Branch>(first.size(), [&](std::size_t i) {
    CensusWalker w(f, allow_k_trivial);
    w.enter(f);
    return w.step(f, first[i].n1);
  });
  for (const auto &b : branches)
    CensusWalker::absorb(all, b);
  MMPCensus census;
  census.runs = all.runs;
  for (auto &[k, e] : all.ends)
    census.ends.push_back(std::move(e));
  return census;
}

std::vector<MinimalRelation> minimal_relations(const Fan &f) {
  const std::size_t n = f.rank();
  const std::size_t count = f.ray_count();
  std::vector<MinimalRelation> out;
  RaySet cur;
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    for (std::size_t j = start; j < count; ++j) {
      cur.push_back(j);
      const IntMatrix m = columns_of(f, cur);
      if (rank(m) == cur.size()) {
        if (cur.size() <= n)
          extend(j + 1);
      } else {
        const IntVector k = hermite_kernel(m).column(0);
        const bool pos = std::all_of(k.begin(), k.end(), [](const Integer &x) { return x > 0; });
        const bool neg = std::all_of(k.begin(), k.end(), [](const Integer &x) { return x < 0; });
        if (pos || neg) {
          MinimalRelation r{cur, {}};
          const Rational lead(k.front());
          for (const auto &x : k)
            r.coeffs.push_back(Rational(x) / lead);
          out.push_back(std::move(r));
        }
      }
      cur.pop_back();
    }
  };
  extend(0);
  std::sort(out.begin(), out.end(), [](const MinimalRelation &a, const MinimalRelation &b) {
    return a.support < b.support;
  });
  return out;
}

RelationClass to_relation(const Fan &f, const MinimalRelation &m) {
  RelationClass c{RatVector(f.ray_count())};
  for (std::size_t i = 0; i < m.support.size(); ++i)
    c.coeffs[m.support[i]] = m.coeffs[i];
  return c;
}

std::vector<MovRay> mov_extremal_rays(const Fan &f) {
  std::vector<MovRay> out;
  for (auto &m : minimal_relations(f)) {
    IntVector n1 = class_ray(f, to_relation(f, m));
    Fan fiber = relation_fan(f, m.support);
    out.push_back({std::move(m), std::move(n1), std::move(fiber)});
  }
  return out;
}

std::vector<bool> eff_extremal_flags(const Fan &f) {
  const std::size_t rho = picard_number(f);
  const auto rels = minimal_relations(f);
  std::vector<IntVector> classes;
  for (const auto &m : rels)
    classes.push_back(class_ray(f, to_relation(f, m)));
  std::vector<bool> flags;
  for (std::size_t i = 0; i < f.ray_count(); ++i) {
    std::vector<IntVector> avoid;
    for (std::size_t j = 0; j < rels.size(); ++j)
      if (!std::binary_search(rels[j].support.begin(), rels[j].support.end(), i))
        avoid.push_back(classes[j]);
    const std::size_t r = avoid.empty() ? 0 : rank(IntMatrix::from_rows(avoid, rho));
    flags.push_back(r + 1 >= rho);
  }
  return flags;
}

std::vector<bool> eff_extremal_by_cone(const Fan &f) {
  const auto ext = eff_cone(f).extreme_rays();
  std::vector<bool> flags;
  for (std::size_t i = 0; i < f.ray_count(); ++i) {
    IntVector c = primitive(class_of(f, TDivisor::prime(f.ray_count(), i)));
    flags.push_back(std::find(ext.begin(), ext.end(), c) != ext.end());
  }
  return flags;
}

} // namespace toriclab
