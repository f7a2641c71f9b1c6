#include "io.hpp"

#include <stdexcept>

namespace toriclab::io {

json to_json(const Integer &z) { return z.get_str(); }

json to_json(const Rational &q) { return toriclab::to_string(q); }

json to_json(const IntVector &v) {
  json a = json::array();
  for (const auto &x : v)
    a.push_back(to_json(x));
  return a;
}

json to_json(const RatVector &v) {
  json a = json::array();
  for (const auto &x : v)
    a.push_back(to_json(x));
  return a;
}

json to_json(const Fan &f) {
  json rays = json::array();
  for (const auto &r : f.rays())
    rays.push_back(to_json(r));
  return {{"rank", f.rank()}, {"rays", rays}, {"max_cones", f.max_cones()}};
}

json to_json(const Polytope &p) {
  json verts = json::array();
  for (const auto &v : p.vertices())
    verts.push_back(to_json(v));
  json facets = json::array();
  for (const auto &f : p.facets())
    facets.push_back({{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}});
  return {{"dim", p.dim()}, {"vertices", verts}, {"facets", facets}};
}

json to_json(const RationalPolytope &p) {
  json verts = json::array();
  for (const auto &v : p.vertices())
    verts.push_back(to_json(v));
  return {{"ambient", p.ambient()}, {"dim", p.dimension()}, {"vertices", verts}};
}

json to_json(const Fan &f, const TDivisor &d) { return {{"fan", to_json(f)}, {"coeffs", to_json(d.coeffs)}}; }

Integer integer_from(const json &j) {
  if (j.is_number_integer())
    return Integer(std::to_string(j.get<long long>()));
  if (!j.is_string())
    throw std::invalid_argument("expected an integer");
  try {
    return Integer(j.get<std::string>());
  } catch (const std::invalid_argument &) {
    throw std::invalid_argument("malformed integer '" + j.get<std::string>() + "'");
  }
}

Rational rational_from(const json &j) {
  if (j.is_number_integer())
    return Rational(integer_from(j));
  if (!j.is_string())
    throw std::invalid_argument("expected a rational");
  return parse_rational(j.get<std::string>());
}

IntVector int_vector_from(const json &j) {
  if (!j.is_array())
    throw std::invalid_argument("expected an integer array");
  IntVector v;
  for (const auto &x : j)
    v.push_back(integer_from(x));
  return v;
}

namespace {

const json &field(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

} // namespace

Fan fan_from(const json &j) {
  if (j.is_object() && j.contains("fan"))
    return fan_from(j.at("fan"));
  const std::size_t rank = field(j, "rank").get<std::size_t>();
  std::vector<IntVector> rays;
  for (const auto &r : field(j, "rays"))
    rays.push_back(int_vector_from(r));
  std::vector<RaySet> cones;
  for (const auto &c : field(j, "max_cones"))
    cones.push_back(c.get<RaySet>());
  return Fan(rank, rays, cones);
}

Polytope polytope_from(const json &j) {
  const std::size_t dim = field(j, "dim").get<std::size_t>();
  std::vector<IntVector> verts;
  for (const auto &v : field(j, "vertices"))
    verts.push_back(int_vector_from(v));
  return facets_from_vertices(verts, dim);
}

TDivisor divisor_from(const json &j, const Fan &f) {
  RatVector c;
  for (const auto &x : field(j, "coeffs"))
    c.push_back(rational_from(x));
  if (c.size() != f.ray_count())
    throw std::invalid_argument("divisor has the wrong number of coefficients");
  return TDivisor(c);
}

json read_json(std::istream &in) {
  try {
    return json::parse(in);
  } catch (const json::exception &e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

} // namespace toriclab::io
