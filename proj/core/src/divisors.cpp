#include "toriclab/divisors.hpp"

#include <stdexcept>

namespace toriclab {

TDivisor TDivisor::prime(std::size_t count, std::size_t i) {
  RatVector c(count);
  c.at(i) = 1;
  return TDivisor(c);
}

TDivisor operator+(const TDivisor &a, const TDivisor &b) {
  if (a.coeffs.size() != b.coeffs.size())
    throw std::invalid_argument("divisors live on different fans");
  return TDivisor(add(a.coeffs, b.coeffs));
}

TDivisor operator*(const Rational &s, const TDivisor &d) { return TDivisor(scale(d.coeffs, s)); }

TDivisor divisor_of_character(const Fan &f, const RatVector &u) {
  if (u.size() != f.rank())
    throw std::invalid_argument("character has wrong length");
  RatVector c;
  for (const auto &v : f.rays())
    c.push_back(dot(v, u));
  return TDivisor(c);
}

TDivisor divisor_of_character(const Fan &f, const IntVector &u) {
  return divisor_of_character(f, to_rational(u));
}

TDivisor canonical_divisor(const Fan &f) { return TDivisor(RatVector(f.ray_count(), Rational(-1))); }

IntMatrix relation_basis(const Fan &f) { return hermite_kernel(f.ray_matrix()); }

RatVector class_of(const Fan &f, const TDivisor &d) {
  if (d.coeffs.size() != f.ray_count())
    throw std::invalid_argument("divisor has wrong length");
  return to_rational(relation_basis(f).transpose()) * d.coeffs;
}

std::size_t picard_number(const Fan &f) { return relation_basis(f).cols(); }

std::optional<RationalPolytope> polytope_of_divisor(const Fan &f, const TDivisor &d) {
  if (d.coeffs.size() != f.ray_count())
    throw std::invalid_argument("divisor has wrong length");
  std::vector<RationalFacet> system;
  for (std::size_t i = 0; i < f.ray_count(); ++i)
    system.push_back(RationalFacet{f.ray(i), d.coeffs[i]});
  return vertices_from_facets(system, f.rank());
}

TDivisor divisor_of_polytope(const Polytope &p) {
  RatVector c;
  for (const auto &facet : p.facets())
    c.push_back(Rational(facet.offset));
  return TDivisor(c);
}

CartierData cartier_data(const Fan &f, const TDivisor &d) {
  if (d.coeffs.size() != f.ray_count())
    throw std::invalid_argument("divisor has wrong length");
  CartierData out;
  out.is_cartier = true;
  for (const auto &c : f.max_cones()) {
    std::vector<RatVector> rows;
    RatVector rhs;
    for (auto i : c) {
      rows.push_back(to_rational(f.ray(i)));
      rhs.push_back(-d.coeffs[i]);
    }
    auto u = rat_solve(RatMatrix::from_rows(rows, f.rank()), rhs);
    if (!u)
      throw std::domain_error("not Q-Cartier here");
    if (!toriclab::is_integral(*u))
      out.is_cartier = false;
    out.local_data.push_back(*u);
  }
  return out;
}

} // namespace toriclab
