#pragma once

#include "toriclab/mmp.hpp"

#include <nlohmann/json.hpp>

#include <istream>
#include <string>

namespace toriclab::io {

using nlohmann::json;

json to_json(const Integer &z);
json to_json(const Rational &q);
json to_json(const IntVector &v);
json to_json(const RatVector &v);
json to_json(const Fan &f);
json to_json(const Polytope &p);
json to_json(const RationalPolytope &p);
json to_json(const Fan &f, const TDivisor &d);

/// Integers and rationals are read from decimal strings or JSON numbers.
Integer integer_from(const json &j);
Rational rational_from(const json &j);
IntVector int_vector_from(const json &j);

/// {"rank", "rays", "max_cones"}; an object with a "fan" key is unwrapped.
Fan fan_from(const json &j);
/// {"dim", "vertices"}; facets are recomputed from the vertices.
Polytope polytope_from(const json &j);
/// {"fan", "coeffs"}.
TDivisor divisor_from(const json &j, const Fan &f);

/// Reads one JSON document; throws std::invalid_argument on malformed input.
json read_json(std::istream &in);

} // namespace toriclab::io
