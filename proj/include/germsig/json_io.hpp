#pragma once

#include <json.hpp>

#include "germsig/coverrep.hpp"
#include "germsig/exact.hpp"
#include "germsig/gsign.hpp"
#include "germsig/localsig.hpp"
#include "germsig/symplectic.hpp"

namespace germsig {

using Json = nlohmann::json;

// Rationals are strings "p/q" (or "p"); integers are also accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json integer_to_json(const Integer& z);  // number when it fits, else string
Integer integer_from_json(const Json& j);

Json angle_to_json(const Angle& a);
Angle angle_from_json(const Json& j);

Json algreal_to_json(const AlgReal& x);

// {g, rows}; validated with check_symplectic.
Json matrix_to_json(const SpMatrix& a);
SpMatrix matrix_from_json(const Json& j);

Json fixed_point_data_to_json(const FixedPointData& fp);
FixedPointData fixed_point_data_from_json(const Json& j);
Json group_action_to_json(const GroupActionData& gd);
GroupActionData group_action_from_json(const Json& j);
Json germ_to_json(const GermData& g);
GermData germ_from_json(const Json& j);

// Malformed documents raise Error("ParseError").

}  // namespace germsig
