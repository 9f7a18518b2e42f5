#pragma once

#include "json.hpp"

#include "projline/catalog.hpp"
#include "projline/flow.hpp"
#include "projline/number_field.hpp"
#include "projline/obstruct.hpp"
#include "projline/pwmap.hpp"
#include "projline/treemodel.hpp"

namespace projline::json {

using nlohmann::json;

json to_json(const Rational& q);
json to_json(const IntPoly& p);
// "p/q" for rationals; {"poly", "lo", "hi", "approx"} otherwise.
json to_json(const RealAlgebraic& x);
json to_json(const ProjPoint& p);
json to_json(const MoebiusMap& m);
json to_json(const PwProjMap& f);
json to_json(const FieldContext& ctx);
json to_json(const FieldElement& x);
json to_json(const Arc& a);
json to_json(const FixedSet& s);
json to_json(const Defect& d);
json to_json(const LinkedConfig& c);
json to_json(const AffineGerm& g);
json to_json(const ObstructionReport& r);
json to_json(const PresentationReport& r);
json to_json(const NonC2Report& r);
json to_json(const Mat2& m);
json to_json(const GenSet& g);

Rational rational_from(const json& j);
IntPoly poly_from(const json& j);
RealAlgebraic real_from(const json& j);
ProjPoint point_from(const json& j);
MoebiusMap moebius_from(const json& j);
PwProjMap pwmap_from(const json& j);
FieldContext context_from(const json& j);
// {"name", "context"?, "generators": {name: map or matrix}}
GenSet genset_from(const json& j);
// Accepts a bare matrix ({"m": ...} or [[..],[..]]) or a piecewise map.
PwProjMap element_from(const json& j);

}  // namespace projline::json
