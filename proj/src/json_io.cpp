#include "projline/json_io.hpp"

#include "projline/error.hpp"

namespace projline::json {

namespace {

[[noreturn]] void bad(const std::string& what, const json& j) {
  throw Error(Errc::ParseError, what + ": " + j.dump());
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

json to_json(const IntPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) {
    if (c.fits_slong_p()) arr.push_back(c.get_si());
    else arr.push_back(c.get_str());
  }
  return arr;
}

json to_json(const RealAlgebraic& x) {
  if (x.is_rational()) return to_json(x.rational());
  Interval iv = x.interval();
  return {{"poly", to_json(x.annihilator())}, {"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}, {"approx", x.to_decimal(12)}};
}

json to_json(const ProjPoint& p) { return p.is_infinity() ? json("inf") : to_json(p.value()); }

json to_json(const MoebiusMap& m) {
  json rows = json::array({json::array({to_json(m.a()), to_json(m.b())}), json::array({to_json(m.c()), to_json(m.d())})});
  return {{"m", rows}};
}

json to_json(const PwProjMap& f) {
  json pieces = json::array();
  for (const auto& p : f.pieces())
    pieces.push_back({{"from", to_json(p.from)}, {"to", to_json(p.to)}, {"m", to_json(p.m)["m"]}});
  return {{"pieces", pieces}};
}

json to_json(const FieldContext& ctx) {
  return {{"minpoly", to_json(ctx->minpoly)}, {"lo", to_json(ctx->root_interval.lo)}, {"hi", to_json(ctx->root_interval.hi)}};
}

json to_json(const FieldElement& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_json(c));
  return {{"context", to_json(x.context())}, {"coeffs", coeffs}};
}

json to_json(const Arc& a) {
  if (a.whole) return {{"whole", true}};
  return {{"start", to_json(a.start)}, {"end", to_json(a.end)}};
}

json to_json(const FixedSet& s) {
  json comps = json::array();
  for (const auto& c : s.components) {
    if (c.is_point()) comps.push_back({{"point", to_json(c.start)}});
    else comps.push_back({{"arc", json::array({to_json(c.start), to_json(c.end)})}});
  }
  return {{"whole_circle", s.whole_circle}, {"components", comps}};
}

json to_json(const Defect& d) {
  return {{"point", to_json(d.point)}, {"left", to_json(d.left)}, {"right", to_json(d.right)}};
}

json to_json(const LinkedConfig& c) {
  return {{"a", to_json(c.a)}, {"b", to_json(c.b)}, {"c", to_json(c.c)}, {"d", to_json(c.d)},
          {"doubly_linked", c.doubly_linked}};
}

json to_json(const AffineGerm& g) { return {{"slope", to_json(g.slope)}, {"intercept", to_json(g.intercept)}}; }

json to_json(const ObstructionReport& r) {
  json linked = json::array(), breaks = json::array();
  for (const auto& l : r.linked) {
    json item = to_json(l.config);
    item["first"] = l.first;
    item["second"] = l.second;
    linked.push_back(item);
  }
  for (const auto& b : r.hyperbolic_breaks)
    breaks.push_back({{"element", b.element}, {"point", to_json(b.point)}, {"left", to_json(b.left)},
                      {"right", to_json(b.right)}, {"side", b.side}});
  return {{"linked", linked}, {"hyperbolic_breaks", breaks}, {"notes", r.notes}};
}

json to_json(const PresentationReport& r) {
  json rels = json::array();
  for (const auto& [w, ok] : r.relations_checked) rels.push_back({{"relation", w}, {"holds", ok}});
  return {{"relations", rels}, {"torsion", r.torsion.get_str()}, {"all_hold", r.all_hold()}};
}

json to_json(const NonC2Report& r) {
  return {{"contraction", verdict_name(r.contraction)},
          {"commute", verdict_name(r.commute)},
          {"rank_two", verdict_name(r.rank_two)},
          {"exponent_bound", r.exponent_bound},
          {"details", r.details},
          {"all_hold", r.all_hold()}};
}

json to_json(const Mat2& m) { return json::array({json::array({m[0], m[1]}), json::array({m[2], m[3]})}); }

json to_json(const GenSet& g) {
  json gens = json::object();
  for (const auto& [name, f] : g.table) gens[name] = to_json(f);
  json out{{"name", g.name}, {"generators", gens}};
  if (g.context) out["context"] = to_json(g.context);
  return out;
}

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("expected a rational", j);
}

IntPoly poly_from(const json& j) {
  json arr = j;
  if (j.is_string()) {
    try {
      arr = json::parse(j.get<std::string>());
    } catch (const json::exception&) {
      bad("expected an integer array", j);
    }
  }
  if (!arr.is_array()) bad("expected an integer array", j);
  std::vector<Integer> coeffs;
  for (const auto& c : arr) {
    if (c.is_number_integer()) coeffs.emplace_back(std::to_string(c.get<long long>()));
    else if (c.is_string()) {
      Rational q = parse_rational(c.get<std::string>());
      if (q.get_den() != 1) bad("polynomial coefficients must be integers", j);
      coeffs.push_back(q.get_num());
    } else {
      bad("polynomial coefficients must be integers", j);
    }
  }
  return IntPoly(coeffs);
}

RealAlgebraic real_from(const json& j) {
  if (j.is_object()) {
    if (!j.contains("poly") || !j.contains("lo") || !j.contains("hi")) bad("expected {poly, lo, hi}", j);
    return RealAlgebraic::from_root(poly_from(j["poly"]), rational_from(j["lo"]), rational_from(j["hi"]));
  }
  return RealAlgebraic(rational_from(j));
}

ProjPoint point_from(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf" || s == "infinity" || s == "∞") return ProjPoint::infinity();
  }
  return ProjPoint(real_from(j));
}

MoebiusMap moebius_from(const json& j) {
  const json& m = j.is_object() && j.contains("m") ? j["m"] : j;
  if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 || m[1].size() != 2)
    bad("expected a 2x2 matrix", j);
  return MoebiusMap(real_from(m[0][0]), real_from(m[0][1]), real_from(m[1][0]), real_from(m[1][1]));
}

PwProjMap pwmap_from(const json& j) {
  if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_array()) bad("expected {pieces: [...]}", j);
  std::vector<Piece> pieces;
  for (const auto& p : j["pieces"]) {
    if (!p.contains("from") || !p.contains("to") || !p.contains("m")) bad("piece needs from, to, m", p);
    pieces.push_back({point_from(p["from"]), point_from(p["to"]), moebius_from(p["m"])});
  }
  return PwProjMap::build(std::move(pieces));
}

PwProjMap element_from(const json& j) {
  if (j.is_object() && j.contains("pieces")) return pwmap_from(j);
  return PwProjMap(moebius_from(j));
}

FieldContext context_from(const json& j) {
  if (!j.is_object() || !j.contains("minpoly") || !j.contains("lo") || !j.contains("hi"))
    bad("expected {minpoly, lo, hi}", j);
  return make_field(poly_from(j["minpoly"]), rational_from(j["lo"]), rational_from(j["hi"]));
}

GenSet genset_from(const json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_object()) bad("expected {generators: {...}}", j);
  GenSet g;
  g.name = j.value("name", std::string("custom"));
  if (j.contains("context")) g.context = context_from(j["context"]);
  for (const auto& [name, f] : j["generators"].items()) g.table.emplace(name, element_from(f));
  return g;
}

}  // namespace projline::json
