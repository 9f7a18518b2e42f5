#include "doctest.h"
#include "projline/error.hpp"
#include "projline/json_io.hpp"

using namespace projline;
namespace pj = projline::json;

TEST_CASE("JSON round trips") {
  FieldContext ctx = make_field(IntPoly{-2, 0, 1}, 1, 2);
  RealAlgebraic r = ctx->root() + 1;
  CHECK(pj::to_json(pj::rational_from(pj::to_json(Rational(-7, 3)))) == pj::to_json(Rational(-7, 3)));
  CHECK(pj::poly_from(pj::to_json(IntPoly{1, 4, 4, 4, 1})) == IntPoly{1, 4, 4, 4, 1});
  CHECK(pj::real_from(pj::to_json(r)) == r);
  CHECK(pj::to_json(pj::real_from(pj::to_json(r))) == pj::to_json(r));
  CHECK(pj::point_from(pj::to_json(ProjPoint::infinity())).is_infinity());
  MoebiusMap m(RealAlgebraic::sqrt(2), 1, 0, 1);
  CHECK(pj::moebius_from(pj::to_json(m)) == m);
  for (const char* name : {"thompson_t", "lodha_moore"}) {
    GenSet g = preset(name);
    GenSet back = pj::genset_from(pj::to_json(g));
    CHECK(pj::to_json(back) == pj::to_json(g));
    for (const auto& [k, f] : g.table) CHECK(back.at(k) == f);
  }
  GenSet gl = preset("g_lambda", ctx);
  GenSet back = pj::genset_from(pj::to_json(gl));
  CHECK(pj::to_json(back).dump() == pj::to_json(gl).dump());
  CHECK(pj::to_json(pj::context_from(pj::to_json(ctx))) == pj::to_json(ctx));
}

TEST_CASE("JSON input errors") {
  CHECK_THROWS_AS(pj::poly_from(pj::json::parse("[1, 0.5]")), Error);
  CHECK_THROWS_AS(pj::moebius_from(pj::json::parse("[[1,2],[3]]")), Error);
  CHECK_THROWS_AS(pj::pwmap_from(pj::json::parse("{}")), Error);
  CHECK(pj::poly_from(pj::json("[-2,1]")) == IntPoly{-2, 1});
  CHECK(pj::element_from(pj::json::parse("[[1,1],[0,1]]")) == PwProjMap(MoebiusMap::translation(1)));
}
