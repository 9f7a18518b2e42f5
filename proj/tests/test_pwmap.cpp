#include <random>

#include "doctest.h"
#include "projline/catalog.hpp"
#include "projline/error.hpp"
#include "projline/pwmap.hpp"

using namespace projline;

namespace {

const ProjPoint inf = ProjPoint::infinity();

GenSet g2() { return preset_g_lambda(make_field(IntPoly{-2, 1}, 1, 3)); }

PwProjMap gamma_element() {
  MoebiusMap g(2, -1, -1, 1);
  auto fp = fixed_points(g);
  return PwProjMap::build({{fp[0], fp[1], g}, {fp[1], fp[0], MoebiusMap()}});
}

PwProjMap conj(const MoebiusMap& g, const PwProjMap& f) {
  return compose(PwProjMap(g), compose(f, inverse(PwProjMap(g))));
}

}  // namespace

TEST_CASE("build") {
  GenSet t = preset_thompson_t();
  CHECK(t.at("c").pieces().size() == 4);
  PwProjMap x = PwProjMap::build({{0, Rational(1, 3), MoebiusMap(1, 0, -1, 1)},
                                  {Rational(1, 3), Rational(1, 2), MoebiusMap(4, -1, 5, -1)},
                                  {Rational(1, 2), 1, MoebiusMap(0, 1, -1, 2)},
                                  {1, 0, MoebiusMap()}});
  CHECK(x.eval(Rational(1, 3)) == ProjPoint(Rational(1, 2)));
  CHECK(x.pieces()[x.piece_left_of(Rational(1, 3))].m.apply(Rational(1, 3)) == ProjPoint(Rational(1, 2)));
  CHECK(x == preset_lodha_moore().at("x_10"));
  try {
    PwProjMap::build({{inf, 0, MoebiusMap()}, {0, inf, MoebiusMap::translation(1)}});
    FAIL("expected a continuity violation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ContinuityViolation);
  }
  CHECK_THROWS_AS(PwProjMap::build({{0, 1, MoebiusMap()}, {2, 0, MoebiusMap()}}), Error);
}

TEST_CASE("eval, compose, inverse") {
  PwProjMap c = preset_thompson_t().at("c");
  CHECK(c.eval(Rational(1, 2)) == ProjPoint(1));
  CHECK(MoebiusMap(1, 0, -1, 1).apply(Rational(1, 2)) == ProjPoint(1));
  CHECK(MoebiusMap(3, -1, 1, 0).apply(Rational(1, 2)) == ProjPoint(1));
  CHECK(compose(c, inverse(c)).is_identity());
  GenSet g = g2();
  PwProjMap ba = compose(g.at("b"), g.at("a_plus")), ab = compose(g.at("a_plus"), g.at("b"));
  CHECK_FALSE(ba == ab);
  CHECK(ba.eval(1) == ProjPoint(3));
  CHECK(ab.eval(1) == ProjPoint(4));
}

TEST_CASE("breakpoints and derivatives") {
  PwProjMap c = preset_thompson_t().at("c");
  auto bp = c.breakpoints();
  REQUIRE(bp.size() == 4);
  CHECK(bp[0] == ProjPoint(0));
  CHECK(bp[1] == ProjPoint(Rational(1, 2)));
  CHECK(bp[2] == ProjPoint(1));
  CHECK(bp[3] == inf);
  OneSided h = one_sided_derivatives(c, Rational(1, 2));
  CHECK(h.left == RealAlgebraic(4));
  CHECK(h.right == RealAlgebraic(4));
  PwProjMap d = preset_lodha_moore().at("d");
  OneSided d0 = one_sided_derivatives(d, 0);
  CHECK(d0.left == RealAlgebraic(1));
  CHECK(d0.right == RealAlgebraic(2));
}

TEST_CASE("C1 defects") {
  PwProjMap c = preset_thompson_t().at("c");
  // c is C1 on the whole circle, including at infinity
  CHECK(c1_defect_points(c).empty());
  auto dd = c1_defect_points(preset_lodha_moore().at("d"));
  REQUIRE(dd.size() == 2);
  CHECK(dd[0].point == ProjPoint(0));
  CHECK(dd[0].left == RealAlgebraic(1));
  CHECK(dd[0].right == RealAlgebraic(2));
  CHECK(dd[1].point == ProjPoint(1));
  CHECK(dd[1].left == RealAlgebraic(Rational(1, 2)));
  CHECK(dd[1].right == RealAlgebraic(1));
  CHECK(c1_defect_points(PwProjMap()).empty());
}

TEST_CASE("fixed sets and supports") {
  GenSet g = g2();
  PwProjMap f1 = compose(inverse(g.at("b")), compose(g.at("a_plus"), g.at("b")));
  auto s1 = support(f1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].start == ProjPoint(-1));
  CHECK(s1[0].end == inf);
  PwProjMap f2 = compose(g.at("b"), compose(g.at("a_minus"), inverse(g.at("b"))));
  auto s2 = support(f2);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].start == inf);
  CHECK(s2[0].end == ProjPoint(1));
  FixedSet id = fixed_set(PwProjMap());
  CHECK(id.whole_circle);
  CHECK(support(PwProjMap()).empty());
}

TEST_CASE("successive fixed pairs") {
  auto p = successive_fixed_pairs(gamma_element());
  REQUIRE(p.size() == 1);
  CHECK(p[0].first.value().annihilator() == IntPoly{-1, 1, 1});
  CHECK(p[0].second.value().annihilator() == IntPoly{-1, 1, 1});
  CHECK(p[0].first.value() < p[0].second.value());
  auto ap = successive_fixed_pairs(g2().at("a_plus"));
  REQUIRE(ap.size() == 1);
  CHECK(ap[0].first == ProjPoint(0));
  CHECK(ap[0].second == inf);
  auto sp = successive_fixed_pairs(PwProjMap(MoebiusMap::scaling(2)));
  REQUIRE(sp.size() == 2);
  CHECK(sp[0].first == ProjPoint(0));
  CHECK(sp[0].second == inf);
  CHECK(sp[1].first == inf);
  CHECK(sp[1].second == ProjPoint(0));
  CHECK_THROWS_AS(successive_fixed_pairs(PwProjMap()), Error);
}

TEST_CASE("linked pairs") {
  PwProjMap f = gamma_element();
  PwProjMap g = conj(MoebiusMap::translation(1), f);
  auto l = linked_pairs(f, g);
  REQUIRE(l.size() == 1);
  CHECK(l[0].c == ProjPoint(l[0].a.value() + 1));
  GenSet g2s = g2();
  CHECK(linked_pairs(g2s.at("a_plus"), g2s.at("a_minus")).empty());
  PwProjMap x = preset_lodha_moore().at("x_10");
  CHECK(linked_pairs(x, conj(MoebiusMap::translation(5), x)).empty());
  auto m = linked_pairs(g, f);
  CHECK(m.size() == l.size());
}

TEST_CASE("germs") {
  for (auto [p, lo, hi] : {std::tuple{IntPoly{-2, 1}, 1, 3}, std::tuple{IntPoly{-2, 0, 1}, 1, 2}}) {
    FieldContext ctx = make_field(p, lo, hi);
    GenSet g = preset_g_lambda(ctx);
    AffineGerm ap = germ_at(g.at("a_plus"), Side::Plus);
    CHECK(ap.slope == ctx->root());
    CHECK(ap.intercept.sign() == 0);
    CHECK(germ_at(g.at("a_plus"), Side::Minus).is_identity());
    CHECK(germ_at(g.at("a_minus"), Side::Plus).is_identity());
    AffineGerm b = germ_at(g.at("b"), Side::Plus);
    CHECK(b.slope == RealAlgebraic(1));
    CHECK(b.intercept == RealAlgebraic(1));
    PwProjMap com = commutator(g, parse_word("b"), parse_word("a_plus.b.a_plus^-1"));
    CHECK(germ_at(com, Side::Plus).is_identity());
    CHECK(germ_at(com, Side::Minus).is_identity());
  }
  CHECK_THROWS_AS(germ_at(preset_thompson_t().at("a"), Side::Plus), Error);
}

TEST_CASE("splitting and compact support") {
  FieldContext ctx = make_field(IntPoly{-2, 0, 1}, 1, 2);
  GenSet g = preset_g_lambda(ctx);
  CHECK(split_at_fixed_point(g.at("a"), 0) == g.at("a_plus"));
  CHECK_THROWS_AS(split_at_fixed_point(g.at("a"), 1), Error);
  PwProjMap com = commutator(g, parse_word("b"), parse_word("a_plus.b.a_plus^-1"));
  auto sup = support(com);
  REQUIRE_FALSE(sup.empty());
  // the arc from the first to the last support endpoint
  ProjPoint lo = sup.front().start, hi = sup.back().end;
  CHECK(is_identity_outside(com, Arc{lo, hi}));
  CHECK_FALSE(is_identity_outside(com, Arc{hi, lo}));
}

TEST_CASE("group laws, chain rule and equivariance on random words") {
  std::mt19937_64 rng(4);
  GenSet t = preset_thompson_t();
  const std::vector<std::string> names{"a", "b", "c", "shift"};
  std::uniform_int_distribution<int> len(1, 3), pick(0, 3), sgn(0, 1);
  auto word = [&] {
    Word w;
    for (int i = len(rng); i > 0; --i) w.letters.emplace_back(names[static_cast<std::size_t>(pick(rng))], sgn(rng) ? 1 : -1);
    return w;
  };
  for (int i = 0; i < 50; ++i) {
    PwProjMap f = eval_word(t, word()), g = eval_word(t, word()), h = eval_word(t, word());
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(inverse(f), f).is_identity());
    PwProjMap fg = compose(f, g);
    for (const auto& p : g.breakpoints()) {
      OneSided a = one_sided_derivatives(fg, p), b = one_sided_derivatives(g, p),
               c = one_sided_derivatives(f, g.eval(p));
      CHECK(a.left == c.left * b.left);
      CHECK(a.right == c.right * b.right);
    }
    for (const auto& p : fg.breakpoints()) CHECK(fg.eval(p) == f.eval(g.eval(p)));
    MoebiusMap m(2, 1, 1, 1);
    FixedSet fs = fixed_set(f), cs = fixed_set(conj(m, f));
    REQUIRE(fs.components.size() == cs.components.size());
    for (const auto& comp : fs.components) {
      ProjPoint s = m.apply(comp.start), e = m.apply(comp.end);
      bool found = false;
      for (const auto& d : cs.components) found = found || (d.start == s && d.end == e);
      CHECK(found);
    }
    if (f.is_identity() || g.is_identity()) continue;
    auto l1 = linked_pairs(f, g), l2 = linked_pairs(g, f);
    CHECK(l1.size() == l2.size());
  }
}

TEST_CASE("sampling") {
  auto rows = sample(preset_thompson_t().at("c"), 5, -1, 1, 6);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].first == "-1.000000");
  CHECK(rows[4].second == "2.000000");
}
