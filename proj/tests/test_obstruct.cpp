#include <random>

#include "doctest.h"
#include "projline/catalog.hpp"
#include "projline/error.hpp"
#include "projline/obstruct.hpp"

using namespace projline;

namespace {

const ProjPoint inf = ProjPoint::infinity();

PwProjMap gamma_element() {
  MoebiusMap g(2, -1, -1, 1);
  auto fp = fixed_points(g);
  return monod_element({{fp[0], fp[1], g}, {fp[1], fp[0], MoebiusMap()}}, {g}, Ring::Integers);
}

PwProjMap conj(const MoebiusMap& g, const PwProjMap& f) {
  return compose(PwProjMap(g), compose(f, inverse(PwProjMap(g))));
}

FieldContext two() { return make_field(IntPoly{-2, 1}, 1, 3); }

}  // namespace

TEST_CASE("audit") {
  PwProjMap f = gamma_element();
  ObstructionReport r = audit_pair("f", f, "g", conj(MoebiusMap::translation(1), f));
  CHECK_FALSE(r.linked.empty());
  PwProjMap ap = preset_g_lambda(two()).at("a_plus");
  ObstructionReport s = audit_pair("a_plus", ap, "a_plus", ap);
  bool found = false;
  for (const auto& b : s.hyperbolic_breaks)
    if (b.point == ProjPoint(0) && b.left == RealAlgebraic(1) && b.right == RealAlgebraic(2) &&
        b.side == "right-hyperbolic")
      found = true;
  CHECK(found);
  PwProjMap x = preset_lodha_moore().at("x_10");
  CHECK(audit_pair("x", x, "y", conj(MoebiusMap::translation(5), x)).empty());
}

TEST_CASE("germ morphisms") {
  GenSet g = preset_g_lambda(two());
  CHECK(rho(g.at("a_minus"), Side::Plus).is_identity());
  CHECK(rho(g.at("a_plus"), Side::Minus).is_identity());
  PwProjMap com = commutator(g, parse_word("b"), parse_word("a_plus.b.a_plus^-1"));
  CHECK(in_rho_kernel(com, Side::Plus));
  CHECK(in_rho_kernel(com, Side::Minus));
  AffineGerm b = rho(g.at("b"), Side::Minus);
  CHECK(b.slope == RealAlgebraic(1));
  CHECK(b.intercept == RealAlgebraic(1));
}

TEST_CASE("affine presentation") {
  struct Case {
    IntPoly p;
    long lo, hi;
  };
  for (const auto& c : {Case{IntPoly{-2, 1}, 1, 3}, Case{IntPoly{-3, 1}, 2, 4}, Case{IntPoly{-2, 0, 1}, 1, 2},
                        Case{IntPoly{-1, -1, 1}, 1, 2}, Case{IntPoly{-2, 0, 0, 1}, 1, 2}}) {
    FieldContext ctx = make_field(c.p, c.lo, c.hi);
    PresentationReport r = check_affine_presentation(ctx);
    CHECK(r.all_hold());
    Integer s = 0;
    for (const auto& a : c.p.coeffs()) s += a;
    CHECK(r.torsion == abs(s));
  }
  FieldContext q2 = make_field(IntPoly{-2, 0, 1}, 1, 2);
  GenSet g = affine_presentation_gens(q2);
  CHECK(check_relation(g, parse_word("a_hat.b_1.a_hat^-1.b_0^-2")));
}

TEST_CASE("C2 obstruction hypotheses") {
  RealAlgebraic alpha = RealAlgebraic::sqrt(2) - 1;
  PwProjMap f(MoebiusMap::translation(-1));
  NonC2Report r = check_nonc2_hypotheses(f, PwProjMap(MoebiusMap::translation(-alpha)), 0, inf);
  CHECK(r.contraction == Verdict::Holds);
  CHECK(r.commute == Verdict::Holds);
  CHECK(r.rank_two == Verdict::Holds);
  NonC2Report half = check_nonc2_hypotheses(f, PwProjMap(MoebiusMap::translation(Rational(-1, 2))), 0, inf);
  CHECK(half.contraction == Verdict::Holds);
  CHECK(half.rank_two == Verdict::Fails);
  NonC2Report mixed =
      check_nonc2_hypotheses(PwProjMap(MoebiusMap::scaling(Rational(1, 2))), PwProjMap(MoebiusMap::translation(1)), 1);
  CHECK(mixed.commute == Verdict::Fails);
  CHECK_FALSE(mixed.all_hold());
  NonC2Report slopes = check_nonc2_hypotheses(PwProjMap(MoebiusMap::scaling(Rational(1, 2))),
                                              PwProjMap(MoebiusMap::scaling(Rational(1, 3))), 1);
  CHECK(slopes.all_hold());
  NonC2Report powers = check_nonc2_hypotheses(PwProjMap(MoebiusMap::scaling(Rational(1, 4))),
                                              PwProjMap(MoebiusMap::scaling(Rational(1, 8))), 1);
  CHECK(powers.rank_two == Verdict::Fails);
}

TEST_CASE("worked example: rational translation conjugate of c") {
  Rational a(1, 3);
  PwProjMap c = preset_thompson_t().at("c");
  PwProjMap ct = conj(MoebiusMap::translation(a), c);
  MoebiusMap piece(Rational(1 - a), Rational(a * a), -1, Rational(1 + a));
  const Rational end = Rational(1, 2) + a;
  CHECK(ct.pieces()[ct.piece_at(a)].m == piece);
  CHECK(ct.pieces()[ct.piece_left_of(end)].m == piece);
  CHECK(classify(piece) == ConjClass::Parabolic);
  CHECK(piece.apply(a) == ProjPoint(a));
  CHECK_FALSE(is_in_psl2z(piece));
  // the parabolic element of PSL(2,Z) fixing 1/3; its inverse contracts the arc
  MoebiusMap p(-2, 1, -9, 4);
  CHECK(p.apply(a) == ProjPoint(a));
  PwProjMap f(p.inverse());
  CHECK(f.eval(Rational(1, 2)).value() < RealAlgebraic(Rational(1, 2)));
  NonC2Report r = check_nonc2_hypotheses(f, inverse(ct), end, a);
  CHECK(r.contraction == Verdict::Holds);
  CHECK(r.commute == Verdict::Holds);
  // both germs are parabolic at 1/3 with commensurable translation lengths
  CHECK(r.rank_two == Verdict::Fails);
}

TEST_CASE("kernel of both germ morphisms is compact support") {
  std::mt19937_64 rng(8);
  GenSet g = preset_g_lambda(two());
  const std::vector<std::string> names{"a", "a_plus", "a_minus", "b"};
  std::uniform_int_distribution<int> len(1, 4), pick(0, 3), sgn(0, 1);
  for (int i = 0; i < 50; ++i) {
    Word w;
    for (int k = len(rng); k > 0; --k) w.letters.emplace_back(names[static_cast<std::size_t>(pick(rng))], sgn(rng) ? 1 : -1);
    PwProjMap f = eval_word(g, w);
    bool kernel = in_rho_kernel(f, Side::Plus) && in_rho_kernel(f, Side::Minus);
    bool compact = true;
    for (const auto& arc : support(f))
        if (arc.whole || arc.start.is_infinity() || arc.end.is_infinity() || in_open_arc(inf, arc)) compact = false;
    CHECK(kernel == compact);
    PwProjMap h = eval_word(g, w);
    ObstructionReport ab = audit_pair("f", f, "h", conj(MoebiusMap::translation(1), h));
    ObstructionReport ba = audit_pair("h", conj(MoebiusMap::translation(1), h), "f", f);
    CHECK(ab.linked.empty() == ba.linked.empty());
  }
}

TEST_CASE("germ morphisms are homomorphisms") {
  std::mt19937_64 rng(9);
  GenSet g = preset_g_lambda(make_field(IntPoly{-1, -1, 1}, 1, 2));
  const std::vector<std::string> names{"a", "a_plus", "b"};
  std::uniform_int_distribution<int> len(1, 3), pick(0, 2), sgn(0, 1);
  auto word = [&] {
    Word w;
    for (int k = len(rng); k > 0; --k) w.letters.emplace_back(names[static_cast<std::size_t>(pick(rng))], sgn(rng) ? 1 : -1);
    return w;
  };
  for (int i = 0; i < 30; ++i) {
    PwProjMap f = eval_word(g, word()), h = eval_word(g, word());
    for (Side s : {Side::Plus, Side::Minus}) CHECK(rho(compose(f, h), s) == compose(rho(f, s), rho(h, s)));
  }
}
