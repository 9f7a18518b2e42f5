#include <random>

#include "doctest.h"
#include "projline/error.hpp"
#include "projline/number_field.hpp"
#include "projline/real_algebraic.hpp"
#include "projline/verify/oracle.hpp"

using namespace projline;
using verify::BigFloat;

namespace {

RealAlgebraic sqrt_of(long n) { return RealAlgebraic::sqrt(RealAlgebraic(n)); }

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("sturm counts") {
  CHECK(sturm_count(IntPoly{-2, 0, 1}, 0, 2) == 1);
  CHECK(sturm_count(IntPoly{1, 0, 1}, -10, 10) == 0);
  CHECK(sturm_count(IntPoly{-1, 1, 1}, -2, 0) == 1);
}

TEST_CASE("root isolation") {
  auto r = isolate_real_roots(IntPoly{-2, 0, 1});
  REQUIRE(r.size() == 2);
  // each interval brackets its root: sign change of t^2 - 2 across it
  for (int i = 0; i < 2; ++i) {
    const auto& iv = r[static_cast<std::size_t>(i)];
    Rational lo2 = iv.lo * iv.lo - 2, hi2 = iv.hi * iv.hi - 2;
    CHECK(sgn(lo2) * sgn(hi2) < 0);
  }
  CHECK(r[0].lo < 0);
  CHECK(r[1].hi > 0);
  CHECK(isolate_real_roots(IntPoly{1, 0, 1}).empty());
  auto c = isolate_real_roots(IntPoly{0, -1, 0, 1});
  REQUIRE(c.size() == 3);
  for (int i = 0; i < 3; ++i) {
    Rational root(i - 1);
    CHECK(c[static_cast<std::size_t>(i)].lo < root);
    CHECK(root < c[static_cast<std::size_t>(i)].hi);
  }
}

TEST_CASE("real algebraic arithmetic") {
  RealAlgebraic s2 = sqrt_of(2);
  CHECK((s2 + (-s2)).sign() == 0);
  CHECK((s2 + (-s2)).is_rational());
  RealAlgebraic two = s2 * s2;
  CHECK(two.is_rational());
  CHECK(two == RealAlgebraic(2));
  RealAlgebraic phi_minus = (sqrt_of(5) - 1) / 2;
  CHECK(phi_minus > RealAlgebraic(Rational(1, 2)));
  CHECK(phi_minus.annihilator() == IntPoly{-1, 1, 1});
  RealAlgebraic sum = s2 + sqrt_of(3);
  CHECK(sum.annihilator() == IntPoly{1, 0, -10, 0, 1});
  CHECK(sum - sqrt_of(3) == s2);
  CHECK((sum - sqrt_of(3)).annihilator() == IntPoly{-2, 0, 1});
  CHECK(s2.inverse() == s2 / 2);
  CHECK_THROWS_AS(s2 / RealAlgebraic(0), Error);
  CHECK_THROWS_AS(RealAlgebraic::sqrt(RealAlgebraic(-1)), Error);
}

TEST_CASE("from_root validates its interval") {
  CHECK_THROWS_AS(RealAlgebraic::from_root(IntPoly{-2, 0, 1}, -2, 2), Error);
  CHECK_THROWS_AS(RealAlgebraic::from_root(IntPoly{-1, 0, 1}, 1, 2), Error);
  CHECK(RealAlgebraic::from_root(IntPoly{-4, 0, 1}, 1, 3) == RealAlgebraic(2));
}

TEST_CASE("refinement cap is configurable") {
  CHECK(max_bisections() >= 1);
}

TEST_CASE("field elements") {
  FieldContext q2 = make_field(IntPoly{-2, 0, 1}, 1, 2);
  FieldElement r = FieldElement::generator(q2);
  FieldElement one = FieldElement::from_rational(q2, 1);
  CHECK((one + r) * (r - one) == one);
  FieldElement inv = r.inverse();
  CHECK(inv == r / FieldElement::from_rational(q2, 2));
  CHECK(inv.coeffs()[1] == Rational(1, 2));
  FieldContext gold = make_field(IntPoly{-1, -1, 1}, 1, 2);
  FieldElement l = FieldElement::generator(gold);
  CHECK((l - FieldElement::from_rational(gold, 1)).sign() > 0);
  CHECK(l.to_real() == (RealAlgebraic(1) + sqrt_of(5)) / 2);
  CHECK_THROWS_AS(l + r, Error);
  CHECK_THROWS_AS(FieldElement::from_rational(q2, 0).inverse(), Error);
}

TEST_CASE("field contexts reject bad input") {
  CHECK_THROWS_AS(make_field(IntPoly{0, -2, 0, 1}, 1, 2), Error);
  CHECK_THROWS_AS(make_field(IntPoly{-2, 0, 1}, -2, 2), Error);
  CHECK_THROWS_AS(make_field(IntPoly{1, -2, 1}, 0, 2), Error);
  CHECK_THROWS_AS(make_field(IntPoly{-4, 0, 1}, 2, 3), Error);
  CHECK_THROWS_AS(make_field(IntPoly{}, 0, 1), Error);
  CHECK(make_field(IntPoly{-2, 0, 0, 0, 1}, 1, 2)->warnings.size() == 1);
  CHECK(make_field(IntPoly{-2, 0, 0, 1}, 1, 2)->warnings.empty());
}

TEST_CASE("companion matrices") {
  CHECK(companion_matrix(IntPoly{-2, 1}) == RationalMatrix{{2}});
  CHECK(companion_matrix(IntPoly{-1, -1, 1}) == RationalMatrix{{0, 1}, {1, 1}});
  CHECK(companion_matrix(IntPoly{-2, 0, 1}) == RationalMatrix{{0, 2}, {1, 0}});
}

TEST_CASE("multiplication by the generator is the companion matrix") {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<long> c(-9, 9);
  for (auto [p, lo, hi] : {std::tuple{IntPoly{-2, 0, 0, 1}, 1, 2}, std::tuple{IntPoly{-1, -1, 1}, 1, 2},
                           std::tuple{IntPoly{-3, 0, 0, 2}, 1, 2}}) {
    FieldContext ctx = make_field(p, lo, hi);
    RationalMatrix m = companion_matrix(ctx->minpoly);
    for (int k = 0; k < 20; ++k) {
      std::vector<Rational> v;
      for (int i = 0; i < ctx->degree(); ++i) v.emplace_back(make_rational(c(rng), 1 + std::abs(c(rng))));
      FieldElement x(ctx, v);
      FieldElement y = FieldElement::generator(ctx) * x;
      for (int i = 0; i < ctx->degree(); ++i) {
        Rational want = 0;
        for (int j = 0; j < ctx->degree(); ++j)
          want += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
        CHECK(y.coeffs()[static_cast<std::size_t>(i)] == want);
      }
    }
  }
}

TEST_CASE("Galois hyperbolicity") {
  CHECK(is_galois_hyperbolic(IntPoly{-2, 1}));
  CHECK_FALSE(is_galois_hyperbolic(IntPoly{1, 4, 4, 4, 1}));
  CHECK(is_galois_hyperbolic(IntPoly{-2, 0, 1}));
  CHECK_FALSE(is_galois_hyperbolic(IntPoly{-1, 1}));
  CHECK_FALSE(is_galois_hyperbolic(IntPoly{1, 1}));
  // palindromic with real roots off the circle
  CHECK(is_galois_hyperbolic(IntPoly{1, -3, 1}));
  CHECK_FALSE(is_galois_hyperbolic(IntPoly{1, -1, -1, -1, 1}));
}

TEST_CASE("abelianization torsion") {
  CHECK(abelianization_torsion(IntPoly{-2, 1}) == 1);
  CHECK(abelianization_torsion(IntPoly{-3, 1}) == 2);
  CHECK(abelianization_torsion(IntPoly{-1, -1, 1}) == 1);
  CHECK(abelianization_torsion(IntPoly{-2, 0, 0, 1}) == 1);
  CHECK_THROWS_AS(abelianization_torsion(IntPoly{-1, 1}), Error);
}

TEST_CASE("root counts match the float oracle on random polynomials") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> coeff(-9, 9), deg(1, 6);
  int done = 0;
  while (done < 200) {
    long d = deg(rng);
    std::vector<Integer> c;
    for (long j = 0; j <= d; ++j) c.emplace_back(coeff(rng));
    IntPoly p(c);
    if (p.degree() < 1 || !(p.squarefree() == p.primitive())) continue;
    ++done;
    CHECK(static_cast<int>(isolate_real_roots(p).size()) == verify::real_root_count(p));
  }
}

TEST_CASE("exact arithmetic matches 100-digit evaluation") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> kind(0, 3), op(0, 3);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
  auto leaf = [&]() -> std::pair<RealAlgebraic, BigFloat> {
    switch (kind(rng)) {
      case 0: return {sqrt_of(2), sqrt(BigFloat(2))};
      case 1: return {sqrt_of(5), sqrt(BigFloat(5))};
      case 2: return {(1 + sqrt_of(5)) / 2, (1 + sqrt(BigFloat(5))) / 2};
      default: {
        Rational q = make_rational(num(rng), den(rng));
        return {RealAlgebraic(q), verify::to_big(q)};
      }
    }
  };
  for (int i = 0; i < 500; ++i) {
    auto [x, fx] = leaf();
    auto [y, fy] = leaf();
    auto [z, fz] = leaf();
    RealAlgebraic e;
    BigFloat f;
    switch (op(rng)) {
      case 0: e = x * y + z, f = fx * fy + fz; break;
      case 1: e = (x - y) * z, f = (fx - fy) * fz; break;
      case 2: e = x + y - z, f = fx + fy - fz; break;
      default:
        if (z.sign() == 0) continue;
        e = (x + y) / z, f = (fx + fy) / fz;
    }
    Interval iv = e.refined(Rational(1, Integer("1000000000000000000000000000000"))).interval();
    BigFloat slack("1e-60");
    CHECK(verify::to_big(iv.lo) - slack <= f);
    CHECK(f <= verify::to_big(iv.hi) + slack);
  }
}

TEST_CASE("comparison is a total order") {
  std::vector<RealAlgebraic> xs{sqrt_of(2), -sqrt_of(2), sqrt_of(3) - 1, RealAlgebraic(Rational(7, 5)),
                                (1 + sqrt_of(5)) / 2, RealAlgebraic(0), sqrt_of(2) + sqrt_of(3),
                                RealAlgebraic(Rational(3, 2)), sqrt_of(5) - sqrt_of(2), sqrt_of(2) / 2};
  for (const auto& a : xs)
    for (const auto& b : xs) {
      CHECK(((a <=> b) < 0) == ((b <=> a) > 0));
      CHECK(((a <=> b) == 0) == (a == b));
      for (const auto& c : xs)
        if (a < b && b < c) CHECK(a < c);
    }
}
