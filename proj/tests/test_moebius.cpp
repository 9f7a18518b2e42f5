#include <random>

#include "doctest.h"
#include "projline/error.hpp"
#include "projline/moebius.hpp"

using namespace projline;

namespace {

const ProjPoint inf = ProjPoint::infinity();
const MoebiusMap gamma_(2, -1, -1, 1);

RealAlgebraic golden_conj() { return (RealAlgebraic::sqrt(5) - 1) / 2; }

MoebiusMap random_map(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> e(-6, 6);
  while (true) {
    long a = e(rng), b = e(rng), c = e(rng), d = e(rng);
    if (a * d - b * c > 0) return MoebiusMap(a, b, c, d);
  }
}

ProjPoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> n(-20, 20), d(1, 7), k(0, 9);
  if (k(rng) == 0) return inf;
  return ProjPoint(make_rational(n(rng), d(rng)));
}

}  // namespace

TEST_CASE("apply") {
  CHECK(MoebiusMap(1, 1, 0, 1).apply(0) == ProjPoint(1));
  CHECK(gamma_.apply(0) == ProjPoint(-1));
  CHECK(MoebiusMap(1, 0, 1, 1).apply(inf) == ProjPoint(1));
  CHECK(MoebiusMap(1, 0, 1, 1).apply(-1) == inf);
  CHECK(MoebiusMap::translation(3).apply(inf) == inf);
}

TEST_CASE("compose and inverse") {
  CHECK(compose(MoebiusMap::translation(1), MoebiusMap::translation(-1)).is_identity());
  CHECK(MoebiusMap(2, 0, 0, 1).inverse() == MoebiusMap(1, 0, 0, 2));
  CHECK(compose(MoebiusMap::scaling(2), MoebiusMap::translation(1)).apply(0) == ProjPoint(2));
  CHECK(MoebiusMap(2, 4, 6, 14) == MoebiusMap(1, 2, 3, 7));
  CHECK(MoebiusMap(-1, 0, 0, -1).is_identity());
  CHECK_THROWS_AS(MoebiusMap(0, 1, 1, 0), Error);
  CHECK_THROWS_AS(MoebiusMap(1, 1, 1, 1), Error);
}

TEST_CASE("classify") {
  CHECK(classify(gamma_) == ConjClass::Hyperbolic);
  CHECK(classify(MoebiusMap(1, 1, 0, 1)) == ConjClass::Parabolic);
  CHECK(classify(MoebiusMap(0, 1, -1, 0)) == ConjClass::Elliptic);
  CHECK(classify(MoebiusMap(3, 0, 0, 3)) == ConjClass::Identity);
  CHECK(classify(MoebiusMap(RealAlgebraic::sqrt(2), 0, 0, 1)) == ConjClass::Hyperbolic);
}

TEST_CASE("fixed points") {
  auto fp = fixed_points(gamma_);
  REQUIRE(fp.size() == 2);
  CHECK(fp[0].value() == -(RealAlgebraic::sqrt(5) + 1) / 2);
  CHECK(fp[1].value() == golden_conj());
  CHECK(fp[0].value() < RealAlgebraic(Rational(-3, 2)));
  CHECK(fp[1].value() > RealAlgebraic(Rational(1, 2)));
  CHECK(fp[1].value() < RealAlgebraic(1));
  auto t = fixed_points(MoebiusMap(1, 1, 0, 1));
  REQUIRE(t.size() == 1);
  CHECK(t[0] == inf);
  auto s = fixed_points(MoebiusMap(2, 0, 0, 1));
  REQUIRE(s.size() == 2);
  CHECK(s[0] == ProjPoint(0));
  CHECK(s[1] == inf);
  CHECK(fixed_points(MoebiusMap(0, 1, -1, 0)).empty());
  CHECK_THROWS_AS(fixed_points(MoebiusMap()), Error);
}

TEST_CASE("derivatives") {
  CHECK(derivative_at(MoebiusMap(2, 0, 0, 1), 0) == RealAlgebraic(2));
  CHECK(derivative_at(MoebiusMap(1, 0, -1, 1), Rational(1, 2)) == RealAlgebraic(4));
  CHECK(derivative_at(MoebiusMap(2, 0, 0, 1), inf) == RealAlgebraic(Rational(1, 2)));
  CHECK(derivative_at(MoebiusMap(1, 1, 0, 1), inf) == RealAlgebraic(1));
}

TEST_CASE("PSL(2,Z) membership") {
  CHECK(is_in_psl2z(gamma_));
  CHECK_FALSE(is_in_psl2z(MoebiusMap(2, 0, 0, 1)));
  CHECK(is_in_psl2z(MoebiusMap(4, -1, 5, -1)));
  CHECK(is_in_psl2z(MoebiusMap(-2, 0, 0, -2)));
}

TEST_CASE("fixed point types over Z") {
  CHECK(is_parabolic_fixed_point_Z(Rational(3, 7)));
  CHECK_FALSE(is_hyperbolic_fixed_point_Z(Rational(3, 7)));
  CHECK(is_hyperbolic_fixed_point_Z(golden_conj()));
  CHECK(is_parabolic_fixed_point_Z(inf));
  CHECK_FALSE(is_hyperbolic_fixed_point_Z(RealAlgebraic::from_root(IntPoly{-2, 0, 0, 1}, 1, 2)));
  CHECK(hyperbolic_fixed_point_witness(0, MoebiusMap::scaling(2)));
  CHECK_FALSE(hyperbolic_fixed_point_witness(1, MoebiusMap::translation(1)));
  CHECK(hyperbolic_fixed_point_witness(golden_conj(), gamma_));
}

TEST_CASE("cyclic order") {
  CHECK(cyclic_order(0, 1, 2));
  CHECK(cyclic_order(1, inf, 0));
  CHECK_FALSE(cyclic_order(2, 1, 0));
  CHECK_THROWS_AS(cyclic_order(1, 1, 2), Error);
}

TEST_CASE("properties on random maps") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    MoebiusMap m = random_map(rng), n = random_map(rng), g = random_map(rng);
    CHECK(classify(g * m * g.inverse()) == classify(m));
    ProjPoint p = random_point(rng);
    CHECK(derivative_at(m * n, p) == derivative_at(m, n.apply(p)) * derivative_at(n, p));
    CHECK((m * n) * g == m * (n * g));
    if (!m.is_identity()) {
      auto a = fixed_points(m), b = fixed_points(m.inverse());
      CHECK(a.size() == b.size());
      for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) CHECK(a[k] == b[k]);
      if (classify(m) == ConjClass::Hyperbolic)
        CHECK(derivative_at(m, a[0]) * derivative_at(m, a[1]) == RealAlgebraic(1));
    }
    ProjPoint x = random_point(rng), y = random_point(rng), z = random_point(rng);
    if (!(x == y) && !(y == z) && !(x == z))
      CHECK(cyclic_order(x, y, z) == cyclic_order(m.apply(x), m.apply(y), m.apply(z)));
  }
}
