#include <numeric>
#include <random>

#include "doctest.h"
#include "projline/catalog.hpp"
#include "projline/error.hpp"
#include "projline/treemodel.hpp"

using namespace projline;

namespace {

EvPerSeq seq(const char* s) { return EvPerSeq::parse(s); }

std::vector<EvPerSeq> samples(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::vector<EvPerSeq> out;
  for (int i = 0; i < n; ++i) out.push_back(random_seq(rng));
  return out;
}

// Lexicographic comparison; sequences agree everywhere once they agree on
// max preperiod + lcm of periods letters.
int lex(const EvPerSeq& x, const EvPerSeq& y) {
  std::size_t n = std::max(x.pre().size(), y.pre().size()) + std::lcm(x.per().size(), y.per().size());
  for (std::size_t i = 0; i < n; ++i)
    if (x.at(i) != y.at(i)) return x.at(i) < y.at(i) ? -1 : 1;
  return 0;
}

}  // namespace

TEST_CASE("sequence wire format") {
  EvPerSeq s = seq("10(01)");
  CHECK(s.to_string() == "10(01)");
  CHECK(s.at(0) == '1');
  CHECK(s.at(1) == '0');
  CHECK(s.at(2) == '0');
  CHECK(s.at(3) == '1');
  CHECK(seq("0101(01)") == seq("(01)"));
  CHECK(seq("(11)") == seq("(1)"));
  CHECK_THROWS_AS(seq("101"), Error);
  CHECK_THROWS_AS(seq("1(2)"), Error);
}

TEST_CASE("x") {
  CHECK(apply_x(seq("00(1)")) == seq("0(1)"));
  CHECK(apply_x(seq("(1)")) == seq("(1)"));
  CHECK(apply_x(seq("01(0)")) == seq("10(0)"));
  CHECK(apply_x_inv(seq("0(1)")) == seq("00(1)"));
}

TEST_CASE("y") {
  CHECK(apply_y(seq("(1)")) == seq("(1)"));
  CHECK(apply_y(seq("(0)")) == seq("(0)"));
  for (const auto& s : samples(10, 200)) {
    CHECK(apply_y_inv(apply_y(s)) == s);
    CHECK(apply_y(apply_y_inv(s)) == s);
  }
}

TEST_CASE("localized generators") {
  CHECK(apply_gen({TreeGen::Kind::X, "10"}, seq("(0)")) == seq("(0)"));
  for (const auto& s : samples(11, 50)) {
    CHECK(apply_gen({TreeGen::Kind::Y, "101"}, s.prepend("101")) == apply_y(s).prepend("101"));
    CHECK(apply_gen({TreeGen::Kind::X, ""}, s) == apply_x(s));
  }
}

TEST_CASE("generators are bijections") {
  auto ss = samples(12, 200);
  std::mt19937_64 rng(13);
  for (const auto& s : ss) {
    std::string addr = random_word(rng, 3);
    for (auto k : {TreeGen::Kind::X, TreeGen::Kind::Y}) {
      TreeGen g{k, addr};
      CHECK(apply_gen(inverse(g), apply_gen(g, s)) == s);
      CHECK(apply_gen(g, apply_gen(inverse(g), s)) == s);
    }
  }
}

TEST_CASE("tree words") {
  auto w = parse_tree_word("y_100^-1.y_101");
  REQUIRE(w.size() == 2);
  CHECK(w[0].kind == TreeGen::Kind::YInv);
  CHECK(w[0].address == "100");
  CHECK(w[1].kind == TreeGen::Kind::Y);
  auto x = parse_tree_word("x");
  REQUIRE(x.size() == 1);
  CHECK(x[0].address.empty());
  CHECK_THROWS_AS(parse_tree_word("z_1"), Error);
  CHECK_THROWS_AS(parse_tree_word("x_12"), Error);
  EvPerSeq s = seq("10(01)");
  CHECK(apply_word(parse_tree_word("y_101.x_10"), s) ==
        apply_gen({TreeGen::Kind::Y, "101"}, apply_gen({TreeGen::Kind::X, "10"}, s)));
}

TEST_CASE("phi") {
  CHECK(phi(seq("(0)")).is_infinity());
  CHECK(phi(seq("(1)")).is_infinity());
  CHECK(phi(seq("11(0)")) == ProjPoint(1));
  std::mt19937_64 rng(14);
  for (int i = 0; i < 50; ++i) {
    std::string s = random_word(rng, 8);
    CHECK(phi(EvPerSeq(s + "0", "1")) == phi(EvPerSeq(s + "1", "0")));
  }
}

TEST_CASE("phi is monotone on the cone of 1") {
  auto ss = samples(15, 30);
  std::vector<EvPerSeq> cone;
  for (const auto& s : ss) cone.push_back(s.prepend("1"));
  std::sort(cone.begin(), cone.end(), [](const EvPerSeq& a, const EvPerSeq& b) { return lex(a, b) < 0; });
  std::vector<ProjPoint> pts;
  for (const auto& s : cone) pts.push_back(phi(s));
  int orientation = 0;
  for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
    const ProjPoint &a = pts[i], &b = pts[i + 1], &c = pts[i + 2];
    if (a == b || b == c || a == c) continue;
    int o = cyclic_order(a, b, c) ? 1 : -1;
    if (orientation == 0) orientation = o;
    CHECK(o == orientation);
  }
}

TEST_CASE("conjugacy with the projective model") {
  auto ss = samples(16, 100);
  GenSet lm = preset_lodha_moore();
  CHECK(verify_conjugacy(parse_tree_word("x"), PwProjMap(MoebiusMap::translation(1)), ss));
  CHECK(verify_conjugacy(parse_tree_word("y_0^-1.y_1"), PwProjMap(MoebiusMap::scaling(2)), ss));
  CHECK(verify_conjugacy(parse_tree_word("x_10"), lm.at("x_10"), ss));
  CHECK(verify_conjugacy(parse_tree_word("y_101"), lm.at("y_101"), ss));
  CHECK(verify_conjugacy(parse_tree_word("y_100^-1.y_101"), lm.at("y100inv_y101"), ss));
  CHECK_FALSE(verify_conjugacy(parse_tree_word("x"), PwProjMap(MoebiusMap::translation(2)), ss));
}
