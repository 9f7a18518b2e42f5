#include "projline/verify/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <random>
#include <sstream>

#include "projline/catalog.hpp"
#include "projline/error.hpp"
#include "projline/flow.hpp"
#include "projline/number_field.hpp"
#include "projline/obstruct.hpp"
#include "projline/treemodel.hpp"
#include "projline/verify/oracle.hpp"

namespace projline::verify {

namespace {

struct Ctx {
  CriterionResult& r;
  void check(bool ok, const std::string& what) {
    ++r.cases;
    if (!ok && r.failures.size() < 25) r.failures.push_back(what);
    if (!ok) r.pass = false;
  }
};

FieldContext field(std::vector<long> p, long lo, long hi) {
  std::vector<Integer> c;
  for (long v : p) c.emplace_back(v);
  return make_field(IntPoly(c), lo, hi);
}

IntPoly poly(std::vector<long> p) {
  std::vector<Integer> c;
  for (long v : p) c.emplace_back(v);
  return IntPoly(c);
}

std::string poly_str(const IntPoly& p) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i <= p.degree(); ++i) os << (i ? "," : "") << p.coeff(i).get_str();
  os << "]";
  return os.str();
}

// The four λ of the G_λ checks.
std::vector<std::pair<std::string, FieldContext>> lambda_contexts() {
  return {{"2", field({-2, 1}, 1, 3)},
          {"3", field({-3, 1}, 2, 4)},
          {"sqrt2", field({-2, 0, 1}, 1, 2)},
          {"golden", field({-1, -1, 1}, 1, 2)}};
}

Word random_gen_word(std::mt19937_64& rng, const std::vector<std::string>& gens, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len), pick(0, static_cast<int>(gens.size()) - 1), sgn(0, 1);
  Word w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) w.letters.emplace_back(gens[static_cast<std::size_t>(pick(rng))], sgn(rng) ? 1 : -1);
  return w;
}

// A short word in the PSL(2,Z) generators, as a single matrix.
MoebiusMap random_psl2z(std::mt19937_64& rng) {
  static const std::vector<MoebiusMap> gens{MoebiusMap(1, 1, 0, 1), MoebiusMap(1, -1, 0, 1), MoebiusMap(0, -1, 1, 0),
                                            MoebiusMap(2, 1, 1, 1), MoebiusMap(1, 0, 1, 1)};
  std::uniform_int_distribution<int> len(1, 3), pick(0, static_cast<int>(gens.size()) - 1);
  MoebiusMap m;
  int n = len(rng);
  for (int i = 0; i < n; ++i) m = m * gens[static_cast<std::size_t>(pick(rng))];
  return m;
}

PwProjMap conj(const MoebiusMap& g, const PwProjMap& f) {
  PwProjMap G(g);
  return compose(G, compose(f, inverse(G)));
}

// ---- criteria ---------------------------------------------------------------

void c1_thurston_c(Ctx& t) {
  GenSet T = preset_thompson_t();
  const PwProjMap& c = T.at("c");
  for (const auto& d : c1_defect_points(c))
    t.check(d.point.is_infinity(), "finite defect at " + d.point.to_string());
  struct Want {
    Rational p;
    long left, right;
  };
  for (const Want& w : {Want{0, 1, 1}, Want{Rational(1, 2), 4, 4}, Want{1, 1, 1}}) {
    OneSided d = one_sided_derivatives(c, ProjPoint(w.p));
    t.check(d.left == RealAlgebraic(w.left) && d.right == RealAlgebraic(w.right),
            "derivatives at " + to_string(w.p) + ": " + d.left.to_string() + ", " + d.right.to_string());
  }
}

void c2_gamma(Ctx& t) {
  MoebiusMap g(2, -1, -1, 1);
  t.check(classify(g) == ConjClass::Hyperbolic, "gamma is not hyperbolic");
  auto fp = fixed_points(g);
  t.check(fp.size() == 2, "gamma needs two fixed points");
  if (fp.size() != 2) return;
  const RealAlgebraic& a = fp[0].value();
  const RealAlgebraic& b = fp[1].value();
  t.check(a < RealAlgebraic(Rational(-3, 2)), "a < -3/2 fails: " + a.to_string());
  t.check(RealAlgebraic(Rational(1, 2)) < b && b < RealAlgebraic(1), "1/2 < b < 1 fails: " + b.to_string());
  // t² + t − 1 = 0 at both points; cross-check against the float roots
  auto roots = complex_roots(poly({-1, 1, 1}));
  std::vector<BigFloat> re;
  for (const auto& z : roots) re.push_back(z.real());
  std::sort(re.begin(), re.end());
  t.check(abs(re[0] - BigFloat(a.to_decimal(40))) < BigFloat("1e-35") &&
              abs(re[1] - BigFloat(b.to_decimal(40))) < BigFloat("1e-35"),
          "fixed points disagree with the float oracle");
}

void c3_linked(Ctx& t) {
  MoebiusMap g(2, -1, -1, 1);
  auto fp = fixed_points(g);
  PwProjMap f = monod_element({{fp[0], fp[1], g}, {fp[1], fp[0], MoebiusMap()}}, {g}, Ring::Integers);
  PwProjMap f1 = conj(MoebiusMap::translation(1), f);
  ObstructionReport rep = audit_pair("f", f, "g", f1);
  t.check(!rep.linked.empty(), "no linked pair for f and its translate by 1");
  GenSet lm = preset_lodha_moore();
  const PwProjMap& x = lm.at("x_10");
  PwProjMap x5 = conj(MoebiusMap::translation(5), x);
  ObstructionReport far = audit_pair("x_10", x, "x_10'", x5);
  t.check(far.empty(), "report for disjointly supported elements is not empty");
}

void c4_galois(Ctx& t) {
  for (long n = 2; n <= 10; ++n) t.check(is_galois_hyperbolic(poly({-n, 1})), "t-" + std::to_string(n));
  for (long m : {2, 3, 5}) t.check(is_galois_hyperbolic(poly({-m, 0, 1})), "t^2-" + std::to_string(m));
  t.check(!is_galois_hyperbolic(poly({1, 4, 4, 4, 1})), "1+4t+4t^2+4t^3+t^4");
  t.check(!is_galois_hyperbolic(poly({-1, 1})), "t-1");
  const std::vector<std::vector<long>> curated{
      {-2, 1},           {-3, 1},          {-2, 0, 1},        {-3, 0, 1},          {-5, 0, 1},
      {1, 4, 4, 4, 1},   {-1, 1},          {1, 1},            {1, -3, 1},          {1, 1, 1},
      {1, 0, 1},         {2, -5, 2},       {2, -1, 2},        {-1, -1, 1},         {-2, 0, 0, 1},
      {-1, -1, 0, 1},    {1, -1, -1, -1, 1}, {1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}, {1, 0, 0, 0, 1},
      {-2, 0, 0, 0, 1},  {1, -1, 1},       {3, 0, 1},         {1, 0, -4, 0, 1},    {1, -2, -2, 1},
      {-1, 0, 0, 1},     {5, 4, 1},        {1, -6, 1},        {2, 0, 1},           {-1, 1, 0, 0, 1},
      {-5, 1, 0, 0, 0, 1}};
  for (const auto& c : curated) {
    IntPoly p = poly(c);
    t.check(is_galois_hyperbolic(p) == float_galois_hyperbolic(p), "oracle disagrees on " + poly_str(p));
  }
}

void c5_g_lambda(Ctx& t) {
  for (const auto& [name, ctx] : lambda_contexts()) {
    GenSet G = preset_g_lambda(ctx);
    t.check(compose(G.at("a_minus"), G.at("a_plus")) == G.at("a"), name + ": a_minus a_plus != a");
    PwProjMap aba = compose(G.at("a"), compose(G.at("b"), inverse(G.at("a"))));
    t.check(aba == PwProjMap(MoebiusMap::translation(ctx->root())), name + ": a b a^-1 is not translation by lambda");
    PwProjMap com = commutator(G, parse_word("b"), parse_word("a_plus.b.a_plus^-1"));
    t.check(!com.is_identity(), name + ": commutator is trivial");
    bool compact = true;
    for (const Arc& arc : support(com))
      if (arc.whole || arc.start.is_infinity() || arc.end.is_infinity() || in_open_arc(ProjPoint::infinity(), arc))
        compact = false;
    t.check(compact, name + ": commutator support meets infinity");
    t.check(in_rho_kernel(com, Side::Plus) && in_rho_kernel(com, Side::Minus), name + ": commutator not in ker rho");
  }
}

// F's relators are usually written for right actions; words here compose as
// functions, so they are read backwards.
Word right_action(std::string_view text) {
  Word w = parse_word(text);
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

void c6_thompson_f(Ctx& t) {
  GenSet G = preset_g_lambda(field({-2, 1}, 1, 3));
  G.table["x0"] = G.at("b");
  G.table["x1"] = commutator(G.at("a_plus"), G.at("b"));
  t.check(check_relation(G, right_action("x0.x1^-1.x0^-1.x1.x0.x1.x0^-1.x0^-1.x1^-1.x0")),
          "[x0 x1^-1, x0^-1 x1 x0] != 1");
  t.check(check_relation(G, right_action("x0.x1^-1.x0^-2.x1.x0^2.x1.x0^-1.x0^-2.x1^-1.x0^2")),
          "[x0 x1^-1, x0^-2 x1 x0^2] != 1");
  t.check(!(compose(G.at("x0"), G.at("x1")) == compose(G.at("x1"), G.at("x0"))), "x0 and x1 commute");
}

void c7_presentation(Ctx& t) {
  struct Case {
    std::vector<long> p;
    long lo, hi;
    long torsion;  // 0: compute |p(1)| here
  };
  const std::vector<Case> cases{
      {{-2, 1}, 1, 3, 1}, {{-3, 1}, 2, 4, 2}, {{-2, 0, 1}, 1, 2, 1}, {{-1, -1, 1}, 1, 2, 1}, {{-2, 0, 0, 1}, 1, 2, 0}};
  for (const auto& c : cases) {
    FieldContext ctx = field(c.p, c.lo, c.hi);
    PresentationReport rep = check_affine_presentation(ctx);
    std::string name = poly_str(ctx->minpoly);
    t.check(rep.all_hold(), name + ": a relation fails");
    long want = c.torsion;
    if (want == 0) {
      long s = 0;
      for (long v : c.p) s += v;
      want = std::abs(s);
    }
    t.check(rep.torsion == want, name + ": torsion " + rep.torsion.get_str());
  }
}

void c8_lodha_moore(Ctx& t, std::uint64_t seed) {
  GenSet lm = preset_lodha_moore();
  for (const char* gen : {"x_10", "y_101", "y100inv_y101"}) {
    const PwProjMap& f = lm.at(gen);
    for (const ProjPoint& p : f.breakpoints()) {
      ProjPoint l = f.pieces()[f.piece_left_of(p)].m.apply(p);
      ProjPoint r = f.pieces()[f.piece_at(p)].m.apply(p);
      t.check(l == r, std::string(gen) + " is discontinuous at " + p.to_string());
    }
  }
  const PwProjMap& x = lm.at("x_10");
  ProjPoint third(Rational(1, 3));
  t.check(x.pieces()[x.piece_left_of(third)].m.apply(third) == ProjPoint(Rational(1, 2)) &&
              x.pieces()[x.piece_at(third)].m.apply(third) == ProjPoint(Rational(1, 2)),
          "x_10(1/3) != 1/2 from both sides");
  t.check(phi(EvPerSeq::parse("(0)")).is_infinity() && phi(EvPerSeq::parse("(1)")).is_infinity(),
          "Phi(0^inf), Phi(1^inf) != inf");
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 50; ++i) {
    std::string w = random_word(rng, 8);
    t.check(phi(EvPerSeq(w + "0", "1")) == phi(EvPerSeq(w + "1", "0")), "two-to-one fails after " + w);
  }
  std::vector<EvPerSeq> samples;
  for (int i = 0; i < 100; ++i) samples.push_back(random_seq(rng));
  const std::vector<std::pair<std::string, PwProjMap>> pairs{
      {"x", PwProjMap(MoebiusMap::translation(1))},
      {"y_0^-1.y_1", PwProjMap(MoebiusMap::scaling(2))},
      {"x_10", lm.at("x_10")},
      {"y_101", lm.at("y_101")},
      {"y_100^-1.y_101", lm.at("y100inv_y101")}};
  for (const auto& [word, f] : pairs)
    t.check(verify_conjugacy(parse_tree_word(word), f, samples), "conjugacy fails for " + word);
}

void c9_flows(Ctx& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-10, 10), small(-3, 3);
  std::vector<MoebiusMap> maps;
  // parabolic: conjugates of translations
  while (maps.size() < 15) {
    long k = small(rng);
    if (k == 0) continue;
    MoebiusMap g = random_psl2z(rng);
    maps.push_back(g * MoebiusMap::translation(k) * g.inverse());
  }
  while (maps.size() < 50) {
    long a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
    if (a * d - b * c <= 0) continue;
    MoebiusMap m(a, b, c, d);
    ConjClass k = classify(m);
    if (k == ConjClass::Hyperbolic || k == ConjClass::Parabolic) maps.push_back(m);
  }
  for (const MoebiusMap& m : maps) {
    FlowGenerator g = generator_of(m);
    Mat2 target = normalized_sl2(to_mat2(m));
    t.check(max_diff(flow_at(g, 1), target) <= 1e-10, "time-one flow misses " + m.to_string());
    if (classify(m) == ConjClass::Parabolic) {
      const auto& n = *g.exact_nilpotent;
      bool nil = (n[0] * n[0] + n[1] * n[2]).sign() == 0 && (n[0] * n[1] + n[1] * n[3]).sign() == 0 &&
                 (n[2] * n[0] + n[3] * n[2]).sign() == 0 && (n[2] * n[1] + n[3] * n[3]).sign() == 0;
      RealAlgebraic s = RealAlgebraic(2) / m.trace();
      bool one = n[0] + 1 == m.a() * s && n[1] == m.b() * s && n[2] == m.c() * s && n[3] + 1 == m.d() * s;
      t.check(nil && one, "parabolic path is not exact for " + m.to_string());
    }
  }
  QuadraticField v = vector_field(generator_of(MoebiusMap(1, 0, 1, 1)));
  t.check(v.q0 == 0 && v.q1 == 0 && v.q2 == -1, "vector field of [[1,0],[1,1]] is not -t^2");
  double s = time_of(generator_of(MoebiusMap::scaling(4)), MoebiusMap::scaling(2));
  t.check(std::abs(s - 0.5) <= 1e-12, "time_of(scaling 4, scaling 2) = " + std::to_string(s));
}

// ---- property suites ----------------------------------------------------------

void group_laws(Ctx& t, std::mt19937_64& rng, int n) {
  GenSet T = preset_thompson_t();
  GenSet G = preset_g_lambda(field({-2, 1}, 1, 3));
  GenSet L = preset_lodha_moore();
  const std::vector<std::pair<const GenSet*, std::vector<std::string>>> groups{
      {&T, {"a", "b", "c", "shift"}}, {&G, {"a", "a_plus", "b"}}, {&L, {"shift", "c", "d", "x_10", "y_101"}}};
  for (int i = 0; i < n; ++i) {
    const auto& [gs, names] = groups[static_cast<std::size_t>(i) % groups.size()];
    Word u = random_gen_word(rng, names, 3), v = random_gen_word(rng, names, 3), w = random_gen_word(rng, names, 3);
    PwProjMap f = eval_word(*gs, u), g = eval_word(*gs, v), h = eval_word(*gs, w);
    bool ok = compose(compose(f, g), h) == compose(f, compose(g, h)) && compose(f, inverse(f)).is_identity() &&
              compose(f, eval_word(*gs, inverse(u))).is_identity() && compose(f, PwProjMap()) == f;
    t.check(ok, "group laws fail for " + to_string(u) + ", " + to_string(v) + ", " + to_string(w));
  }
}

void chain_rule(Ctx& t, std::mt19937_64& rng, int n) {
  GenSet T = preset_thompson_t();
  const std::vector<std::string> names{"a", "b", "c", "shift"};
  for (int i = 0; i < n; ++i) {
    Word u = random_gen_word(rng, names, 3), v = random_gen_word(rng, names, 3);
    PwProjMap f = eval_word(T, u), g = eval_word(T, v), fg = compose(f, g);
    std::vector<ProjPoint> pts = g.breakpoints();
    PwProjMap gi = inverse(g);
    for (const auto& p : f.breakpoints()) pts.push_back(gi.eval(p));
    pts.push_back(ProjPoint(0));
    pts.push_back(ProjPoint::infinity());
    bool ok = true;
    for (const auto& p : pts) {
      OneSided dfg = one_sided_derivatives(fg, p), dg = one_sided_derivatives(g, p);
      OneSided df = one_sided_derivatives(f, g.eval(p));
      ok = ok && dfg.left == df.left * dg.left && dfg.right == df.right * dg.right;
    }
    t.check(ok, "chain rule fails for " + to_string(u) + " after " + to_string(v));
  }
}

void fixed_set_equivariance(Ctx& t, std::mt19937_64& rng, int n) {
  GenSet T = preset_thompson_t();
  const std::vector<std::string> names{"a", "b", "c", "shift"};
  for (int i = 0; i < n; ++i) {
    Word u = random_gen_word(rng, names, 3);
    MoebiusMap g = random_psl2z(rng);
    PwProjMap f = eval_word(T, u), h = conj(g, f);
    FixedSet a = fixed_set(f), b = fixed_set(h);
    bool ok = a.whole_circle == b.whole_circle && a.components.size() == b.components.size();
    if (ok) {
      std::vector<FixedComponent> rest = b.components;
      for (const auto& c : a.components) {
        FixedComponent moved{g.apply(c.start), g.apply(c.end)};
        auto it = std::find_if(rest.begin(), rest.end(),
                               [&](const FixedComponent& x) { return x.start == moved.start && x.end == moved.end; });
        if (it == rest.end()) {
          ok = false;
          break;
        }
        rest.erase(it);
      }
    }
    t.check(ok, "fixed set of " + to_string(u) + " not equivariant under " + g.to_string());
  }
}

void defect_equivariance(Ctx& t, std::mt19937_64& rng, int n) {
  GenSet T = preset_thompson_t();
  GenSet G = preset_g_lambda(field({-2, 1}, 1, 3));
  for (int i = 0; i < n; ++i) {
    bool thompson = i % 2 == 0;
    Word u = thompson ? random_gen_word(rng, {"a", "b", "c", "shift"}, 3) : random_gen_word(rng, {"a", "a_plus", "b"}, 3);
    MoebiusMap g = random_psl2z(rng);
    PwProjMap f = eval_word(thompson ? T : G, u), h = conj(g, f);
    auto da = c1_defect_points(f), db = c1_defect_points(h);
    bool ok = da.size() == db.size();
    for (const auto& d : da) {
      if (!ok) break;
      ProjPoint q = g.apply(d.point);
      auto it = std::find_if(db.begin(), db.end(), [&](const Defect& x) { return x.point == q; });
      ok = it != db.end() && d.left * it->right == d.right * it->left;
    }
    t.check(ok, "defects of " + to_string(u) + " not equivariant under " + g.to_string());
  }
}

void rho_homomorphism(Ctx& t, std::mt19937_64& rng, int n) {
  std::vector<GenSet> groups{preset_g_lambda(field({-2, 1}, 1, 3)), preset_g_lambda(field({-2, 0, 1}, 1, 2))};
  const std::vector<std::string> names{"a", "a_plus", "b"};
  for (int i = 0; i < n; ++i) {
    const GenSet& G = groups[i % 5 == 4 ? 1 : 0];
    Word u = random_gen_word(rng, names, 3), v = random_gen_word(rng, names, 3);
    PwProjMap f = eval_word(G, u), g = eval_word(G, v), fg = compose(f, g);
    bool ok = true;
    for (Side s : {Side::Plus, Side::Minus}) ok = ok && rho(fg, s) == compose(rho(f, s), rho(g, s));
    t.check(ok, "rho not multiplicative on " + to_string(u) + ", " + to_string(v));
  }
}

void sturm_vs_float(Ctx& t, std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> coeff(-9, 9), deg(1, 6);
  for (int i = 0; i < n; ++i) {
    long d = deg(rng);
    std::vector<long> c;
    for (long j = 0; j <= d; ++j) c.push_back(coeff(rng));
    if (c.back() == 0) c.back() = 1;
    if (c.front() == 0) c.front() = -1;
    IntPoly p = poly(c);
    bool ok = static_cast<int>(isolate_real_roots(p).size()) == real_root_count(p);
    if (i % 2 == 0) ok = ok && is_galois_hyperbolic(p.squarefree()) == float_galois_hyperbolic(p);
    t.check(ok, "root counts disagree on " + poly_str(p));
  }
}

struct Both {
  RealAlgebraic exact;
  BigFloat approx;
};

Both random_leaf(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  switch (kind(rng)) {
    case 0: return {RealAlgebraic::sqrt(2), sqrt(BigFloat(2))};
    case 1: return {RealAlgebraic::sqrt(3), sqrt(BigFloat(3))};
    case 2: return {RealAlgebraic::sqrt(5), sqrt(BigFloat(5))};
    case 3: return {(RealAlgebraic(1) + RealAlgebraic::sqrt(5)) / 2, (1 + sqrt(BigFloat(5))) / 2};
    default: {
      Rational q = make_rational(num(rng), den(rng));
      return {RealAlgebraic(q), to_big(q)};
    }
  }
}

void arithmetic_vs_float(Ctx& t, std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> op(0, 3);
  for (int i = 0; i < n; ++i) {
    Both x = random_leaf(rng), y = random_leaf(rng), z = random_leaf(rng);
    auto apply = [&](int o, const Both& u, const Both& v) -> Both {
      switch (o) {
        case 0: return {u.exact + v.exact, u.approx + v.approx};
        case 1: return {u.exact - v.exact, u.approx - v.approx};
        case 2: return {u.exact * v.exact, u.approx * v.approx};
        default:
          if (v.exact.sign() == 0) return {u.exact + v.exact, u.approx + v.approx};
          return {u.exact / v.exact, u.approx / v.approx};
      }
    };
    Both r = apply(op(rng), apply(op(rng), x, y), z);
    RealAlgebraic fine = r.exact.refined(Rational(1, Integer(10) * Integer("1000000000000000000000000000000")));
    Interval iv = fine.interval();
    BigFloat slack("1e-60");
    bool ok = to_big(iv.lo) - slack <= r.approx && r.approx <= to_big(iv.hi) + slack;
    BigFloat diff = r.approx - x.approx;
    int s = (r.exact <=> x.exact) < 0 ? -1 : (r.exact == x.exact ? 0 : 1);
    if (abs(diff) > BigFloat("1e-50")) ok = ok && s == (diff < 0 ? -1 : 1);
    t.check(ok, "exact value " + r.exact.to_string() + " disagrees with the float oracle");
  }
}

void c10_properties(Ctx& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  group_laws(t, rng, 150);
  chain_rule(t, rng, 150);
  fixed_set_equivariance(t, rng, 100);
  defect_equivariance(t, rng, 100);
  rho_homomorphism(t, rng, 150);
  sturm_vs_float(t, rng, 200);
  arithmetic_vs_float(t, rng, 150);
}

struct Spec {
  const char* title;
  double budget;
  std::function<void(Ctx&, std::uint64_t)> run;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> s{
      {"c is C1 away from infinity", 1, [](Ctx& t, std::uint64_t) { c1_thurston_c(t); }},
      {"gamma hyperbolic with a < -3/2 < 1/2 < b < 1", 1, [](Ctx& t, std::uint64_t) { c2_gamma(t); }},
      {"linked pairs detected", 5, [](Ctx& t, std::uint64_t) { c3_linked(t); }},
      {"Galois hyperbolicity", 5, [](Ctx& t, std::uint64_t) { c4_galois(t); }},
      {"G_lambda algebra", 5, [](Ctx& t, std::uint64_t) { c5_g_lambda(t); }},
      {"Thompson F relations in G_2", 5, [](Ctx& t, std::uint64_t) { c6_thompson_f(t); }},
      {"affine presentation and torsion", 5, [](Ctx& t, std::uint64_t) { c7_presentation(t); }},
      {"Lodha-Moore model", 30, c8_lodha_moore},
      {"flows", 5, c9_flows},
      {"property suites", 60, c10_properties},
  };
  return s;
}

}  // namespace

int criterion_count() { return static_cast<int>(specs().size()); }

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > criterion_count()) throw Error(Errc::InvalidArgument, "no criterion " + std::to_string(id));
  const Spec& s = specs()[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.title = s.title;
  r.pass = true;
  r.budget_seconds = s.budget;
  Ctx t{r};
  auto start = std::chrono::steady_clock::now();
  try {
    s.run(t, seed);
  } catch (const std::exception& e) {
    r.pass = false;
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds > r.budget_seconds) {
    r.pass = false;
    r.failures.push_back("over the time budget");
  }
  return r;
}

std::vector<std::string> suite_names() { return {"paper-core", "lodha-moore", "flows", "properties", "all"}; }

std::vector<int> suite_members(const std::string& name) {
  if (name == "paper-core") return {1, 2, 3, 4, 5, 6, 7};
  if (name == "lodha-moore") return {8};
  if (name == "flows") return {9};
  if (name == "properties") return {10};
  if (name == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  return {};
}

}  // namespace projline::verify
