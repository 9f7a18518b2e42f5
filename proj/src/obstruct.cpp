#include "projline/obstruct.hpp"

#include <cmath>
#include <cstdlib>

#include "projline/error.hpp"

namespace projline {

namespace {

void collect_breaks(const std::string& name, const PwProjMap& f, std::vector<HyperbolicBreak>& out) {
  const RealAlgebraic one(1);
  for (const auto& b : f.breakpoints()) {
    OneSided d = one_sided_derivatives(f, b);
    bool left_one = d.left == one, right_one = d.right == one;
    if (left_one == right_one) continue;
    out.push_back({name, b, d.left, d.right, left_one ? "right-hyperbolic" : "left-hyperbolic"});
  }
}

}  // namespace

ObstructionReport audit_pair(const std::string& name_f, const PwProjMap& f, const std::string& name_g,
                             const PwProjMap& g) {
  ObstructionReport r;
  if (f.is_identity() || g.is_identity()) {
    r.notes.push_back("identity element has no successive fixed points; linked pairs skipped");
  } else {
    for (const auto& cfg : linked_pairs(f, g)) {
      r.linked.push_back({name_f, name_g, cfg});
      if (cfg.doubly_linked)
        r.notes.push_back("pair (" + cfg.a.to_string() + ", " + cfg.b.to_string() + ") vs (" + cfg.c.to_string() +
                          ", " + cfg.d.to_string() + ") is doubly linked");
    }
  }
  collect_breaks(name_f, f, r.hyperbolic_breaks);
  if (name_g != name_f) collect_breaks(name_g, g, r.hyperbolic_breaks);
  return r;
}

AffineGerm rho(const PwProjMap& f, Side side) { return germ_at(f, side); }

bool in_rho_kernel(const PwProjMap& f, Side side) { return germ_at(f, side).is_identity(); }

bool PresentationReport::all_hold() const {
  for (const auto& [rel, ok] : relations_checked)
    if (!ok) return false;
  return true;
}

GenSet affine_presentation_gens(const FieldContext& ctx) {
  if (!ctx) throw Error(Errc::InvalidArgument, "presentation needs a number field context");
  RealAlgebraic lambda = ctx->root();
  if (!(lambda > RealAlgebraic(1))) throw Error(Errc::LambdaNotGreaterThanOne, "lambda = " + lambda.to_string());
  GenSet g{"affine_presentation", ctx, {}};
  g.table.emplace("a_hat", PwProjMap(MoebiusMap::scaling(lambda)));
  RealAlgebraic step(1);
  for (int j = 0; j < ctx->degree(); ++j) {
    g.table.emplace("b_" + std::to_string(j), PwProjMap(MoebiusMap::translation(step)));
    step *= lambda;
  }
  return g;
}

PresentationReport check_affine_presentation(const FieldContext& ctx) {
  GenSet gens = affine_presentation_gens(ctx);
  const int d = ctx->degree();
  const IntPoly& p = ctx->minpoly;
  auto b = [](int j) { return "b_" + std::to_string(j); };
  std::vector<std::string> rels;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) rels.push_back(b(i) + "." + b(j) + "." + b(i) + "^-1." + b(j) + "^-1");
  for (int j = 0; j + 1 < d; ++j) rels.push_back("a_hat." + b(j) + ".a_hat^-1." + b(j + 1) + "^-1");
  // a_hat b_{d-1}^{α_d} a_hat⁻¹ = b_0^{−α_0} ⋯ b_{d−1}^{−α_{d−1}}, checked as
  // lhs · rhs⁻¹ = 1
  std::string last = "a_hat." + b(d - 1) + "^" + p.leading().get_str() + ".a_hat^-1";
  for (int j = d - 1; j >= 0; --j)
    if (p.coeff(j) != 0) last += "." + b(j) + "^" + p.coeff(j).get_str();
  rels.push_back(last);

  PresentationReport r;
  for (const auto& rel : rels) r.relations_checked.emplace_back(rel, check_relation(gens, parse_word(rel)));
  r.torsion = abelianization_torsion(p);
  return r;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

// Single Möbius piece acting on all of [base, a], or null.
const MoebiusMap* single_piece(const PwProjMap& f, const ProjPoint& base, const ProjPoint& a) {
  Arc open{base, a};
  for (const auto& bp : f.breakpoints())
    if (in_open_arc(bp, open)) return nullptr;
  return &f.pieces()[f.piece_at(base)].m;
}

std::string contraction_problem(const std::string& name, const PwProjMap& f, const ProjPoint& base,
                                const ProjPoint& a) {
  if (!(f.eval(base) == base)) return name + " does not fix " + base.to_string();
  const MoebiusMap* m = single_piece(f, base, a);
  if (!m) return name + " has a breakpoint inside the arc";
  if (m->is_identity()) return name + " is the identity on the arc";
  Arc half_open{base, a};
  for (const auto& x : fixed_points(*m))
    if (x == a || in_open_arc(x, half_open)) return name + " has a further fixed point " + x.to_string();
  ProjPoint fa = m->apply(a);
  if (!cyclic_order(base, fa, a)) return name + " pushes points away from " + base.to_string();
  return {};
}

// Translation length of a parabolic map after moving its fixed point p to ∞.
RealAlgebraic translation_length(const MoebiusMap& m, const ProjPoint& p) {
  MoebiusMap n = m;
  if (!p.is_infinity()) {
    MoebiusMap c(0, -1, 1, -p.value());  // t ↦ −1/(t − p)
    n = c * m * c.inverse();
  }
  return n.b() / n.a();
}

}  // namespace

NonC2Report check_nonc2_hypotheses(const PwProjMap& f, const PwProjMap& g, const ProjPoint& a,
                                   const ProjPoint& base, int exponent_bound) {
  NonC2Report r;
  r.exponent_bound = exponent_bound;
  if (a == base) throw Error(Errc::InvalidArgument, "arc endpoint equals the base point");

  std::string pf = contraction_problem("f", f, base, a), pg = contraction_problem("g", g, base, a);
  if (!pf.empty()) r.details.push_back(pf);
  if (!pg.empty()) r.details.push_back(pg);
  r.contraction = pf.empty() && pg.empty() ? Verdict::Holds : Verdict::Fails;

  // condition 2: f∘g and g∘f have the same pieces over [base, a]
  {
    PwProjMap fg = compose(f, g), gf = compose(g, f);
    std::vector<ProjPoint> cuts{base};
    Arc open{base, a};
    for (const auto* h : {&fg, &gf})
      for (const auto& bp : h->breakpoints())
        if (in_open_arc(bp, open)) cuts.push_back(bp);
    bool same = true;
    for (const auto& s : cuts)
      if (!(fg.pieces()[fg.piece_at(s)].m == gf.pieces()[gf.piece_at(s)].m)) same = false;
    r.commute = same ? Verdict::Holds : Verdict::Fails;
    if (!same) r.details.push_back("f and g do not commute on the arc");
  }

  // condition 3 on the germs at base
  const MoebiusMap& mf = f.pieces()[f.piece_at(base)].m;
  const MoebiusMap& mg = g.pieces()[g.piece_at(base)].m;
  if (!(mf.apply(base) == base) || !(mg.apply(base) == base)) {
    r.rank_two = Verdict::Fails;
    r.details.push_back("germs at the base point are not defined");
    return r;
  }
  if (mf.is_identity() || mg.is_identity()) {
    r.rank_two = Verdict::Fails;
    r.details.push_back("a germ is trivial");
    return r;
  }
  const RealAlgebraic one(1);
  RealAlgebraic sf = derivative_at(mf, base), sg = derivative_at(mg, base);
  bool par_f = sf == one, par_g = sg == one;
  if (par_f && par_g) {
    RealAlgebraic ratio = translation_length(mf, base) / translation_length(mg, base);
    if (ratio.is_rational()) {
      r.rank_two = Verdict::Fails;
      r.details.push_back("translation lengths are commensurable, ratio " + ratio.to_string());
    } else {
      r.rank_two = Verdict::Holds;
      r.details.push_back("translation lengths are independent over Q");
    }
    return r;
  }
  if (par_f != par_g) {
    r.rank_two = Verdict::Indeterminate;
    r.details.push_back("one germ is parabolic and the other hyperbolic");
    return r;
  }
  const double lf = std::log(sf.to_double()), lg = std::log(sg.to_double());
  for (int m = 0; m <= exponent_bound; ++m)
    for (int n = -exponent_bound; n <= exponent_bound; ++n) {
      if (m == 0 && n <= 0) continue;
      if (std::abs(m * lf + n * lg) > 1e-9 * (1 + std::abs(m * lf))) continue;
      if (sf.pow(m) * sg.pow(n) == one) {
        r.rank_two = Verdict::Fails;
        r.details.push_back("slopes satisfy s_f^" + std::to_string(m) + " s_g^" + std::to_string(n) + " = 1");
        return r;
      }
    }
  r.rank_two = Verdict::Holds;
  r.details.push_back("no multiplicative relation between slopes with exponents up to " +
                      std::to_string(exponent_bound));
  return r;
}

}  // namespace projline
