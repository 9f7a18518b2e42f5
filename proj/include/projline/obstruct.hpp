#pragma once

#include <string>
#include <utility>
#include <vector>

#include "projline/catalog.hpp"
#include "projline/number_field.hpp"
#include "projline/pwmap.hpp"

namespace projline {

struct HyperbolicBreak {
  std::string element;
  ProjPoint point;
  RealAlgebraic left;
  RealAlgebraic right;
  // "right-hyperbolic" when the left derivative is 1, "left-hyperbolic"
  // when the right one is.
  std::string side;
};

struct LinkedReport {
  std::string first;
  std::string second;
  LinkedConfig config;
};

struct ObstructionReport {
  std::vector<LinkedReport> linked;
  std::vector<HyperbolicBreak> hyperbolic_breaks;
  std::vector<std::string> notes;
  bool empty() const { return linked.empty() && hyperbolic_breaks.empty(); }
};

// Linked successive fixed pairs of f and g, plus every breakpoint where
// exactly one one-sided derivative equals 1.
ObstructionReport audit_pair(const std::string& name_f, const PwProjMap& f, const std::string& name_g,
                             const PwProjMap& g);

AffineGerm rho(const PwProjMap& f, Side side);
bool in_rho_kernel(const PwProjMap& f, Side side);

struct PresentationReport {
  std::vector<std::pair<std::string, bool>> relations_checked;
  Integer torsion;
  bool all_hold() const;
};

// b_j = translation by λ^j, a_hat = scaling by λ; checks the commuting,
// shifting and minimal-polynomial relations.
PresentationReport check_affine_presentation(const FieldContext& ctx);
// The generators used by check_affine_presentation, as a GenSet.
GenSet affine_presentation_gens(const FieldContext& ctx);

enum class Verdict { Holds, Fails, Indeterminate };
const char* verdict_name(Verdict v);

struct NonC2Report {
  Verdict contraction = Verdict::Fails;  // condition 1
  Verdict commute = Verdict::Fails;      // condition 2
  Verdict rank_two = Verdict::Fails;     // condition 3
  std::vector<std::string> details;
  int exponent_bound = 64;
  bool all_hold() const {
    return contraction == Verdict::Holds && commute == Verdict::Holds && rank_two == Verdict::Holds;
  }
};

// Hypotheses of the C² obstruction on the arc [base, a]: f and g fix base,
// are single Möbius contractions towards base there, commute there, and
// their germs at base generate a free abelian group of rank 2.
NonC2Report check_nonc2_hypotheses(const PwProjMap& f, const PwProjMap& g, const ProjPoint& a,
                                   const ProjPoint& base = ProjPoint(0), int exponent_bound = 64);

}  // namespace projline
