#pragma once

#include <string>
#include <utility>
#include <vector>

#include "projline/moebius.hpp"

namespace projline {

// Positively oriented arc from start to end. With start == end it is the
// circle minus that point; `whole` marks the entire circle.
struct Arc {
  ProjPoint start;
  ProjPoint end;
  bool whole = false;
};

// True iff x lies in the open arc.
bool in_open_arc(const ProjPoint& x, const Arc& arc);

struct Piece {
  ProjPoint from;
  ProjPoint to;
  MoebiusMap m;
};

// A piecewise projective circle homeomorphism. Pieces are sorted by `from`
// along the linear order (reals, then ∞); piece i acts on [from_i, from_{i+1})
// and the last one wraps around. A single piece acts on the whole circle.
class PwProjMap {
 public:
  PwProjMap() : pieces_{Piece{ProjPoint::infinity(), ProjPoint::infinity(), MoebiusMap()}} {}
  explicit PwProjMap(const MoebiusMap& m) : pieces_{Piece{ProjPoint::infinity(), ProjPoint::infinity(), m}} {}

  // Validates partition, continuity and injectivity, then normalizes.
  static PwProjMap build(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  // Index of the piece acting on a right neighbourhood of p.
  std::size_t piece_at(const ProjPoint& p) const;
  // Index of the piece acting on a left neighbourhood of p.
  std::size_t piece_left_of(const ProjPoint& p) const;

  ProjPoint eval(const ProjPoint& p) const;
  std::vector<ProjPoint> breakpoints() const;
  bool is_identity() const;

  friend bool operator==(const PwProjMap& f, const PwProjMap& g);
  std::string to_string() const;

 private:
  friend PwProjMap compose(const PwProjMap& f, const PwProjMap& g);
  friend PwProjMap inverse(const PwProjMap& f);
  friend PwProjMap split_at_fixed_point(const PwProjMap& f, const ProjPoint& p);
  // `starts` sorted and distinct; merges equal neighbours.
  static PwProjMap normalized(const std::vector<ProjPoint>& starts, const std::vector<MoebiusMap>& maps);

  std::vector<Piece> pieces_;
};

// f ∘ g: apply g first.
PwProjMap compose(const PwProjMap& f, const PwProjMap& g);
PwProjMap inverse(const PwProjMap& f);

struct OneSided {
  RealAlgebraic left;
  RealAlgebraic right;
};
OneSided one_sided_derivatives(const PwProjMap& f, const ProjPoint& p);

struct Defect {
  ProjPoint point;
  RealAlgebraic left;
  RealAlgebraic right;
};
std::vector<Defect> c1_defect_points(const PwProjMap& f);

// A connected component of the fixed set: a closed arc, or an isolated
// point when start == end.
struct FixedComponent {
  ProjPoint start;
  ProjPoint end;
  bool is_point() const { return start == end; }
};
struct FixedSet {
  bool whole_circle = false;
  std::vector<FixedComponent> components;  // in linear order of start
};
FixedSet fixed_set(const PwProjMap& f);
// Components of the complement of the fixed set, as open arcs.
std::vector<Arc> support(const PwProjMap& f);
std::vector<std::pair<ProjPoint, ProjPoint>> successive_fixed_pairs(const PwProjMap& f);

struct LinkedConfig {
  ProjPoint a, b;  // successive fixed points of the first map
  ProjPoint c, d;  // of the second
  bool doubly_linked = false;  // both intersections are single points
};
std::vector<LinkedConfig> linked_pairs(const PwProjMap& f, const PwProjMap& g);

struct AffineGerm {
  RealAlgebraic slope;
  RealAlgebraic intercept;
  bool is_identity() const { return slope == RealAlgebraic(1) && intercept.sign() == 0; }
  friend bool operator==(const AffineGerm& x, const AffineGerm& y) {
    return x.slope == y.slope && x.intercept == y.intercept;
  }
};
// x ∘ y
AffineGerm compose(const AffineGerm& x, const AffineGerm& y);

enum class Side { Plus, Minus };
AffineGerm germ_at(const PwProjMap& f, Side side);

// True iff f is the identity off the closed arc [arc.start, arc.end].
bool is_identity_outside(const PwProjMap& f, const Arc& arc);
// Identity on [∞, p), f on [p, ∞).
PwProjMap split_at_fixed_point(const PwProjMap& f, const ProjPoint& p);

// n rows (t, f(t)) on an even grid over [lo, hi], in decimal.
std::vector<std::pair<std::string, std::string>> sample(const PwProjMap& f, int n, const Rational& lo,
                                                        const Rational& hi, int digits);

}  // namespace projline
