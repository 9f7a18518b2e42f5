#pragma once

#include <array>
#include <utility>
#include <string>
#include <vector>

#include "projline/real_algebraic.hpp"

namespace projline {

// A point of R ∪ {∞}.
class ProjPoint {
 public:
  ProjPoint() = default;
  ProjPoint(RealAlgebraic v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ProjPoint(long v) : value_(v) {}                     // NOLINT
  ProjPoint(const Rational& v) : value_(v) {}          // NOLINT
  static ProjPoint infinity() {
    ProjPoint p;
    p.inf_ = true;
    return p;
  }

  bool is_infinity() const { return inf_; }
  // Requires a finite point.
  const RealAlgebraic& value() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b);
  std::string to_string() const;

 private:
  bool inf_ = false;
  RealAlgebraic value_;
};

// Order of R followed by ∞: the circle cut open at ∞.
int linear_compare(const ProjPoint& a, const ProjPoint& b);
inline bool linear_less(const ProjPoint& a, const ProjPoint& b) { return linear_compare(a, b) < 0; }

// True iff b lies on the positively oriented open arc from a to c.
bool cyclic_order(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

enum class ConjClass { Identity, Hyperbolic, Parabolic, Elliptic };
const char* conj_class_name(ConjClass k);

// t ↦ (at + b)/(ct + d) with ad − bc > 0, kept in a canonical
// representative so that projectively equal matrices compare equal.
class MoebiusMap {
 public:
  MoebiusMap() : MoebiusMap(1, 0, 0, 1) {}
  MoebiusMap(RealAlgebraic a, RealAlgebraic b, RealAlgebraic c, RealAlgebraic d);

  static MoebiusMap identity() { return {}; }
  static MoebiusMap translation(const RealAlgebraic& x) { return {1, x, 0, 1}; }
  static MoebiusMap scaling(const RealAlgebraic& x) { return {x, 0, 0, 1}; }

  const RealAlgebraic& a() const { return m_[0]; }
  const RealAlgebraic& b() const { return m_[1]; }
  const RealAlgebraic& c() const { return m_[2]; }
  const RealAlgebraic& d() const { return m_[3]; }
  RealAlgebraic det() const;
  RealAlgebraic trace() const;

  ProjPoint apply(const ProjPoint& p) const;
  MoebiusMap inverse() const;
  bool is_identity() const;

  friend MoebiusMap operator*(const MoebiusMap& m, const MoebiusMap& n);
  friend bool operator==(const MoebiusMap& m, const MoebiusMap& n) { return m.m_ == n.m_; }

  std::string to_string() const;

 private:
  std::array<RealAlgebraic, 4> m_;
};

// m ∘ n
inline MoebiusMap compose(const MoebiusMap& m, const MoebiusMap& n) { return m * n; }

ConjClass classify(const MoebiusMap& m);
// Sorted along the linear order; errors for the identity.
std::vector<ProjPoint> fixed_points(const MoebiusMap& m);
// Derivative at p, using the chart s = −1/t at ∞ on either side.
RealAlgebraic derivative_at(const MoebiusMap& m, const ProjPoint& p);

bool is_in_psl2z(const MoebiusMap& m);
bool is_parabolic_fixed_point_Z(const ProjPoint& p);
bool is_hyperbolic_fixed_point_Z(const ProjPoint& p);
bool hyperbolic_fixed_point_witness(const ProjPoint& p, const MoebiusMap& gamma);

}  // namespace projline
