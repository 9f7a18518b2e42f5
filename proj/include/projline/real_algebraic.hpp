#pragma once

#include <compare>
#include <string>

#include "projline/polynomial.hpp"
#include "projline/rational.hpp"

namespace projline {

// Upper bound on interval bisections spent inside a single operation.
// Defaults to 10000; PROJLINE_MAX_BISECTIONS overrides it.
long max_bisections();

// An exact real number. Rationals are held directly; every other value is
// the unique root of a squarefree primitive integer polynomial inside an
// open rational interval whose endpoints are not roots. An irrational
// representation never denotes a rational number.
class RealAlgebraic {
 public:
  RealAlgebraic() : value_(0) {}
  RealAlgebraic(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  RealAlgebraic(const Integer& v) : value_(v) {}  // NOLINT
  RealAlgebraic(const Rational& v) : value_(v) {}  // NOLINT

  // The root of p in (lo, hi). Throws unless exactly one root lies there.
  static RealAlgebraic from_root(const IntPoly& p, const Rational& lo, const Rational& hi);
  static RealAlgebraic from_root(const IntPoly& p, const Interval& iv) {
    return from_root(p, iv.lo, iv.hi);
  }
  // Nonnegative square root; throws for negative input.
  static RealAlgebraic sqrt(const RealAlgebraic& x);

  bool is_rational() const { return rational_; }
  // Requires is_rational().
  const Rational& rational() const;
  // Squarefree primitive annihilator with positive leading coefficient;
  // degree 1 exactly for rationals.
  IntPoly annihilator() const;
  int degree() const { return rational_ ? 1 : poly_.degree(); }
  // [v, v] for rationals.
  Interval interval() const;

  // Copy whose isolating interval is no wider than max_width.
  RealAlgebraic refined(const Rational& max_width) const;

  int sign() const;
  double to_double() const;
  std::string to_decimal(int digits) const;
  RealAlgebraic pow(long n) const;

  RealAlgebraic operator-() const;
  friend RealAlgebraic operator+(const RealAlgebraic& a, const RealAlgebraic& b);
  friend RealAlgebraic operator-(const RealAlgebraic& a, const RealAlgebraic& b);
  friend RealAlgebraic operator*(const RealAlgebraic& a, const RealAlgebraic& b);
  friend RealAlgebraic operator/(const RealAlgebraic& a, const RealAlgebraic& b);
  RealAlgebraic inverse() const;

  RealAlgebraic& operator+=(const RealAlgebraic& o) { return *this = *this + o; }
  RealAlgebraic& operator-=(const RealAlgebraic& o) { return *this = *this - o; }
  RealAlgebraic& operator*=(const RealAlgebraic& o) { return *this = *this * o; }
  RealAlgebraic& operator/=(const RealAlgebraic& o) { return *this = *this / o; }

  friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b);
  friend std::strong_ordering operator<=>(const RealAlgebraic& a, const RealAlgebraic& b);

  // q(x) as an exact value.
  friend RealAlgebraic evaluate(const QPoly& q, const RealAlgebraic& x);
  // Sign of q(x) decided exactly.
  friend int sign_of_poly_at(const QPoly& q, const RealAlgebraic& x);

  std::string to_string() const;

 private:
  friend class Refiner;
  static RealAlgebraic irrational(IntPoly p, Rational lo, Rational hi);
  // Halves the isolating interval in place (irrational values only).
  void bisect();

  bool rational_ = true;
  Rational value_;
  IntPoly poly_;
  Rational lo_, hi_;
};

int compare(const RealAlgebraic& a, const RealAlgebraic& b);
RealAlgebraic evaluate(const QPoly& q, const RealAlgebraic& x);
int sign_of_poly_at(const QPoly& q, const RealAlgebraic& x);

}  // namespace projline
