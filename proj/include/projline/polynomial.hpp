#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "projline/rational.hpp"

namespace projline {

using QPoly = std::vector<Rational>;  // constant term first, trimmed

// Integer polynomial, constant term first. The zero polynomial has no
// coefficients; otherwise the leading coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  // Clears denominators of a rational polynomial; the result is primitive
  // with the same sign of leading coefficient as the input.
  static IntPoly from_rational(const QPoly& q);
  static IntPoly monomial(int degree, const Integer& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& coeff(int i) const;
  const Integer& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;

  IntPoly derivative() const;
  Integer content() const;
  // content 1 and positive leading coefficient
  IntPoly primitive() const;
  IntPoly squarefree() const;
  // t^d p(1/t)
  IntPoly reciprocal() const;
  // p(-t)
  IntPoly negated_argument() const;
  // p(t^2)
  IntPoly in_square() const;
  // numerator of p(t - r), primitive
  IntPoly shifted(const Rational& r) const;
  // numerator of p(t / r), primitive; r nonzero
  IntPoly scaled(const Rational& r) const;
  QPoly to_rational() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

// Rational polynomial helpers. All results are trimmed.
namespace qpoly {
void trim(QPoly& p);
int degree(const QPoly& p);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& s);
void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
QPoly rem(const QPoly& a, const QPoly& b);
QPoly monic_gcd(QPoly a, QPoly b);
// Returns g = gcd(a, b) (monic) and s with s*a == g (mod b).
QPoly ext_gcd(const QPoly& a, const QPoly& b, QPoly& s);
Rational eval(const QPoly& p, const Rational& x);
}  // namespace qpoly

IntPoly gcd(const IntPoly& a, const IntPoly& b);
// Exact quotient; the caller guarantees divisibility.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

struct Interval {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
};

// Number of distinct real roots of p in the open interval (lo, hi). p must
// be nonzero and squarefree, lo < hi, and neither endpoint a root.
int sturm_count(const IntPoly& p, const Rational& lo, const Rational& hi);

// Disjoint open intervals, in increasing order, each holding exactly one
// real root of the squarefree part of p and with non-root endpoints.
std::vector<Interval> isolate_real_roots(const IntPoly& p);

// Cauchy bound: every real root lies in (-B, B).
Rational root_bound(const IntPoly& p);

// Interval enclosure of p over [lo, hi].
Interval eval_interval(const QPoly& p, const Interval& x);

using RationalMatrix = std::vector<std::vector<Rational>>;

// Characteristic polynomial det(t I - M), as a primitive integer polynomial.
IntPoly characteristic_polynomial(const RationalMatrix& m);

}  // namespace projline
