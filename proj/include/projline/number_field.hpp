#pragma once

#include <memory>
#include <string>
#include <vector>

#include "projline/polynomial.hpp"
#include "projline/real_algebraic.hpp"

namespace projline {

// Q(λ) for a real root λ of minpoly isolated in root_interval.
struct NumberFieldContext {
  IntPoly minpoly;
  Interval root_interval;
  // Irreducibility is the caller's obligation; anything the cheap checks
  // could not confirm ends up here.
  std::vector<std::string> warnings;

  int degree() const { return minpoly.degree(); }
  RealAlgebraic root() const;
};

using FieldContext = std::shared_ptr<const NumberFieldContext>;

// Validates squarefreeness, the constant term and the Sturm count.
FieldContext make_field(const IntPoly& minpoly, const Rational& lo, const Rational& hi);

class FieldElement {
 public:
  FieldElement(FieldContext ctx, std::vector<Rational> coeffs);
  static FieldElement from_rational(FieldContext ctx, const Rational& q);
  // λ itself
  static FieldElement generator(FieldContext ctx);

  const FieldContext& context() const { return ctx_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  FieldElement inverse() const;
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  int sign() const;
  RealAlgebraic to_real() const;
  std::string to_string() const;

 private:
  FieldContext ctx_;
  std::vector<Rational> coeffs_;
};

// Frobenius companion matrix: ones on the subdiagonal, last column
// -α_j/α_d. Multiplication by λ in the basis 1, λ, ..., λ^{d-1}.
RationalMatrix companion_matrix(const IntPoly& p);

// True iff p has no complex root on the unit circle.
bool is_galois_hyperbolic(const IntPoly& p);

// |α_d · p(1)| for the integer coefficients of p.
Integer abelianization_torsion(const IntPoly& p);

}  // namespace projline
