#pragma once

#include <array>
#include <optional>

#include "projline/moebius.hpp"

namespace projline {

// Row-major [[a, b], [c, d]] in doubles.
using Mat2 = std::array<double, 4>;

Mat2 to_mat2(const MoebiusMap& m);
Mat2 mat_mul(const Mat2& x, const Mat2& y);
double max_norm(const Mat2& x);
double max_diff(const Mat2& x, const Mat2& y);
// Representative with determinant 1 and nonnegative trace.
Mat2 normalized_sl2(const Mat2& m);

struct FlowGenerator {
  Mat2 L{};  // trace zero
  // Set for parabolic sources: the exact nilpotent logarithm.
  std::optional<std::array<RealAlgebraic, 4>> exact_nilpotent;
};

// Logarithm of the det-1 positive-trace representative.
FlowGenerator generator_of(const MoebiusMap& m);
// exp(sL)
Mat2 flow_at(const FlowGenerator& g, double s);

// X(t) = q0 + q1 t + q2 t²
struct QuadraticField {
  double q0 = 0, q1 = 0, q2 = 0;
  double operator()(double t) const { return q0 + q1 * t + q2 * t * t; }
};
QuadraticField vector_field(const FlowGenerator& g);

// s with exp(sL) = ĝ up to tol; errors when g is not in the flow.
double time_of(const FlowGenerator& gen, const Mat2& g, double tol = 1e-10);
double time_of(const FlowGenerator& gen, const MoebiusMap& g, double tol = 1e-10);

}  // namespace projline
