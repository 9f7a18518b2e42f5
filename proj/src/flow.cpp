#include "projline/flow.hpp"

#include <algorithm>
#include <cmath>

#include "projline/error.hpp"

namespace projline {

Mat2 to_mat2(const MoebiusMap& m) { return {m.a().to_double(), m.b().to_double(), m.c().to_double(), m.d().to_double()}; }

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

double max_norm(const Mat2& x) {
  double m = 0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double max_diff(const Mat2& x, const Mat2& y) {
  double m = 0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

Mat2 normalized_sl2(const Mat2& m) {
  double det = m[0] * m[3] - m[1] * m[2];
  if (det <= 0) throw Error(Errc::OrientationViolation, "determinant must be positive");
  double s = std::sqrt(det);
  if (m[0] + m[3] < 0) s = -s;
  return {m[0] / s, m[1] / s, m[2] / s, m[3] / s};
}

FlowGenerator generator_of(const MoebiusMap& m) {
  FlowGenerator g;
  ConjClass k = classify(m);
  if (k == ConjClass::Elliptic) throw Error(Errc::EllipticInput, "elliptic maps have no real logarithm in a flow");
  if (k == ConjClass::Identity) {
    g.exact_nilpotent = std::array<RealAlgebraic, 4>{0, 0, 0, 0};
    return g;
  }
  if (k == ConjClass::Parabolic) {
    // tr² = 4 det, so M·(2/tr) has determinant 1 and trace 2
    RealAlgebraic scale = RealAlgebraic(2) / m.trace();
    std::array<RealAlgebraic, 4> n{m.a() * scale - 1, m.b() * scale, m.c() * scale, m.d() * scale - 1};
    for (int i = 0; i < 4; ++i) g.L[i] = n[i].to_double();
    g.exact_nilpotent = n;
    return g;
  }
  Mat2 h = normalized_sl2(to_mat2(m));
  double half = (h[0] + h[3]) / 2;
  if (half <= 1) throw Error(Errc::NegativeTraceUnresolvable, "hyperbolic map lost its trace in floating point");
  double theta = std::acosh(half);
  double f = theta / std::sinh(theta);
  g.L = {(h[0] - half) * f, h[1] * f, h[2] * f, (h[3] - half) * f};
  return g;
}

Mat2 flow_at(const FlowGenerator& g, double s) {
  const Mat2& L = g.L;
  double omega = -(L[0] * L[3] - L[1] * L[2]);  // L² = ω I
  double c, k;
  if (omega > 0) {
    double r = std::sqrt(omega);
    c = std::cosh(s * r);
    k = std::sinh(s * r) / r;
  } else if (omega < 0) {
    double r = std::sqrt(-omega);
    c = std::cos(s * r);
    k = std::sin(s * r) / r;
  } else {
    c = 1;
    k = s;
  }
  return {c + k * L[0], k * L[1], k * L[2], c + k * L[3]};
}

QuadraticField vector_field(const FlowGenerator& g) { return {g.L[1], g.L[0] - g.L[3], -g.L[2]}; }

double time_of(const FlowGenerator& gen, const Mat2& g, double tol) {
  Mat2 h = normalized_sl2(g);
  const Mat2& L = gen.L;
  double scale = std::max(1.0, max_norm(h)) * std::max(1.0, max_norm(L));
  if (max_diff(mat_mul(L, h), mat_mul(h, L)) > tol * scale)
    throw Error(Errc::NotInFlow, "target does not commute with the flow");
  double ll = 0;
  for (double v : L) ll += v * v;
  if (ll == 0) throw Error(Errc::NotInFlow, "trivial flow");
  // log of the target, then its coordinate along L
  Mat2 log_h;
  double half = (h[0] + h[3]) / 2;
  if (std::abs(half - 1) <= tol) {
    log_h = {h[0] - 1, h[1], h[2], h[3] - 1};
  } else if (half > 1) {
    double theta = std::acosh(half);
    double f = theta / std::sinh(theta);
    log_h = {(h[0] - half) * f, h[1] * f, h[2] * f, (h[3] - half) * f};
  } else {
    throw Error(Errc::NotInFlow, "target is elliptic");
  }
  double dot = 0;
  for (int i = 0; i < 4; ++i) dot += log_h[i] * L[i];
  double s = dot / ll;
  if (max_diff(flow_at(gen, s), h) > tol * std::max(1.0, max_norm(h)))
    throw Error(Errc::NotInFlow, "no flow time reproduces the target");
  return s;
}

double time_of(const FlowGenerator& gen, const MoebiusMap& g, double tol) { return time_of(gen, to_mat2(g), tol); }

}  // namespace projline
