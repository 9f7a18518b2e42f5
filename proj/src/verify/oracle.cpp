#include "projline/verify/oracle.hpp"

#include "projline/error.hpp"

namespace projline::verify {

BigFloat to_big(const Rational& q) {
  return BigFloat(q.get_num().get_str()) / BigFloat(q.get_den().get_str());
}

std::vector<BigComplex> complex_roots(const IntPoly& p) {
  const int d = p.degree();
  if (d < 1) return {};
  std::vector<BigComplex> c;
  BigFloat lead(p.leading().get_str());
  for (int i = 0; i <= d; ++i) c.emplace_back(BigFloat(p.coeff(i).get_str()) / lead);
  auto eval = [&](const BigComplex& z) {
    BigComplex v = c[static_cast<std::size_t>(d)];
    for (int i = d - 1; i >= 0; --i) v = v * z + c[static_cast<std::size_t>(i)];
    return v;
  };
  BigFloat bound = 1;
  for (int i = 0; i < d; ++i) bound = std::max(bound, BigFloat(1) + abs(c[static_cast<std::size_t>(i)]));
  std::vector<BigComplex> z;
  BigComplex seed(BigFloat("0.4"), BigFloat("0.9"));
  BigComplex w = 1;
  for (int i = 0; i < d; ++i) {
    z.push_back(w * bound / 2);
    w *= seed;
  }
  const BigFloat eps("1e-90");
  for (int iter = 0; iter < 2000; ++iter) {
    BigFloat delta = 0;
    for (int i = 0; i < d; ++i) {
      BigComplex den = 1;
      for (int j = 0; j < d; ++j)
        if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      BigComplex step = eval(z[static_cast<std::size_t>(i)]) / den;
      z[static_cast<std::size_t>(i)] -= step;
      delta = std::max(delta, BigFloat(abs(step)));
    }
    if (delta < eps) break;
  }
  return z;
}

int real_root_count(const IntPoly& p) {
  int n = 0;
  for (const auto& z : complex_roots(p.squarefree()))
    if (abs(z.imag()) < BigFloat("1e-40") * std::max(BigFloat(1), BigFloat(abs(z)))) ++n;
  return n;
}

BigFloat unit_circle_distance(const IntPoly& p) {
  BigFloat best = 1e300;
  for (const auto& z : complex_roots(p.squarefree())) best = std::min(best, BigFloat(abs(BigFloat(abs(z)) - 1)));
  return best;
}

bool float_galois_hyperbolic(const IntPoly& p) { return unit_circle_distance(p) > BigFloat("1e-20"); }

}  // namespace projline::verify
