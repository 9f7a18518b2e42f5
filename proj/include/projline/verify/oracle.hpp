#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <vector>

#include "projline/polynomial.hpp"

// Floating point oracles, independent of the exact kernel, used to
// cross-check it.
namespace projline::verify {

using BigFloat = boost::multiprecision::cpp_bin_float_100;
using BigComplex = boost::multiprecision::cpp_complex_100;

BigFloat to_big(const Rational& q);

// All complex roots of a squarefree polynomial (Durand–Kerner).
std::vector<BigComplex> complex_roots(const IntPoly& p);
// Number of roots with negligible imaginary part.
int real_root_count(const IntPoly& p);
// min over roots of | |z| − 1 |.
BigFloat unit_circle_distance(const IntPoly& p);
// The unit-circle decision with threshold 1e-20.
bool float_galois_hyperbolic(const IntPoly& p);

}  // namespace projline::verify
