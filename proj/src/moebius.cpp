#include "projline/moebius.hpp"

#include <algorithm>
#include <utility>

#include "projline/error.hpp"

namespace projline {

const RealAlgebraic& ProjPoint::value() const {
  if (inf_) throw Error(Errc::InvalidArgument, "point at infinity has no finite value");
  return value_;
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return a.value_ == b.value_;
}

std::string ProjPoint::to_string() const { return inf_ ? "inf" : value_.to_string(); }

int linear_compare(const ProjPoint& a, const ProjPoint& b) {
  if (a.is_infinity() || b.is_infinity()) return (a.is_infinity() ? 1 : 0) - (b.is_infinity() ? 1 : 0);
  return compare(a.value(), b.value());
}

bool cyclic_order(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  int ab = linear_compare(a, b), bc = linear_compare(b, c), ca = linear_compare(c, a);
  if (ab == 0 || bc == 0 || ca == 0) throw Error(Errc::NonDistinctPoints, "cyclic order needs three distinct points");
  return (ab < 0 && bc < 0) || (bc < 0 && ca < 0) || (ca < 0 && ab < 0);
}

const char* conj_class_name(ConjClass k) {
  switch (k) {
    case ConjClass::Identity: return "identity";
    case ConjClass::Hyperbolic: return "hyperbolic";
    case ConjClass::Parabolic: return "parabolic";
    case ConjClass::Elliptic: return "elliptic";
  }
  return "?";
}

namespace {

bool all_rational(const std::array<RealAlgebraic, 4>& m) {
  return std::all_of(m.begin(), m.end(), [](const RealAlgebraic& x) { return x.is_rational(); });
}

// Primitive integer entries, first nonzero positive, then divided by
// sqrt(det) when that is an integer.
void canonical_rational(std::array<RealAlgebraic, 4>& m) {
  std::array<Rational, 4> q;
  Integer den = 1;
  for (int i = 0; i < 4; ++i) {
    q[i] = m[i].rational();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q[i].get_den_mpz_t());
  }
  std::array<Integer, 4> z;
  Integer g = 0;
  for (int i = 0; i < 4; ++i) {
    z[i] = Rational(q[i] * den).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  int first = 0;
  while (z[first] == 0) ++first;
  if (z[first] < 0) g = -g;
  for (auto& x : z) x /= g;
  Integer det = z[0] * z[3] - z[1] * z[2];
  Integer root = 1;
  if (mpz_perfect_square_p(det.get_mpz_t())) root = sqrt(det);
  for (int i = 0; i < 4; ++i) m[i] = RealAlgebraic(make_rational(z[i], root));
}

}  // namespace

MoebiusMap::MoebiusMap(RealAlgebraic a, RealAlgebraic b, RealAlgebraic c, RealAlgebraic d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  if ((m_[0] * m_[3] - m_[1] * m_[2]).sign() <= 0)
    throw Error(Errc::OrientationViolation, "Möbius map needs positive determinant");
  if (!all_rational(m_)) {
    int first = 0;
    while (m_[first].sign() == 0) ++first;
    RealAlgebraic e = m_[first];
    for (auto& x : m_) x /= e;
  }
  if (all_rational(m_)) canonical_rational(m_);
}

RealAlgebraic MoebiusMap::det() const { return a() * d() - b() * c(); }
RealAlgebraic MoebiusMap::trace() const { return a() + d(); }

ProjPoint MoebiusMap::apply(const ProjPoint& p) const {
  if (p.is_infinity()) {
    if (c().sign() == 0) return ProjPoint::infinity();
    return ProjPoint(a() / c());
  }
  const RealAlgebraic& t = p.value();
  RealAlgebraic den = c() * t + d();
  if (den.sign() == 0) return ProjPoint::infinity();
  return ProjPoint((a() * t + b()) / den);
}

MoebiusMap MoebiusMap::inverse() const { return {d(), -b(), -c(), a()}; }

bool MoebiusMap::is_identity() const { return b().sign() == 0 && c().sign() == 0 && a() == d(); }

MoebiusMap operator*(const MoebiusMap& m, const MoebiusMap& n) {
  return {m.a() * n.a() + m.b() * n.c(), m.a() * n.b() + m.b() * n.d(), m.c() * n.a() + m.d() * n.c(),
          m.c() * n.b() + m.d() * n.d()};
}

std::string MoebiusMap::to_string() const {
  return "[[" + a().to_string() + ", " + b().to_string() + "], [" + c().to_string() + ", " + d().to_string() + "]]";
}

ConjClass classify(const MoebiusMap& m) {
  if (m.is_identity()) return ConjClass::Identity;
  RealAlgebraic diff = m.a() - m.d();
  int s = (diff * diff + 4 * m.b() * m.c()).sign();
  return s > 0 ? ConjClass::Hyperbolic : (s == 0 ? ConjClass::Parabolic : ConjClass::Elliptic);
}

std::vector<ProjPoint> fixed_points(const MoebiusMap& m) {
  if (m.is_identity()) throw Error(Errc::IdentityInput, "identity fixes every point");
  std::vector<ProjPoint> out;
  RealAlgebraic diff = m.a() - m.d();
  if (m.c().sign() == 0) {
    if (diff.sign() != 0) out.emplace_back(m.b() / (m.d() - m.a()));
    out.push_back(ProjPoint::infinity());
    return out;
  }
  RealAlgebraic disc = diff * diff + 4 * m.b() * m.c();
  int s = disc.sign();
  if (s < 0) return out;
  RealAlgebraic two_c = 2 * m.c();
  if (s == 0) {
    out.emplace_back(diff / two_c);
    return out;
  }
  RealAlgebraic r = RealAlgebraic::sqrt(disc);
  out.emplace_back((diff - r) / two_c);
  out.emplace_back((diff + r) / two_c);
  std::sort(out.begin(), out.end(), linear_less);
  return out;
}

RealAlgebraic derivative_at(const MoebiusMap& m, const ProjPoint& p) {
  // Work with N = J^{[image at ∞]} · M · J^{[p at ∞]}, J: t ↦ −1/t, so both
  // coordinates are finite; det J = 1.
  const MoebiusMap chart(0, -1, 1, 0);
  MoebiusMap n = m;
  RealAlgebraic coord = 0;
  if (p.is_infinity()) n = n * chart;
  else coord = p.value();
  if (m.apply(p).is_infinity()) n = chart * n;
  RealAlgebraic den = n.c() * coord + n.d();
  if (den.sign() == 0) throw Error(Errc::UndefinedDerivative, "derivative undefined at " + p.to_string());
  return n.det() / (den * den);
}

bool is_in_psl2z(const MoebiusMap& m) {
  for (int i = 0; i < 4; ++i) {
    const RealAlgebraic& x = i == 0 ? m.a() : i == 1 ? m.b() : i == 2 ? m.c() : m.d();
    if (!x.is_rational()) return false;
  }
  // canonical rational form is primitive integer unless sqrt(det) was divided out
  Integer den = 1;
  std::array<Rational, 4> q{m.a().rational(), m.b().rational(), m.c().rational(), m.d().rational()};
  for (const auto& x : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::array<Integer, 4> z;
  Integer g = 0;
  for (int i = 0; i < 4; ++i) {
    z[i] = Rational(q[i] * den).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  for (auto& x : z) x /= g;
  return z[0] * z[3] - z[1] * z[2] == 1;
}

bool is_parabolic_fixed_point_Z(const ProjPoint& p) { return p.is_infinity() || p.value().is_rational(); }

bool is_hyperbolic_fixed_point_Z(const ProjPoint& p) { return !p.is_infinity() && p.value().degree() == 2; }

bool hyperbolic_fixed_point_witness(const ProjPoint& p, const MoebiusMap& gamma) {
  return classify(gamma) == ConjClass::Hyperbolic && gamma.apply(p) == p;
}

}  // namespace projline
