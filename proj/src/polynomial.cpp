#include "projline/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "projline/error.hpp"

namespace projline {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::coeff(int i) const {
  static const Integer zero = 0;
  if (i < 0 || i > degree()) return zero;
  return coeffs_[static_cast<std::size_t>(i)];
}

IntPoly IntPoly::from_rational(const QPoly& q) {
  Integer l = 1;
  for (const auto& c : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(q.size());
  for (const auto& c : q) out.push_back(c.get_num() * (l / c.get_den()));
  IntPoly p(std::move(out));
  if (p.is_zero()) return p;
  Integer g = p.content();
  for (auto& c : p.coeffs_) c /= g;
  return p;
}

IntPoly IntPoly::monomial(int degree, const Integer& c) {
  std::vector<Integer> v(static_cast<std::size_t>(degree + 1), Integer(0));
  v.back() = c;
  return IntPoly(std::move(v));
}

Rational IntPoly::eval(const Rational& x) const {
  // Horner on numerator/denominator separately: sum c_i n^i d^(deg-i).
  if (is_zero()) return 0;
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = coeffs_.back();
  Integer dpow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    dpow *= d;
    acc = acc * n + coeffs_[static_cast<std::size_t>(i)] * dpow;
  }
  return make_rational(acc, dpow);
}

int IntPoly::sign_at(const Rational& x) const {
  if (is_zero()) return 0;
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = coeffs_.back();
  Integer dpow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    dpow *= d;
    acc = acc * n + coeffs_[static_cast<std::size_t>(i)] * dpow;
  }
  return sgn(acc);
}

IntPoly IntPoly::derivative() const {
  std::vector<Integer> out;
  for (int i = 1; i <= degree(); ++i) out.push_back(coeffs_[static_cast<std::size_t>(i)] * i);
  return IntPoly(std::move(out));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return *this;
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> out = coeffs_;
  for (auto& c : out) c /= g;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::squarefree() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree part of zero");
  if (degree() <= 1) return primitive();
  IntPoly g = gcd(*this, derivative());
  if (g.degree() == 0) return primitive();
  return exact_div(*this, g).primitive();
}

IntPoly IntPoly::reciprocal() const {
  std::vector<Integer> out(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::negated_argument() const {
  std::vector<Integer> out = coeffs_;
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::in_square() const {
  std::vector<Integer> out(coeffs_.empty() ? 0 : 2 * coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted(const Rational& r) const {
  // Horner evaluation of p at (t - r) with rational arithmetic.
  QPoly acc;
  const QPoly lin = {-r, Rational(1)};
  for (int i = degree(); i >= 0; --i) {
    acc = qpoly::mul(acc, lin);
    acc = qpoly::add(acc, QPoly{Rational(coeffs_[static_cast<std::size_t>(i)])});
  }
  return from_rational(acc).primitive();
}

IntPoly IntPoly::scaled(const Rational& r) const {
  if (r == 0) throw Error(Errc::DivisionByZero, "scaling by zero");
  // p(t/r): coefficient i becomes c_i / r^i.
  QPoly out;
  Rational rinv = 1 / r;
  Rational pw = 1;
  for (const auto& c : coeffs_) {
    out.push_back(Rational(c) * pw);
    pw *= rinv;
  }
  return from_rational(out).primitive();
}

QPoly IntPoly::to_rational() const {
  QPoly q;
  q.reserve(coeffs_.size());
  for (const auto& c : coeffs_) q.emplace_back(c);
  return q;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i].get_str();
  os << ']';
  return os.str();
}

namespace qpoly {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

QPoly scale(const QPoly& a, const Rational& s) {
  QPoly out = a;
  for (auto& c : out) c *= s;
  trim(out);
  return out;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  if (b.empty()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  rem = a;
  trim(rem);
  quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lb = b.back();
  while (!rem.empty() && rem.size() >= b.size()) {
    std::size_t shift = rem.size() - b.size();
    Rational f = rem.back() / lb;
    quot[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
    rem.pop_back();
    trim(rem);
  }
  trim(quot);
}

QPoly rem(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  return r;
}

QPoly monic_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return scale(a, 1 / a.back());
}

QPoly ext_gcd(const QPoly& a, const QPoly& b, QPoly& s) {
  QPoly r0 = a, r1 = b;
  trim(r0);
  trim(r1);
  QPoly s0 = {Rational(1)}, s1 = {};
  while (!r1.empty()) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.empty()) {
    s = {};
    return r0;
  }
  Rational inv = 1 / r0.back();
  s = scale(s0, inv);
  return scale(r0, inv);
}

Rational eval(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace qpoly

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  QPoly g = qpoly::monic_gcd(a.to_rational(), b.to_rational());
  return IntPoly::from_rational(g).primitive();
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  QPoly q, r;
  qpoly::divmod(a.to_rational(), b.to_rational(), q, r);
  return IntPoly::from_rational(q);
}

namespace {

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    QPoly r = qpoly::rem(a.to_rational(), b.to_rational());
    if (r.empty()) break;
    // from_rational scales by a positive factor, so negating first keeps signs.
    chain.push_back(IntPoly::from_rational(qpoly::scale(r, -1)));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int variations(const std::vector<IntPoly>& chain, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& q : chain) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int sturm_count(const IntPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "sturm_count of zero polynomial");
  if (!(lo < hi)) throw Error(Errc::InvalidArgument, "sturm_count needs lo < hi");
  if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0)
    throw Error(Errc::EndpointIsRoot, "polynomial vanishes at an interval endpoint");
  if (p.degree() == 0) return 0;
  auto chain = sturm_chain(p);
  return variations(chain, lo) - variations(chain, hi);
}

Rational root_bound(const IntPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "root bound of zero polynomial");
  Rational m = 0;
  Rational lead = abs(Rational(p.leading()));
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(Rational(p.coeff(i))) / lead;
    if (r > m) m = r;
  }
  return m + 1;
}

namespace {

Rational non_root_between(const IntPoly& p, const Rational& lo, const Rational& hi) {
  Rational m = (lo + hi) / 2;
  for (int k = 3; p.sign_at(m) == 0; ++k) m = lo + (hi - lo) / k;
  return m;
}

void isolate_rec(const IntPoly& p, const Rational& lo, const Rational& hi, int count,
                 std::vector<Interval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational m = non_root_between(p, lo, hi);
  int left = sturm_count(p, lo, m);
  isolate_rec(p, lo, m, left, out);
  isolate_rec(p, m, hi, count - left, out);
}

}  // namespace

std::vector<Interval> isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "isolate_real_roots of zero polynomial");
  IntPoly s = p.squarefree();
  std::vector<Interval> out;
  if (s.degree() <= 0) return out;
  Rational b = root_bound(s);
  isolate_rec(s, -b, b, sturm_count(s, -b, b), out);
  return out;
}

Interval eval_interval(const QPoly& p, const Interval& x) {
  Interval acc{0, 0};
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    Rational c[4] = {acc.lo * x.lo, acc.lo * x.hi, acc.hi * x.lo, acc.hi * x.hi};
    Rational lo = *std::min_element(c, c + 4);
    Rational hi = *std::max_element(c, c + 4);
    acc = {lo + *it, hi + *it};
  }
  return acc;
}

IntPoly characteristic_polynomial(const RationalMatrix& a) {
  // Faddeev-LeVerrier; exact over Q.
  const std::size_t n = a.size();
  QPoly coeffs(n + 1, Rational(0));
  coeffs[n] = 1;
  RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s;
      }
      next[i][i] += coeffs[n - k + 1];
    }
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * next[l][i];
    coeffs[n - k] = -tr / Rational(static_cast<long>(k));
    m = std::move(next);
  }
  return IntPoly::from_rational(coeffs).primitive();
}

}  // namespace projline
