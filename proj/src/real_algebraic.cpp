#include "projline/real_algebraic.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "projline/error.hpp"

namespace projline {

long max_bisections() {
  static const long cap = [] {
    if (const char* env = std::getenv("PROJLINE_MAX_BISECTIONS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && v > 0) return v;
    }
    return 10000L;
  }();
  return cap;
}

namespace {

class BisectionBudget {
 public:
  void spend(long n = 1) {
    used_ += n;
    if (used_ > max_bisections())
      throw Error(Errc::InternalLimit, "interval refinement exceeded the bisection cap");
  }

 private:
  long used_ = 0;
};

// Monic companion matrix (subdiagonal ones, last column -c_j/c_d).
RationalMatrix companion(const IntPoly& p) {
  const int d = p.degree();
  RationalMatrix m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
  Rational lead(p.leading());
  for (int i = 0; i < d; ++i) {
    if (i > 0) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i - 1)] = 1;
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(d - 1)] = -Rational(p.coeff(i)) / lead;
  }
  return m;
}

RationalMatrix kronecker_sum(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size(), m = b.size();
  RationalMatrix out(n * m, std::vector<Rational>(n * m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k) out[i * m + k][j * m + k] += a[i][j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = 0; l < m; ++l) out[i * m + k][i * m + l] += b[k][l];
  return out;
}

RationalMatrix kronecker_product(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size(), m = b.size();
  RationalMatrix out(n * m, std::vector<Rational>(n * m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) out[i * m + k][j * m + l] = a[i][j] * b[k][l];
    }
  return out;
}

std::vector<std::complex<double>> float_roots(const IntPoly& p) {
  const int d = p.degree();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  const double lead = p.leading().get_d();
  for (int i = 0; i < d; ++i) {
    if (i > 0) c(i, i - 1) = 1.0;
    c(i, d - 1) = -p.coeff(i).get_d() / lead;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(c, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < d; ++i) out.push_back(solver.eigenvalues()[i]);
  return out;
}

bool near_integer(std::complex<double> z, Integer& out) {
  double re = std::round(z.real());
  double tol = 1e-6 * std::max(1.0, std::abs(z.real()));
  if (std::abs(z.imag()) > tol || std::abs(z.real() - re) > tol) return false;
  if (std::abs(re) > 1e15) return false;
  out = Integer(re);
  return true;
}

// Looks for a proper rational factor of r that vanishes at the root isolated
// in (lo, hi), by grouping numerically computed roots and verifying the
// candidate exactly with a gcd. Returns r unchanged when none is found.
IntPoly shrink_annihilator(const IntPoly& r, const Rational& lo, const Rational& hi) {
  const int n = r.degree();
  if (n <= 2 || n > 24) return r;
  auto roots = float_roots(r);
  const double target = Rational((lo + hi) / 2).get_d();
  std::size_t i0 = 0;
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (std::abs(roots[i] - target) < std::abs(roots[i0] - target)) i0 = i;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (i != i0) others.push_back(i);
  const double lead = r.leading().get_d();
  long budget = 20000;

  for (int k = 2; k <= n - 1 && budget > 0; ++k) {
    // combinations of k-1 indices among `others`
    std::vector<int> idx(static_cast<std::size_t>(k - 1));
    for (int i = 0; i < k - 1; ++i) idx[static_cast<std::size_t>(i)] = i;
    const int m = static_cast<int>(others.size());
    while (budget-- > 0) {
      std::vector<std::complex<double>> poly;
      // poly holds lead * prod (t - z), stored highest coefficient first
      poly = {lead};
      for (int i = 0; i < k; ++i) {
        std::complex<double> z = i == 0 ? roots[i0] : roots[others[static_cast<std::size_t>(idx[static_cast<std::size_t>(i - 1)])]];
        std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
          next[j] += poly[j];
          next[j + 1] -= z * poly[j];
        }
        poly = std::move(next);
      }
      std::vector<Integer> coeffs(poly.size());
      bool ok = true;
      for (std::size_t j = 0; j < poly.size() && ok; ++j) ok = near_integer(poly[j], coeffs[poly.size() - 1 - j]);
      if (ok) {
        IntPoly cand(coeffs);
        IntPoly g = gcd(r, cand);
        if (g.degree() == k && sturm_count(g, lo, hi) == 1) return g.primitive();
      }
      // next combination
      int pos = k - 2;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - (k - 1) + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < k - 1; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return r;
}

}  // namespace

// Interval bookkeeping shared by the arithmetic routines.
class Refiner {
 public:
  static void bisect(RealAlgebraic& x) { x.bisect(); }
  static RealAlgebraic make(IntPoly p, Rational lo, Rational hi) {
    return RealAlgebraic::irrational(std::move(p), std::move(lo), std::move(hi));
  }

  // Given a squarefree primitive r with exactly one root in (lo, hi) and
  // nonzero endpoint values, returns the canonical value of that root.
  static RealAlgebraic finalize(IntPoly r, Rational lo, Rational hi, BisectionBudget& budget) {
    if (r.degree() == 1) return make_rational(-r.coeff(0), r.coeff(1));
    if (r.degree() == 2) {
      Integer disc = r.coeff(1) * r.coeff(1) - 4 * r.coeff(2) * r.coeff(0);
      if (mpz_perfect_square_p(disc.get_mpz_t())) {
        Integer s = sqrt(disc);
        for (const Integer& num : {Integer(-r.coeff(1) - s), Integer(-r.coeff(1) + s)}) {
          Rational root = make_rational(num, 2 * r.coeff(2));
          if (lo < root && root < hi) return root;
        }
        throw Error(Errc::InvalidArgument, "isolating interval lost its root");
      }
      return make(std::move(r), std::move(lo), std::move(hi));
    }
    // Any rational root p/q of a primitive r has q | lc(r); narrow the
    // interval until it holds at most one candidate of the form k/lc.
    const Integer lead = r.leading();
    const int slo = r.sign_at(lo);
    while (Rational(lead) * (hi - lo) >= 1) {
      budget.spend();
      Rational m = (lo + hi) / 2;
      int s = r.sign_at(m);
      if (s == 0) return m;
      if (s == slo) lo = m; else hi = m;
    }
    Rational scaled_lo = lo * lead;
    Integer k = scaled_lo.get_num() / scaled_lo.get_den();
    for (int step = 0; step < 3; ++step, ++k) {
      Rational cand = make_rational(k, lead);
      if (lo < cand && cand < hi && r.sign_at(cand) == 0) return cand;
    }
    r = shrink_annihilator(r, lo, hi);
    if (r.degree() == 2) return finalize(std::move(r), std::move(lo), std::move(hi), budget);
    return make(std::move(r), std::move(lo), std::move(hi));
  }

  // Isolates the root of r (squarefree primitive) pinned down by enclose(),
  // which must return shrinking enclosures on successive calls.
  static RealAlgebraic isolate(const IntPoly& r, const std::function<Interval(bool)>& enclose) {
    BisectionBudget budget;
    Interval e = enclose(false);
    while (true) {
      if (e.lo < e.hi && r.sign_at(e.lo) != 0 && r.sign_at(e.hi) != 0 && sturm_count(r, e.lo, e.hi) == 1)
        return finalize(r, e.lo, e.hi, budget);
      budget.spend();
      e = enclose(true);
    }
  }
};

RealAlgebraic RealAlgebraic::irrational(IntPoly p, Rational lo, Rational hi) {
  RealAlgebraic x;
  x.rational_ = false;
  x.value_ = 0;
  x.poly_ = std::move(p);
  x.lo_ = std::move(lo);
  x.hi_ = std::move(hi);
  return x;
}

void RealAlgebraic::bisect() {
  Rational m = (lo_ + hi_) / 2;
  int s = poly_.sign_at(m);
  if (s == 0) throw Error(Errc::InvalidArgument, "irrational representation has a rational root");
  if (s == poly_.sign_at(lo_)) lo_ = m; else hi_ = m;
}

RealAlgebraic RealAlgebraic::from_root(const IntPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "annihilator is zero");
  if (!(lo < hi)) throw Error(Errc::InvalidArgument, "isolating interval needs lo < hi");
  IntPoly s = p.squarefree();
  if (s.sign_at(lo) == 0 || s.sign_at(hi) == 0)
    throw Error(Errc::EndpointIsRoot, "isolating interval endpoint is a root");
  int n = sturm_count(s, lo, hi);
  if (n != 1)
    throw Error(Errc::InvalidArgument, "interval holds " + std::to_string(n) + " roots, expected exactly one");
  BisectionBudget budget;
  return Refiner::finalize(std::move(s), lo, hi, budget);
}

RealAlgebraic RealAlgebraic::sqrt(const RealAlgebraic& x) {
  int sg = x.sign();
  if (sg < 0) throw Error(Errc::InvalidArgument, "square root of a negative number");
  if (sg == 0) return RealAlgebraic(0);
  if (x.rational_) {
    const Integer& n = x.value_.get_num();
    const Integer& d = x.value_.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t()))
      return Rational(::sqrt(n), ::sqrt(d));
    IntPoly p(std::vector<Integer>{-n, 0, d});
    return from_root(p, Rational(0), x.value_ + 1);
  }
  IntPoly q = x.poly_.in_square().squarefree();
  for (const auto& iv : isolate_real_roots(q)) {
    if (iv.hi <= 0) continue;
    RealAlgebraic y = from_root(q, iv);
    if (y.sign() > 0 && y * y == x) return y;
  }
  throw Error(Errc::InvalidArgument, "square root not found among candidate roots");
}

const Rational& RealAlgebraic::rational() const {
  if (!rational_) throw Error(Errc::InvalidArgument, "value is irrational");
  return value_;
}

IntPoly RealAlgebraic::annihilator() const {
  if (rational_) return IntPoly(std::vector<Integer>{-value_.get_num(), value_.get_den()});
  return poly_;
}

Interval RealAlgebraic::interval() const {
  if (rational_) return {value_, value_};
  return {lo_, hi_};
}

RealAlgebraic RealAlgebraic::refined(const Rational& max_width) const {
  if (rational_) return *this;
  RealAlgebraic x = *this;
  BisectionBudget budget;
  while (x.hi_ - x.lo_ > max_width) {
    budget.spend();
    x.bisect();
  }
  return x;
}

int RealAlgebraic::sign() const {
  if (rational_) return sgn(value_);
  RealAlgebraic x = *this;
  BisectionBudget budget;
  while (x.lo_ < 0 && x.hi_ > 0) {
    budget.spend();
    x.bisect();
  }
  return x.lo_ >= 0 ? 1 : -1;
}

double RealAlgebraic::to_double() const {
  if (rational_) return value_.get_d();
  RealAlgebraic x = *this;
  BisectionBudget budget;
  while (x.lo_ < 0 && x.hi_ > 0) {
    budget.spend();
    x.bisect();
  }
  Rational rel(1, Integer(1) << 60);
  while (x.hi_ - x.lo_ > rel * std::min(abs(x.lo_), abs(x.hi_))) {
    budget.spend();
    x.bisect();
  }
  return Rational((x.lo_ + x.hi_) / 2).get_d();
}

std::string RealAlgebraic::to_decimal(int digits) const {
  if (rational_) return projline::to_decimal(value_, digits);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 2));
  RealAlgebraic x = refined(Rational(1, scale));
  return projline::to_decimal((x.lo_ + x.hi_) / 2, digits);
}

RealAlgebraic RealAlgebraic::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  RealAlgebraic result(1), base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

RealAlgebraic RealAlgebraic::operator-() const {
  if (rational_) return RealAlgebraic(Rational(-value_));
  return irrational(poly_.negated_argument().primitive(), -hi_, -lo_);
}

RealAlgebraic operator+(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.rational_ && b.rational_) return RealAlgebraic(Rational(a.value_ + b.value_));
  if (a.rational_ || b.rational_) {
    const RealAlgebraic& x = a.rational_ ? b : a;
    const Rational& r = a.rational_ ? a.value_ : b.value_;
    if (r == 0) return x;
    return RealAlgebraic::irrational(x.poly_.shifted(r), x.lo_ + r, x.hi_ + r);
  }
  IntPoly r = characteristic_polynomial(kronecker_sum(companion(a.poly_), companion(b.poly_))).squarefree();
  RealAlgebraic x = a, y = b;
  return Refiner::isolate(r, [&](bool refine) {
    if (refine) {
      x.bisect();
      y.bisect();
    }
    return Interval{x.lo_ + y.lo_, x.hi_ + y.hi_};
  });
}

RealAlgebraic operator-(const RealAlgebraic& a, const RealAlgebraic& b) { return a + (-b); }

RealAlgebraic operator*(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.rational_ && b.rational_) return RealAlgebraic(Rational(a.value_ * b.value_));
  if (a.rational_ || b.rational_) {
    const RealAlgebraic& x = a.rational_ ? b : a;
    const Rational& r = a.rational_ ? a.value_ : b.value_;
    if (r == 0) return RealAlgebraic(0);
    if (r == 1) return x;
    Rational l = x.lo_ * r, h = x.hi_ * r;
    if (r < 0) std::swap(l, h);
    return RealAlgebraic::irrational(x.poly_.scaled(r), l, h);
  }
  IntPoly r = characteristic_polynomial(kronecker_product(companion(a.poly_), companion(b.poly_))).squarefree();
  RealAlgebraic x = a, y = b;
  return Refiner::isolate(r, [&](bool refine) {
    if (refine) {
      x.bisect();
      y.bisect();
    }
    Rational c[4] = {x.lo_ * y.lo_, x.lo_ * y.hi_, x.hi_ * y.lo_, x.hi_ * y.hi_};
    return Interval{*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
  });
}

RealAlgebraic RealAlgebraic::inverse() const {
  if (rational_) {
    if (value_ == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    return RealAlgebraic(Rational(1 / value_));
  }
  RealAlgebraic x = *this;
  BisectionBudget budget;
  while (x.lo_ <= 0 && x.hi_ >= 0) {
    budget.spend();
    x.bisect();
  }
  return irrational(poly_.reciprocal().primitive(), 1 / x.hi_, 1 / x.lo_);
}

RealAlgebraic operator/(const RealAlgebraic& a, const RealAlgebraic& b) { return a * b.inverse(); }

bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.rational_ != b.rational_) return false;
  if (a.rational_) return a.value_ == b.value_;
  if (a.poly_ == b.poly_) {
    // same annihilator: the values agree iff the isolating intervals overlap
    // in a subinterval holding its root
    Rational lo = std::max(a.lo_, b.lo_), hi = std::min(a.hi_, b.hi_);
    if (!(lo < hi)) return false;
    return sturm_count(a.poly_, lo, hi) == 1;
  }
  IntPoly g = gcd(a.poly_, b.poly_);
  if (g.degree() < 1) return false;
  Rational lo = std::max(a.lo_, b.lo_), hi = std::min(a.hi_, b.hi_);
  if (!(lo < hi)) return false;
  return sturm_count(g, lo, hi) >= 1;
}

int compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.rational(), b.rational()) < 0 ? -1 : (a.rational() == b.rational() ? 0 : 1);
  if (a == b) return 0;
  Interval ia = a.interval(), ib = b.interval();
  RealAlgebraic x = a, y = b;
  BisectionBudget budget;
  while (!(ia.hi < ib.lo || ib.hi < ia.lo)) {
    budget.spend();
    if (!x.is_rational()) Refiner::bisect(x);
    if (!y.is_rational()) Refiner::bisect(y);
    ia = x.interval();
    ib = y.interval();
  }
  return ia.hi < ib.lo ? -1 : 1;
}

std::strong_ordering operator<=>(const RealAlgebraic& a, const RealAlgebraic& b) {
  int c = compare(a, b);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

RealAlgebraic evaluate(const QPoly& q, const RealAlgebraic& x) {
  QPoly qq = q;
  qpoly::trim(qq);
  if (qq.empty()) return RealAlgebraic(0);
  if (x.rational_) return RealAlgebraic(qpoly::eval(qq, x.value_));
  QPoly reduced = qpoly::rem(qq, x.poly_.to_rational());
  if (qpoly::degree(reduced) <= 0) return RealAlgebraic(reduced.empty() ? Rational(0) : reduced[0]);
  if (qpoly::degree(reduced) == 1 && reduced[0] == 0 && reduced[1] == 1) return x;
  // multiplication by q(t) on Q[t]/(P) in the basis 1, t, ..., t^{d-1}
  const int d = x.poly_.degree();
  const QPoly modulus = x.poly_.to_rational();
  RationalMatrix m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
  for (int j = 0; j < d; ++j) {
    QPoly basis(static_cast<std::size_t>(j + 1), Rational(0));
    basis[static_cast<std::size_t>(j)] = 1;
    QPoly col = qpoly::rem(qpoly::mul(reduced, basis), modulus);
    for (std::size_t i = 0; i < col.size(); ++i) m[i][static_cast<std::size_t>(j)] = col[i];
  }
  IntPoly r = characteristic_polynomial(m).squarefree();
  RealAlgebraic y = x;
  return Refiner::isolate(r, [&](bool refine) {
    if (refine) y.bisect();
    return eval_interval(reduced, Interval{y.lo_, y.hi_});
  });
}

int sign_of_poly_at(const QPoly& q, const RealAlgebraic& x) {
  QPoly qq = q;
  qpoly::trim(qq);
  if (qq.empty()) return 0;
  if (x.rational_) return sgn(qpoly::eval(qq, x.value_));
  IntPoly qi = IntPoly::from_rational(qq);
  if (qi.degree() == 0) return sgn(qi.coeff(0));
  IntPoly g = gcd(qi, x.poly_);
  if (g.degree() >= 1 && sturm_count(g, x.lo_, x.hi_) >= 1) return 0;
  IntPoly qs = qi.squarefree();
  RealAlgebraic y = x;
  BisectionBudget budget;
  while (true) {
    if (qs.sign_at(y.lo_) != 0 && qs.sign_at(y.hi_) != 0 && sturm_count(qs, y.lo_, y.hi_) == 0)
      return qi.sign_at(y.lo_);
    budget.spend();
    y.bisect();
  }
}

std::string RealAlgebraic::to_string() const {
  if (rational_) return projline::to_string(value_);
  return "root of " + poly_.to_string() + " in (" + projline::to_string(lo_) + ", " + projline::to_string(hi_) + ")";
}

}  // namespace projline
