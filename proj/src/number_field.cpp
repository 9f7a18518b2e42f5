#include "projline/number_field.hpp"

#include <utility>

#include "projline/error.hpp"

namespace projline {

RealAlgebraic NumberFieldContext::root() const { return RealAlgebraic::from_root(minpoly, root_interval); }

FieldContext make_field(const IntPoly& minpoly, const Rational& lo, const Rational& hi) {
  if (minpoly.is_zero()) throw Error(Errc::ZeroPolynomial, "minimal polynomial is zero");
  if (minpoly.degree() < 1) throw Error(Errc::InvalidArgument, "minimal polynomial must have positive degree");
  if (minpoly.coeff(0) == 0) throw Error(Errc::ZeroConstantTerm, "minimal polynomial has zero constant term");
  if (gcd(minpoly, minpoly.derivative()).degree() > 0)
    throw Error(Errc::InvalidArgument, "minimal polynomial is not squarefree");
  if (!(lo < hi)) throw Error(Errc::InvalidArgument, "root interval needs lo < hi");
  if (minpoly.sign_at(lo) == 0 || minpoly.sign_at(hi) == 0)
    throw Error(Errc::EndpointIsRoot, "root interval endpoint is a root");
  int n = sturm_count(minpoly, lo, hi);
  if (n != 1) throw Error(Errc::InvalidArgument, "root interval holds " + std::to_string(n) + " roots");

  auto ctx = std::make_shared<NumberFieldContext>();
  ctx->minpoly = minpoly.primitive();
  ctx->root_interval = {lo, hi};
  const int d = ctx->minpoly.degree();
  if (d >= 2) {
    bool rational_root = false;
    for (const auto& iv : isolate_real_roots(ctx->minpoly))
      if (RealAlgebraic::from_root(ctx->minpoly, iv).is_rational()) rational_root = true;
    if (rational_root)
      ctx->warnings.push_back("minimal polynomial has a rational root and is reducible");
    else if (d >= 4)
      ctx->warnings.push_back("irreducibility not verified beyond the rational root test");
  }
  return ctx;
}

namespace {

void check_same(const FieldElement& a, const FieldElement& b) {
  if (a.context() != b.context() && !(a.context()->minpoly == b.context()->minpoly &&
                                      a.context()->root() == b.context()->root()))
    throw Error(Errc::ContextMismatch, "field elements live in different contexts");
}

std::vector<Rational> padded(QPoly q, int d) {
  q.resize(static_cast<std::size_t>(d), Rational(0));
  return q;
}

}  // namespace

FieldElement::FieldElement(FieldContext ctx, std::vector<Rational> coeffs) : ctx_(std::move(ctx)) {
  QPoly q = std::move(coeffs);
  qpoly::trim(q);
  coeffs_ = padded(qpoly::rem(q, ctx_->minpoly.to_rational()), ctx_->degree());
}

FieldElement FieldElement::from_rational(FieldContext ctx, const Rational& q) { return FieldElement(std::move(ctx), {q}); }

FieldElement FieldElement::generator(FieldContext ctx) { return FieldElement(std::move(ctx), {Rational(0), Rational(1)}); }

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  std::vector<Rational> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return FieldElement(a.ctx_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return FieldElement(ctx_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  QPoly x = a.coeffs_, y = b.coeffs_;
  qpoly::trim(x);
  qpoly::trim(y);
  return FieldElement(a.ctx_, qpoly::mul(x, y));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero field element");
  QPoly x = coeffs_, s;
  qpoly::trim(x);
  QPoly g = qpoly::ext_gcd(x, ctx_->minpoly.to_rational(), s);
  if (qpoly::degree(g) != 0)
    throw Error(Errc::DivisionByZero, "element shares a factor with a reducible minimal polynomial");
  return FieldElement(ctx_, qpoly::scale(s, 1 / g[0]));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return a.coeffs_ == b.coeffs_;
}

int FieldElement::sign() const {
  QPoly q = coeffs_;
  qpoly::trim(q);
  return sign_of_poly_at(q, ctx_->root());
}

RealAlgebraic FieldElement::to_real() const {
  QPoly q = coeffs_;
  qpoly::trim(q);
  return evaluate(q, ctx_->root());
}

std::string FieldElement::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ", ";
    out += projline::to_string(coeffs_[i]);
  }
  return out + "]";
}

RationalMatrix companion_matrix(const IntPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "companion matrix of zero polynomial");
  if (p.degree() < 1) throw Error(Errc::InvalidArgument, "companion matrix needs positive degree");
  if (p.coeff(0) == 0) throw Error(Errc::ZeroConstantTerm, "constant term is zero");
  const auto d = static_cast<std::size_t>(p.degree());
  RationalMatrix m(d, std::vector<Rational>(d, Rational(0)));
  const Rational lead(p.leading());
  for (std::size_t i = 0; i < d; ++i) {
    if (i > 0) m[i][i - 1] = 1;
    m[i][d - 1] = -Rational(p.coeff(static_cast<int>(i))) / lead;
  }
  return m;
}

bool is_galois_hyperbolic(const IntPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "zero polynomial");
  if (p.coeff(0) == 0) throw Error(Errc::ZeroConstantTerm, "constant term is zero");
  if (p.sign_at(1) == 0 || p.sign_at(-1) == 0) return false;
  IntPoly g = gcd(p.squarefree(), p.squarefree().reciprocal());
  if (g.degree() <= 0) return true;
  // Every unit-circle root z of p also satisfies p(1/z) = 0, so it is a root
  // of g; g is palindromic of even degree 2k since ±1 are not roots.
  // t^{-k} g(t) = h(t + 1/t), and unit-circle roots correspond to roots of h
  // in (-2, 2).
  const int k = g.degree() / 2;
  IntPoly h(std::vector<Integer>{g.coeff(k)});
  IntPoly prev({2}), cur({0, 1});  // t^j + t^{-j} as a polynomial in x
  for (int j = 1; j <= k; ++j) {
    h = h + IntPoly(std::vector<Integer>{g.coeff(k + j)}) * cur;
    IntPoly next = IntPoly({0, 1}) * cur - prev;
    prev = cur;
    cur = next;
  }
  return sturm_count(h.squarefree(), -2, 2) == 0;
}

Integer abelianization_torsion(const IntPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "zero polynomial");
  Rational v = p.primitive().eval(1);
  if (v == 0) throw Error(Errc::RootAtOne, "1 is a root");
  return abs(v.get_num());
}

}  // namespace projline
