#include "projline/rational.hpp"

#include <cctype>
#include <string>

#include "projline/error.hpp"

namespace projline {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroPolynomial: return "zero-polynomial";
    case Errc::EndpointIsRoot: return "endpoint-is-root";
    case Errc::DivisionByZero: return "division-by-zero";
    case Errc::ContextMismatch: return "context-mismatch";
    case Errc::ZeroConstantTerm: return "zero-constant-term";
    case Errc::RootAtOne: return "root-at-one";
    case Errc::InternalLimit: return "internal-limit";
    case Errc::InvalidArgument: return "invalid-argument";
    case Errc::IdentityInput: return "identity-input";
    case Errc::NonDistinctPoints: return "non-distinct-points";
    case Errc::UndefinedDerivative: return "undefined-derivative";
    case Errc::ContinuityViolation: return "continuity-violation";
    case Errc::OrientationViolation: return "orientation-violation";
    case Errc::InjectivityViolation: return "injectivity-violation";
    case Errc::NonPartition: return "non-partition";
    case Errc::PointNotFixed: return "p-not-fixed";
    case Errc::DoesNotFixInfinity: return "does-not-fix-infinity";
    case Errc::LambdaNotGreaterThanOne: return "lambda-not-greater-than-one";
    case Errc::WitnessFailure: return "witness-failure";
    case Errc::UnknownGenerator: return "unknown-generator";
    case Errc::EllipticInput: return "elliptic-input";
    case Errc::NegativeTraceUnresolvable: return "negative-trace-unresolvable";
    case Errc::NotInFlow: return "not-in-flow";
    case Errc::ParseError: return "parse-error";
  }
  return "unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer(s)) throw Error(Errc::ParseError, "bad integer '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    std::string digits(whole);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    if (!frac.empty() && !valid_integer(frac)) throw Error(Errc::ParseError, "bad decimal '" + std::string(text) + "'");
    Integer w = parse_integer(digits);
    Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac));
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer num = (negative ? -1 : 1) * (abs(w) * scale + f);
    return make_rational(num, scale);
  }
  return Rational(parse_integer(text));
}

std::string to_decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale + Rational(1, 2);
  Integer n = scaled.get_num() / scaled.get_den();
  std::string s = n.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  bool zero = (n == 0);
  return (q < 0 && !zero ? "-" : "") + s;
}

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

}  // namespace projline
