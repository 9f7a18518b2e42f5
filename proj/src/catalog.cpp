#include "projline/catalog.hpp"

#include <cctype>

#include "projline/error.hpp"

namespace projline {

const PwProjMap& GenSet::at(const std::string& gen) const {
  auto it = table.find(gen);
  if (it == table.end()) throw Error(Errc::UnknownGenerator, "no generator named '" + gen + "' in " + name);
  return it->second;
}

namespace {

const ProjPoint kInf = ProjPoint::infinity();

PwProjMap thurston_c() {
  return PwProjMap::build({{kInf, 0, MoebiusMap()},
                           {0, Rational(1, 2), MoebiusMap(1, 0, -1, 1)},
                           {Rational(1, 2), 1, MoebiusMap(3, -1, 1, 0)},
                           {1, kInf, MoebiusMap(1, 1, 0, 1)}});
}

}  // namespace

GenSet preset_thompson_t() {
  GenSet g{"thompson_t", nullptr, {}};
  g.table.emplace("a", PwProjMap(MoebiusMap(0, -1, 1, 0)));
  g.table.emplace("b", PwProjMap(MoebiusMap(0, 1, -1, 1)));
  g.table.emplace("c", thurston_c());
  g.table.emplace("shift", PwProjMap(MoebiusMap::translation(1)));
  return g;
}

GenSet preset_g_lambda(const FieldContext& ctx) {
  if (!ctx) throw Error(Errc::InvalidArgument, "g_lambda needs a number field context");
  RealAlgebraic lambda = ctx->root();
  if (!(lambda > RealAlgebraic(1))) throw Error(Errc::LambdaNotGreaterThanOne, "lambda = " + lambda.to_string());
  GenSet g{"g_lambda", ctx, {}};
  PwProjMap a(MoebiusMap::scaling(lambda));
  PwProjMap a_plus = PwProjMap::build({{kInf, 0, MoebiusMap()}, {0, kInf, MoebiusMap::scaling(lambda)}});
  g.table.emplace("a", a);
  g.table.emplace("a_plus", a_plus);
  g.table.emplace("a_minus", compose(a, inverse(a_plus)));
  g.table.emplace("b", PwProjMap(MoebiusMap::translation(1)));
  return g;
}

GenSet preset_lodha_moore() {
  GenSet g{"lodha_moore", nullptr, {}};
  const MoebiusMap id;
  const Rational half(1, 2), third(1, 3);
  g.table.emplace("shift", PwProjMap(MoebiusMap::translation(1)));
  g.table.emplace("c", thurston_c());
  g.table.emplace("d", PwProjMap::build({{0, 1, MoebiusMap(2, 0, 1, 1)}, {1, 0, id}}));
  g.table.emplace("x_10", PwProjMap::build({{0, third, MoebiusMap(1, 0, -1, 1)},
                                            {third, half, MoebiusMap(4, -1, 5, -1)},
                                            {half, 1, MoebiusMap(0, 1, -1, 2)},
                                            {1, 0, id}}));
  g.table.emplace("y_101", PwProjMap::build({{half, 1, MoebiusMap(3, -1, 2, 0)}, {1, half, id}}));
  g.table.emplace("y100inv_y101", PwProjMap::build({{0, half, MoebiusMap(1, 0, -2, 2)},
                                                    {half, 1, MoebiusMap(3, -1, 2, 0)},
                                                    {1, 0, id}}));
  return g;
}

std::vector<std::string> preset_names() { return {"thompson_t", "g_lambda", "lodha_moore"}; }

GenSet preset(const std::string& name, const FieldContext& ctx) {
  if (name == "thompson_t") return preset_thompson_t();
  if (name == "g_lambda") return preset_g_lambda(ctx);
  if (name == "lodha_moore") return preset_lodha_moore();
  throw Error(Errc::InvalidArgument, "unknown preset '" + name + "'");
}

Word parse_word(std::string_view text) {
  Word w;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty() || s == "1" || s == "id") return w;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t dot = s.find('.', pos);
    std::string tok = s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    if (tok.empty()) throw Error(Errc::ParseError, "empty letter in word '" + s + "'");
    long exp = 1;
    std::size_t caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    if (caret != std::string::npos) {
      std::string e = tok.substr(caret + 1);
      try {
        std::size_t used = 0;
        exp = std::stol(e, &used);
        if (used != e.size()) throw std::invalid_argument(e);
      } catch (const std::exception&) {
        throw Error(Errc::ParseError, "bad exponent '" + e + "'");
      }
    }
    if (name.empty()) throw Error(Errc::ParseError, "missing generator name in '" + tok + "'");
    for (char ch : name)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw Error(Errc::ParseError, "bad generator name '" + name + "'");
    if (exp == 0) throw Error(Errc::ParseError, "zero exponent in '" + tok + "'");
    w.letters.emplace_back(name, exp);
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& [name, exp] : w.letters) {
    if (!out.empty()) out += ".";
    out += name;
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out.empty() ? "id" : out;
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.emplace_back(it->first, -it->second);
  return out;
}

PwProjMap power(const PwProjMap& f, long n) {
  PwProjMap base = n < 0 ? inverse(f) : f;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  PwProjMap result;
  while (k) {
    if (k & 1) result = compose(result, base);
    k >>= 1;
    if (k) base = compose(base, base);
  }
  return result;
}

PwProjMap eval_word(const GenSet& gens, const Word& w) {
  PwProjMap result;
  for (const auto& [name, exp] : w.letters) result = compose(result, power(gens.at(name), exp));
  return result;
}

bool check_relation(const GenSet& gens, const Word& w) { return eval_word(gens, w).is_identity(); }

PwProjMap commutator(const PwProjMap& u, const PwProjMap& v) {
  return compose(compose(u, v), compose(inverse(u), inverse(v)));
}

PwProjMap commutator(const GenSet& gens, const Word& u, const Word& v) {
  return commutator(eval_word(gens, u), eval_word(gens, v));
}

PwProjMap monod_element(std::vector<Piece> pieces, const std::vector<MoebiusMap>& witnesses, Ring ring) {
  PwProjMap f = PwProjMap::build(std::move(pieces));
  if (ring == Ring::Integers)
    for (const auto& p : f.pieces())
      if (!is_in_psl2z(p.m)) throw Error(Errc::WitnessFailure, "piece " + p.m.to_string() + " is not in PSL(2,Z)");
  for (const auto& b : f.breakpoints()) {
    bool ok = false;
    for (const auto& w : witnesses)
      if (hyperbolic_fixed_point_witness(b, w)) ok = true;
    if (!ok && ring == Ring::Integers && is_hyperbolic_fixed_point_Z(b)) ok = true;
    if (!ok) throw Error(Errc::WitnessFailure, "no hyperbolic witness fixes breakpoint " + b.to_string());
  }
  return f;
}

}  // namespace projline
