#include "projline/treemodel.hpp"

#include <map>
#include <utility>

#include "projline/catalog.hpp"
#include "projline/error.hpp"

namespace projline {

namespace {

void check_bits(std::string_view w) {
  for (char c : w)
    if (c != '0' && c != '1') throw Error(Errc::ParseError, "binary word expected, got '" + std::string(w) + "'");
}

}  // namespace

EvPerSeq::EvPerSeq(std::string pre, std::string per) : pre_(std::move(pre)), per_(std::move(per)) {
  check_bits(pre_);
  check_bits(per_);
  if (per_.empty()) throw Error(Errc::InvalidArgument, "period must be nonempty");
  const std::size_t n = per_.size();
  for (std::size_t k = 1; k < n; ++k) {
    if (n % k) continue;
    bool repeats = true;
    for (std::size_t i = k; i < n && repeats; ++i) repeats = per_[i] == per_[i - k];
    if (repeats) {
      per_.resize(k);
      break;
    }
  }
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    per_ = per_.back() + per_.substr(0, per_.size() - 1);
  }
}

EvPerSeq EvPerSeq::parse(std::string_view text) {
  auto open = text.find('(');
  auto close = text.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close != text.size() - 1 || close < open)
    throw Error(Errc::ParseError, "sequence must look like 10(01), got '" + std::string(text) + "'");
  return EvPerSeq(std::string(text.substr(0, open)), std::string(text.substr(open + 1, close - open - 1)));
}

char EvPerSeq::at(std::size_t i) const {
  return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
}

bool EvPerSeq::starts_with(std::string_view word) const {
  for (std::size_t i = 0; i < word.size(); ++i)
    if (at(i) != word[i]) return false;
  return true;
}

EvPerSeq EvPerSeq::drop(std::size_t k) const {
  if (k <= pre_.size()) return EvPerSeq(pre_.substr(k), per_);
  std::size_t r = (k - pre_.size()) % per_.size();
  return EvPerSeq("", per_.substr(r) + per_.substr(0, r));
}

EvPerSeq EvPerSeq::prepend(std::string_view word) const { return EvPerSeq(std::string(word) + pre_, per_); }

EvPerSeq apply_x(const EvPerSeq& s) {
  if (s.starts_with("00")) return s.drop(2).prepend("0");
  if (s.starts_with("01")) return s.drop(2).prepend("10");
  return s.drop(1).prepend("11");
}

EvPerSeq apply_x_inv(const EvPerSeq& s) {
  if (s.starts_with("0")) return s.drop(1).prepend("00");
  if (s.starts_with("10")) return s.drop(2).prepend("01");
  return s.drop(2).prepend("1");
}

namespace {

// Runs the recursive y / y⁻¹ rules as a transducer. The state (mode, input
// position folded into the period) determines all later output, so the
// first repeated state closes the output period.
EvPerSeq run_y(const EvPerSeq& s, bool inverse_mode) {
  const std::size_t pre = s.pre().size(), per = s.per().size();
  auto fold = [&](std::size_t i) { return i < pre ? i : pre + (i - pre) % per; };
  std::map<std::pair<bool, std::size_t>, std::size_t> seen;
  std::string out;
  std::size_t i = 0;
  bool inv = inverse_mode;
  while (true) {
    auto key = std::make_pair(inv, fold(i));
    auto [it, fresh] = seen.emplace(key, out.size());
    if (!fresh) return EvPerSeq(out.substr(0, it->second), out.substr(it->second));
    char b0 = s.at(i), b1 = s.at(i + 1);
    if (!inv) {
      if (b0 == '0' && b1 == '0') { out += "0"; i += 2; }
      else if (b0 == '0') { out += "10"; i += 2; inv = true; }
      else { out += "11"; i += 1; }
    } else {
      if (b0 == '0') { out += "00"; i += 1; }
      else if (b1 == '0') { out += "01"; i += 2; inv = false; }
      else { out += "1"; i += 2; }
    }
  }
}

}  // namespace

EvPerSeq apply_y(const EvPerSeq& s) { return run_y(s, false); }
EvPerSeq apply_y_inv(const EvPerSeq& s) { return run_y(s, true); }

TreeGen inverse(const TreeGen& g) {
  using K = TreeGen::Kind;
  K k = g.kind == K::X ? K::XInv : g.kind == K::XInv ? K::X : g.kind == K::Y ? K::YInv : K::Y;
  return {k, g.address};
}

EvPerSeq apply_gen(const TreeGen& g, const EvPerSeq& s) {
  if (!s.starts_with(g.address)) return s;
  EvPerSeq rest = s.drop(g.address.size());
  switch (g.kind) {
    case TreeGen::Kind::X: rest = apply_x(rest); break;
    case TreeGen::Kind::XInv: rest = apply_x_inv(rest); break;
    case TreeGen::Kind::Y: rest = apply_y(rest); break;
    case TreeGen::Kind::YInv: rest = apply_y_inv(rest); break;
  }
  return rest.prepend(g.address);
}

std::vector<TreeGen> parse_tree_word(std::string_view text) {
  std::vector<TreeGen> out;
  for (const auto& [name, exp] : parse_word(text).letters) {
    TreeGen g;
    if (name[0] == 'x') g.kind = TreeGen::Kind::X;
    else if (name[0] == 'y') g.kind = TreeGen::Kind::Y;
    else throw Error(Errc::UnknownGenerator, "tree generators are x or y, got '" + name + "'");
    if (name.size() > 1) {
      if (name[1] != '_') throw Error(Errc::UnknownGenerator, "bad tree generator '" + name + "'");
      g.address = name.substr(2);
      check_bits(g.address);
    }
    if (exp < 0) g = inverse(g);
    for (long k = 0; k < (exp < 0 ? -exp : exp); ++k) out.push_back(g);
  }
  return out;
}

EvPerSeq apply_word(const std::vector<TreeGen>& w, const EvPerSeq& s) {
  EvPerSeq r = s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = apply_gen(*it, r);
  return r;
}

namespace {

// [[a,b],[c,d]] acting as t ↦ (at+b)/(ct+d), without the det > 0 rule.
struct IntMat {
  Integer a = 1, b = 0, c = 0, d = 1;
  IntMat times_quotient(const Integer& q) const { return {a * q + b, a, c * q + d, c}; }
};

}  // namespace

ProjPoint phi(const EvPerSeq& s) {
  const char lead = s.at(0);
  EvPerSeq rest = s.drop(1);
  const std::size_t pre = rest.pre().size(), per = rest.per().size();
  auto fold = [&](std::size_t i) { return i < pre ? i : pre + (i - pre) % per; };

  // Run lengths of alternating bits, starting with `lead` (first run may be
  // empty). A run that never ends terminates the continued fraction.
  std::vector<Integer> runs;
  std::map<std::pair<std::size_t, char>, std::size_t> seen;
  std::size_t i = 0;
  char expect = lead;
  bool finite = false;
  std::size_t period_start = 0;
  while (true) {
    auto [it, fresh] = seen.emplace(std::make_pair(fold(i), expect), runs.size());
    if (!fresh) {
      period_start = it->second;
      break;
    }
    // constant tail equal to `expect` from here on?
    bool tail_const = true;
    for (std::size_t k = 0; k < per && tail_const; ++k) tail_const = rest.per()[k] == expect;
    std::size_t len = 0;
    while (i < pre && rest.at(i) == expect) ++i, ++len;
    if (i >= pre && tail_const) {
      finite = true;
      break;
    }
    while (rest.at(i) == expect) ++i, ++len;
    runs.push_back(len);
    expect = expect == '0' ? '1' : '0';
  }

  IntMat prefix;
  std::size_t nprefix = finite ? runs.size() : period_start;
  for (std::size_t k = 0; k < nprefix; ++k) prefix = prefix.times_quotient(runs[k]);
  RealAlgebraic value;
  if (finite) {
    if (prefix.c == 0) return ProjPoint::infinity();
    value = RealAlgebraic(make_rational(prefix.a, prefix.c));
  } else {
    IntMat cyc;
    for (std::size_t k = period_start; k < runs.size(); ++k) cyc = cyc.times_quotient(runs[k]);
    // attracting (positive) root of C x² + (D − A) x − B = 0
    Integer disc = (cyc.d - cyc.a) * (cyc.d - cyc.a) + 4 * cyc.b * cyc.c;
    RealAlgebraic x = (RealAlgebraic(Integer(cyc.a - cyc.d)) + RealAlgebraic::sqrt(RealAlgebraic(disc))) /
                      RealAlgebraic(Integer(2 * cyc.c));
    RealAlgebraic num = RealAlgebraic(prefix.a) * x + RealAlgebraic(prefix.b);
    RealAlgebraic den = RealAlgebraic(prefix.c) * x + RealAlgebraic(prefix.d);
    value = num / den;
  }
  return ProjPoint(lead == '0' ? -value : value);
}

bool verify_conjugacy(const std::vector<TreeGen>& w, const PwProjMap& f, const std::vector<EvPerSeq>& samples) {
  for (const auto& s : samples)
    if (!(phi(apply_word(w, s)) == f.eval(phi(s)))) return false;
  return true;
}

std::string random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), bit(0, 1);
  std::string w;
  for (int k = len(rng); k > 0; --k) w += static_cast<char>('0' + bit(rng));
  return w;
}

EvPerSeq random_seq(std::mt19937_64& rng, int max_pre, int max_per) {
  std::string pre = random_word(rng, max_pre);
  std::string per;
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> len(1, max_per);
  for (int k = len(rng); k > 0; --k) per += static_cast<char>('0' + bit(rng));
  return EvPerSeq(pre, per);
}

}  // namespace projline
