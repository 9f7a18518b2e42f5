#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "projline/moebius.hpp"
#include "projline/pwmap.hpp"

namespace projline {

// pre · per · per · ... over the alphabet {'0','1'}, kept canonical: per is
// primitive and pre is as short as possible.
class EvPerSeq {
 public:
  EvPerSeq(std::string pre, std::string per);
  // Wire format "10(01)"; a missing period is an error.
  static EvPerSeq parse(std::string_view text);

  const std::string& pre() const { return pre_; }
  const std::string& per() const { return per_; }
  char at(std::size_t i) const;
  bool starts_with(std::string_view word) const;
  EvPerSeq drop(std::size_t k) const;
  EvPerSeq prepend(std::string_view word) const;
  bool is_eventually_constant() const { return per_.size() == 1; }

  friend bool operator==(const EvPerSeq& x, const EvPerSeq& y) { return x.pre_ == y.pre_ && x.per_ == y.per_; }
  std::string to_string() const { return pre_ + "(" + per_ + ")"; }

 private:
  std::string pre_, per_;
};

EvPerSeq apply_x(const EvPerSeq& s);
EvPerSeq apply_x_inv(const EvPerSeq& s);
EvPerSeq apply_y(const EvPerSeq& s);
EvPerSeq apply_y_inv(const EvPerSeq& s);

struct TreeGen {
  enum class Kind { X, XInv, Y, YInv };
  Kind kind;
  std::string address;
};
TreeGen inverse(const TreeGen& g);
// x_s / y_s: act on the cone of s, identity elsewhere.
EvPerSeq apply_gen(const TreeGen& g, const EvPerSeq& s);

// "y_100^-1.y_101", "x", "x_10". Composition as for words of maps: the
// rightmost letter acts first.
std::vector<TreeGen> parse_tree_word(std::string_view text);
EvPerSeq apply_word(const std::vector<TreeGen>& w, const EvPerSeq& s);

// Continued-fraction map to the projective line.
ProjPoint phi(const EvPerSeq& s);

bool verify_conjugacy(const std::vector<TreeGen>& w, const PwProjMap& f, const std::vector<EvPerSeq>& samples);

// Preperiod of length ≤ max_pre, period of length 1..max_per.
EvPerSeq random_seq(std::mt19937_64& rng, int max_pre = 6, int max_per = 4);
std::string random_word(std::mt19937_64& rng, int max_len);

}  // namespace projline
