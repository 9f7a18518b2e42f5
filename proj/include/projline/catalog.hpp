#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "projline/number_field.hpp"
#include "projline/pwmap.hpp"

namespace projline {

struct GenSet {
  std::string name;
  FieldContext context;  // null when no field is attached
  std::map<std::string, PwProjMap> table;

  const PwProjMap& at(const std::string& gen) const;
};

// Generators a: t ↦ −1/t, b: t ↦ 1/(1−t), c, and shift: t ↦ t+1.
GenSet preset_thompson_t();
// a (scaling by λ), a_plus, a_minus = a a_plus⁻¹, b (translation by 1).
GenSet preset_g_lambda(const FieldContext& ctx);
// shift, c, d, x_10, y_101, y100inv_y101.
GenSet preset_lodha_moore();
// Names accepted by preset().
std::vector<std::string> preset_names();
// ctx is required for g_lambda and ignored otherwise.
GenSet preset(const std::string& name, const FieldContext& ctx = nullptr);

// Letters with nonzero exponents. "b.a_plus^-1.b^2"; the word u.v is u ∘ v,
// so v is applied first. The empty word is the identity.
struct Word {
  std::vector<std::pair<std::string, long>> letters;
};
Word parse_word(std::string_view text);
std::string to_string(const Word& w);
Word inverse(const Word& w);

PwProjMap power(const PwProjMap& f, long n);
PwProjMap eval_word(const GenSet& gens, const Word& w);
bool check_relation(const GenSet& gens, const Word& w);
// u v u⁻¹ v⁻¹
PwProjMap commutator(const PwProjMap& u, const PwProjMap& v);
PwProjMap commutator(const GenSet& gens, const Word& u, const Word& v);

enum class Ring { Integers, General };
// Builds an element whose breakpoints are hyperbolic fixed points. Every
// breakpoint must be fixed by one of the hyperbolic witnesses; over the
// integers a quadratic irrational breakpoint needs no witness and every
// piece must lie in PSL(2,Z).
PwProjMap monod_element(std::vector<Piece> pieces, const std::vector<MoebiusMap>& witnesses,
                        Ring ring = Ring::General);

}  // namespace projline
