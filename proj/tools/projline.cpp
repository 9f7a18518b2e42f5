// projline: command-line front end. JSON results go to stdout, a one-line
// summary to stderr. Exit 0 for success or a true verdict, 1 for a false
// verdict, 2 for bad input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "projline/catalog.hpp"
#include "projline/error.hpp"
#include "projline/flow.hpp"
#include "projline/json_io.hpp"
#include "projline/number_field.hpp"
#include "projline/obstruct.hpp"
#include "projline/treemodel.hpp"
#include "projline/verify/suites.hpp"

using namespace projline;
using Json = nlohmann::json;
namespace pj = projline::json;

namespace {

struct Options {
  std::uint64_t seed = 0;
  int digits = 12;
  std::string preset, gens_file, minpoly, lo, hi;
  std::string gen, word, f, g, matrix, point, side = "plus", seq, pair, a, base;
  std::string matrix_file, gen_matrix, target_matrix, suite;
  std::string u, v;
  std::string sample_lo = "-2", sample_hi = "2";
  int samples = 100, n = 50, bound = 64;
  double s = 1, tol = 1e-10;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad JSON: ") + e.what());
  }
}

// --minpoly with optional --lo/--hi; without them the largest real root.
FieldContext field_from(const Options& o) {
  if (o.minpoly.empty()) return nullptr;
  IntPoly p = pj::poly_from(Json(o.minpoly));
  if (!o.lo.empty() && !o.hi.empty()) return make_field(p, parse_rational(o.lo), parse_rational(o.hi));
  auto roots = isolate_real_roots(p);
  if (roots.empty()) throw Error(Errc::InvalidArgument, "minimal polynomial has no real root");
  return make_field(p, roots.back().lo, roots.back().hi);
}

std::optional<GenSet> gens_from(const Options& o) {
  if (!o.gens_file.empty()) return pj::genset_from(parse_json(read_file(o.gens_file)));
  if (!o.preset.empty()) return preset(o.preset, field_from(o));
  return std::nullopt;
}

// A map given as inline JSON, @file, or a word in the generator set.
PwProjMap element(const Options& o, const std::string& spec) {
  if (spec.empty()) throw Error(Errc::InvalidArgument, "missing map");
  if (spec[0] == '[' || spec[0] == '{') return pj::element_from(parse_json(spec));
  if (spec[0] == '@') return pj::element_from(parse_json(read_file(spec.substr(1))));
  auto gs = gens_from(o);
  if (!gs) throw Error(Errc::InvalidArgument, "a word needs --preset or --gens");
  return eval_word(*gs, parse_word(spec));
}

// --gen, --word or --f, in that order.
PwProjMap main_element(const Options& o) {
  if (!o.gen.empty()) return element(o, o.gen);
  if (!o.word.empty()) return element(o, o.word);
  return element(o, o.f);
}

MoebiusMap matrix_of(const Options& o, const std::string& spec) {
  PwProjMap f = element(o, spec);
  if (f.pieces().size() != 1) throw Error(Errc::InvalidArgument, "expected a single Möbius map");
  return f.pieces()[0].m;
}

ProjPoint point_arg(const std::string& text) {
  if (text.empty()) throw Error(Errc::InvalidArgument, "missing point");
  if (text[0] == '{' || text[0] == '"') return pj::point_from(parse_json(text));
  return pj::point_from(Json(text));
}

int emit(const Json& j, const std::string& summary, int code = 0) {
  std::cout << j.dump(2) << "\n";
  if (!summary.empty()) std::cerr << summary << "\n";
  return code;
}

int verdict(const Json& j, bool ok, const std::string& what) {
  return emit(j, what + ": " + (ok ? "true" : "false"), ok ? 0 : 1);
}

Json points(const std::vector<ProjPoint>& ps) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(pj::to_json(p));
  return arr;
}

Json one_sided_json(const ProjPoint& p, const OneSided& d) {
  return {{"point", pj::to_json(p)}, {"left", pj::to_json(d.left)}, {"right", pj::to_json(d.right)}};
}

int run_suite(const Options& o) {
  auto ids = verify::suite_members(o.suite);
  if (ids.empty()) throw Error(Errc::InvalidArgument, "unknown suite " + o.suite);
  Json rows = Json::array();
  bool all = true;
  for (int id : ids) {
    auto r = verify::run_criterion(id, o.seed);
    all = all && r.pass;
    std::fprintf(stderr, "%-4d %-4s %-48s %6d cases %8.3fs\n", r.id, r.pass ? "PASS" : "FAIL", r.title.c_str(),
                 r.cases, r.seconds);
    for (const auto& f : r.failures) std::fprintf(stderr, "       %s\n", f.c_str());
    rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"cases", r.cases},
                    {"seconds", r.seconds}, {"failures", r.failures}});
  }
  std::cout << Json{{"suite", o.suite}, {"seed", o.seed}, {"criteria", rows}, {"all_pass", all}}.dump(2) << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with piecewise projective maps of the projective line"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--digits", o.digits, "decimal digits for approximations")->capture_default_str();
  app.add_option("--preset", o.preset, "thompson_t, g_lambda or lodha_moore");
  app.add_option("--gens", o.gens_file, "generator set JSON file");
  app.add_option("--minpoly", o.minpoly, "integer coefficients, constant first, e.g. \"[-2,1]\"");
  app.add_option("--lo", o.lo, "root interval lower end");
  app.add_option("--hi", o.hi, "root interval upper end");

  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
  auto map_opts = [&](CLI::App* c) {
    c->add_option("--gen", o.gen, "generator name");
    c->add_option("--word", o.word, "word in the generators");
    c->add_option("--f", o.f, "map: JSON, @file or word");
  };

  std::string preset_name;
  auto* c_preset = sub("preset", "print a preset generator set");
  c_preset->add_option("name", preset_name)->required();
  auto* c_eval_word = sub("eval-word", "evaluate a word");
  map_opts(c_eval_word);
  auto* c_check = sub("check-relation", "is a word the identity");
  map_opts(c_check);
  auto* c_comm = sub("commutator", "u v u^-1 v^-1");
  c_comm->add_option("--u", o.u)->required();
  c_comm->add_option("--v", o.v)->required();
  auto* c_classify = sub("classify", "conjugacy class of a Möbius map");
  c_classify->add_option("--matrix", o.matrix)->required();
  auto* c_fixed = sub("fixed-points", "fixed points of a Möbius map or fixed set of a map");
  c_fixed->add_option("--matrix", o.matrix);
  map_opts(c_fixed);
  auto* c_compose = sub("compose", "f ∘ g");
  c_compose->add_option("--f", o.f)->required();
  c_compose->add_option("--g", o.g)->required();
  auto* c_eval = sub("eval", "value of a map at a point");
  map_opts(c_eval);
  c_eval->add_option("--point", o.point)->required();
  auto* c_defects = sub("c1-defects", "points where the one-sided derivatives differ");
  map_opts(c_defects);
  auto* c_support = sub("support", "open support");
  map_opts(c_support);
  auto* c_linked = sub("linked", "linked successive fixed pairs of f and g");
  c_linked->add_option("--f", o.f)->required();
  c_linked->add_option("--g", o.g)->required();
  auto* c_audit = sub("audit", "linked pairs and hyperbolic breaks");
  c_audit->add_option("--pair", o.pair, "f,g")->required();
  auto* c_germ = sub("germ", "affine germ at ±∞");
  map_opts(c_germ);
  c_germ->add_option("--side", o.side)->check(CLI::IsMember({"plus", "minus"}))->capture_default_str();
  auto* c_pres = sub("presentation", "check the affine presentation");
  auto* c_nonc2 = sub("nonc2", "hypotheses of the C² obstruction");
  c_nonc2->add_option("--f", o.f)->required();
  c_nonc2->add_option("--g", o.g)->required();
  c_nonc2->add_option("--a", o.a)->required();
  c_nonc2->add_option("--base", o.base, "common fixed point, default 0");
  c_nonc2->add_option("--bound", o.bound, "exponent bound")->capture_default_str();
  auto* c_galois = sub("galois-hyperbolic", "no conjugate on the unit circle");
  auto* c_torsion = sub("abelianization-torsion", "|p(1)| for the primitive minimal polynomial");
  auto* c_lm_apply = sub("lm-apply", "apply a tree word to a sequence");
  c_lm_apply->add_option("--word", o.word)->required();
  c_lm_apply->add_option("--seq", o.seq)->required();
  auto* c_lm_phi = sub("lm-phi", "continued-fraction map of a sequence");
  c_lm_phi->add_option("--seq", o.seq)->required();
  auto* c_lm_verify = sub("lm-verify", "check a tree word against a map on random samples");
  c_lm_verify->add_option("--word", o.word)->required();
  c_lm_verify->add_option("--matrix-file", o.matrix_file);
  c_lm_verify->add_option("--f", o.f);
  c_lm_verify->add_option("--samples", o.samples)->capture_default_str();
  auto* c_field = sub("flow-field", "quadratic vector field of the flow");
  c_field->add_option("--matrix", o.matrix)->required();
  auto* c_at = sub("flow-at", "flow at time s");
  c_at->add_option("--matrix", o.matrix)->required();
  c_at->add_option("--s", o.s)->capture_default_str();
  auto* c_time = sub("flow-time", "time at which the flow reaches the target");
  c_time->add_option("--gen-matrix", o.gen_matrix)->required();
  c_time->add_option("--target-matrix", o.target_matrix)->required();
  c_time->add_option("--tol", o.tol)->capture_default_str();
  auto* c_sample = sub("sample", "CSV of (t, f(t)) on a grid");
  map_opts(c_sample);
  c_sample->add_option("--n", o.n)->capture_default_str();
  c_sample->add_option("--from", o.sample_lo)->capture_default_str();
  c_sample->add_option("--to", o.sample_hi)->capture_default_str();
  auto* c_suite = sub("suite", "run a named acceptance suite");
  c_suite->add_option("name", o.suite)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_preset->parsed()) {
      GenSet g = preset(preset_name, field_from(o));
      return emit(pj::to_json(g), g.name + ": " + std::to_string(g.table.size()) + " generators");
    }
    if (c_eval_word->parsed()) {
      PwProjMap f = main_element(o);
      return emit(pj::to_json(f), f.to_string());
    }
    if (c_check->parsed()) {
      bool ok = main_element(o).is_identity();
      return verdict({{"holds", ok}}, ok, "relation holds");
    }
    if (c_comm->parsed()) {
      PwProjMap c = commutator(element(o, o.u), element(o, o.v));
      Json j = pj::to_json(c);
      j["identity"] = c.is_identity();
      return emit(j, c.to_string());
    }
    if (c_classify->parsed()) {
      MoebiusMap m = matrix_of(o, o.matrix);
      const char* k = conj_class_name(classify(m));
      return emit({{"class", k}, {"trace", pj::to_json(m.trace())}, {"det", pj::to_json(m.det())}}, k);
    }
    if (c_fixed->parsed()) {
      if (!o.matrix.empty()) {
        auto fp = fixed_points(matrix_of(o, o.matrix));
        return emit({{"fixed_points", points(fp)}}, std::to_string(fp.size()) + " fixed points");
      }
      FixedSet s = fixed_set(main_element(o));
      return emit(pj::to_json(s), std::to_string(s.components.size()) + " components");
    }
    if (c_compose->parsed()) {
      PwProjMap h = compose(element(o, o.f), element(o, o.g));
      return emit(pj::to_json(h), h.to_string());
    }
    if (c_eval->parsed()) {
      ProjPoint y = main_element(o).eval(point_arg(o.point));
      return emit({{"value", pj::to_json(y)}}, y.to_string());
    }
    if (c_defects->parsed()) {
      PwProjMap f = main_element(o);
      Json defects = Json::array(), bps = Json::array();
      auto ds = c1_defect_points(f);
      for (const auto& d : ds) defects.push_back(pj::to_json(d));
      for (const auto& p : f.breakpoints()) bps.push_back(one_sided_json(p, one_sided_derivatives(f, p)));
      return emit({{"defects", defects}, {"breakpoints", bps}}, std::to_string(ds.size()) + " defects");
    }
    if (c_support->parsed()) {
      Json arcs = Json::array();
      auto sup = support(main_element(o));
      for (const auto& a : sup) arcs.push_back(pj::to_json(a));
      return emit({{"support", arcs}}, std::to_string(sup.size()) + " arcs");
    }
    if (c_linked->parsed()) {
      Json arr = Json::array();
      auto ls = linked_pairs(element(o, o.f), element(o, o.g));
      for (const auto& l : ls) arr.push_back(pj::to_json(l));
      return emit({{"linked", arr}}, std::to_string(ls.size()) + " linked pairs");
    }
    if (c_audit->parsed()) {
      auto comma = o.pair.find(',');
      if (comma == std::string::npos) throw Error(Errc::InvalidArgument, "--pair expects f,g");
      std::string nf = o.pair.substr(0, comma), ng = o.pair.substr(comma + 1);
      ObstructionReport r = audit_pair(nf, element(o, nf), ng, element(o, ng));
      return emit(pj::to_json(r), std::to_string(r.linked.size()) + " linked, " +
                                      std::to_string(r.hyperbolic_breaks.size()) + " hyperbolic breaks");
    }
    if (c_germ->parsed()) {
      AffineGerm g = germ_at(main_element(o), o.side == "plus" ? Side::Plus : Side::Minus);
      Json j = pj::to_json(g);
      j["identity"] = g.is_identity();
      return emit(j, "slope " + g.slope.to_string() + ", intercept " + g.intercept.to_string());
    }
    if (c_pres->parsed()) {
      FieldContext ctx = field_from(o);
      if (!ctx) throw Error(Errc::InvalidArgument, "presentation needs --minpoly");
      PresentationReport r = check_affine_presentation(ctx);
      return verdict(pj::to_json(r), r.all_hold(), "presentation holds");
    }
    if (c_nonc2->parsed()) {
      ProjPoint base = o.base.empty() ? ProjPoint(0) : point_arg(o.base);
      NonC2Report r = check_nonc2_hypotheses(element(o, o.f), element(o, o.g), point_arg(o.a), base, o.bound);
      return verdict(pj::to_json(r), r.all_hold(), "hypotheses hold");
    }
    if (c_galois->parsed() || c_torsion->parsed()) {
      if (o.minpoly.empty()) throw Error(Errc::InvalidArgument, "--minpoly is required");
      IntPoly p = pj::poly_from(Json(o.minpoly));
      if (c_galois->parsed()) {
        bool ok = is_galois_hyperbolic(p);
        return verdict({{"galois_hyperbolic", ok}}, ok, "Galois hyperbolic");
      }
      Integer t = abelianization_torsion(p);
      return emit({{"torsion", t.get_str()}}, "torsion " + t.get_str());
    }
    if (c_lm_apply->parsed()) {
      EvPerSeq r = apply_word(parse_tree_word(o.word), EvPerSeq::parse(o.seq));
      return emit({{"seq", r.to_string()}}, r.to_string());
    }
    if (c_lm_phi->parsed()) {
      ProjPoint p = phi(EvPerSeq::parse(o.seq));
      return emit({{"point", pj::to_json(p)}}, p.to_string());
    }
    if (c_lm_verify->parsed()) {
      PwProjMap f = !o.matrix_file.empty() ? element(o, "@" + o.matrix_file) : element(o, o.f);
      std::mt19937_64 rng(o.seed);
      std::vector<EvPerSeq> samples;
      for (int i = 0; i < o.samples; ++i) samples.push_back(random_seq(rng));
      bool ok = verify_conjugacy(parse_tree_word(o.word), f, samples);
      return verdict({{"conjugate", ok}, {"samples", o.samples}, {"seed", o.seed}}, ok, "conjugacy");
    }
    if (c_field->parsed()) {
      QuadraticField q = vector_field(generator_of(matrix_of(o, o.matrix)));
      return emit({{"q0", q.q0}, {"q1", q.q1}, {"q2", q.q2}},
                  "X(t) = " + std::to_string(q.q0) + " + " + std::to_string(q.q1) + " t + " + std::to_string(q.q2) + " t^2");
    }
    if (c_at->parsed()) {
      Mat2 m = flow_at(generator_of(matrix_of(o, o.matrix)), o.s);
      return emit({{"matrix", pj::to_json(m)}, {"s", o.s}}, "");
    }
    if (c_time->parsed()) {
      double s = time_of(generator_of(matrix_of(o, o.gen_matrix)), matrix_of(o, o.target_matrix), o.tol);
      return emit({{"s", s}}, "s = " + std::to_string(s));
    }
    if (c_sample->parsed()) {
      auto rows = sample(main_element(o), o.n, parse_rational(o.sample_lo), parse_rational(o.sample_hi), o.digits);
      std::cout << "t,f(t)\n";
      for (const auto& [t, ft] : rows) std::cout << t << "," << ft << "\n";
      std::cerr << rows.size() << " rows\n";
      return 0;
    }
    if (c_suite->parsed()) return run_suite(o);
  } catch (const Error& e) {
    std::cout << Json{{"error", errc_name(e.code())}, {"message", e.what()}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << Json{{"error", "InvalidArgument"}, {"message", e.what()}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
