#include "fillkit/scenario.hpp"

#include "fillkit/bridge.hpp"
#include "fillkit/mcg.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace fillkit::scenario {

namespace {

using factorization::PositiveFactorization;
using surface::Surface;

struct Context {
  const Options& opt;
};

using OpFn = std::function<json(const json& args, Context& ctx)>;

const json& arg(const json& args, const char* key) {
  if (!args.contains(key)) throw std::invalid_argument(std::string("missing argument \"") + key + "\"");
  return args.at(key);
}

std::string text_arg(const json& args, const char* key) {
  const json& j = arg(args, key);
  if (!j.is_string()) throw std::invalid_argument(std::string("argument \"") + key + "\" must be a string");
  return j.get<std::string>();
}

std::string surface_arg(const json& args) { return args.contains("surface") ? text_arg(args, "surface") : "S1_3"; }

const Surface& surface_of(const json& args, const Context& ctx) { return Surface::get(surface_arg(args), ctx.opt.sign); }

// Accepts a braid, or a band factorization whose product is taken.
braid::BraidWord braid_arg(const json& j) {
  if (j.is_object() && j.contains("bands")) return io::bands_from_json(j).product();
  return io::braid_from_json(j);
}

braid::BandFactorization bands_arg(const json& j) {
  if (j.is_object() && j.contains("bands") && j["bands"].is_object()) return io::bands_from_json(j["bands"]);
  return io::bands_from_json(j);
}

factorization::Direction direction_arg(const json& args) {
  const std::string d = args.contains("direction") ? text_arg(args, "direction") : "forward";
  if (d == "forward") return factorization::Direction::forward;
  if (d == "backward") return factorization::Direction::backward;
  throw std::invalid_argument("direction must be \"forward\" or \"backward\"");
}

json verify_json(const derivation::DerivationScript& d, const derivation::VerifyResult& v, const Surface& s) {
  json out = {{"name", d.name}, {"verified", v.ok()}, {"steps", d.steps.size()}};
  if (v.ok()) {
    out["start"] = s.format(v.certificate->start);
    out["end"] = s.format(v.certificate->end);
  } else {
    out["failed_step"] = v.failed_step;
    if (v.failed_step < d.steps.size() && d.steps[v.failed_step].line > 0)
      out["line"] = d.steps[v.failed_step].line;
    out["reason"] = v.reason;
  }
  return out;
}

derivation::RelationLibrary library_with(const json& args, int sign) {
  auto lib = derivation::RelationLibrary::standard(sign);
  if (args.contains("lemmas")) {
    for (const auto& t : arg(args, "lemmas")) {
      auto d = derivation::parse_script(t.get<std::string>());
      auto v = derivation::verify(d, lib);
      if (!v.ok()) throw std::invalid_argument("lemma " + d.name + " does not verify: " + v.reason);
      lib.add_lemma(v.certificate->as_lemma());
    }
  }
  return lib;
}

json pi1_order(const presentations::GroupPresentation& p, std::size_t limit) {
  auto r = presentations::todd_coxeter(p, {}, limit);
  if (r.index) return *r.index;
  return "exhausted";
}

const std::map<std::string, OpFn>& operations() {
  static const std::map<std::string, OpFn> ops = {
      {"smith_normal_form",
       [](const json& a, Context&) -> json {
         auto r = intlinalg::smith_normal_form(io::matrix_from_json(arg(a, "matrix")));
         json f = json::array();
         for (const auto& x : r.invariant_factors) f.push_back(io::to_json(x));
         return {{"invariant_factors", f}, {"rank", r.rank()}, {"D", io::to_json(r.diagonal)},
                 {"U", io::to_json(r.left)}, {"V", io::to_json(r.right)}};
       }},
      {"cokernel",
       [](const json& a, Context&) -> json { return io::to_json(intlinalg::cokernel(io::matrix_from_json(arg(a, "matrix")))); }},
      {"determinant",
       [](const json& a, Context&) -> json { return io::to_json(intlinalg::determinant(io::matrix_from_json(arg(a, "matrix")))); }},
      {"abelianization",
       [](const json& a, Context&) -> json {
         return io::to_json(presentations::abelianization(io::presentation_from_json(arg(a, "presentation"))));
       }},
      {"todd_coxeter",
       [](const json& a, Context& ctx) -> json {
         auto p = io::presentation_from_json(arg(a, "presentation"));
         std::vector<presentations::FreeWord> sub;
         if (a.contains("subgroup"))
           for (const auto& w : a["subgroup"]) sub.push_back(io::free_word_from_json(w));
         const std::size_t limit =
             a.contains("limit") ? static_cast<std::size_t>(io::small_integer(a["limit"], "limit")) : ctx.opt.max_cosets;
         if (limit < 1) throw std::invalid_argument("limit must be at least 1");
         auto r = presentations::todd_coxeter(p, sub, limit);
         json out = {{"cosets_defined", r.cosets_defined}};
         if (r.index)
           out["index"] = *r.index;
         else
           out["index"] = "exhausted";
         return out;
       }},
      {"reidemeister_schreier",
       [](const json& a, Context&) -> json {
         auto p = io::presentation_from_json(arg(a, "presentation"));
         auto k = presentations::reidemeister_schreier(p, arg(a, "assignment").get<std::vector<int>>());
         return {{"presentation", io::to_json(k)}, {"abelianization", io::to_json(presentations::abelianization(k))}};
       }},
      {"branched_double_cover",
       [](const json& a, Context&) -> json {
         auto p = io::presentation_from_json(arg(a, "presentation"));
         std::vector<int> m;
         for (const auto& x : arg(a, "meridians")) m.push_back(static_cast<int>(io::small_integer(x, "meridian")) - 1);
         return io::to_json(presentations::branched_double_cover_homology(p, m));
       }},
      {"homology_class",
       [](const json& a, Context& ctx) -> json {
         return io::to_json(surface_of(a, ctx).homology_class(parse_curve(text_arg(a, "curve"))));
       }},
      {"homology_rep",
       [](const json& a, Context& ctx) -> json {
         return io::to_json(surface_of(a, ctx).homology_rep(parse_word(text_arg(a, "word"))));
       }},
      {"necessary_distinct",
       [](const json& a, Context& ctx) -> json {
         return mcg::to_string(mcg::necessary_distinct(surface_of(a, ctx), parse_word(text_arg(a, "a")),
                                                       parse_word(text_arg(a, "b"))));
       }},
      {"cap_class",
       [](const json& a, Context& ctx) -> json {
         const Surface& s = surface_of(a, ctx);
         auto m = surface::cap(s.model(), static_cast<int>(io::small_integer(arg(a, "boundary"), "boundary")), ctx.opt.sign);
         const Curve c = parse_curve(text_arg(a, "curve"));
         json out = {{"target", m.target.id()}, {"class", io::to_json(m.class_map.apply(s.homology_class(c)))}};
         auto img = m.apply(c);
         out["curve"] = img ? json(Surface::get(m.target, ctx.opt.sign).format(*img)) : json(nullptr);
         return out;
       }},
      {"to_b3",
       [](const json& a, Context& ctx) -> json {
         return io::to_json(mcg::to_b3(Surface::get("S1_1", ctx.opt.sign), parse_word(text_arg(a, "word"))));
       }},
      {"verify_derivation",
       [](const json& a, Context& ctx) -> json {
         derivation::DerivationScript d;
         derivation::RelationLibrary lib = derivation::RelationLibrary::standard(ctx.opt.sign);
         if (a.contains("file")) {
           auto loaded = derivation::load_script_file(ctx.opt.base_dir / text_arg(a, "file"), ctx.opt.sign);
           d = loaded.script;
           lib = loaded.library;
         } else {
           d = derivation::parse_script(text_arg(a, "script"));
           lib = library_with(a, ctx.opt.sign);
         }
         return verify_json(d, derivation::verify(d, lib), Surface::get(d.surface, ctx.opt.sign));
       }},
      {"star_derivation",
       [](const json& a, Context& ctx) -> json {
         const std::string id = surface_arg(a);
         auto d = derivation::star_consequence_script(id);
         auto lib = derivation::RelationLibrary::standard(ctx.opt.sign);
         json out = verify_json(d, derivation::verify(d, lib), Surface::get(id, ctx.opt.sign));
         out["script"] = derivation::to_text(d);
         return out;
       }},
      {"generate_pn",
       [](const json& a, Context& ctx) -> json {
         auto c = factorization::generate_Pn(io::small_integer(arg(a, "n"), "n"));
         auto v = factorization::verify_chain(c.scripts, ctx.opt.sign);
         json scripts = json::array();
         for (const auto& d : c.scripts) scripts.push_back(derivation::to_text(d));
         json out = {{"factorization", io::to_json(c.factorization)}, {"verified", v.ok()}, {"scripts", scripts}};
         if (!v.ok()) out["reason"] = v.reason;
         return out;
       }},
      {"factorization",
       [](const json& a, Context&) -> json {
         return io::to_json(io::factorization_from_json(arg(a, "factorization")));
       }},
      {"normalize",
       [](const json& a, Context& ctx) -> json {
         return io::to_json(factorization::normalized(io::factorization_from_json(arg(a, "factorization")), ctx.opt.sign));
       }},
      {"hurwitz_move",
       [](const json& a, Context& ctx) -> json {
         auto f = io::factorization_from_json(arg(a, "factorization"));
         const auto pos = static_cast<std::size_t>(io::small_integer(arg(a, "position"), "position"));
         auto script = factorization::hurwitz_script(f, pos, direction_arg(a));
         auto v = derivation::verify(script, derivation::RelationLibrary::standard(ctx.opt.sign));
         if (!v.ok()) throw std::runtime_error("Hurwitz move failed to certify: " + v.reason);
         return io::to_json(factorization::hurwitz_move(f, pos, direction_arg(a)));
       }},
      {"global_conjugate",
       [](const json& a, Context&) -> json {
         return io::to_json(factorization::global_conjugate(io::factorization_from_json(arg(a, "factorization")),
                                                            parse_word(text_arg(a, "h"))));
       }},
      {"partial_conjugate",
       [](const json& a, Context& ctx) -> json {
         auto f = io::factorization_from_json(arg(a, "factorization"));
         auto cert = derivation::parse_script(text_arg(a, "certificate"));
         auto lib = library_with(a, ctx.opt.sign);
         return io::to_json(factorization::partial_conjugate(
             f, static_cast<std::size_t>(io::small_integer(arg(a, "first"), "first")),
             static_cast<std::size_t>(io::small_integer(arg(a, "last"), "last")), parse_word(text_arg(a, "h")), cert, lib));
       }},
      {"filling_invariants",
       [](const json& a, Context& ctx) -> json {
         auto inv = factorization::filling_invariants(io::factorization_from_json(arg(a, "factorization")), ctx.opt.sign);
         json out = io::to_json(inv);
         if (inv.pi1) out["pi1_order"] = pi1_order(*inv.pi1, ctx.opt.max_cosets);
         return out;
       }},
      {"relation_vectors",
       [](const json& a, Context& ctx) -> json {
         return io::to_json(factorization::relation_matrix(io::factorization_from_json(arg(a, "factorization")), ctx.opt.sign));
       }},
      {"cap_factorization",
       [](const json& a, Context& ctx) -> json {
         return io::to_json(factorization::cap_factorization(
             io::factorization_from_json(arg(a, "factorization")),
             static_cast<int>(io::small_integer(arg(a, "boundary"), "boundary")), ctx.opt.sign));
       }},
      {"planar_homologies",
       [](const json& a, Context& ctx) -> json {
         auto groups = factorization::enumerate_planar_homologies(
             static_cast<int>(io::small_integer(arg(a, "n"), "n")),
             static_cast<int>(io::small_integer(arg(a, "l_max"), "l_max")), ctx.opt.planar_budget);
         json out = json::array();
         for (const auto& g : groups) out.push_back(io::to_json(g));
         return {{"count", groups.size()}, {"groups", out}};
       }},
      {"combine_disjoint",
       [](const json& a, Context&) -> json {
         const json& parts = arg(a, "parts");
         if (!parts.is_array() || parts.empty()) throw std::invalid_argument("parts must be a nonempty array");
         auto acc = io::invariants_from_json(parts[0]);
         for (std::size_t k = 1; k < parts.size(); ++k)
           acc = factorization::combine_disjoint(acc, io::invariants_from_json(parts[k]));
         return io::to_json(acc);
       }},
      {"descend",
       [](const json& a, Context&) -> json {
         return io::to_json(bridge::descend(io::factorization_from_json(arg(a, "factorization"))));
       }},
      {"lift", [](const json& a, Context&) -> json { return io::to_json(bridge::lift(bands_arg(arg(a, "bands")))); }},
      {"braid_equal",
       [](const json& a, Context&) -> json { return braid::braid_equal(braid_arg(arg(a, "a")), braid_arg(arg(a, "b"))); }},
      {"band_product", [](const json& a, Context&) -> json { return io::to_json(bands_arg(arg(a, "bands")).product()); }},
      {"surface_invariants",
       [](const json& a, Context&) -> json {
         auto s = braid::surface_invariants(bands_arg(arg(a, "bands")));
         return {{"euler", s.euler},
                 {"surface_components", s.surface_components},
                 {"boundary_link_components", s.boundary_link_components}};
       }},
      {"complement_presentation",
       [](const json& a, Context&) -> json {
         auto c = braid::complement_presentation(bands_arg(arg(a, "bands")));
         json m = json::array();
         for (int x : c.meridians) m.push_back(x + 1);
         return {{"presentation", io::to_json(c.presentation)},
                 {"meridians", m},
                 {"abelianization", io::to_json(presentations::abelianization(c.presentation))}};
       }},
      {"band_double_cover",
       [](const json& a, Context&) -> json {
         auto c = braid::complement_presentation(bands_arg(arg(a, "bands")));
         return io::to_json(presentations::branched_double_cover_homology(c.presentation, c.meridians));
       }},
      {"append_generator_powers",
       [](const json& a, Context&) -> json {
         const int g = a.contains("generator") ? static_cast<int>(io::small_integer(a["generator"], "generator")) : 2;
         const long long k = io::small_integer(arg(a, "k"), "k");
         if (k < 0) throw std::invalid_argument("k must be nonnegative");
         return io::to_json(braid::append_positive_generator_powers(bands_arg(arg(a, "bands")), k, g));
       }},
      {"band_hurwitz",
       [](const json& a, Context& ctx) -> json {
         (void)ctx;
         auto d = direction_arg(a) == factorization::Direction::forward ? braid::Direction::forward
                                                                        : braid::Direction::backward;
         return io::to_json(braid::hurwitz_move(bands_arg(arg(a, "bands")),
                                                static_cast<std::size_t>(io::small_integer(arg(a, "position"), "position")), d));
       }},
  };
  return ops;
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

void collect_refs(const json& j, std::set<std::string>& out) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.size() > 1 && s[0] == '$') out.insert(s.substr(1));
  } else if (j.is_structured()) {
    for (const auto& x : j) collect_refs(x, out);
  }
}

json resolve(const json& j, const std::map<std::string, json>& bound) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.size() > 1 && s[0] == '$') return bound.at(s.substr(1));
    return j;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& x : j) out.push_back(resolve(x, bound));
    return out;
  }
  if (j.is_object()) {
    json out = json::object();
    for (const auto& [k, v] : j.items()) out[k] = resolve(v, bound);
    return out;
  }
  return j;
}

bool matches(const json& expect, const json& actual) {
  if (expect.is_object() && actual.is_object()) {
    for (const auto& [k, v] : expect.items())
      if (!actual.contains(k) || !matches(v, actual.at(k))) return false;
    return true;
  }
  return io::canonical(expect) == io::canonical(actual);
}

// Structural checks done before anything runs.
json validate(const json& doc) {
  if (!doc.is_object()) throw InputError("scenario must be a JSON object");
  for (const auto& [k, v] : doc.items())
    if (k != "title" && k != "commands" && k != "$schema")
      throw InputError("unknown top-level key \"" + k + "\"");
  if (doc.contains("title") && !doc["title"].is_string()) throw InputError("title must be a string");
  const json commands = doc.contains("commands") ? doc["commands"] : json::array();
  if (!commands.is_array()) throw InputError("commands must be an array");
  std::set<std::string> bound;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const json& c = commands[i];
    const std::string where = "command " + std::to_string(i);
    if (!c.is_object()) throw InputError(where + " must be an object");
    for (const auto& [k, v] : c.items())
      if (k != "op" && k != "args" && k != "expect" && k != "bind" && k != "note")
        throw InputError(where + ": unknown key \"" + k + "\"");
    if (!c.contains("op") || !c["op"].is_string()) throw InputError(where + " needs a string \"op\"");
    const std::string op = c["op"].get<std::string>();
    if (!operations().count(op)) throw InputError(where + ": unknown operation \"" + op + "\"");
    if (c.contains("args") && !c["args"].is_object()) throw InputError(where + ": args must be an object");
    std::set<std::string> refs;
    if (c.contains("args")) collect_refs(c["args"], refs);
    for (const auto& r : refs)
      if (!bound.count(r)) throw InputError(where + ": reference $" + r + " is not bound by an earlier command");
    if (c.contains("bind")) {
      if (!c["bind"].is_string() || c["bind"].get<std::string>().empty())
        throw InputError(where + ": bind must be a nonempty string");
      bound.insert(c["bind"].get<std::string>());
    }
  }
  return commands;
}

}  // namespace

const std::vector<std::string>& operation_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : operations()) out.push_back(k);
    return out;
  }();
  return names;
}

Report run_scenario_text(const std::string& text, const Options& opt) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("parse error at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  const json commands = validate(doc);

  Context ctx{opt};
  std::map<std::string, json> bound;
  json records = json::array();
  std::size_t passed = 0, failed = 0, errors = 0, unchecked = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const json& c = commands[i];
    const std::string op = c["op"].get<std::string>();
    const json raw = c.contains("args") ? c["args"] : json::object();
    json rec = {{"index", i}, {"op", op}, {"args", raw}};
    const json args = resolve(raw, bound);
    const auto t0 = std::chrono::steady_clock::now();
    json output;
    std::string error;
    try {
      output = operations().at(op)(args, ctx);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    const bool wants_error = c.contains("expect") && c["expect"].is_object() && c["expect"].size() == 1 &&
                             c["expect"].contains("error") && c["expect"]["error"] == true;
    if (!error.empty()) {
      rec["error"] = error;
      if (wants_error) {
        rec["status"] = "pass";
        ++passed;
      } else {
        rec["status"] = "error";
        ++errors;
      }
    } else {
      rec["output"] = output;
      if (c.contains("bind")) bound[c["bind"].get<std::string>()] = output;
      if (c.contains("expect")) {
        rec["expect"] = c["expect"];
        const bool ok = !wants_error && matches(c["expect"], output);
        rec["status"] = ok ? "pass" : "fail";
        ++(ok ? passed : failed);
      } else {
        rec["status"] = "ok";
        ++unchecked;
      }
    }
    if (opt.timings)
      rec["wall_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    records.push_back(std::move(rec));
  }
  Report r;
  r.exit_code = errors ? 2 : failed ? 1 : 0;
  r.body = {{"title", doc.value("title", "")},
            {"commands", records},
            {"summary", {{"total", commands.size()}, {"passed", passed}, {"failed", failed}, {"errors", errors},
                         {"unchecked", unchecked}}},
            {"exit_code", r.exit_code}};
  return r;
}

Report run_scenario_file(const std::filesystem::path& path, Options opt) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scenario " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  opt.base_dir = path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path();
  return run_scenario_text(buf.str(), opt);
}

void emit_derivations(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const derivation::DerivationScript& d) {
    std::ofstream out(dir / (d.name + ".fkd"));
    out << derivation::to_text(d);
    if (!out) throw std::runtime_error("cannot write " + (dir / (d.name + ".fkd")).string());
  };
  for (const auto& d : factorization::generate_Pn(3).scripts) write(d);
}

}  // namespace fillkit::scenario
