#include "fillkit/derivation.hpp"

#include "fillkit/mcg.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fillkit::derivation {

namespace {

struct RuleInfo {
  Rule rule;
  const char* name;
};

constexpr RuleInfo kRules[] = {
    {Rule::commute, "commute"},   {Rule::central, "central"},   {Rule::braid, "braid"},
    {Rule::conjugate, "conjugate"}, {Rule::expand, "expand"},   {Rule::collapse, "collapse"},
    {Rule::conj, "conj"},         {Rule::insert, "insert"},     {Rule::cancel, "cancel"},
    {Rule::merge, "merge"},       {Rule::split, "split"},       {Rule::relation, "relation"},
    {Rule::lemma, "lemma"},       {Rule::expect, "expect"},
};

std::optional<Rule> rule_from_name(std::string_view s) {
  for (const auto& r : kRules)
    if (s == r.name) return r.rule;
  return std::nullopt;
}

}  // namespace

std::string rule_name(Rule r) {
  for (const auto& info : kRules)
    if (info.rule == r) return info.name;
  return "?";
}

void check_relation(const Relation& r, int sign) {
  const Surface& s = Surface::get(r.surface, sign);
  const Word lhs = s.normalize(r.lhs), rhs = s.normalize(r.rhs);
  if (!(s.homology_rep(lhs) == s.homology_rep(rhs)))
    throw std::invalid_argument("relation " + r.name + " fails the homology check");
  if (s.has_pi1() && mcg::pi1_action(s, lhs) != mcg::pi1_action(s, rhs))
    throw std::invalid_argument("relation " + r.name + " fails the free group check");
}

RelationLibrary RelationLibrary::standard(int sign) {
  RelationLibrary lib(sign);
  auto add = [&](const char* name, const char* surf, const std::string& lhs, const char* rhs) {
    lib.add_axiom({name, surf, parse_word(lhs), parse_word(rhs), true});
  };
  auto rep = [](const std::string& w, int k) {
    std::string out;
    for (int i = 0; i < k; ++i) out += (i ? " " : "") + w;
    return out;
  };
  add("star", "S1_3", rep("a1 a2 a3 b2", 3), "d1 d2 d3");
  add("chain3", "S1_3", rep("a1 b2 a2", 4), "d1 e23");
  add("star_capped", "S1_2", rep("ha2 ha1 ha2 hb2", 3), "d1 d2");
  add("star_s11", "S1_1", rep("x^3 y", 3), "d");
  add("chain2", "S1_1", rep("x y", 6), "d");
  add("lantern", "S0_4", "c1_2 c1_3 c2_3", "d1 d2 d3 d4");
  return lib;
}

void RelationLibrary::add_axiom(Relation r) {
  check_relation(r, sign_);
  r.axiom = true;
  axioms_[r.name] = std::move(r);
}

void RelationLibrary::add_lemma(Relation r) {
  r.axiom = false;
  lemmas_[r.name] = std::move(r);
}

const Relation* RelationLibrary::find_relation(const std::string& name) const {
  auto it = axioms_.find(name);
  return it == axioms_.end() ? nullptr : &it->second;
}

const Relation* RelationLibrary::find_lemma(const std::string& name) const {
  auto it = lemmas_.find(name);
  return it == lemmas_.end() ? nullptr : &it->second;
}

std::vector<const Relation*> RelationLibrary::relations() const {
  std::vector<const Relation*> out;
  for (const auto& [k, r] : axioms_) out.push_back(&r);
  for (const auto& [k, r] : lemmas_) out.push_back(&r);
  return out;
}

namespace {

bool matches(const Word& w, std::size_t p, const Word& pattern) {
  if (p + pattern.size() > w.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), w.begin() + static_cast<std::ptrdiff_t>(p));
}

void replace(Word& w, std::size_t p, std::size_t len, const Word& with) {
  auto it = w.erase(w.begin() + static_cast<std::ptrdiff_t>(p),
                    w.begin() + static_cast<std::ptrdiff_t>(p + len));
  w.insert(it, with.begin(), with.end());
}

std::string at(std::size_t p) { return " at position " + std::to_string(p); }

}  // namespace

std::optional<std::string> apply_step(const Surface& s, const RelationLibrary& lib, Word& w,
                                      const Step& st) {
  const std::size_t p = st.position;
  auto need = [&](std::size_t n) -> std::optional<std::string> {
    if (p + n > w.size())
      return "needs " + std::to_string(n) + " letters" + at(p) + " of a word of length " +
             std::to_string(w.size());
    return std::nullopt;
  };

  switch (st.rule) {
    case Rule::commute:
    case Rule::central: {
      if (auto e = need(2)) return e;
      const Curve &a = w[p].curve, &b = w[p + 1].curve;
      if (st.rule == Rule::central) {
        if (!s.base(a.base).boundary && !s.base(b.base).boundary) return "neither letter is a boundary twist" + at(p);
      } else if (!s.known_disjoint(a, b)) {
        return "curves " + s.format(a) + " and " + s.format(b) + " are not known to be disjoint";
      }
      std::swap(w[p], w[p + 1]);
      return std::nullopt;
    }
    case Rule::braid: {
      if (auto e = need(3)) return e;
      const Letter &c = w[p], &d = w[p + 1], &c2 = w[p + 2];
      if (!(c.curve == c2.curve)) return "outer letters of the braid triple differ" + at(p);
      if (std::abs(c.exponent) != 1 || c.exponent != d.exponent || c.exponent != c2.exponent)
        return "braid triple needs equal exponents +1 or -1" + at(p);
      if (!s.known_single_intersection(c.curve, d.curve))
        return "curves " + s.format(c.curve) + " and " + s.format(d.curve) + " are not known to meet once";
      Letter nc = c, nd = d;
      w[p] = nd;
      w[p + 1] = nc;
      w[p + 2] = nd;
      return std::nullopt;
    }
    case Rule::conjugate: {
      if (auto e = need(2)) return e;
      const Letter c = w[p], d = w[p + 1];
      if (!st.backward) {
        Curve moved = s.normalize(transported({Letter{d.curve, -d.exponent}}, c.curve));
        w[p] = d;
        w[p + 1] = {moved, c.exponent};
      } else {
        Curve moved = s.normalize(transported({Letter{c.curve, c.exponent}}, d.curve));
        w[p] = {moved, d.exponent};
        w[p + 1] = c;
      }
      return std::nullopt;
    }
    case Rule::expand: {
      if (auto e = need(1)) return e;
      const Letter x = w[p];
      const Word& h = x.curve.transport;
      if (h.empty()) return "letter" + at(p) + " has no transport";
      const std::size_t k = st.count ? static_cast<std::size_t>(*st.count) : h.size();
      if (k == 0 || k > h.size()) return "expand count out of range" + at(p);
      Word u(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(k));
      Curve inner(x.curve.base, Word(h.begin() + static_cast<std::ptrdiff_t>(k), h.end()));
      Word with = u;
      with.push_back({s.normalize(inner), x.exponent});
      Word ui = inverse(u);
      with.insert(with.end(), ui.begin(), ui.end());
      replace(w, p, 1, with);
      return std::nullopt;
    }
    case Rule::collapse: {
      if (!st.count || *st.count < 1) return std::string("collapse needs a length");
      const std::size_t m = static_cast<std::size_t>(*st.count);
      if (auto e = need(2 * m + 1)) return e;
      Word u(w.begin() + static_cast<std::ptrdiff_t>(p), w.begin() + static_cast<std::ptrdiff_t>(p + m));
      if (!matches(w, p + m + 1, inverse(u))) return "collapse: letters after the core are not u^-1" + at(p);
      const Letter x = w[p + m];
      Letter out{s.normalize(transported(u, x.curve)), x.exponent};
      replace(w, p, 2 * m + 1, {out});
      return std::nullopt;
    }
    case Rule::conj: {
      if (auto e = need(1)) return e;
      const Word u = s.normalize(st.word);
      const Letter x = w[p];
      Word with = u;
      with.push_back({s.normalize(transported(inverse(u), x.curve)), x.exponent});
      Word ui = inverse(u);
      with.insert(with.end(), ui.begin(), ui.end());
      replace(w, p, 1, with);
      return std::nullopt;
    }
    case Rule::insert: {
      if (p > w.size()) return "insert position" + at(p) + " past the end";
      Word u = s.normalize(st.word);
      Word with = concat(u, inverse(u));
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(p), with.begin(), with.end());
      return std::nullopt;
    }
    case Rule::cancel: {
      if (!st.count || *st.count < 1) return std::string("cancel needs a length");
      const std::size_t m = static_cast<std::size_t>(*st.count);
      if (auto e = need(2 * m)) return e;
      Word u(w.begin() + static_cast<std::ptrdiff_t>(p), w.begin() + static_cast<std::ptrdiff_t>(p + m));
      if (!matches(w, p + m, inverse(u))) return "cancel: letters are not u u^-1" + at(p);
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(p), w.begin() + static_cast<std::ptrdiff_t>(p + 2 * m));
      return std::nullopt;
    }
    case Rule::merge: {
      if (auto e = need(2)) return e;
      if (!(w[p].curve == w[p + 1].curve)) return "merge: curves differ" + at(p);
      const long long e = w[p].exponent + w[p + 1].exponent;
      if (e == 0) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(p), w.begin() + static_cast<std::ptrdiff_t>(p + 2));
      } else {
        w[p].exponent = e;
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(p + 1));
      }
      return std::nullopt;
    }
    case Rule::split: {
      if (auto e = need(1)) return e;
      if (!st.count || *st.count == 0 || *st.count == w[p].exponent)
        return "split needs an exponent different from 0 and the whole" + at(p);
      Letter first{w[p].curve, *st.count}, second{w[p].curve, w[p].exponent - *st.count};
      replace(w, p, 1, {first, second});
      return std::nullopt;
    }
    case Rule::relation:
    case Rule::lemma: {
      const Relation* r =
          st.rule == Rule::relation ? lib.find_relation(st.name) : lib.find_lemma(st.name);
      if (!r) return "unknown " + rule_name(st.rule) + " '" + st.name + "'";
      if (r->surface != s.id()) return rule_name(st.rule) + " '" + st.name + "' lives on " + r->surface;
      const Word from = s.normalize(st.backward ? r->rhs : r->lhs);
      const Word to = s.normalize(st.backward ? r->lhs : r->rhs);
      if (!matches(w, p, from))
        return rule_name(st.rule) + " '" + st.name + "' does not match" + at(p);
      replace(w, p, from.size(), to);
      return std::nullopt;
    }
    case Rule::expect: {
      const Word want = s.normalize(st.word);
      if (w != want) return "expected " + s.format(want) + " but have " + s.format(w);
      return std::nullopt;
    }
  }
  return std::string("unknown rule");
}

VerifyResult verify(const DerivationScript& d, const RelationLibrary& lib) {
  VerifyResult res;
  const Surface* sp = nullptr;
  try {
    sp = &Surface::get(d.surface, lib.sign());
  } catch (const std::exception& e) {
    res.reason = e.what();
    return res;
  }
  const Surface& s = *sp;
  Word w, end;
  try {
    w = s.normalize(d.start);
    end = s.normalize(d.end);
  } catch (const std::exception& e) {
    res.reason = e.what();
    return res;
  }
  auto rep = s.homology_rep(w);
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    res.failed_step = i;
    std::optional<std::string> err;
    try {
      err = apply_step(s, lib, w, d.steps[i]);
    } catch (const std::exception& e) {
      err = e.what();
    }
    if (err) {
      res.reason = rule_name(d.steps[i].rule) + ": " + *err;
      return res;
    }
    auto next = s.homology_rep(w);
    if (!(next == rep)) {
      res.reason = rule_name(d.steps[i].rule) + ": homology representation changed";
      return res;
    }
  }
  res.failed_step = d.steps.size();
  if (w != end) {
    res.reason = "final word " + s.format(w) + " differs from the stated end " + s.format(end);
    return res;
  }
  if (!(s.homology_rep(s.normalize(d.start)) == s.homology_rep(end))) {
    res.reason = "start and end differ in homology";
    return res;
  }
  if (s.has_pi1() && mcg::pi1_action(s, s.normalize(d.start)) != mcg::pi1_action(s, end)) {
    res.reason = "start and end act differently on the fundamental group";
    return res;
  }
  res.certificate = Certificate{d.name, d.surface, s.normalize(d.start), end, d.steps.size()};
  return res;
}

namespace {

std::string trim(std::string s) {
  auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

std::pair<std::string, std::string> head_tail(const std::string& s) {
  std::size_t sp = s.find_first_of(" \t");
  if (sp == std::string::npos) return {s, ""};
  return {s.substr(0, sp), trim(s.substr(sp + 1))};
}

long long to_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("line " + std::to_string(line) + ": expected an integer, got '" + tok + "'");
  }
}

}  // namespace

DerivationScript parse_script(std::string_view text) {
  DerivationScript d;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  bool have_start = false, have_end = false;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string s = trim(raw);
    if (s.empty()) continue;
    auto [key, rest] = head_tail(s);
    auto fail = [&](const std::string& why) -> std::invalid_argument {
      return std::invalid_argument("line " + std::to_string(line) + ": " + why);
    };
    try {
      if (key == "derivation") {
        d.name = rest;
      } else if (key == "surface") {
        d.surface = rest;
      } else if (key == "use") {
        d.uses.push_back(rest);
      } else if (key == "start") {
        d.start = parse_word(rest);
        have_start = true;
      } else if (key == "end") {
        d.end = parse_word(rest);
        have_end = true;
      } else if (auto rule = rule_from_name(key)) {
        Step st;
        st.rule = *rule;
        st.line = line;
        if (st.rule == Rule::expect) {
          st.word = parse_word(rest);
        } else if (st.rule == Rule::relation || st.rule == Rule::lemma) {
          auto [name, r2] = head_tail(rest);
          auto [pos, r3] = head_tail(r2);
          if (name.empty() || pos.empty()) throw fail("expected NAME POSITION");
          st.name = name;
          st.position = static_cast<std::size_t>(to_int(pos, line));
          if (r3 == "backward")
            st.backward = true;
          else if (!r3.empty())
            throw fail("unexpected '" + r3 + "'");
        } else {
          auto [pos, r2] = head_tail(rest);
          if (pos.empty()) throw fail("missing position");
          if (to_int(pos, line) < 0) throw fail("negative position");
          st.position = static_cast<std::size_t>(to_int(pos, line));
          switch (st.rule) {
            case Rule::commute:
            case Rule::central:
            case Rule::braid:
            case Rule::merge:
              if (!r2.empty()) throw fail("unexpected '" + r2 + "'");
              break;
            case Rule::conjugate:
              if (r2 == "backward")
                st.backward = true;
              else if (!r2.empty())
                throw fail("unexpected '" + r2 + "'");
              break;
            case Rule::expand:
              if (!r2.empty()) st.count = to_int(r2, line);
              break;
            case Rule::collapse:
            case Rule::cancel:
            case Rule::split:
              if (r2.empty()) throw fail("missing count");
              st.count = to_int(r2, line);
              break;
            case Rule::conj:
            case Rule::insert:
              st.word = parse_word(r2);
              break;
            default:
              break;
          }
        }
        d.steps.push_back(std::move(st));
      } else {
        throw fail("unknown directive '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      std::string msg = e.what();
      if (msg.rfind("line ", 0) == 0) throw;
      throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
    }
  }
  if (!have_start || !have_end) throw std::invalid_argument("script needs both start and end");
  return d;
}

std::string to_text(const DerivationScript& d) {
  const Surface& s = Surface::get(d.surface);
  std::ostringstream os;
  os << "derivation " << d.name << "\n";
  os << "surface " << d.surface << "\n";
  for (const auto& u : d.uses) os << "use " << u << "\n";
  os << "start " << s.format(d.start) << "\n";
  os << "end " << s.format(d.end) << "\n";
  for (const auto& st : d.steps) {
    os << rule_name(st.rule);
    if (st.rule == Rule::expect) {
      os << " " << s.format(st.word) << "\n";
      continue;
    }
    if (st.rule == Rule::relation || st.rule == Rule::lemma) os << " " << st.name;
    os << " " << st.position;
    if (st.count) os << " " << *st.count;
    if (st.rule == Rule::conj || st.rule == Rule::insert) os << " " << s.format(st.word);
    if (st.backward) os << " backward";
    os << "\n";
  }
  return os.str();
}

namespace {

LoadedScript load_impl(const std::filesystem::path& path, int sign, std::set<std::string>& active) {
  const std::string key = std::filesystem::weakly_canonical(path).string();
  if (active.count(key)) throw std::invalid_argument("cyclic use of " + path.string());
  active.insert(key);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open derivation file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  LoadedScript out{parse_script(buf.str()), RelationLibrary::standard(sign)};
  for (const auto& u : out.script.uses) {
    LoadedScript dep = load_impl(path.parent_path() / u, sign, active);
    for (const Relation* r : dep.library.relations())
      if (!r->axiom) out.library.add_lemma(*r);
    VerifyResult v = verify(dep.script, dep.library);
    if (!v.ok())
      throw std::invalid_argument("dependency " + u + " fails at step " + std::to_string(v.failed_step) +
                                  ": " + v.reason);
    out.library.add_lemma(v.certificate->as_lemma());
  }
  active.erase(key);
  return out;
}

// Runs steps while recording them; used by the builders.
class Builder {
 public:
  Builder(const std::string& surface_id, std::string name, Word start)
      : s_(Surface::get(surface_id)), lib_(RelationLibrary::standard()) {
    d_.name = std::move(name);
    d_.surface = surface_id;
    d_.start = s_.normalize(start);
    w_ = d_.start;
  }

  void lemma(const Relation& r) { lib_.add_lemma(r); }

  Builder& step(Step st) {
    if (auto err = apply_step(s_, lib_, w_, st))
      throw std::logic_error("builder step " + rule_name(st.rule) + " failed: " + *err);
    d_.steps.push_back(std::move(st));
    return *this;
  }
  Builder& simple(Rule r, std::size_t p) { return step(Step{r, p, {}, {}, {}, false, 0}); }
  Builder& counted(Rule r, std::size_t p, long long k) { return step(Step{r, p, k, {}, {}, false, 0}); }
  Builder& worded(Rule r, std::size_t p, Word u) { return step(Step{r, p, {}, std::move(u), {}, false, 0}); }
  Builder& named(Rule r, const std::string& name, std::size_t p, bool backward = false) {
    return step(Step{r, p, {}, {}, name, backward, 0});
  }

  const Word& word() const { return w_; }
  const Surface& surface() const { return s_; }

  DerivationScript finish() {
    d_.end = w_;
    return d_;
  }

 private:
  const Surface& s_;
  RelationLibrary lib_;
  DerivationScript d_;
  Word w_;
};

struct StarData {
  Word eta;
  std::string b;
  Word delta;
  std::string relation;
};

StarData star_data(const std::string& id) {
  if (id == "S1_3") return {parse_word("a1 a2 a3"), "b2", parse_word("d1 d2 d3"), "star"};
  if (id == "S1_2") return {parse_word("ha2 ha1 ha2"), "hb2", parse_word("d1 d2"), "star_capped"};
  if (id == "S1_1") return {parse_word("x^3"), "y", parse_word("d"), "star_s11"};
  throw std::invalid_argument("no star relation on " + id);
}

}  // namespace

LoadedScript load_script_file(const std::filesystem::path& path, int sign) {
  std::set<std::string> active;
  return load_impl(path, sign, active);
}

DerivationScript star_consequence_script(const std::string& id) {
  const StarData sd = star_data(id);
  const Surface& s = Surface::get(id);
  const Word eta = s.normalize_transport(sd.eta);
  const Word eta_inv = inverse(eta);
  const std::size_t k = eta.size(), m = sd.delta.size();
  const Curve b(sd.b);
  Word start = {{transported(eta_inv, b), 1}, {b, 1}, {transported(eta, b), 1}};

  Builder bld(id, "star_consequence", start);
  bld.simple(Rule::expand, 0);
  bld.simple(Rule::expand, 2 * k + 2);
  bld.worded(Rule::insert, k, eta_inv);
  bld.named(Rule::relation, sd.relation, 2 * k);
  // boundary twists are central: carry them past the trailing eta^-1
  for (std::size_t j = m; j-- > 0;)
    for (std::size_t t = 0; t < k; ++t) bld.simple(Rule::central, 2 * k + j + t);
  // sort the eta^-3 block by curve name, then merge runs
  const std::size_t block = 3 * k;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < block; ++i) {
      const Word& w = bld.word();
      if (w[i].curve.base > w[i + 1].curve.base) {
        bld.simple(Rule::commute, i);
        swapped = true;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < bld.word().size();) {
    const Word& w = bld.word();
    if (w[i].curve == w[i + 1].curve && !s.base(w[i].curve.base).boundary)
      bld.simple(Rule::merge, i);
    else
      ++i;
  }
  return bld.finish();
}

DerivationScript commutation_script(const std::string& id, const Relation& lemma, const Letter& h,
                                    const std::string& name) {
  const Surface& s = Surface::get(id);
  Word start = {h};
  const Word lhs = s.normalize(lemma.lhs);
  start.insert(start.end(), lhs.begin(), lhs.end());
  Builder bld(id, name, start);
  bld.lemma(lemma);
  bld.named(Rule::lemma, lemma.name, 1);
  const std::size_t len = s.normalize(lemma.rhs).size();
  for (std::size_t i = 0; i < len; ++i) {
    const Word& w = bld.word();
    const bool boundary = s.base(w[i + 1].curve.base).boundary || s.base(w[i].curve.base).boundary;
    bld.simple(boundary ? Rule::central : Rule::commute, i);
  }
  bld.named(Rule::lemma, lemma.name, 0, true);
  DerivationScript d = bld.finish();
  return d;
}

DerivationScript partial_conjugation_script(const std::string& id, const std::vector<Curve>& factors,
                                            std::size_t first, std::size_t last, const Word& h_raw,
                                            const std::string& commutation_lemma,
                                            const std::string& name) {
  const Surface& s = Surface::get(id);
  if (first > last || last >= factors.size()) throw std::invalid_argument("bad conjugation range");
  const Word h = s.normalize(h_raw);
  Word start, original;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    original.push_back({s.normalize(factors[i]), 1});
    Curve c = (i >= first && i <= last) ? transported(h, factors[i]) : factors[i];
    start.push_back({s.normalize(c), 1});
  }
  Builder bld(id, name, start);
  DerivationScript d;
  if (h.empty()) {
    d = bld.finish();
    d.end = original;
    return d;
  }
  // The lemma h X -> X h is taken from the caller's library at verify time;
  // record it here so the builder can replay it.
  Word x(original.begin() + static_cast<std::ptrdiff_t>(first),
         original.begin() + static_cast<std::ptrdiff_t>(last + 1));
  bld.lemma({commutation_lemma, id, concat(h, x), concat(x, h), false});
  const std::size_t hl = h.size(), count = last - first + 1;
  std::size_t pos = first;
  for (std::size_t i = 0; i < count; ++i) {
    bld.worded(Rule::conj, pos, h);
    pos += 2 * hl + 1;
  }
  pos = first + hl + 1;
  for (std::size_t i = 1; i < count; ++i) {
    bld.counted(Rule::cancel, pos, static_cast<long long>(hl));
    pos += 1;
  }
  bld.named(Rule::lemma, commutation_lemma, first);
  bld.counted(Rule::cancel, first + count, static_cast<long long>(hl));
  return bld.finish();
}

}  // namespace fillkit::derivation
