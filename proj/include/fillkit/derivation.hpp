#pragma once

// Checked rewriting of mapping-class words. A script is a start word, an end
// word and a list of rewriting steps; each step must be a legal instance of a
// rule or a library relation, and each is homology-checked on the way.
//
// Rules (positions are 0-based letter indices):
//   commute p            swap letters p, p+1 along disjoint curves
//   central p            swap letters p, p+1 when one is a boundary twist
//   braid p              c d c -> d c d for curves meeting once (exponents all +1 or all -1)
//   conjugate p [backward]
//                        c^a d^b -> d^b ({d^-b}c)^a, or backward c^a d^b -> ({c^a}d)^b c^a
//   expand p [k]         ({u v}c)^e -> u ({v}c)^e u^-1 with |u| = k (default: whole transport)
//   collapse p m         u X^e u^-1 -> ({u}X)^e with |u| = m
//   conj p WORD          X^e -> u ({u^-1}X)^e u^-1
//   insert p WORD        inserts u u^-1 before letter p
//   cancel p m           removes u u^-1 starting at p, |u| = m
//   merge p              c^a c^b -> c^(a+b)
//   split p e            c^a -> c^e c^(a-e)
//   relation NAME p [backward]
//   lemma NAME p [backward]
//   expect WORD          asserts the current word

#include "fillkit/surface.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fillkit::derivation {

using surface::Surface;

enum class Rule {
  commute,
  central,
  braid,
  conjugate,
  expand,
  collapse,
  conj,
  insert,
  cancel,
  merge,
  split,
  relation,
  lemma,
  expect
};

std::string rule_name(Rule r);

struct Step {
  Rule rule = Rule::commute;
  std::size_t position = 0;
  std::optional<long long> count;  // k, m or e depending on the rule
  Word word;                       // conj, insert, expect
  std::string name;                // relation or lemma
  bool backward = false;
  int line = 0;                    // source line when parsed
};

struct Relation {
  std::string name;
  std::string surface;
  Word lhs;
  Word rhs;
  bool axiom = true;
};

/// Literal relations. Axioms are checked on entry against the homology
/// representation and, where one exists, the free-group action.
class RelationLibrary {
 public:
  explicit RelationLibrary(int sign = 1) : sign_(sign) {}
  /// star, chain3 (S1_3); star_capped (S1_2); star_s11, chain2 (S1_1); lantern (S0_4).
  static RelationLibrary standard(int sign = 1);

  int sign() const { return sign_; }
  void add_axiom(Relation r);
  void add_lemma(Relation r);
  const Relation* find_relation(const std::string& name) const;
  const Relation* find_lemma(const std::string& name) const;
  std::vector<const Relation*> relations() const;

 private:
  int sign_;
  std::map<std::string, Relation> axioms_;
  std::map<std::string, Relation> lemmas_;
};

/// Throws std::invalid_argument if the two sides differ in homology or in
/// the free-group action.
void check_relation(const Relation& r, int sign = 1);

struct DerivationScript {
  std::string name;
  std::string surface = "S1_3";
  Word start;
  Word end;
  std::vector<Step> steps;
  std::vector<std::string> uses;
};

struct Certificate {
  std::string name;
  std::string surface;
  Word start;
  Word end;
  std::size_t steps = 0;

  Relation as_lemma() const { return {name, surface, start, end, false}; }
};

struct VerifyResult {
  std::optional<Certificate> certificate;
  std::size_t failed_step = 0;  // 0-based index; equals steps.size() for a final mismatch
  std::string reason;

  bool ok() const { return certificate.has_value(); }
};

VerifyResult verify(const DerivationScript& d, const RelationLibrary& lib);

/// Applies one step in place; returns an error message or nothing.
std::optional<std::string> apply_step(const Surface& s, const RelationLibrary& lib, Word& w,
                                      const Step& step);

DerivationScript parse_script(std::string_view text);
std::string to_text(const DerivationScript& d);

/// Parses a script file, loads and verifies its `use` dependencies (paths
/// relative to the file) and registers them as lemmas.
struct LoadedScript {
  DerivationScript script;
  RelationLibrary library;
};
LoadedScript load_script_file(const std::filesystem::path& path, int sign = 1);

// Script builders.

/// psi = b1 b2 b3 rewritten to the sorted eta^-3 Delta on S1_3, S1_2 or S1_1,
/// from that surface's star relation.
DerivationScript star_consequence_script(const std::string& surface_id);

/// h X -> X h, where lemma rewrites X into a word all of whose letters commute
/// with the single letter h.
DerivationScript commutation_script(const std::string& surface_id, const Relation& lemma,
                                    const Letter& h, const std::string& name);

/// Product of factors with [first, last] transported by h, back to the
/// original product, using the commutation lemma h X -> X h.
DerivationScript partial_conjugation_script(const std::string& surface_id,
                                            const std::vector<Curve>& factors, std::size_t first,
                                            std::size_t last, const Word& h,
                                            const std::string& commutation_lemma,
                                            const std::string& name);

}  // namespace fillkit::derivation
