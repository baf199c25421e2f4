#include "fillkit/factorization.hpp"

#include "fillkit/mcg.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace fillkit::factorization {

using derivation::DerivationScript;
using derivation::RelationLibrary;
using surface::Surface;

Word PositiveFactorization::as_word() const {
  Word w;
  w.reserve(factors.size());
  for (const auto& c : factors) w.push_back({c, 1});
  return w;
}

std::string PositiveFactorization::to_string() const {
  std::string out = surface + ":";
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? ", " : " ") + fillkit::to_string(factors[i]);
  return out;
}

PositiveFactorization PositiveFactorization::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("factorization text needs 'SURFACE:'");
  PositiveFactorization f;
  f.surface = text.substr(0, colon);
  f.surface.erase(std::remove_if(f.surface.begin(), f.surface.end(), [](unsigned char ch) { return std::isspace(ch) != 0; }),
                  f.surface.end());
  surface::SurfaceModel::parse(f.surface);
  std::vector<std::string> items(1);
  int depth = 0;
  for (std::size_t i = colon + 1; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if (ch == ',' && depth == 0)
      items.emplace_back();
    else
      items.back() += ch;
  }
  if (depth != 0) throw std::invalid_argument("unbalanced braces in '" + text + "'");
  auto blank = [](const std::string& x) { return x.find_first_not_of(" \t") == std::string::npos; };
  if (items.size() == 1 && blank(items[0])) return f;
  for (const auto& it : items) {
    if (blank(it)) throw std::invalid_argument("empty factor in '" + text + "'");
    f.factors.push_back(parse_curve(it));
  }
  return f;
}

PositiveFactorization normalized(const PositiveFactorization& f, int sign) {
  const Surface& s = Surface::get(f.surface, sign);
  PositiveFactorization out{f.surface, {}};
  for (const auto& c : f.factors) out.factors.push_back(s.normalize(c));
  return out;
}

derivation::VerifyResult verify_chain(const std::vector<DerivationScript>& scripts, int sign) {
  RelationLibrary lib = RelationLibrary::standard(sign);
  derivation::VerifyResult last;
  last.reason = "no scripts";
  for (const auto& d : scripts) {
    last = derivation::verify(d, lib);
    if (!last.ok()) {
      last.reason = d.name + ": " + last.reason;
      return last;
    }
    lib.add_lemma(last.certificate->as_lemma());
  }
  return last;
}

PositiveFactorization phi() {
  return {"S1_3", {Curve("b1"), Curve("b2"), Curve("b3"), Curve("b2")}};
}

CertifiedFactorization generate_Pn(long long n) {
  if (n < 0) throw std::invalid_argument("generate_Pn needs n >= 0");
  const PositiveFactorization base = phi();
  CertifiedFactorization out;
  out.factorization.surface = "S1_3";
  const Word h = n == 0 ? Word{} : Word{{Curve("a1"), -n}};
  for (std::size_t i = 0; i < base.factors.size(); ++i)
    out.factorization.factors.push_back(i < 3 && n != 0 ? transported(h, base.factors[i]) : base.factors[i]);

  const std::string suffix = std::to_string(n);
  DerivationScript star = derivation::star_consequence_script("S1_3");
  const Surface& s = Surface::get("S1_3");
  derivation::Relation star_lemma{star.name, "S1_3", s.normalize(star.start), s.normalize(star.end), false};
  out.scripts.push_back(star);
  const std::string comm = "pn_commutation_" + suffix;
  if (n != 0) {
    DerivationScript c = derivation::commutation_script("S1_3", star_lemma, h.front(), comm);
    c.uses.push_back("star_consequence.fkd");
    out.scripts.push_back(std::move(c));
  }
  DerivationScript p =
      derivation::partial_conjugation_script("S1_3", base.factors, 0, 2, h, comm, "pn_recertify_" + suffix);
  if (n != 0) p.uses.push_back(comm + ".fkd");
  out.scripts.push_back(std::move(p));
  return out;
}

namespace {

void check_position(const PositiveFactorization& f, std::size_t i) {
  if (i < 1 || i >= f.factors.size())
    throw std::out_of_range("Hurwitz position " + std::to_string(i) + " needs 1 <= i < " +
                            std::to_string(f.factors.size()));
}

}  // namespace

PositiveFactorization hurwitz_move(const PositiveFactorization& f, std::size_t i, Direction d) {
  check_position(f, i);
  const Surface& s = Surface::get(f.surface);
  PositiveFactorization out = f;
  const Curve c = f.factors[i - 1], e = f.factors[i];
  if (d == Direction::forward) {
    out.factors[i - 1] = s.normalize(e);
    out.factors[i] = s.normalize(transported({Letter{e, -1}}, c));
  } else {
    out.factors[i - 1] = s.normalize(transported({Letter{c, 1}}, e));
    out.factors[i] = s.normalize(c);
  }
  return out;
}

DerivationScript hurwitz_script(const PositiveFactorization& f, std::size_t i, Direction d) {
  check_position(f, i);
  DerivationScript script;
  script.name = "hurwitz";
  script.surface = f.surface;
  script.start = f.as_word();
  script.end = hurwitz_move(f, i, d).as_word();
  derivation::Step st;
  st.rule = derivation::Rule::conjugate;
  st.position = i - 1;
  st.backward = d == Direction::backward;
  script.steps.push_back(st);
  return script;
}

PositiveFactorization global_conjugate(const PositiveFactorization& f, const Word& h) {
  const Surface& s = Surface::get(f.surface);
  PositiveFactorization out{f.surface, {}};
  for (const auto& c : f.factors) out.factors.push_back(s.normalize(transported(h, c)));
  return out;
}

PositiveFactorization partial_conjugate(const PositiveFactorization& f, std::size_t first,
                                        std::size_t last, const Word& h_raw,
                                        const DerivationScript& certificate,
                                        const RelationLibrary& lib) {
  if (first < 1 || first > last || last > f.factors.size())
    throw std::out_of_range("conjugation range " + std::to_string(first) + ".." + std::to_string(last) +
                            " outside 1.." + std::to_string(f.factors.size()));
  const Surface& s = Surface::get(f.surface, lib.sign());
  const Word h = s.normalize_transport(h_raw);
  Word x;
  for (std::size_t k = first - 1; k < last; ++k) x.push_back({s.normalize(f.factors[k]), 1});
  if (certificate.surface != f.surface)
    throw std::invalid_argument("certificate lives on " + certificate.surface + ", not " + f.surface);
  if (s.normalize(certificate.start) != concat(h, x) || s.normalize(certificate.end) != concat(x, h))
    throw std::invalid_argument("certificate does not state h X = X h for the chosen range");
  auto v = derivation::verify(certificate, lib);
  if (!v.ok())
    throw std::invalid_argument("certificate fails at step " + std::to_string(v.failed_step) + ": " + v.reason);
  PositiveFactorization out = f;
  for (std::size_t k = first - 1; k < last; ++k) out.factors[k] = s.normalize(transported(h, f.factors[k]));
  return out;
}

intlinalg::IntMatrix relation_matrix(const PositiveFactorization& f, int sign) {
  const Surface& s = Surface::get(f.surface, sign);
  std::vector<IntVector> rows;
  for (const auto& c : f.factors) rows.push_back(s.homology_class(c));
  return intlinalg::IntMatrix::from_rows(rows, s.basis_names().size());
}

FillingInvariants filling_invariants(const PositiveFactorization& f, int sign) {
  const Surface& s = Surface::get(f.surface, sign);
  FillingInvariants inv;
  inv.fiber = s.model();
  inv.twist_count = f.factors.size();
  inv.euler = s.model().euler() + static_cast<long long>(f.factors.size());
  inv.h1 = intlinalg::cokernel(relation_matrix(f, sign));
  if (s.has_pi1()) {
    presentations::GroupPresentation p;
    p.generator_count = s.pi1_rank();
    p.generator_names = s.pi1_names();
    for (const auto& c : f.factors) {
      auto w = mcg::curve_word(s, c);
      if (!w.empty()) p.relators.push_back(w);
    }
    inv.pi1 = std::move(p);
  }
  return inv;
}

PositiveFactorization cap_factorization(const PositiveFactorization& f, int boundary, int sign) {
  const auto m = surface::cap(SurfaceModel::parse(f.surface), boundary, sign);
  PositiveFactorization out{m.target.id(), {}};
  for (std::size_t k = 0; k < f.factors.size(); ++k) {
    auto c = m.apply(f.factors[k]);
    if (!c)
      throw std::invalid_argument("factor " + std::to_string(k + 1) + " twists along the capped boundary");
    out.factors.push_back(*c);
  }
  return out;
}

std::size_t planar_matrix_count(int n, int l_max) {
  if (n < 1 || l_max < 0) throw std::invalid_argument("planar enumeration needs n >= 1 and l_max >= 0");
  constexpr std::size_t cap = std::numeric_limits<std::size_t>::max() / 4;
  std::size_t rows = 1;
  for (int k = 0; k < n; ++k) {
    if (rows > cap / 3) return cap;
    rows *= 3;
  }
  rows -= 1;
  // multisets of size l from rows kinds: C(rows + l - 1, l)
  std::size_t total = 0, term = 1;
  for (int l = 0; l <= l_max; ++l) {
    if (l > 0) {
      const std::size_t num = rows + static_cast<std::size_t>(l) - 1;
      if (term > cap / std::max<std::size_t>(num, 1)) return cap;
      term = term * num / static_cast<std::size_t>(l);
    }
    total += term;
    if (total > cap) return cap;
  }
  return total;
}

std::set<AbelianGroup> enumerate_planar_homologies(int n, int l_max, std::size_t budget) {
  const std::size_t count = planar_matrix_count(n, l_max);
  if (count > budget)
    throw std::length_error("planar enumeration needs " + std::to_string(count) +
                            " matrices, over the budget of " + std::to_string(budget));
  std::vector<IntVector> rows;
  IntVector v(static_cast<std::size_t>(n), Integer(-1));
  for (;;) {
    if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; })) rows.push_back(v);
    std::size_t k = 0;
    while (k < v.size() && v[k] == 1) v[k++] = -1;
    if (k == v.size()) break;
    v[k] += 1;
  }
  std::set<AbelianGroup> out;
  std::vector<IntVector> chosen;
  auto visit = [&](auto&& self, std::size_t from) -> void {
    out.insert(intlinalg::cokernel(intlinalg::IntMatrix::from_rows(chosen, static_cast<std::size_t>(n))));
    if (chosen.size() == static_cast<std::size_t>(l_max)) return;
    for (std::size_t r = from; r < rows.size(); ++r) {
      chosen.push_back(rows[r]);
      self(self, r);
      chosen.pop_back();
    }
  };
  visit(visit, 0);
  return out;
}

FillingInvariants combine_disjoint(const FillingInvariants& a, const FillingInvariants& b) {
  FillingInvariants out;
  out.euler = a.euler + b.euler - 1;
  out.h1 = a.h1.direct_sum(b.h1);
  if (a.pi1 && b.pi1) out.pi1 = presentations::free_product(*a.pi1, *b.pi1);
  out.fiber = a.fiber;
  out.twist_count = a.twist_count + b.twist_count;
  return out;
}

FillingInvariants annulus_invariants() {
  FillingInvariants inv;
  inv.euler = 0;
  inv.h1 = AbelianGroup::free(1);
  inv.pi1 = presentations::GroupPresentation{1, {}, {"x1"}};
  inv.fiber = {0, 2};
  return inv;
}

FillingInvariants disk_invariants() {
  FillingInvariants inv;
  inv.euler = 1;
  inv.h1 = AbelianGroup::free(0);
  inv.pi1 = presentations::GroupPresentation{1, {presentations::FreeWord::generator(0)}, {"x1"}};
  inv.fiber = {0, 1};
  return inv;
}

}  // namespace fillkit::factorization
