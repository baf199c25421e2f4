#include "fillkit/bridge.hpp"
#include "fillkit/mcg.hpp"
#include "fillkit/scenario.hpp"

#include <functional>

namespace fillkit::scenario {

namespace {

using factorization::PositiveFactorization;
using intlinalg::AbelianGroup;
using surface::Surface;

struct Outcome {
  bool ok = false;
  json detail;
};

class Suite {
 public:
  explicit Suite(const Options& opt) : opt_(opt) {}

  void check(const std::string& id, const std::function<Outcome()>& fn) {
    json rec = {{"id", id}};
    try {
      Outcome o = fn();
      rec["status"] = o.ok ? "pass" : "fail";
      if (!o.detail.is_null()) rec["detail"] = o.detail;
      ++(o.ok ? passed_ : failed_);
    } catch (const std::exception& e) {
      rec["status"] = "fail";
      rec["detail"] = std::string("exception: ") + e.what();
      ++failed_;
    }
    checks_.push_back(std::move(rec));
  }

  Report finish() const {
    Report r;
    r.exit_code = failed_ ? 1 : 0;
    r.body = {{"title", "paper suite"},
              {"sign", opt_.sign},
              {"checks", checks_},
              {"summary", {{"total", passed_ + failed_}, {"passed", passed_}, {"failed", failed_}}},
              {"exit_code", r.exit_code}};
    return r;
  }

 private:
  const Options& opt_;
  json checks_ = json::array();
  std::size_t passed_ = 0, failed_ = 0;
};

IntVector ints(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Outcome compare(const json& got, const json& want) { return {got == want, {{"got", got}, {"want", want}}}; }

}  // namespace

Report run_paper_suite(const Options& opt) {
  Suite suite(opt);
  const int sign = opt.sign;
  const Surface& s13 = Surface::get("S1_3", sign);

  // star relation and its consequence
  suite.check("star.axiom", [&] {
    auto lib = derivation::RelationLibrary::standard(sign);
    const auto* star = lib.find_relation("star");
    return Outcome{s13.homology_rep(star->lhs) == s13.homology_rep(star->rhs), nullptr};
  });
  for (const char* id : {"S1_3", "S1_2", "S1_1"}) {
    suite.check(std::string("star.derivation.") + id, [&, id] {
      auto d = derivation::star_consequence_script(id);
      auto v = derivation::verify(d, derivation::RelationLibrary::standard(sign));
      const Surface& s = Surface::get(id, sign);
      json detail = {{"steps", d.steps.size()}, {"end", s.format(d.end)}};
      if (!v.ok()) detail["reason"] = v.reason;
      return Outcome{v.ok() && s.homology_rep(d.start) == s.homology_rep(d.end), detail};
    });
  }

  // Picard-Lefschetz bookkeeping
  suite.check("homology.b1", [&] {
    return compare(io::to_json(s13.homology_class(parse_curve("b1"))), io::to_json(ints({1, 1, 1, 1})));
  });
  suite.check("homology.a1^7(b2)", [&] {
    return compare(io::to_json(s13.homology_class(parse_curve("{a1^7}b2"))), io::to_json(ints({-7, 0, 0, 1})));
  });
  suite.check("homology.hurwitz", [&] {
    auto f = factorization::hurwitz_move({"S1_3", {parse_curve("b2"), parse_curve("a1")}}, 1,
                                         factorization::Direction::forward);
    return compare(io::to_json(s13.homology_class(f.factors[1])), io::to_json(ints({1, 0, 0, 1})));
  });
  suite.check("cap.b1", [&] {
    auto m = surface::cap(s13.model(), 3, sign);
    return compare(io::to_json(m.class_map.apply(s13.homology_class(parse_curve("b1")))), io::to_json(ints({1, 2, 1})));
  });

  // P_n family
  std::vector<AbelianGroup> h1s;
  for (long n = 0; n <= 12; ++n) {
    suite.check("pn." + std::to_string(n), [&, n] {
      auto c = factorization::generate_Pn(n);
      auto v = factorization::verify_chain(c.scripts, sign);
      auto h1 = factorization::filling_invariants(c.factorization, sign).h1;
      h1s.push_back(h1);
      const auto want = AbelianGroup::free(1).direct_sum(AbelianGroup::cyclic(n));
      json detail = {{"certificate", v.ok()}, {"h1", h1.to_string()}, {"want", want.to_string()}};
      if (!v.ok()) detail["reason"] = v.reason;
      return Outcome{v.ok() && h1 == want, detail};
    });
  }
  suite.check("pn.distinct", [&] {
    bool ok = h1s.size() == 13;
    for (std::size_t i = 0; ok && i < h1s.size(); ++i)
      for (std::size_t j = i + 1; j < h1s.size(); ++j) ok = ok && !(h1s[i] == h1s[j]);
    return Outcome{ok, nullptr};
  });
  suite.check("pn.relations.5", [&] {
    auto f = factorization::global_conjugate(factorization::generate_Pn(5).factorization, {{Curve("a1"), 5}});
    intlinalg::IntMatrix want{{1, 1, 1, 1}, {0, 0, 0, 1}, {-1, -1, -1, 1}, {-5, 0, 0, 1}};
    return compare(io::to_json(factorization::relation_matrix(f, sign)), io::to_json(want));
  });

  // capped family
  for (long n = 1; n <= 12; ++n) {
    suite.check("capped." + std::to_string(n), [&, n] {
      auto capped = factorization::cap_factorization(factorization::generate_Pn(n).factorization, 3, sign);
      auto conj = factorization::global_conjugate(capped, {{Curve("ha2"), n}});
      intlinalg::IntMatrix want{{1, 2, 1}, {0, 0, 1}, {-1, -2, 1}, {0, -n, 1}};
      auto rel = factorization::relation_matrix(conj, sign);
      auto h1 = factorization::filling_invariants(capped, sign).h1;
      return Outcome{rel == want && h1 == AbelianGroup::cyclic(n),
                     {{"relations", io::to_json(rel)}, {"h1", h1.to_string()}}};
    });
  }

  // doubly capped fillings on S1_1
  for (long n = 1; n <= 12; ++n) {
    suite.check("pi1." + std::to_string(n), [&, n] {
      auto f = factorization::cap_factorization(
          factorization::cap_factorization(factorization::generate_Pn(n).factorization, 3, sign), 1, sign);
      auto inv = factorization::filling_invariants(f, sign);
      auto r = presentations::todd_coxeter(*inv.pi1, {}, opt.max_cosets);
      const std::size_t want = n % 3 == 0 ? 3 : 1;
      return Outcome{r.index && *r.index == want,
                     {{"order", r.index ? json(*r.index) : json("exhausted")}, {"want", want}}};
    });
  }

  // planar enumeration
  suite.check("planar.3.3", [&] {
    auto groups = factorization::enumerate_planar_homologies(3, 3, opt.planar_budget);
    json list = json::array();
    for (const auto& g : groups) list.push_back(g.to_string());
    return Outcome{!groups.empty(), {{"count", groups.size()}, {"groups", list}}};
  });

  // braid descent
  const auto beta0 = bridge::descend(factorization::cap_factorization(factorization::generate_Pn(0).factorization, 3, sign));
  for (long n = 0; n <= 8; ++n) {
    suite.check("descent." + std::to_string(n), [&, n] {
      auto capped = factorization::cap_factorization(factorization::generate_Pn(n).factorization, 3, sign);
      auto b = bridge::descend(capped);
      auto si = braid::surface_invariants(b);
      const bool equal = braid::braid_equal(b.product(), beta0.product());
      const std::size_t comps = n % 2 ? 1 : 2;
      json detail = {{"equal_to_beta0", equal},
                     {"euler", si.euler},
                     {"surface_components", si.surface_components},
                     {"boundary_link_components", si.boundary_link_components}};
      bool ok = equal && si.euler == 0 && si.surface_components == comps && si.boundary_link_components == 2;
      if (n >= 1) {
        auto c = braid::complement_presentation(b);
        auto dc = presentations::branched_double_cover_homology(c.presentation, c.meridians);
        auto lefschetz = factorization::filling_invariants(capped, sign).h1;
        detail["double_cover"] = dc.to_string();
        detail["lefschetz_h1"] = lefschetz.to_string();
        ok = ok && dc == lefschetz && dc == AbelianGroup::cyclic(n);
      }
      return Outcome{ok, detail};
    });
  }

  // boundary connected sums
  for (long n = 1; n <= 12; ++n) {
    suite.check("combine." + std::to_string(n), [&, n] {
      auto inv = factorization::filling_invariants(factorization::generate_Pn(n).factorization, sign);
      json got = json::array();
      bool ok = true;
      for (std::size_t m = 1; m <= 4; ++m) {
        inv = factorization::combine_disjoint(inv, factorization::annulus_invariants());
        const auto want = AbelianGroup::free(1 + m).direct_sum(AbelianGroup::cyclic(n));
        ok = ok && inv.h1 == want;
        got.push_back(inv.h1.to_string());
      }
      return Outcome{ok, {{"h1_by_m", got}}};
    });
  }
  return suite.finish();
}

}  // namespace fillkit::scenario
