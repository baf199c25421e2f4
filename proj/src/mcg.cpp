#include "fillkit/mcg.hpp"

#include <cstdlib>
#include <stdexcept>

namespace fillkit::mcg {

intlinalg::IntMatrix homology_rep(const Surface& s, const Word& w) { return s.homology_rep(w); }

std::string to_string(Distinctness d) {
  return d == Distinctness::distinct ? "distinct" : "inconclusive";
}

Distinctness necessary_distinct(const Surface& s, const Word& a, const Word& b) {
  if (!(s.homology_rep(a) == s.homology_rep(b))) return Distinctness::distinct;
  if (s.has_pi1() && pi1_action(s, a) != pi1_action(s, b)) return Distinctness::distinct;
  return Distinctness::inconclusive;
}

namespace {

using Automorphism = std::vector<FreeWord>;

Automorphism identity(std::size_t n) {
  Automorphism a;
  for (std::size_t k = 0; k < n; ++k) a.push_back(FreeWord::generator(static_cast<int>(k)));
  return a;
}

// f o g
Automorphism compose(const Automorphism& f, const Automorphism& g) {
  Automorphism out;
  out.reserve(g.size());
  for (const auto& w : g) out.push_back(w.substitute(f));
  return out;
}

Automorphism letter_action(const Surface& s, const Letter& l) {
  const Curve c = s.normalize(l.curve);
  const auto& step = s.base_twist_action(c.base, l.exponent > 0 ? 1 : -1);
  Automorphism a = identity(s.pi1_rank());
  for (long long k = 0; k < std::llabs(l.exponent); ++k) a = compose(a, step);
  if (c.transport.empty()) return a;
  return compose(compose(pi1_action(s, c.transport), a), pi1_action(s, inverse(c.transport)));
}

}  // namespace

std::vector<FreeWord> pi1_action(const Surface& s, const Word& w) {
  if (!s.has_pi1()) throw std::invalid_argument("no fundamental group model on " + s.id());
  Automorphism a = identity(s.pi1_rank());
  for (const auto& l : w) a = compose(a, letter_action(s, l));
  return a;
}

FreeWord curve_word(const Surface& s, const Curve& raw) {
  const Curve c = s.normalize(raw);
  FreeWord w = s.base_word(c.base);
  if (c.transport.empty()) return w;
  return w.substitute(pi1_action(s, c.transport));
}

braid::BraidWord to_braid(const Surface& s, const Word& w,
                          const std::vector<std::pair<std::string, braid::BraidWord>>& dictionary,
                          int strands) {
  braid::BraidWord out(strands, {});
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Curve c = s.normalize(w[k].curve);
    const braid::BraidWord* image = nullptr;
    for (const auto& [name, b] : dictionary)
      if (name == c.base) image = &b;
    if (!image)
      throw std::invalid_argument("letter " + std::to_string(k) + " (" + s.format(c) +
                                  ") has no braid image");
    braid::BraidWord core(strands, {});
    const braid::BraidWord& step = w[k].exponent > 0 ? *image : image->inverse();
    for (long long e = 0; e < std::llabs(w[k].exponent); ++e) core = core * step;
    if (c.transport.empty()) {
      out = out * core;
    } else {
      braid::BraidWord h = to_braid(s, c.transport, dictionary, strands);
      out = out * h * core * h.inverse();
    }
  }
  return out;
}

braid::BraidWord to_b3(const Surface& s, const Word& w) {
  if (s.id() != "S1_1") throw std::invalid_argument("to_b3 needs a word on S1_1, got " + s.id());
  braid::BraidWord delta(3, {});
  for (int k = 0; k < 6; ++k) delta = delta * braid::BraidWord(3, {1, 2});
  const std::vector<std::pair<std::string, braid::BraidWord>> dict = {
      {"x", braid::BraidWord(3, {1})}, {"y", braid::BraidWord(3, {2})}, {"d", delta}};
  return to_braid(s, w, dict, 3);
}

}  // namespace fillkit::mcg
