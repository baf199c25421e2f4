#include "fillkit/bridge.hpp"

#include "fillkit/mcg.hpp"

#include <stdexcept>

namespace fillkit::bridge {

using surface::Surface;

const std::vector<std::pair<std::string, int>>& dictionary() {
  static const std::vector<std::pair<std::string, int>> d = {{"ha1", 1}, {"hb2", 2}, {"ha2", 3}};
  return d;
}

namespace {

std::vector<std::pair<std::string, braid::BraidWord>> braid_dictionary() {
  std::vector<std::pair<std::string, braid::BraidWord>> out;
  for (const auto& [name, i] : dictionary()) out.push_back({name, braid::BraidWord(4, {i})});
  return out;
}

int index_of(const std::string& base) {
  for (const auto& [name, i] : dictionary())
    if (name == base) return i;
  return 0;
}

}  // namespace

braid::BraidWord descend_word(const Word& w) {
  return mcg::to_braid(Surface::get("S1_2"), w, braid_dictionary(), 4);
}

braid::BandFactorization descend(const factorization::PositiveFactorization& f) {
  if (f.surface != "S1_2") throw std::invalid_argument("descent needs a factorization on S1_2, got " + f.surface);
  const Surface& s = Surface::get("S1_2");
  braid::BandFactorization out;
  out.strands = 4;
  for (std::size_t k = 0; k < f.factors.size(); ++k) {
    const Curve c = s.normalize(f.factors[k]);
    const int i = index_of(c.base);
    if (i == 0) throw std::invalid_argument("factor " + std::to_string(k + 1) + " (" + s.format(c) + ") is not in the hyperelliptic dictionary");
    braid::BraidWord w(4, {});
    try {
      w = descend_word(c.transport);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("factor " + std::to_string(k + 1) + " (" + s.format(c) + ") has a transport outside the hyperelliptic dictionary");
    }
    out.bands.push_back({w, i});
  }
  return out;
}

factorization::PositiveFactorization lift(const braid::BandFactorization& b) {
  if (b.strands != 4) throw std::invalid_argument("lift needs a 4-strand band factorization");
  b.validate();
  const Surface& s = Surface::get("S1_2");
  auto name = [](int i) {
    for (const auto& [n, k] : dictionary())
      if (k == i) return n;
    throw std::invalid_argument("generator index out of range");
  };
  factorization::PositiveFactorization out{"S1_2", {}};
  for (const auto& band : b.bands) {
    Word h;
    for (int l : band.w.letters) h.push_back({Curve(name(l > 0 ? l : -l)), l > 0 ? 1 : -1});
    out.factors.push_back(s.normalize(transported(h, Curve(name(band.i)))));
  }
  return out;
}

}  // namespace fillkit::bridge
