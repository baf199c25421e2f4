#include "fillkit/serialize.hpp"

#include <stdexcept>

namespace fillkit::io {

namespace {

bool integer_text(const std::string& s) {
  std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  return true;
}

void need(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

json to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string() && integer_text(j.get<std::string>())) {
    std::string s = j.get<std::string>();
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s);
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

long long small_integer(const json& j, const char* what) {
  Integer v = integer_from_json(j);
  need(v.fits_slong_p(), std::string(what) + " is out of range");
  return v.get_si();
}

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const intlinalg::IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

intlinalg::IntMatrix matrix_from_json(const json& j) {
  // {"rows": r, "cols": c, "entries": [...]} for shapes an array cannot carry
  if (j.is_object()) {
    need(j.contains("rows") && j.contains("cols"), "matrix object needs rows and cols");
    const auto r = static_cast<std::size_t>(small_integer(j["rows"], "rows"));
    const auto c = static_cast<std::size_t>(small_integer(j["cols"], "cols"));
    intlinalg::IntMatrix m(r, c);
    if (j.contains("entries")) {
      const json& e = j["entries"];
      need(e.is_array() && e.size() == r, "matrix entries must have one row per row");
      for (std::size_t i = 0; i < r; ++i) {
        need(e[i].is_array() && e[i].size() == c, "matrix row " + std::to_string(i) + " has the wrong length");
        for (std::size_t k = 0; k < c; ++k) m(i, k) = integer_from_json(e[i][k]);
      }
    }
    return m;
  }
  need(j.is_array(), "matrix must be an array of rows");
  if (j.empty()) return intlinalg::IntMatrix(0, 0);
  need(j[0].is_array(), "matrix must be an array of rows");
  const std::size_t cols = j[0].size();
  intlinalg::IntMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    need(j[i].is_array() && j[i].size() == cols, "matrix row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = integer_from_json(j[i][k]);
  }
  return m;
}

json to_json(const intlinalg::AbelianGroup& g) { return g.to_string(); }

intlinalg::AbelianGroup group_from_json(const json& j) {
  need(j.is_string(), "group must be a string such as \"Z + Z/5\"");
  return intlinalg::AbelianGroup::parse(j.get<std::string>());
}

json to_json(const presentations::FreeWord& w) { return w.letters(); }

presentations::FreeWord free_word_from_json(const json& j) {
  need(j.is_array(), "free word must be an array of signed generator indices");
  std::vector<int> letters;
  for (const auto& x : j) {
    const long long v = small_integer(x, "generator index");
    need(v != 0 && v > -100000 && v < 100000, "generator index out of range");
    letters.push_back(static_cast<int>(v));
  }
  return presentations::FreeWord(letters);
}

json to_json(const presentations::GroupPresentation& p) {
  json rel = json::array();
  for (const auto& r : p.relators) rel.push_back(to_json(r));
  return {{"generators", p.generator_count}, {"relators", rel}};
}

presentations::GroupPresentation presentation_from_json(const json& j) {
  need(j.is_object() && j.contains("generators"), "presentation needs \"generators\"");
  presentations::GroupPresentation p;
  p.generator_count = static_cast<std::size_t>(small_integer(j["generators"], "generators"));
  if (j.contains("relators")) {
    need(j["relators"].is_array(), "relators must be an array");
    for (const auto& r : j["relators"]) p.relators.push_back(free_word_from_json(r));
  }
  p.validate();
  return p;
}

json to_json(const braid::BraidWord& b) { return {{"strands", b.strands}, {"letters", b.letters}}; }

braid::BraidWord braid_from_json(const json& j) {
  need(j.is_object() && j.contains("strands"), "braid needs \"strands\"");
  std::vector<int> letters;
  if (j.contains("letters"))
    for (const auto& x : j["letters"]) letters.push_back(static_cast<int>(small_integer(x, "braid letter")));
  braid::BraidWord b(static_cast<int>(small_integer(j["strands"], "strands")), letters);
  b.validate();
  return b;
}

json to_json(const braid::BandFactorization& b) {
  json bands = json::array();
  for (const auto& band : b.bands) bands.push_back({{"w", band.w.letters}, {"i", band.i}});
  return {{"strands", b.strands}, {"bands", bands}};
}

braid::BandFactorization bands_from_json(const json& j) {
  need(j.is_object() && j.contains("strands") && j.contains("bands"), "band factorization needs strands and bands");
  braid::BandFactorization b;
  b.strands = static_cast<int>(small_integer(j["strands"], "strands"));
  for (const auto& band : j["bands"]) {
    need(band.is_object() && band.contains("i"), "band needs \"i\"");
    std::vector<int> letters;
    if (band.contains("w"))
      for (const auto& x : band["w"]) letters.push_back(static_cast<int>(small_integer(x, "braid letter")));
    b.bands.push_back({braid::BraidWord(b.strands, letters), static_cast<int>(small_integer(band["i"], "band index"))});
  }
  b.validate();
  return b;
}

json to_json(const factorization::PositiveFactorization& f) { return f.to_string(); }

factorization::PositiveFactorization factorization_from_json(const json& j) {
  if (j.is_object() && j.contains("factorization")) return factorization_from_json(j["factorization"]);
  need(j.is_string(), "factorization must be a string such as \"S1_3: b1, b2\"");
  return factorization::PositiveFactorization::parse(j.get<std::string>());
}

json to_json(const factorization::FillingInvariants& inv) {
  json out = {{"euler", inv.euler},
              {"h1", to_json(inv.h1)},
              {"fiber", inv.fiber.id()},
              {"twist_count", inv.twist_count}};
  if (inv.pi1) out["pi1"] = to_json(*inv.pi1);
  return out;
}

factorization::FillingInvariants invariants_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "annulus") return factorization::annulus_invariants();
  if (j.is_string() && j.get<std::string>() == "disk") return factorization::disk_invariants();
  need(j.is_object() && j.contains("euler") && j.contains("h1"), "filling invariants need euler and h1");
  factorization::FillingInvariants inv;
  inv.euler = small_integer(j["euler"], "euler");
  inv.h1 = group_from_json(j["h1"]);
  if (j.contains("fiber")) {
    const std::string id = j["fiber"].get<std::string>();
    inv.fiber = id == "S0_1" ? surface::SurfaceModel{0, 1} : surface::SurfaceModel::parse(id);
  }
  if (j.contains("twist_count")) inv.twist_count = static_cast<std::size_t>(small_integer(j["twist_count"], "twist_count"));
  if (j.contains("pi1")) inv.pi1 = presentation_from_json(j["pi1"]);
  return inv;
}

json canonical(const json& j) {
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (integer_text(s)) {
      Integer v(s[0] == '+' ? s.substr(1) : s);
      if (v.fits_slong_p()) return v.get_si();
    }
    return j;
  }
  if (j.is_number_unsigned()) return static_cast<long long>(j.get<unsigned long long>());
  if (j.is_array()) {
    json out = json::array();
    for (const auto& x : j) out.push_back(canonical(x));
    return out;
  }
  if (j.is_object()) {
    json out = json::object();
    for (const auto& [k, v] : j.items()) out[k] = canonical(v);
    return out;
  }
  return j;
}

}  // namespace fillkit::io
