#include "fillkit/surface.hpp"

#include "fillkit/braid.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace fillkit::surface {

using presentations::FreeWord;

std::string SurfaceModel::id() const {
  return "S" + std::to_string(genus) + "_" + std::to_string(boundary_count);
}

SurfaceModel SurfaceModel::parse(const std::string& id) {
  SurfaceModel m;
  std::size_t us = id.find('_');
  if (id.size() < 4 || id[0] != 'S' || us == std::string::npos)
    throw std::invalid_argument("unknown surface id '" + id + "'");
  try {
    std::size_t used = 0;
    m.genus = std::stoi(id.substr(1, us - 1), &used);
    if (used != us - 1) throw std::invalid_argument("genus");
    m.boundary_count = std::stoi(id.substr(us + 1), &used);
    if (used != id.size() - us - 1) throw std::invalid_argument("boundary");
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown surface id '" + id + "'");
  }
  const bool ok = (m.genus == 1 && m.boundary_count >= 1 && m.boundary_count <= 3) ||
                  (m.genus == 0 && m.boundary_count >= 2 && m.boundary_count <= 16);
  if (!ok) throw std::invalid_argument("unsupported surface " + id);
  return m;
}

const Surface& Surface::get(const SurfaceModel& m, int sign) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::unique_ptr<Surface>> cache;
  const SurfaceModel checked = SurfaceModel::parse(m.id());
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  std::lock_guard lock(mu);
  auto key = std::make_pair(checked.id(), sign);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<Surface>(new Surface(checked, sign))).first;
  return *it->second;
}

Surface::Surface(SurfaceModel m, int sign) : model_(m), sign_(sign) {
  if (m.genus == 1 && m.boundary_count == 3)
    build_s13();
  else if (m.genus == 1 && m.boundary_count == 2)
    build_s12();
  else if (m.genus == 1 && m.boundary_count == 1)
    build_s11();
  else
    build_s0n();
  for (auto& [name, c] : aliases_) c = normalize(c);
}

void Surface::add_base(const std::string& name, IntVector cls, bool boundary) {
  index_[name] = bases_.size();
  bases_.push_back({name, std::move(cls), boundary});
  for (auto& row : intersection_) row.push_back(boundary ? 0 : -1);
  intersection_.emplace_back(bases_.size(), -1);
  auto& row = intersection_.back();
  for (std::size_t k = 0; k < bases_.size(); ++k)
    if (boundary || bases_[k].boundary) row[k] = 0;
  row.back() = 0;
}

void Surface::set_intersection(const std::string& a, const std::string& b, int v) {
  const std::size_t i = index_.at(a), j = index_.at(b);
  intersection_[i][j] = intersection_[j][i] = v;
}

void Surface::add_alias(const std::string& name, const std::string& text) {
  aliases_.emplace_back(name, parse_curve(text));
}

namespace {

IntVector vec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

IntVector unit(std::size_t n, std::size_t k) {
  IntVector v(n, Integer(0));
  v[k] = 1;
  return v;
}

}  // namespace

void Surface::build_s13() {
  basis_names_ = {"a1", "a2", "a3", "b2"};
  pairing_ = IntMatrix(4, 4);
  for (std::size_t i = 0; i < 3; ++i) {
    pairing_(3, i) = 1;  // <b2, a_i> = +1
    pairing_(i, 3) = -1;
  }
  add_base("a1", vec({1, 0, 0, 0}), false);
  add_base("a2", vec({0, 1, 0, 0}), false);
  add_base("a3", vec({0, 0, 1, 0}), false);
  add_base("b2", vec({0, 0, 0, 1}), false);
  add_base("d1", vec({1, -1, 0, 0}), true);
  add_base("d2", vec({0, 1, -1, 0}), true);
  add_base("d3", vec({-1, 0, 1, 0}), true);
  // boundary of a neighbourhood of the chain a1 b2 a2, cobounding a pair of
  // pants with d2 and d3
  add_base("e23", vec({-1, 1, 0, 0}), false);
  for (const char* a : {"a1", "a2", "a3"}) {
    set_intersection("b2", a, 1);
    set_intersection("e23", a, 0);
    for (const char* b : {"a1", "a2", "a3"}) set_intersection(a, b, 0);
  }
  set_intersection("e23", "a3", 2);
  set_intersection("e23", "b2", 0);
  add_alias("b1", "{a3^-1 a2^-1 a1^-1}b2");
  add_alias("b3", "{a1 a2 a3}b2");
  for (const char* d : {"d1", "d2", "d3"}) add_alias(std::string("delta") + d[1], d);
}

void Surface::build_s12() {
  basis_names_ = {"ha1", "ha2", "hb2"};
  pairing_ = IntMatrix(3, 3);
  for (std::size_t i = 0; i < 2; ++i) {
    pairing_(2, i) = 1;
    pairing_(i, 2) = -1;
  }
  add_base("ha1", vec({1, 0, 0}), false);
  add_base("ha2", vec({0, 1, 0}), false);
  add_base("hb2", vec({0, 0, 1}), false);
  add_base("d1", vec({-1, 1, 0}), true);
  add_base("d2", vec({1, -1, 0}), true);
  set_intersection("ha1", "ha2", 0);
  set_intersection("hb2", "ha1", 1);
  set_intersection("hb2", "ha2", 1);
  add_alias("hb1", "{ha2^-1 ha1^-1 ha2^-1}hb2");
  add_alias("hb3", "{ha2 ha1 ha2}hb2");
  for (const char* n : {"a1", "a2", "b1", "b2", "b3"}) add_alias(std::string("hat-") + n, std::string("h") + n);
  for (const char* d : {"d1", "d2"}) add_alias(std::string("delta") + d[1], d);
}

void Surface::build_s11() {
  basis_names_ = {"x", "y"};
  pairing_ = IntMatrix(2, 2);
  pairing_(1, 0) = 1;  // <y, x> = +1
  pairing_(0, 1) = -1;
  add_base("x", vec({1, 0}), false);
  add_base("y", vec({0, 1}), false);
  add_base("d", vec({0, 0}), true);
  set_intersection("x", "y", 1);
  add_alias("delta", "d");

  pi1_rank_ = 2;
  pi1_names_ = {"x", "y"};
  const FreeWord x = FreeWord::generator(0), y = FreeWord::generator(1);
  const FreeWord dw = x * y * x.inverse() * y.inverse();
  base_words_ = {{"x", x}, {"y", y}, {"d", dw}};
  twist_actions_["x"] = {x, y * x.inverse()};
  twist_actions_["y"] = {x * y, y};
  twist_actions_["d"] = {x.conjugated_by(dw), y.conjugated_by(dw)};
  inverse_actions_["x"] = {x, y * x};
  inverse_actions_["y"] = {x * y.inverse(), y};
  inverse_actions_["d"] = {x.conjugated_by(dw.inverse()), y.conjugated_by(dw.inverse())};
}

void Surface::build_s0n() {
  const std::size_t n = static_cast<std::size_t>(model_.boundary_count);
  const std::size_t r = n - 1;
  for (std::size_t k = 0; k < r; ++k) basis_names_.push_back("d" + std::to_string(k + 1));
  pairing_ = IntMatrix(r, r);
  for (std::size_t k = 0; k < r; ++k) add_base("d" + std::to_string(k + 1), unit(r, k), true);
  add_base("d" + std::to_string(n), IntVector(r, Integer(-1)), true);
  // curves around two inner boundaries; peripheral when r == 2
  if (r >= 3)
    for (std::size_t i = 1; i <= r; ++i)
      for (std::size_t j = i + 1; j <= r; ++j) {
        IntVector cls(r, Integer(0));
        cls[i - 1] = 1;
        cls[j - 1] = 1;
        add_base("c" + std::to_string(i) + "_" + std::to_string(j), cls, false);
      }

  pi1_rank_ = r;
  for (std::size_t k = 0; k < r; ++k) pi1_names_.push_back("x" + std::to_string(k + 1));
  std::vector<FreeWord> identity;
  for (std::size_t k = 0; k < r; ++k) identity.push_back(FreeWord::generator(static_cast<int>(k)));
  FreeWord all;
  for (std::size_t k = 0; k < r; ++k) all = all * identity[k];
  for (std::size_t k = 0; k < r; ++k) {
    base_words_["d" + std::to_string(k + 1)] = identity[k];
    twist_actions_["d" + std::to_string(k + 1)] = identity;
    inverse_actions_["d" + std::to_string(k + 1)] = identity;
  }
  base_words_["d" + std::to_string(n)] = all.inverse();
  if (r < 2) {
    twist_actions_["d" + std::to_string(n)] = identity;
    inverse_actions_["d" + std::to_string(n)] = identity;
    return;
  }
  const int strands = static_cast<int>(r);
  braid::BraidWord full(strands, {});
  for (int rep = 0; rep < strands; ++rep)
    for (int s = 1; s < strands; ++s) full.letters.push_back(s);
  twist_actions_["d" + std::to_string(n)] = braid::artin_action(full);
  inverse_actions_["d" + std::to_string(n)] = braid::artin_action(full.inverse());
  if (r < 3) return;
  for (int i = 1; i <= strands; ++i)
    for (int j = i + 1; j <= strands; ++j) {
      braid::BraidWord b(strands, {});
      for (int s = j - 1; s > i; --s) b.letters.push_back(s);
      braid::BraidWord a = b * braid::BraidWord(strands, {i, i}) * b.inverse();
      const std::string name = "c" + std::to_string(i) + "_" + std::to_string(j);
      const FreeWord pair = identity[i - 1] * identity[i];
      base_words_[name] = pair.substitute(braid::artin_action(b));
      twist_actions_[name] = braid::artin_action(a);
      inverse_actions_[name] = braid::artin_action(a.inverse());
    }
}

int Surface::intersection(const std::string& a, const std::string& b) const {
  return intersection_[index_.at(a)][index_.at(b)];
}

const BaseCurve& Surface::base(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("curve '" + name + "' is not registered on " + id());
  return bases_[it->second];
}

std::vector<std::string> Surface::boundary_names() const {
  std::vector<std::string> out;
  for (const auto& b : bases_)
    if (b.boundary) out.push_back(b.name);
  return out;
}

std::optional<Curve> Surface::alias(const std::string& name) const {
  for (const auto& [n, c] : aliases_)
    if (n == name) return c;
  return std::nullopt;
}

Curve Surface::normalize(const Curve& c) const {
  Curve cur = c;
  for (int depth = 0; !has_base(cur.base); ++depth) {
    auto a = alias(cur.base);
    if (!a || depth > 8) throw std::invalid_argument("curve '" + cur.base + "' is not registered on " + id());
    cur.transport.insert(cur.transport.end(), a->transport.begin(), a->transport.end());
    cur.base = a->base;
  }
  if (base(cur.base).boundary) return Curve(cur.base);
  cur.transport = normalize_transport(cur.transport);
  // letters applied first that fix the base curve do nothing
  while (!cur.transport.empty()) {
    const Curve& last = cur.transport.back().curve;
    if (!last.transport.empty()) break;
    if (last.base != cur.base && intersection(last.base, cur.base) != 0) break;
    cur.transport.pop_back();
  }
  return cur;
}

Word Surface::normalize_transport(const Word& w) const {
  Word out;
  for (const auto& l : w) {
    if (l.exponent == 0) continue;
    Curve c = normalize(l.curve);
    if (base(c.base).boundary) continue;
    if (!out.empty() && out.back().curve == c) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back({std::move(c), l.exponent});
    }
  }
  return out;
}

Word Surface::normalize(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) out.push_back({normalize(l.curve), l.exponent});
  return out;
}

std::string Surface::format(const Curve& raw) const {
  const Curve c = normalize(raw);
  std::size_t best = 0;
  const std::string* best_name = nullptr;
  for (const auto& [name, a] : aliases_) {
    if (a.transport.empty() || a.base != c.base || a.transport.size() > c.transport.size()) continue;
    if (!std::equal(a.transport.begin(), a.transport.end(), c.transport.end() - a.transport.size()))
      continue;
    if (!best_name || a.transport.size() > best) {
      best = a.transport.size();
      best_name = &name;
    }
  }
  if (!best_name) {
    if (c.transport.empty()) return c.base;
    return "{" + format(c.transport) + "}" + c.base;
  }
  Word prefix(c.transport.begin(), c.transport.end() - best);
  if (prefix.empty()) return *best_name;
  return "{" + format(prefix) + "}" + *best_name;
}

std::string Surface::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += format(l.curve);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

long long Surface::pair(const IntVector& u, const IntVector& v) const {
  Integer s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (pairing_(i, j) != 0) s += u[i] * pairing_(i, j) * v[j];
  return s.get_si();
}

IntMatrix Surface::transvection(const IntVector& cls, long long exponent) const {
  const std::size_t n = cls.size();
  IntMatrix m = IntMatrix::identity(n);
  // row vector c^T J
  IntVector cj(n, Integer(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) cj[j] += cls[i] * pairing_(i, j);
  const Integer k = Integer(static_cast<long>(sign_)) * Integer(static_cast<long>(exponent));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) += k * cls[i] * cj[j];
  return m;
}

IntVector Surface::homology_class(const Curve& raw) const {
  const Curve c = normalize(raw);
  IntVector v = base(c.base).cls;
  if (!c.transport.empty()) v = homology_rep(c.transport).apply(v);
  return v;
}

IntMatrix Surface::homology_rep(const Word& w) const {
  const std::size_t n = basis_names_.size();
  IntMatrix m = IntMatrix::identity(n);
  for (const auto& l : w) {
    if (l.exponent == 0) continue;
    IntVector cls = homology_class(l.curve);
    m = m * transvection(cls, l.exponent);
  }
  return m;
}

bool Surface::known_disjoint(const Curve& ra, const Curve& rb) const {
  const Curve a = normalize(ra), b = normalize(rb);
  if (base(a.base).boundary || base(b.base).boundary) return true;
  if (a.transport != b.transport) return a == b;
  return a.base == b.base || intersection(a.base, b.base) == 0;
}

bool Surface::known_single_intersection(const Curve& ra, const Curve& rb) const {
  const Curve a = normalize(ra), b = normalize(rb);
  if (base(a.base).boundary || base(b.base).boundary) return false;
  return a.transport == b.transport && intersection(a.base, b.base) == 1;
}

FreeWord Surface::base_word(const std::string& name) const {
  auto it = base_words_.find(name);
  if (it == base_words_.end()) throw std::invalid_argument("no fundamental group word for '" + name + "' on " + id());
  return it->second;
}

const std::vector<FreeWord>& Surface::base_twist_action(const std::string& name, int sign) const {
  const auto& table = sign > 0 ? twist_actions_ : inverse_actions_;
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("no twist action for '" + name + "' on " + id());
  return it->second;
}

std::optional<Curve> CappingMap::apply(const Curve& raw) const {
  const Surface& src = Surface::get(source, sign);
  const Curve c = src.normalize(raw);
  auto it = curve_map.find(c.base);
  if (it == curve_map.end()) throw std::invalid_argument("capping map has no image for '" + c.base + "'");
  if (it->second.empty()) return std::nullopt;
  Curve out(it->second, apply(c.transport));
  return Surface::get(target, sign).normalize(out);
}

Word CappingMap::apply(const Word& w) const {
  Word out;
  for (const auto& l : w) {
    auto c = apply(l.curve);
    if (c) out.push_back({*c, l.exponent});
  }
  return out;
}

CappingMap cap(const SurfaceModel& s, int boundary, int sign) {
  CappingMap m;
  m.source = SurfaceModel::parse(s.id());
  m.sign = sign;
  if (boundary < 1 || boundary > s.boundary_count)
    throw std::invalid_argument("boundary index " + std::to_string(boundary) + " out of range for " + s.id());
  if (s.boundary_count < 2 || (s.genus == 0 && s.boundary_count < 3))
    throw std::invalid_argument("capping " + s.id() + " leaves an unsupported surface");

  if (s.genus == 1 && s.boundary_count == 3) {
    if (boundary != 3) throw std::invalid_argument("only boundary 3 of S1_3 can be capped");
    m.target = {1, 2};
    m.class_map = IntMatrix{{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}};
    m.curve_map = {{"a1", "ha2"}, {"a2", "ha1"}, {"a3", "ha2"}, {"b2", "hb2"},
                   {"d1", "d1"},  {"d2", "d2"},  {"d3", ""},    {"e23", "d2"}};
    return m;
  }
  if (s.genus == 1 && s.boundary_count == 2) {
    m.target = {1, 1};
    m.class_map = IntMatrix{{1, 1, 0}, {0, 0, 1}};
    m.curve_map = {{"ha1", "x"}, {"ha2", "x"}, {"hb2", "y"}};
    m.curve_map["d" + std::to_string(boundary)] = "";
    m.curve_map["d" + std::to_string(3 - boundary)] = "d";
    return m;
  }
  // genus 0
  const int n = s.boundary_count;
  if (boundary == n) throw std::invalid_argument("the outer boundary of " + s.id() + " cannot be capped");
  m.target = {0, n - 1};
  const int r = n - 1;
  m.class_map = IntMatrix(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(r));
  auto renum = [&](int k) { return k < boundary ? k : k - 1; };
  for (int k = 1; k <= r; ++k)
    if (k != boundary) m.class_map(renum(k) - 1, k - 1) = 1;
  for (int k = 1; k <= n; ++k)
    m.curve_map["d" + std::to_string(k)] = k == boundary ? "" : "d" + std::to_string(renum(k));
  if (r >= 3)
    for (int i = 1; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j) {
        std::string image;
        if (i == boundary)
          image = "d" + std::to_string(renum(j));
        else if (j == boundary)
          image = "d" + std::to_string(renum(i));
        else if (r - 1 >= 3)
          image = "c" + std::to_string(renum(i)) + "_" + std::to_string(renum(j));
        else
          image = "d" + std::to_string(n - 1);  // peripheral around the outer boundary
        m.curve_map["c" + std::to_string(i) + "_" + std::to_string(j)] = image;
      }
  return m;
}

CappingMap compose(const CappingMap& first, const CappingMap& second) {
  if (!(first.target == second.source)) throw std::invalid_argument("capping maps do not compose");
  CappingMap m;
  m.source = first.source;
  m.target = second.target;
  m.sign = first.sign;
  m.class_map = second.class_map * first.class_map;
  for (const auto& [k, v] : first.curve_map) {
    if (v.empty()) {
      m.curve_map[k] = "";
      continue;
    }
    auto it = second.curve_map.find(v);
    if (it == second.curve_map.end()) throw std::invalid_argument("capping maps do not compose at '" + v + "'");
    m.curve_map[k] = it->second;
  }
  return m;
}

}  // namespace fillkit::surface
