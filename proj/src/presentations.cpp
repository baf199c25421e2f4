#include "fillkit/presentations.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace fillkit::presentations {

namespace {

void reduce_into(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

}  // namespace

FreeWord::FreeWord(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int l : letters) {
    if (l == 0) throw std::invalid_argument("free word letter 0");
    reduce_into(letters_, l);
  }
}

FreeWord FreeWord::generator(int g, int sign) {
  return FreeWord({sign > 0 ? g + 1 : -(g + 1)});
}

FreeWord FreeWord::from_indices(std::initializer_list<int> letters) {
  return FreeWord(std::vector<int>(letters));
}

int FreeWord::max_generator() const {
  int m = -1;
  for (int l : letters_) m = std::max(m, std::abs(l) - 1);
  return m;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.assign(letters_.rbegin(), letters_.rend());
  for (int& l : w.letters_) l = -l;
  return w;
}

FreeWord FreeWord::power(long long k) const {
  FreeWord base = k < 0 ? inverse() : *this;
  FreeWord out;
  for (long long i = 0; i < std::llabs(k); ++i) out = out * base;
  return out;
}

FreeWord FreeWord::conjugated_by(const FreeWord& u) const { return u * *this * u.inverse(); }

FreeWord FreeWord::substitute(const std::vector<FreeWord>& images) const {
  std::vector<int> out;
  for (int l : letters_) {
    const std::size_t g = static_cast<std::size_t>(std::abs(l) - 1);
    if (g >= images.size()) throw std::invalid_argument("substitution image missing");
    if (l > 0) {
      for (int x : images[g].letters_) reduce_into(out, x);
    } else {
      for (auto it = images[g].letters_.rbegin(); it != images[g].letters_.rend(); ++it)
        reduce_into(out, -*it);
    }
  }
  FreeWord w;
  w.letters_ = std::move(out);
  return w;
}

std::vector<long long> FreeWord::exponent_sums(std::size_t generator_count) const {
  std::vector<long long> sums(generator_count, 0);
  for (int l : letters_) {
    const std::size_t g = static_cast<std::size_t>(std::abs(l) - 1);
    if (g >= generator_count) throw std::invalid_argument("generator index out of range");
    sums[g] += l > 0 ? 1 : -1;
  }
  return sums;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord w = a;
  for (int l : b.letters_) reduce_into(w.letters_, l);
  return w;
}

std::string FreeWord::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int l : letters_) {
    if (!out.empty()) out += ' ';
    const std::size_t g = static_cast<std::size_t>(std::abs(l) - 1);
    out += g < names.size() ? names[g] : "x" + std::to_string(g + 1);
    if (l < 0) out += "^-1";
  }
  return out;
}

void GroupPresentation::validate() const {
  if (generator_count == 0 && !relators.empty())
    throw std::invalid_argument("relators on zero generators");
  for (const auto& r : relators)
    if (r.max_generator() >= static_cast<int>(generator_count))
      throw std::invalid_argument("relator uses generator " + std::to_string(r.max_generator() + 1) +
                                  " of " + std::to_string(generator_count));
}

std::string GroupPresentation::to_string() const {
  std::string out = "<";
  for (std::size_t g = 0; g < generator_count; ++g) {
    if (g) out += ", ";
    out += g < generator_names.size() ? generator_names[g] : "x" + std::to_string(g + 1);
  }
  out += " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (i) out += ", ";
    out += relators[i].to_string(generator_names);
  }
  return out + ">";
}

intlinalg::AbelianGroup abelianization(const GroupPresentation& p) {
  p.validate();
  intlinalg::IntMatrix m(p.relators.size(), p.generator_count);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    auto sums = p.relators[r].exponent_sums(p.generator_count);
    for (std::size_t g = 0; g < p.generator_count; ++g) m(r, g) = static_cast<long>(sums[g]);
  }
  return intlinalg::cokernel(m);
}

namespace {

// Coset table for HLT enumeration. Column 2g is generator g, 2g+1 its inverse.
class CosetTable {
 public:
  CosetTable(std::size_t gens, std::size_t limit) : cols_(2 * gens), limit_(limit) { add(); }

  std::size_t defined() const { return parent_.size(); }
  bool exhausted() const { return exhausted_; }
  bool alive(int c) const { return parent_[c] == c; }

  static int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
  static int inverse_column(int col) { return col ^ 1; }

  int entry(int c, int col) const { return table_[c * cols_ + col]; }

  // Scan w from c, defining cosets as needed; resolves coincidences.
  void scan_and_fill(int c, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, column(w[i])) >= 0) f = entry(f, column(w[i++]));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, inverse_column(column(w[j]))) >= 0)
        b = entry(b, inverse_column(column(w[j--])));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, column(w[i]), b);
        return;
      }
      int n = add();
      if (n < 0) return;
      set(f, column(w[i]), n);
    }
  }

  // Fills every undefined entry of c with a fresh coset.
  void complete_row(int c) {
    for (std::size_t col = 0; col < cols_ && alive(c); ++col)
      if (entry(c, static_cast<int>(col)) < 0) {
        int n = add();
        if (n < 0) return;
        set(c, static_cast<int>(col), n);
      }
  }

  bool traces_to_self(int c, const std::vector<int>& w) const {
    int f = c;
    for (int l : w) {
      f = entry(f, column(l));
      if (f < 0) return false;
    }
    return f == c;
  }

  std::size_t live_count() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (parent_[c] == static_cast<int>(c)) ++n;
    return n;
  }

  bool row_complete(int c) const {
    for (std::size_t col = 0; col < cols_; ++col)
      if (entry(c, static_cast<int>(col)) < 0) return false;
    return true;
  }

 private:
  int add() {
    if (parent_.size() >= limit_) {
      exhausted_ = true;
      return -1;
    }
    int n = static_cast<int>(parent_.size());
    parent_.push_back(n);
    table_.resize(table_.size() + cols_, -1);
    return n;
  }

  void set(int c, int col, int d) {
    table_[c * cols_ + col] = d;
    table_[d * cols_ + inverse_column(col)] = c;
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int g = queue[q];
      for (std::size_t col = 0; col < cols_; ++col) {
        const int d = entry(g, static_cast<int>(col));
        if (d < 0) continue;
        const int icol = inverse_column(static_cast<int>(col));
        table_[d * cols_ + icol] = -1;
        const int mu = rep(g), nu = rep(d);
        if (entry(mu, static_cast<int>(col)) >= 0) {
          merge(nu, entry(mu, static_cast<int>(col)), queue);
        } else if (entry(nu, icol) >= 0) {
          merge(mu, entry(nu, icol), queue);
        } else {
          set(mu, static_cast<int>(col), nu);
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t limit_;
  bool exhausted_ = false;
  std::vector<int> parent_;
  std::vector<int> table_;
};

}  // namespace

CosetResult todd_coxeter(const GroupPresentation& p, const std::vector<FreeWord>& subgroup,
                         std::size_t limit) {
  p.validate();
  if (limit == 0) throw std::invalid_argument("coset limit must be at least 1");
  for (const auto& w : subgroup)
    if (w.max_generator() >= static_cast<int>(p.generator_count))
      throw std::invalid_argument("subgroup word uses an unknown generator");

  CosetTable t(p.generator_count, limit);
  auto done = [&](CosetTable& tab) { return CosetResult{std::nullopt, tab.defined()}; };

  for (;;) {
    for (const auto& w : subgroup) {
      t.scan_and_fill(0, w.letters());
      if (t.exhausted()) return done(t);
    }
    for (std::size_t c = 0; c < t.defined(); ++c) {
      const int ci = static_cast<int>(c);
      for (const auto& r : p.relators) {
        if (!t.alive(ci)) break;
        t.scan_and_fill(ci, r.letters());
        if (t.exhausted()) return done(t);
      }
      if (t.alive(ci)) t.complete_row(ci);
      if (t.exhausted()) return done(t);
    }
    // Closed table check; a failure sends us around again.
    bool closed = true;
    for (std::size_t c = 0; c < t.defined() && closed; ++c) {
      const int ci = static_cast<int>(c);
      if (!t.alive(ci)) continue;
      if (!t.row_complete(ci)) closed = false;
      for (const auto& r : p.relators)
        if (closed && !t.traces_to_self(ci, r.letters())) closed = false;
    }
    for (const auto& w : subgroup)
      if (closed && !t.traces_to_self(0, w.letters())) closed = false;
    if (closed) return CosetResult{t.live_count(), t.defined()};
  }
}

namespace {

class SchreierRewriter {
 public:
  SchreierRewriter(std::size_t gens, std::vector<int> assignment)
      : gens_(gens), assignment_(std::move(assignment)) {
    for (std::size_t g = 0; g < gens_; ++g)
      if (assignment_[g] == 1) {
        t_ = static_cast<int>(g);
        break;
      }
    for (int c = 0; c < 2; ++c)
      for (std::size_t g = 0; g < gens_; ++g) {
        if (c == 0 && static_cast<int>(g) == t_) {
          index_.push_back(-1);
          continue;
        }
        index_.push_back(static_cast<int>(names_.size()));
        names_.push_back("x" + std::to_string(g + 1) + "_" + std::to_string(c));
      }
  }

  std::size_t generator_count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  FreeWord rewrite(const FreeWord& w, int start) const {
    std::vector<int> out;
    int cur = start;
    for (int l : w.letters()) {
      const int g = std::abs(l) - 1;
      if (l > 0) {
        emit(out, cur, g, 1);
        cur ^= assignment_[g];
      } else {
        cur ^= assignment_[g];
        emit(out, cur, g, -1);
      }
    }
    if (cur != start) throw std::logic_error("rewritten word does not close");
    return FreeWord(out);
  }

 private:
  void emit(std::vector<int>& out, int coset, int g, int sign) const {
    int k = index_[coset * gens_ + g];
    if (k >= 0) out.push_back(sign * (k + 1));
  }

  std::size_t gens_;
  std::vector<int> assignment_;
  int t_ = -1;
  std::vector<int> index_;
  std::vector<std::string> names_;
};

void check_assignment(const GroupPresentation& p, const std::vector<int>& assignment) {
  p.validate();
  if (assignment.size() != p.generator_count)
    throw std::invalid_argument("assignment length differs from generator count");
  bool onto = false;
  for (int a : assignment) {
    if (a != 0 && a != 1) throw std::invalid_argument("assignment values must be 0 or 1");
    onto = onto || a == 1;
  }
  if (!onto) throw std::invalid_argument("assignment is not onto Z/2");
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    long long weight = 0;
    for (int l : p.relators[r].letters()) weight += assignment[std::abs(l) - 1];
    if (weight % 2 != 0)
      throw std::invalid_argument("relator " + std::to_string(r) + " has odd weight");
  }
}

}  // namespace

GroupPresentation reidemeister_schreier(const GroupPresentation& p,
                                        const std::vector<int>& assignment) {
  check_assignment(p, assignment);
  SchreierRewriter rw(p.generator_count, assignment);
  GroupPresentation out;
  out.generator_count = rw.generator_count();
  out.generator_names = rw.names();
  for (const auto& r : p.relators)
    for (int c = 0; c < 2; ++c) out.relators.push_back(rw.rewrite(r, c));
  return out;
}

intlinalg::AbelianGroup branched_double_cover_homology(const GroupPresentation& p,
                                                       const std::vector<int>& meridians) {
  std::vector<int> assignment(p.generator_count, 0);
  for (int m : meridians) {
    if (m < 0 || m >= static_cast<int>(p.generator_count))
      throw std::invalid_argument("meridian index out of range");
    assignment[m] = 1;
  }
  check_assignment(p, assignment);
  SchreierRewriter rw(p.generator_count, assignment);
  GroupPresentation cover;
  cover.generator_count = rw.generator_count();
  for (const auto& r : p.relators)
    for (int c = 0; c < 2; ++c) cover.relators.push_back(rw.rewrite(r, c));
  for (int m : meridians) {
    FreeWord square = FreeWord::generator(m).power(2);
    for (int c = 0; c < 2; ++c) cover.relators.push_back(rw.rewrite(square, c));
  }
  return abelianization(cover);
}

GroupPresentation free_product(const GroupPresentation& a, const GroupPresentation& b) {
  GroupPresentation out;
  out.generator_count = a.generator_count + b.generator_count;
  out.relators = a.relators;
  const int shift = static_cast<int>(a.generator_count);
  for (const auto& r : b.relators) {
    std::vector<int> letters = r.letters();
    for (int& l : letters) l += l > 0 ? shift : -shift;
    out.relators.emplace_back(std::move(letters));
  }
  if (!a.generator_names.empty() || !b.generator_names.empty()) {
    for (std::size_t g = 0; g < a.generator_count; ++g)
      out.generator_names.push_back(g < a.generator_names.size() ? a.generator_names[g]
                                                                 : "x" + std::to_string(g + 1));
    for (std::size_t g = 0; g < b.generator_count; ++g)
      out.generator_names.push_back(g < b.generator_names.size() ? b.generator_names[g] + "'"
                                                                 : "y" + std::to_string(g + 1));
  }
  return out;
}

}  // namespace fillkit::presentations
