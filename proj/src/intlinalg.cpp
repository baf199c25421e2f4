#include "fillkit/intlinalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fillkit::intlinalg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void IntMatrix::append_row(std::span<const Integer> row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::apply(std::span<const Integer> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  IntVector out(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in product");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("dimension mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<Integer> SnfResult::nonzero_diagonal() const {
  std::vector<Integer> out;
  const std::size_t k = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < k; ++i)
    if (diagonal(i, i) != 0) out.push_back(diagonal(i, i));
  return out;
}

std::size_t SnfResult::rank() const { return nonzero_diagonal().size(); }

namespace {

// Quotient rounded to nearest, so the remainder is at most |b|/2.
Integer nearest_quotient(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  Integer r2 = 2 * abs(r);
  if (r2 > abs(b)) q += (sgn(r) == sgn(b)) ? 1 : -1;
  return q;
}

// Position of the smallest nonzero |entry| in the block [t.., t..].
bool smallest_entry(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t r = t; r < d.rows(); ++r)
    for (std::size_t c = t; c < d.cols(); ++c) {
      if (d(r, c) == 0) continue;
      Integer mag = abs(d(r, c));
      if (!found || mag < best) {
        best = mag;
        pr = r;
        pc = c;
        found = true;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool any = true;
    // Each pass either finishes the pivot or finds a strictly smaller one.
    // Re-choosing the global minimum every pass keeps entries from blowing up.
    for (;;) {
      std::size_t pr = 0, pc = 0;
      if (!smallest_entry(d, t, pr, pc)) {
        any = false;
        break;
      }
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = nearest_quotient(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = nearest_quotient(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the remaining block
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (!any) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }

  SnfResult res{std::move(u), std::move(v), std::move(d), {}};
  for (const Integer& x : res.nonzero_diagonal())
    if (x != 1) res.invariant_factors.push_back(x);
  return res;
}

AbelianGroup AbelianGroup::from_cyclic_orders(std::size_t free_rank,
                                             std::span<const Integer> orders) {
  AbelianGroup g;
  g.free_rank_ = free_rank;
  std::vector<Integer> finite;
  for (const Integer& o : orders) {
    if (o == 0)
      ++g.free_rank_;
    else if (abs(o) != 1)
      finite.push_back(abs(o));
  }
  if (!finite.empty()) {
    auto snf = smith_normal_form(IntMatrix::diagonal(finite));
    g.torsion_ = snf.invariant_factors;
  }
  return g;
}

AbelianGroup AbelianGroup::cyclic(const Integer& order) {
  const Integer orders[] = {order};
  return from_cyclic_orders(0, orders);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("bad abelian group: " + std::string(whole));
  return Integer(std::string(s));
}

}  // namespace

AbelianGroup AbelianGroup::parse(std::string_view text) {
  std::size_t rank = 0;
  std::vector<Integer> orders;
  std::string_view rest = text;
  bool any = false;
  while (true) {
    std::size_t plus = rest.find('+');
    std::string_view term = trim(rest.substr(0, plus));
    if (term.empty()) throw std::invalid_argument("bad abelian group: " + std::string(text));
    any = true;
    if (term == "0" || term == "1") {
      // trivial summand
    } else if (term == "Z") {
      ++rank;
    } else if (term.starts_with("Z^")) {
      rank += parse_integer(term.substr(2), text).get_ui();
    } else if (term.starts_with("Z/")) {
      orders.push_back(parse_integer(term.substr(2), text));
      if (orders.back() == 0) throw std::invalid_argument("bad abelian group: " + std::string(text));
    } else {
      throw std::invalid_argument("bad abelian group: " + std::string(text));
    }
    if (plus == std::string_view::npos) break;
    rest = rest.substr(plus + 1);
  }
  if (!any) throw std::invalid_argument("empty abelian group text");
  return from_cyclic_orders(rank, orders);
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const {
  std::vector<Integer> orders = torsion_;
  orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
  return from_cyclic_orders(free_rank_ + other.free_rank_, orders);
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += " + ";
    out += s;
  };
  if (free_rank_ == 1) add("Z");
  if (free_rank_ > 1) add("Z^" + std::to_string(free_rank_));
  for (const Integer& t : torsion_) add("Z/" + t.get_str());
  return out;
}

bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
  return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
}

std::strong_ordering operator<=>(const AbelianGroup& a, const AbelianGroup& b) {
  if (auto c = a.free_rank_ <=> b.free_rank_; c != 0) return c;
  if (auto c = a.torsion_.size() <=> b.torsion_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.torsion_.size(); ++i) {
    int c = cmp(a.torsion_[i], b.torsion_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

AbelianGroup cokernel(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  return AbelianGroup::from_cyclic_orders(a.cols() - snf.rank(), snf.invariant_factors);
}

}  // namespace fillkit::intlinalg
