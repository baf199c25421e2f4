#pragma once

// Exact integer linear algebra: dense matrices over Z, Smith normal form,
// cokernels and finitely generated abelian groups in invariant-factor form.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fillkit {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

namespace intlinalg {

/// Dense row-major integer matrix. Entries are GMP integers, so elimination
/// never overflows.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);
  static IntMatrix diagonal(std::span<const Integer> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  void append_row(std::span<const Integer> row);

  IntMatrix transposed() const;
  IntVector apply(std::span<const Integer> v) const;
  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& a);

struct SnfResult {
  IntMatrix left;       // U, unimodular
  IntMatrix right;      // V, unimodular
  IntMatrix diagonal;   // D = U * A * V
  /// Nonzero non-unit diagonal entries of D, each dividing the next.
  std::vector<Integer> invariant_factors;

  /// All nonzero diagonal entries of D including units, in order.
  std::vector<Integer> nonzero_diagonal() const;
  std::size_t rank() const;
};

/// Smith normal form by smallest-magnitude pivoting. Deterministic.
SnfResult smith_normal_form(const IntMatrix& a);

/// Finitely generated abelian group Z^free_rank + Z/t_1 + ... + Z/t_k with
/// t_i >= 2 and t_i | t_{i+1}. Equality is field equality.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Accepts any list of cyclic orders (0 meaning Z, 1 dropped) and brings
  /// it into invariant-factor form.
  static AbelianGroup from_cyclic_orders(std::size_t free_rank,
                                         std::span<const Integer> orders);
  static AbelianGroup free(std::size_t rank) { return from_cyclic_orders(rank, {}); }
  static AbelianGroup cyclic(const Integer& order);
  /// Parses "0", "Z", "Z^2", "Z/5", "Z + Z/5", "Z^2 + Z/2 + Z/4".
  static AbelianGroup parse(std::string_view text);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }

  AbelianGroup direct_sum(const AbelianGroup& other) const;
  std::string to_string() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b);
  friend std::strong_ordering operator<=>(const AbelianGroup& a, const AbelianGroup& b);

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Z^cols / (row span of a).
AbelianGroup cokernel(const IntMatrix& a);

}  // namespace intlinalg
}  // namespace fillkit
