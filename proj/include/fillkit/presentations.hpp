#pragma once

// Finitely presented groups: free words, abelianization, coset enumeration
// and index-2 Reidemeister-Schreier rewriting.

#include "fillkit/intlinalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fillkit::presentations {

/// Letter g >= 0 with sign s is stored as s*(g+1).
class FreeWord {
 public:
  FreeWord() = default;
  /// Builds a word from signed letters, reducing freely.
  explicit FreeWord(std::vector<int> letters);

  static FreeWord generator(int g, int sign = 1);
  static FreeWord from_indices(std::initializer_list<int> letters);

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int max_generator() const;

  FreeWord inverse() const;
  FreeWord power(long long k) const;
  FreeWord conjugated_by(const FreeWord& u) const;  // u * w * u^-1
  /// Replaces generator g by images[g].
  FreeWord substitute(const std::vector<FreeWord>& images) const;
  /// Exponent sum per generator.
  std::vector<long long> exponent_sums(std::size_t generator_count) const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

  /// Lowercase names x1, x2 ... unless names are given; inverse as name^-1.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::vector<int> letters_;
};

struct GroupPresentation {
  std::size_t generator_count = 0;
  std::vector<FreeWord> relators;
  std::vector<std::string> generator_names;  // optional

  void validate() const;  // throws std::invalid_argument
  std::string to_string() const;
};

intlinalg::AbelianGroup abelianization(const GroupPresentation& p);

struct CosetResult {
  std::optional<std::size_t> index;  // empty when the budget ran out
  std::size_t cosets_defined = 0;
};

/// HLT coset enumeration with coincidence processing. The budget bounds the
/// total number of cosets ever defined; exhaustion is reported, never a
/// wrong index.
CosetResult todd_coxeter(const GroupPresentation& p, const std::vector<FreeWord>& subgroup,
                         std::size_t limit);

/// Kernel of the map onto Z/2 given by assignment[g] in {0,1}, presented on
/// Schreier generators for the transversal {1, t} with t the first
/// generator sent to 1. Throws if the map is not onto or not well defined.
GroupPresentation reidemeister_schreier(const GroupPresentation& p,
                                        const std::vector<int>& assignment);

/// H_1 of the double cover branched along the meridians listed.
intlinalg::AbelianGroup branched_double_cover_homology(const GroupPresentation& p,
                                                       const std::vector<int>& meridians);

/// Free product: generators of b are shifted past those of a.
GroupPresentation free_product(const GroupPresentation& a, const GroupPresentation& b);

}  // namespace fillkit::presentations
