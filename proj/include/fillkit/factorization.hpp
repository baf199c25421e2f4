#pragma once

// Positive factorizations: Hurwitz moves, global and partial conjugation,
// the P_n family, capping, filling invariants and the planar enumeration.

#include "fillkit/derivation.hpp"
#include "fillkit/intlinalg.hpp"
#include "fillkit/presentations.hpp"
#include "fillkit/surface.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fillkit::factorization {

using intlinalg::AbelianGroup;
using surface::SurfaceModel;

/// Each factor is one positive twist; the product acts leftmost last.
struct PositiveFactorization {
  std::string surface = "S1_3";
  std::vector<Curve> factors;

  Word as_word() const;
  std::string to_string() const;
  /// Text form "S1_3: b1, {a1^-2}b2, ..." (exact round trip).
  static PositiveFactorization parse(const std::string& text);
  friend bool operator==(const PositiveFactorization&, const PositiveFactorization&) = default;
};

/// Factors normalized on their surface.
PositiveFactorization normalized(const PositiveFactorization& f, int sign = 1);

/// P_n with the scripts proving its product is phi = b1 b2 b3 b2. Scripts are
/// ordered so each may use the ones before it as lemmas.
struct CertifiedFactorization {
  PositiveFactorization factorization;
  std::vector<derivation::DerivationScript> scripts;
};

/// Verifies the scripts in order, registering each as a lemma; returns the
/// last result (or the first failure).
derivation::VerifyResult verify_chain(const std::vector<derivation::DerivationScript>& scripts,
                                      int sign = 1);

PositiveFactorization phi();
CertifiedFactorization generate_Pn(long long n);

enum class Direction { forward, backward };

/// Position is 1-based and names the left factor of the pair.
/// Forward (c, d) -> (d, {d^-1}c); backward (c, d) -> ({c}d, c).
PositiveFactorization hurwitz_move(const PositiveFactorization& f, std::size_t position,
                                   Direction d);
/// One-step script proving the move preserves the product.
derivation::DerivationScript hurwitz_script(const PositiveFactorization& f, std::size_t position,
                                            Direction d);

/// Every factor c becomes {h}c.
PositiveFactorization global_conjugate(const PositiveFactorization& f, const Word& h);

/// Factors first..last (1-based, inclusive) become {h}c. The certificate must
/// prove h X = X h for X the product of those factors; lib supplies lemmas it
/// cites. Throws std::invalid_argument when it does not verify.
PositiveFactorization partial_conjugate(const PositiveFactorization& f, std::size_t first,
                                        std::size_t last, const Word& h,
                                        const derivation::DerivationScript& certificate,
                                        const derivation::RelationLibrary& lib);

struct FillingInvariants {
  long long euler = 0;
  AbelianGroup h1;
  std::optional<presentations::GroupPresentation> pi1;
  SurfaceModel fiber;
  std::size_t twist_count = 0;
};

/// Rows are the factors' homology classes.
intlinalg::IntMatrix relation_matrix(const PositiveFactorization& f, int sign = 1);
FillingInvariants filling_invariants(const PositiveFactorization& f, int sign = 1);

/// Throws if a factor twists along the capped boundary.
PositiveFactorization cap_factorization(const PositiveFactorization& f, int boundary,
                                        int sign = 1);

/// Cokernels of all matrices with at most l_max rows drawn from
/// {-1,0,1}^n minus the zero row. Throws std::length_error when the number of
/// row multisets exceeds budget.
std::set<AbelianGroup> enumerate_planar_homologies(int n, int l_max,
                                                   std::size_t budget = 1'000'000);
/// Number of row multisets the enumeration would visit.
std::size_t planar_matrix_count(int n, int l_max);

/// Boundary connected sum of fillings.
FillingInvariants combine_disjoint(const FillingInvariants& a, const FillingInvariants& b);
FillingInvariants annulus_invariants();
FillingInvariants disk_invariants();

}  // namespace fillkit::factorization
