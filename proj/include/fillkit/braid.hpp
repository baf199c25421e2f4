#pragma once

// Artin braid groups: words, the faithful action on the free group,
// band (quasipositive) factorizations and their braided surfaces.

#include "fillkit/presentations.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fillkit::braid {

using presentations::FreeWord;

/// Letters are +i / -i for sigma_i^{+1} / sigma_i^{-1}, 1 <= i < strands.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> l);

  void validate() const;
  BraidWord inverse() const;
  BraidWord reduced() const;  // cancels adjacent sigma sigma^-1
  std::string to_string() const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Images of x_1..x_n. Composition is functorial: action(uv) = action(u) o action(v).
std::vector<FreeWord> artin_action(const BraidWord& b);

bool braid_equal(const BraidWord& a, const BraidWord& b);

/// Underlying permutation p with p[k] the image of strand k (0-based);
/// perm(uv) = perm(u) o perm(v).
std::vector<int> permutation(const BraidWord& b);

/// The half-twist w sigma_i w^-1.
struct Band {
  BraidWord w;
  int i = 1;
  BraidWord as_word() const;
  friend bool operator==(const Band&, const Band&) = default;
};

struct BandFactorization {
  int strands = 2;
  std::vector<Band> bands;

  void validate() const;
  BraidWord product() const;
  std::string to_string() const;
  friend bool operator==(const BandFactorization&, const BandFactorization&) = default;
};

struct SurfaceInvariants {
  long long euler = 0;
  std::size_t surface_components = 0;
  std::size_t boundary_link_components = 0;
  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

SurfaceInvariants surface_invariants(const BandFactorization& b);

struct ComplementPresentation {
  presentations::GroupPresentation presentation;
  std::vector<int> meridians;
};

/// Meridians x_1..x_n with one relator phi_w(x_i) phi_w(x_{i+1})^-1 per band.
ComplementPresentation complement_presentation(const BandFactorization& b);

enum class Direction { forward, backward };

/// Forward: (B1, B2) -> (B2, B2^-1 B1 B2). Backward: (B1, B2) -> (B1 B2 B1^-1, B1).
/// Position is 1-based and names the left band of the pair.
BandFactorization hurwitz_move(const BandFactorization& b, std::size_t position, Direction d);

/// Appends k copies of the band (empty word, generator).
BandFactorization append_positive_generator_powers(const BandFactorization& b, long long k,
                                                   int generator = 2);

}  // namespace fillkit::braid
