#pragma once

// Mapping-class words: homology representation, the free-group action where
// one is registered, the Gamma_1^1 -> B_3 dictionary and a sound
// homology-based separator.

#include "fillkit/braid.hpp"
#include "fillkit/surface.hpp"

#include <string>
#include <vector>

namespace fillkit::mcg {

using presentations::FreeWord;
using surface::Surface;

/// A word bound to its surface.
struct MappingClassWord {
  std::string surface = "S1_3";
  Word letters;
};

intlinalg::IntMatrix homology_rep(const Surface& s, const Word& w);

enum class Distinctness { distinct, inconclusive };
std::string to_string(Distinctness d);

/// Distinct when the homology matrices differ, or when the free-group
/// actions differ on surfaces that carry one. Never asserts equality.
Distinctness necessary_distinct(const Surface& s, const Word& a, const Word& b);

/// Automorphism of pi_1 (images of the free generators), functorial in w.
std::vector<FreeWord> pi1_action(const Surface& s, const Word& w);
/// Representative loop of a curve, up to conjugacy.
FreeWord curve_word(const Surface& s, const Curve& c);

/// t_x -> s1, t_y -> s2, t_d -> (s1 s2)^6; transports expanded by conjugation.
braid::BraidWord to_b3(const Surface& s, const Word& w);

/// Images of base twists in B_n under a dictionary; transports become
/// conjugators. Throws naming the first letter outside the dictionary.
braid::BraidWord to_braid(const Surface& s, const Word& w,
                          const std::vector<std::pair<std::string, braid::BraidWord>>& dictionary,
                          int strands);

}  // namespace fillkit::mcg
