#pragma once

// Hyperelliptic descent from symmetric factorizations on S1_2 to band
// factorizations in B_4. The chain ha1, hb2, ha2 goes to sigma_1, sigma_2,
// sigma_3; a transported curve {h}c becomes the band (image of h, index of c).

#include "fillkit/braid.hpp"
#include "fillkit/factorization.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fillkit::bridge {

/// (base curve, generator index) pairs.
const std::vector<std::pair<std::string, int>>& dictionary();

/// Throws std::invalid_argument naming the first factor (1-based) outside
/// the dictionary.
braid::BandFactorization descend(const factorization::PositiveFactorization& f);

/// Inverse of descend on dictionary images.
factorization::PositiveFactorization lift(const braid::BandFactorization& b);

/// Braid image of a word on S1_2.
braid::BraidWord descend_word(const Word& w);

}  // namespace fillkit::bridge
