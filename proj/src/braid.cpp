#include "fillkit/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace fillkit::braid {

BraidWord::BraidWord(int n, std::vector<int> l) : strands(n), letters(std::move(l)) { validate(); }

void BraidWord::validate() const {
  if (strands < 2) throw std::invalid_argument("braid needs at least 2 strands");
  for (int l : letters)
    if (l == 0 || std::abs(l) >= strands)
      throw std::invalid_argument("generator index " + std::to_string(l) + " out of range for B" +
                                  std::to_string(strands));
}

BraidWord BraidWord::inverse() const {
  BraidWord out;
  out.strands = strands;
  out.letters.assign(letters.rbegin(), letters.rend());
  for (int& l : out.letters) l = -l;
  return out;
}

BraidWord BraidWord::reduced() const {
  BraidWord out;
  out.strands = strands;
  for (int l : letters) {
    if (!out.letters.empty() && out.letters.back() == -l)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

std::string BraidWord::to_string() const {
  if (letters.empty()) return "1";
  std::string out;
  for (int l : letters) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand counts differ");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out.reduced();
}

std::vector<FreeWord> artin_action(const BraidWord& b) {
  b.validate();
  const int n = b.strands;
  std::vector<FreeWord> images;
  for (int j = 0; j < n; ++j) images.push_back(FreeWord::generator(j));
  for (int s : b.letters) {
    const int i = std::abs(s) - 1;  // acts on x_i, x_{i+1} (0-based i, i+1)
    std::vector<FreeWord> next = images;
    if (s > 0) {
      next[i] = (FreeWord::generator(i) * FreeWord::generator(i + 1) * FreeWord::generator(i, -1))
                    .substitute(images);
      next[i + 1] = images[i];
    } else {
      next[i] = images[i + 1];
      next[i + 1] =
          (FreeWord::generator(i + 1, -1) * FreeWord::generator(i) * FreeWord::generator(i + 1))
              .substitute(images);
    }
    images = std::move(next);
  }
  return images;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand counts differ");
  return artin_action(a) == artin_action(b);
}

std::vector<int> permutation(const BraidWord& b) {
  std::vector<int> p(b.strands);
  std::iota(p.begin(), p.end(), 0);
  for (int s : b.letters) {
    const int i = std::abs(s) - 1;
    std::swap(p[i], p[i + 1]);  // p o (i i+1)
  }
  return p;
}

BraidWord Band::as_word() const {
  BraidWord g(w.strands, {i});
  return w * g * w.inverse();
}

void BandFactorization::validate() const {
  if (strands < 2) throw std::invalid_argument("braid needs at least 2 strands");
  for (const auto& b : bands) {
    if (b.w.strands != strands) throw std::invalid_argument("band word on wrong strand count");
    b.w.validate();
    if (b.i < 1 || b.i >= strands) throw std::invalid_argument("band index out of range");
  }
}

BraidWord BandFactorization::product() const {
  validate();
  BraidWord out;
  out.strands = strands;
  for (const auto& b : bands) out = out * b.as_word();
  return out;
}

std::string BandFactorization::to_string() const {
  std::string out = "B" + std::to_string(strands) + " [";
  for (std::size_t k = 0; k < bands.size(); ++k) {
    if (k) out += ", ";
    out += "(" + bands[k].w.to_string() + "; " + std::to_string(bands[k].i) + ")";
  }
  return out + "]";
}

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

SurfaceInvariants surface_invariants(const BandFactorization& b) {
  b.validate();
  SurfaceInvariants inv;
  inv.euler = static_cast<long long>(b.strands) - static_cast<long long>(b.bands.size());

  std::vector<int> parent(b.strands);
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t components = static_cast<std::size_t>(b.strands);
  for (const auto& band : b.bands) {
    auto p = permutation(band.w);
    int u = find(parent, p[band.i - 1]), v = find(parent, p[band.i]);
    if (u != v) {
      parent[u] = v;
      --components;
    }
  }
  inv.surface_components = components;

  auto perm = permutation(b.product());
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (seen[k]) continue;
    ++inv.boundary_link_components;
    for (std::size_t j = k; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return inv;
}

ComplementPresentation complement_presentation(const BandFactorization& b) {
  b.validate();
  ComplementPresentation out;
  out.presentation.generator_count = static_cast<std::size_t>(b.strands);
  for (int j = 0; j < b.strands; ++j) {
    out.presentation.generator_names.push_back("x" + std::to_string(j + 1));
    out.meridians.push_back(j);
  }
  for (const auto& band : b.bands) {
    auto images = artin_action(band.w);
    out.presentation.relators.push_back(images[band.i - 1] * images[band.i].inverse());
  }
  return out;
}

BandFactorization hurwitz_move(const BandFactorization& b, std::size_t position, Direction d) {
  b.validate();
  if (position < 1 || position >= b.bands.size())
    throw std::out_of_range("hurwitz position " + std::to_string(position) + " out of range");
  BandFactorization out = b;
  const Band& left = b.bands[position - 1];
  const Band& right = b.bands[position];
  if (d == Direction::forward) {
    out.bands[position - 1] = right;
    out.bands[position] = Band{right.as_word().inverse() * left.w, left.i};
  } else {
    out.bands[position - 1] = Band{left.as_word() * right.w, right.i};
    out.bands[position] = left;
  }
  return out;
}

BandFactorization append_positive_generator_powers(const BandFactorization& b, long long k,
                                                   int generator) {
  if (k < 0) throw std::invalid_argument("power count must be nonnegative");
  BandFactorization out = b;
  for (long long j = 0; j < k; ++j) out.bands.push_back(Band{BraidWord(b.strands, {}), generator});
  out.validate();
  return out;
}

}  // namespace fillkit::braid
