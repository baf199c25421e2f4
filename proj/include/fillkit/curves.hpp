#pragma once

// Curves and mapping-class words as plain syntax trees.
//
// A curve is a named base curve pushed forward by a transport word, written
// {h}c for h(c). A word is a sequence of twist letters c^e, leftmost factor
// acting last. Text forms:
//   word   := "1" | letter (" " letter)*
//   letter := curve ("^" int)?
//   curve  := ident | "{" word "}" curve

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace fillkit {

struct Letter;

struct Curve {
  std::string base;
  std::vector<Letter> transport;

  Curve() = default;
  explicit Curve(std::string b) : base(std::move(b)) {}
  Curve(std::string b, std::vector<Letter> t);

  bool transported() const noexcept { return !transport.empty(); }
};

struct Letter {
  Curve curve;
  long long exponent = 1;
};

using Word = std::vector<Letter>;

bool operator==(const Curve& a, const Curve& b);
bool operator==(const Letter& a, const Letter& b);
std::strong_ordering operator<=>(const Curve& a, const Curve& b);
std::strong_ordering operator<=>(const Letter& a, const Letter& b);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, long long k);
/// {h}c with h prepended to c's transport.
Curve transported(const Word& h, const Curve& c);

Curve parse_curve(std::string_view text);
Word parse_word(std::string_view text);

std::string to_string(const Curve& c);
std::string to_string(const Letter& l);
std::string to_string(const Word& w);

}  // namespace fillkit
