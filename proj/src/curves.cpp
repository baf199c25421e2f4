#include "fillkit/curves.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace fillkit {

Curve::Curve(std::string b, std::vector<Letter> t) : base(std::move(b)), transport(std::move(t)) {}

bool operator==(const Curve& a, const Curve& b) {
  return a.base == b.base && a.transport == b.transport;
}

bool operator==(const Letter& a, const Letter& b) {
  return a.exponent == b.exponent && a.curve == b.curve;
}

std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
  if (auto c = a.curve <=> b.curve; c != 0) return c;
  return a.exponent <=> b.exponent;
}

std::strong_ordering operator<=>(const Curve& a, const Curve& b) {
  if (auto c = a.base <=> b.base; c != 0) return c;
  return std::lexicographical_compare_three_way(a.transport.begin(), a.transport.end(),
                                                b.transport.begin(), b.transport.end());
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word power(const Word& w, long long k) {
  Word base = k < 0 ? inverse(w) : w;
  Word out;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Curve transported(const Word& h, const Curve& c) {
  Curve out = c;
  out.transport.insert(out.transport.begin(), h.begin(), h.end());
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Word word() {
    Word w;
    skip();
    if (peek() == '1' && (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      return w;
    }
    while (true) {
      skip();
      if (pos_ >= s_.size() || peek() == '}') break;
      w.push_back(letter());
    }
    if (w.empty()) fail("empty word (write 1 for the identity)");
    return w;
  }

  Letter letter() {
    Letter l{curve(), 1};
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      if (peek() == '-' || peek() == '+') ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const char* first = s_.data() + start + (s_[start] == '+' ? 1 : 0);
      auto [ptr, ec] = std::from_chars(first, s_.data() + pos_, l.exponent);
      if (ec != std::errc() || ptr != s_.data() + pos_) fail("bad exponent");
    }
    return l;
  }

  Curve curve() {
    skip();
    if (peek() == '{') {
      ++pos_;
      Word h = word();
      skip();
      if (peek() != '}') fail("expected }");
      ++pos_;
      Curve inner = curve();
      return transported(h, inner);
    }
    std::size_t start = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '-'))
        ++pos_;
    }
    if (start == pos_) fail("expected curve name");
    return Curve(std::string(s_.substr(start, pos_ - start)));
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing text");
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument(why + " at column " + std::to_string(pos_ + 1) + " in '" +
                                std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Curve parse_curve(std::string_view text) {
  Parser p(text);
  Curve c = p.curve();
  p.finish();
  return c;
}

Word parse_word(std::string_view text) {
  Parser p(text);
  Word w = p.word();
  p.finish();
  return w;
}

std::string to_string(const Curve& c) {
  if (c.transport.empty()) return c.base;
  return "{" + to_string(c.transport) + "}" + c.base;
}

std::string to_string(const Letter& l) {
  std::string s = to_string(l.curve);
  if (l.exponent != 1) s += "^" + std::to_string(l.exponent);
  return s;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += to_string(l);
  }
  return out;
}

}  // namespace fillkit
