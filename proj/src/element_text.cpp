#include <cctype>
#include <limits>

#include "asymlog/errors.hpp"
#include "asymlog/gamma.hpp"

namespace asymlog {

std::string to_string(const GammaElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : a.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = abs(c);
    if (mag != 1) {
      out += to_string(mag);
      out += '*';
    }
    out += 'e';
    out += std::to_string(idx);
    first = false;
  }
  return out;
}

std::string to_string(const ExtendedElement& a) {
  return a.is_infinity() ? std::string("inf") : to_string(a.value());
}

namespace {

class ElementScanner {
 public:
  explicit ElementScanner(std::string_view text) : text_(text) {}

  ExtendedElement parse() {
    skip_ws();
    if (match_word("inf")) return finish(ExtendedElement::infinity());
    if (peek() == '0') {
      // A bare 0 is the identity; 0*e<i> falls through to the sum grammar.
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (at_end()) return GammaElement{};
      pos_ = save;
    }
    return finish(sum());
  }

 private:
  ExtendedElement finish(ExtendedElement value) {
    skip_ws();
    if (!at_end()) fail("unexpected trailing input", {"'+'", "'-'", "end of input"});
    return value;
  }

  GammaElement sum() {
    std::vector<GammaElement::Term> terms;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    terms.push_back(term(negative));
    for (;;) {
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      negative = peek() == '-';
      ++pos_;
      skip_ws();
      terms.push_back(term(negative));
    }
    return GammaElement(std::move(terms));
  }

  GammaElement::Term term(bool negative) {
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = natural();
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        Rational den = natural();
        if (den == 0) fail_at(at, "zero denominator", {});
        coeff /= den;
      }
      skip_ws();
      expect('*');
      skip_ws();
    }
    if (peek() != 'e') fail("expected basis element", {"'e<index>'"});
    ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected index digits", {"digit"});
    const std::size_t at = pos_;
    Index idx = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const Index d = static_cast<Index>(peek() - '0');
      if (idx > (std::numeric_limits<Index>::max() - d) / 10) fail_at(at, "index too large", {});
      idx = idx * 10 + d;
      ++pos_;
    }
    if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      fail("unexpected character after index", {"'+'", "'-'", "end of input"});
    }
    if (negative) coeff = -coeff;
    return {idx, coeff};
  }

  Rational natural() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected number", {"digit"});
    return parse_natural(text_.substr(start, pos_ - start));
  }

  bool match_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) return false;
    const std::size_t after = pos_ + w.size();
    if (after < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_')) {
      return false;
    }
    pos_ = after;
    return true;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'", {std::string("'") + c + "'"});
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::string msg, std::vector<std::string> expected) {
    fail_at(pos_, std::move(msg), std::move(expected));
  }
  [[noreturn]] void fail_at(std::size_t at, std::string msg, std::vector<std::string> expected) {
    throw ParseError(std::move(msg), at, std::move(expected));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExtendedElement parse_extended(std::string_view text) { return ElementScanner(text).parse(); }

GammaElement parse_element(std::string_view text) {
  ExtendedElement e = parse_extended(text);
  if (e.is_infinity()) throw ParseError("inf is not an element of Gamma", 0, {"finite element"});
  return e.value();
}

}  // namespace asymlog
