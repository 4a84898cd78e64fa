#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <vector>

#include "asymlog/errors.hpp"
#include "asymlog/logic.hpp"

namespace asymlog::logic {
namespace {

enum class Tok {
  Number,
  Ident,
  Basis,
  Bracket,
  KwPsi,
  KwS,
  KwP,
  KwInt,
  KwInf,
  LParen,
  RParen,
  Plus,
  Minus,
  Slash,
  Star,
  Equal,
  Less,
  Bang,
  Amp,
  Pipe,
  End,
};

struct Token {
  Tok kind;
  std::string text;  // digits, identifier, basis index, or bracket contents
  std::size_t pos;
};

const std::string kQuantifierMessage =
    "quantifiers are not supported: only quantifier-free formulas are evaluated "
    "(quantifier elimination is outside this tool's scope)";

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_basis_name(std::string_view w) {
  return w.size() >= 2 && w[0] == 'e' &&
         std::all_of(w.begin() + 1, w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::vector<Token> lex(std::string_view text, const ParseOptions& opts) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::Number, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (ident_start(c)) {
      while (i < text.size() && ident_char(text[i])) ++i;
      std::string w(text.substr(start, i - start));
      if (w == "forall" || w == "exists") throw ParseError(kQuantifierMessage, start);
      if (w == "psi") {
        out.push_back({Tok::KwPsi, w, start});
      } else if (w == "s") {
        out.push_back({Tok::KwS, w, start});
      } else if (w == "p") {
        out.push_back({Tok::KwP, w, start});
      } else if (w == "int") {
        if (opts.strict_llog) {
          throw ParseError("'int' is a language extension, not a symbol of L_log (strict mode)", start);
        }
        out.push_back({Tok::KwInt, w, start});
      } else if (w == "inf") {
        out.push_back({Tok::KwInf, w, start});
      } else if (is_basis_name(w)) {
        out.push_back({Tok::Basis, w.substr(1), start});
      } else {
        out.push_back({Tok::Ident, w, start});
      }
      continue;
    }
    // U+2200 and U+2203 in UTF-8.
    if (text.substr(i, 3) == "\xE2\x88\x80" || text.substr(i, 3) == "\xE2\x88\x83") {
      throw ParseError(kQuantifierMessage, start);
    }
    if (c == '[') {
      const std::size_t close = text.find(']', i);
      if (close == std::string_view::npos) throw ParseError("unterminated element literal", start, {"']'"});
      out.push_back({Tok::Bracket, std::string(text.substr(i + 1, close - i - 1)), start});
      i = close + 1;
      continue;
    }
    Tok kind;
    switch (c) {
      case '(':
        kind = Tok::LParen;
        break;
      case ')':
        kind = Tok::RParen;
        break;
      case '+':
        kind = Tok::Plus;
        break;
      case '-':
        kind = Tok::Minus;
        break;
      case '/':
        kind = Tok::Slash;
        break;
      case '*':
        kind = Tok::Star;
        break;
      case '=':
        kind = Tok::Equal;
        break;
      case '<':
        kind = Tok::Less;
        break;
      case '!':
        kind = Tok::Bang;
        break;
      case '&':
        kind = Tok::Amp;
        break;
      case '|':
        kind = Tok::Pipe;
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

const std::vector<std::string> kTermStart = {"'('", "'-'", "'['", "element literal", "function", "variable"};

// Recursive descent with backtracking at formula atoms. Recoverable failures
// are thrown as ParseError; at a choice point the alternative that advanced
// furthest supplies the reported error.
class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  TermPtr whole_term() {
    TermPtr t = term();
    expect_end();
    return t;
  }

  FormulaPtr whole_formula() {
    FormulaPtr f = disjunction();
    expect_end();
    return f;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }
  bool at_next(Tok k, std::size_t ahead = 1) const {
    return pos_ + ahead < toks_.size() && toks_[pos_ + ahead].kind == k;
  }

  [[noreturn]] void fail(std::string msg, std::vector<std::string> expected) const {
    throw ParseError(std::move(msg), cur().pos, std::move(expected));
  }

  void expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what, {what});
    ++pos_;
  }

  void expect_end() {
    if (!at(Tok::End)) fail("unexpected token '" + cur().text + "'", {"end of input"});
  }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (at(Tok::Pipe)) {
      ++pos_;
      f = lor(f, conjunction());
    }
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = negation();
    while (at(Tok::Amp)) {
      ++pos_;
      f = land(f, negation());
    }
    return f;
  }

  FormulaPtr negation() {
    if (at(Tok::Bang)) {
      ++pos_;
      return lnot(negation());
    }
    return atom();
  }

  FormulaPtr atom() {
    const std::size_t save = pos_;
    std::optional<ParseError> first;
    try {
      return comparison();
    } catch (const ParseError& e) {
      if (!at_token(save, Tok::LParen)) throw;
      first = e;
    }
    pos_ = save + 1;
    try {
      FormulaPtr f = disjunction();
      expect(Tok::RParen, "')'");
      return f;
    } catch (const ParseError& e) {
      throw e.position() >= first->position() ? e : *first;
    }
  }

  bool at_token(std::size_t index, Tok k) const { return toks_[index].kind == k; }

  FormulaPtr comparison() {
    TermPtr lhs = term();
    if (at(Tok::Equal)) {
      ++pos_;
      return eq(lhs, term());
    }
    if (at(Tok::Less)) {
      ++pos_;
      return lt(lhs, term());
    }
    fail("expected comparison", {"'='", "'<'"});
  }

  TermPtr term() {
    TermPtr t = unary();
    for (;;) {
      if (at(Tok::Plus)) {
        ++pos_;
        t = add(t, unary());
      } else if (at(Tok::Minus)) {
        ++pos_;
        t = add(t, neg(unary()));
      } else {
        return t;
      }
    }
  }

  TermPtr unary() {
    if (at(Tok::Minus)) {
      ++pos_;
      return neg(unary());
    }
    return postfix();
  }

  TermPtr postfix() {
    TermPtr t = primary();
    while (at(Tok::Slash)) {
      ++pos_;
      if (!at(Tok::Number)) fail("expected divisor", {"positive integer"});
      const Token& n = cur();
      if (n.text.size() > 19 || std::stoull(n.text) == 0) {
        fail("divisor must be a positive 64-bit integer", {"positive integer"});
      }
      t = div(t, std::stoull(n.text));
      ++pos_;
    }
    return t;
  }

  TermPtr primary() {
    const Token& tok = cur();
    switch (tok.kind) {
      case Tok::LParen: {
        ++pos_;
        TermPtr t = term();
        expect(Tok::RParen, "')'");
        return t;
      }
      case Tok::KwPsi:
        return application(Function::Psi);
      case Tok::KwS:
        return application(Function::Successor);
      case Tok::KwP:
        return application(Function::Predecessor);
      case Tok::KwInt:
        return application(Function::Integral);
      case Tok::KwInf:
        ++pos_;
        return lit(ExtendedElement::infinity());
      case Tok::Basis:
        return lit(basis(1));
      case Tok::Number:
        return number_literal();
      case Tok::Bracket: {
        ++pos_;
        try {
          return lit(parse_extended(tok.text));
        } catch (const ParseError& e) {
          throw ParseError(e.detail(), tok.pos + 1 + e.position(), e.expected());
        }
      }
      case Tok::Ident:
        ++pos_;
        return var(tok.text);
      default:
        fail(tok.kind == Tok::End ? "unexpected end of input" : "unexpected token '" + tok.text + "'",
             kTermStart);
    }
  }

  TermPtr application(Function f) {
    ++pos_;
    expect(Tok::LParen, "'('");
    TermPtr arg = term();
    expect(Tok::RParen, "')'");
    return apply(f, arg);
  }

  // Consumes a Basis token and returns coeff * e_index.
  GammaElement basis(const Rational& coeff) {
    const Token& tok = cur();
    if (tok.text.size() > 20) fail("index too large", {});
    try {
      const Index idx = std::stoull(tok.text);
      ++pos_;
      return GammaElement::basis(idx, coeff);
    } catch (const std::out_of_range&) {
      fail("index too large", {});
    }
  }

  // `0`, `p*e_i` or `p/q*e_i`. A bare nonzero number is not a term.
  TermPtr number_literal() {
    const Token& num = cur();
    Rational coeff = parse_natural(num.text);
    if (at_next(Tok::Slash) && at_next(Tok::Number, 2) && at_next(Tok::Star, 3)) {
      const Token& den = toks_[pos_ + 2];
      Rational d = parse_natural(den.text);
      if (d == 0) throw ParseError("zero denominator", den.pos);
      coeff /= d;
      pos_ += 4;
    } else if (at_next(Tok::Star)) {
      pos_ += 2;
    } else if (coeff == 0) {
      ++pos_;
      return lit(GammaElement{});
    } else {
      ++pos_;
      fail("a coefficient must multiply a basis element", {"'*'"});
    }
    if (!at(Tok::Basis)) fail("expected basis element", {"'e<index>'"});
    return lit(basis(coeff));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(std::string_view text, const ParseOptions& opts) {
  return Parser(lex(text, opts)).whole_term();
}

FormulaPtr parse_formula(std::string_view text, const ParseOptions& opts) {
  return Parser(lex(text, opts)).whole_formula();
}

}  // namespace asymlog::logic
