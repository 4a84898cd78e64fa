#pragma once

// Terms and quantifier-free formulas of L_log = {0, +, -, <, psi, inf, s, p,
// delta_n}, plus the integral as an optional extension symbol.
//
// Concrete syntax:
//
//   formula := conj ('|' conj)*
//   conj    := neg ('&' neg)*
//   neg     := '!' neg | term ('=' | '<') term | '(' formula ')'
//   term    := unary (('+' | '-') unary)*
//   unary   := '-' unary | postfix
//   postfix := primary ('/' n)*                     n >= 1, division by n
//   primary := '(' term ')' | fn '(' term ')' | literal | '[' element ']' | ident
//   fn      := 'psi' | 's' | 'p' | 'int'
//   literal := '0' | 'inf' | [p ['/' q] '*'] 'e' index
//
// `a - b` is sugar for a + (-b). A bracketed literal holds any element in the
// element text format and is a single AST leaf.

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "asymlog/gamma.hpp"

namespace asymlog::logic {

enum class Function { Psi, Successor, Predecessor, Integral };

std::string_view function_name(Function f);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Literal {
  ExtendedElement value;
};
struct Variable {
  std::string name;
};
struct Sum {
  TermPtr lhs, rhs;
};
struct Negation {
  TermPtr operand;
};
struct Division {
  TermPtr operand;
  std::uint64_t divisor = 1;
};
struct Application {
  Function function;
  TermPtr argument;
};

struct Term {
  std::variant<Literal, Variable, Sum, Negation, Division, Application> node;
};

bool operator==(const Term& a, const Term& b);

TermPtr lit(ExtendedElement value);
TermPtr var(std::string name);
TermPtr add(TermPtr lhs, TermPtr rhs);
TermPtr neg(TermPtr operand);
/// Throws DomainError when divisor is 0.
TermPtr div(TermPtr operand, std::uint64_t divisor);
TermPtr apply(Function f, TermPtr argument);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Equal {
  TermPtr lhs, rhs;
};
struct Less {
  TermPtr lhs, rhs;
};
struct Not {
  FormulaPtr operand;
};
struct And {
  FormulaPtr lhs, rhs;
};
struct Or {
  FormulaPtr lhs, rhs;
};

struct Formula {
  std::variant<Equal, Less, Not, And, Or> node;
};

bool operator==(const Formula& a, const Formula& b);

FormulaPtr eq(TermPtr lhs, TermPtr rhs);
FormulaPtr lt(TermPtr lhs, TermPtr rhs);
FormulaPtr lnot(FormulaPtr operand);
FormulaPtr land(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr lor(FormulaPtr lhs, FormulaPtr rhs);

struct ParseOptions {
  /// Reject `int`, which is not a symbol of L_log.
  bool strict_llog = false;
};

TermPtr parse_term(std::string_view text, const ParseOptions& opts = {});
FormulaPtr parse_formula(std::string_view text, const ParseOptions& opts = {});

std::string format_term(const Term& t);
std::string format_formula(const Formula& f);

using Assignment = std::map<std::string, ExtendedElement, std::less<>>;

std::set<std::string> free_variables(const Term& t);
std::set<std::string> free_variables(const Formula& f);

/// Throws UnboundVariable when a free variable is missing from env.
ExtendedElement eval_term(const Term& t, const Assignment& env = {});
bool eval_formula(const Formula& f, const Assignment& env = {});

}  // namespace asymlog::logic
