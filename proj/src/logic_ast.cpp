#include <sstream>

#include "asymlog/errors.hpp"
#include "asymlog/logic.hpp"

namespace asymlog::logic {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string_view function_name(Function f) {
  switch (f) {
    case Function::Psi:
      return "psi";
    case Function::Successor:
      return "s";
    case Function::Predecessor:
      return "p";
    case Function::Integral:
      return "int";
  }
  return "?";
}

namespace {

bool same(const TermPtr& a, const TermPtr& b) { return a == b || (a && b && *a == *b); }
bool same(const FormulaPtr& a, const FormulaPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace

bool operator==(const Term& a, const Term& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Literal& x) { return x.value == std::get<Literal>(b.node).value; },
          [&](const Variable& x) { return x.name == std::get<Variable>(b.node).name; },
          [&](const Sum& x) {
            const auto& y = std::get<Sum>(b.node);
            return same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
          },
          [&](const Negation& x) { return same(x.operand, std::get<Negation>(b.node).operand); },
          [&](const Division& x) {
            const auto& y = std::get<Division>(b.node);
            return x.divisor == y.divisor && same(x.operand, y.operand);
          },
          [&](const Application& x) {
            const auto& y = std::get<Application>(b.node);
            return x.function == y.function && same(x.argument, y.argument);
          },
      },
      a.node);
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Equal& x) {
            const auto& y = std::get<Equal>(b.node);
            return same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
          },
          [&](const Less& x) {
            const auto& y = std::get<Less>(b.node);
            return same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
          },
          [&](const Not& x) { return same(x.operand, std::get<Not>(b.node).operand); },
          [&](const And& x) {
            const auto& y = std::get<And>(b.node);
            return same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
          },
          [&](const Or& x) {
            const auto& y = std::get<Or>(b.node);
            return same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
          },
      },
      a.node);
}

TermPtr lit(ExtendedElement value) { return std::make_shared<const Term>(Term{Literal{std::move(value)}}); }
TermPtr var(std::string name) { return std::make_shared<const Term>(Term{Variable{std::move(name)}}); }
TermPtr add(TermPtr lhs, TermPtr rhs) {
  return std::make_shared<const Term>(Term{Sum{std::move(lhs), std::move(rhs)}});
}
TermPtr neg(TermPtr operand) { return std::make_shared<const Term>(Term{Negation{std::move(operand)}}); }
TermPtr div(TermPtr operand, std::uint64_t divisor) {
  if (divisor == 0) throw DomainError("division by 0 is not a symbol of the language");
  return std::make_shared<const Term>(Term{Division{std::move(operand), divisor}});
}
TermPtr apply(Function f, TermPtr argument) {
  return std::make_shared<const Term>(Term{Application{f, std::move(argument)}});
}

FormulaPtr eq(TermPtr lhs, TermPtr rhs) {
  return std::make_shared<const Formula>(Formula{Equal{std::move(lhs), std::move(rhs)}});
}
FormulaPtr lt(TermPtr lhs, TermPtr rhs) {
  return std::make_shared<const Formula>(Formula{Less{std::move(lhs), std::move(rhs)}});
}
FormulaPtr lnot(FormulaPtr operand) { return std::make_shared<const Formula>(Formula{Not{std::move(operand)}}); }
FormulaPtr land(FormulaPtr lhs, FormulaPtr rhs) {
  return std::make_shared<const Formula>(Formula{And{std::move(lhs), std::move(rhs)}});
}
FormulaPtr lor(FormulaPtr lhs, FormulaPtr rhs) {
  return std::make_shared<const Formula>(Formula{Or{std::move(lhs), std::move(rhs)}});
}

// ---------------------------------------------------------------------------
// Formatting. Precedence levels mirror the grammar: sum < unary < postfix <
// primary, and or < and < not < atom.

namespace {

enum TermPrec { kSum = 0, kUnary = 1, kPostfix = 2, kPrimary = 3 };

int precedence(const Term& t) {
  return std::visit(overloaded{
                        [](const Sum&) { return int{kSum}; },
                        [](const Negation&) { return int{kUnary}; },
                        [](const Division&) { return int{kPostfix}; },
                        [](const auto&) { return int{kPrimary}; },
                    },
                    t.node);
}

// 0, inf and single terms with positive coefficient reparse as one leaf; any
// other element needs brackets.
std::string format_literal(const ExtendedElement& v) {
  std::string text = to_string(v);
  if (v.is_infinity() || v.is_zero()) return text;
  const auto& terms = v.value().terms();
  if (terms.size() == 1 && sgn(terms.front().second) > 0) return text;
  return "[" + text + "]";
}

void emit(std::ostream& os, const Term& t, int required);

void emit_child(std::ostream& os, const Term& t, int required) {
  if (precedence(t) < required) {
    os << '(';
    emit(os, t, kSum);
    os << ')';
  } else {
    emit(os, t, required);
  }
}

void emit(std::ostream& os, const Term& t, int /*required*/) {
  std::visit(overloaded{
                 [&](const Literal& x) { os << format_literal(x.value); },
                 [&](const Variable& x) { os << x.name; },
                 [&](const Sum& x) {
                   emit_child(os, *x.lhs, kSum);
                   if (const auto* n = std::get_if<Negation>(&x.rhs->node)) {
                     os << " - ";
                     emit_child(os, *n->operand, kUnary);
                   } else {
                     os << " + ";
                     emit_child(os, *x.rhs, kUnary);
                   }
                 },
                 [&](const Negation& x) {
                   os << '-';
                   emit_child(os, *x.operand, kUnary);
                 },
                 [&](const Division& x) {
                   emit_child(os, *x.operand, kPostfix);
                   os << " / " << x.divisor;
                 },
                 [&](const Application& x) {
                   os << function_name(x.function) << '(';
                   emit(os, *x.argument, kSum);
                   os << ')';
                 },
             },
             t.node);
}

enum FormulaPrec { kOr = 0, kAnd = 1, kNot = 2, kAtom = 3 };

int precedence(const Formula& f) {
  return std::visit(overloaded{
                        [](const Or&) { return int{kOr}; },
                        [](const And&) { return int{kAnd}; },
                        [](const Not&) { return int{kNot}; },
                        [](const auto&) { return int{kAtom}; },
                    },
                    f.node);
}

void emit(std::ostream& os, const Formula& f);

void emit_child(std::ostream& os, const Formula& f, int required) {
  if (precedence(f) < required) {
    os << '(';
    emit(os, f);
    os << ')';
  } else {
    emit(os, f);
  }
}

void emit(std::ostream& os, const Formula& f) {
  std::visit(overloaded{
                 [&](const Equal& x) {
                   emit(os, *x.lhs, kSum);
                   os << " = ";
                   emit(os, *x.rhs, kSum);
                 },
                 [&](const Less& x) {
                   emit(os, *x.lhs, kSum);
                   os << " < ";
                   emit(os, *x.rhs, kSum);
                 },
                 [&](const Not& x) {
                   os << '!';
                   if (precedence(*x.operand) == kAtom) {
                     os << '(';
                     emit(os, *x.operand);
                     os << ')';
                   } else {
                     emit_child(os, *x.operand, kNot);
                   }
                 },
                 [&](const And& x) {
                   emit_child(os, *x.lhs, kAnd);
                   os << " & ";
                   emit_child(os, *x.rhs, kNot);
                 },
                 [&](const Or& x) {
                   emit_child(os, *x.lhs, kOr);
                   os << " | ";
                   emit_child(os, *x.rhs, kAnd);
                 },
             },
             f.node);
}

void collect(const Term& t, std::set<std::string>& out) {
  std::visit(overloaded{
                 [](const Literal&) {},
                 [&](const Variable& x) { out.insert(x.name); },
                 [&](const Sum& x) {
                   collect(*x.lhs, out);
                   collect(*x.rhs, out);
                 },
                 [&](const Negation& x) { collect(*x.operand, out); },
                 [&](const Division& x) { collect(*x.operand, out); },
                 [&](const Application& x) { collect(*x.argument, out); },
             },
             t.node);
}

void collect(const Formula& f, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const Equal& x) {
                   collect(*x.lhs, out);
                   collect(*x.rhs, out);
                 },
                 [&](const Less& x) {
                   collect(*x.lhs, out);
                   collect(*x.rhs, out);
                 },
                 [&](const Not& x) { collect(*x.operand, out); },
                 [&](const And& x) {
                   collect(*x.lhs, out);
                   collect(*x.rhs, out);
                 },
                 [&](const Or& x) {
                   collect(*x.lhs, out);
                   collect(*x.rhs, out);
                 },
             },
             f.node);
}

}  // namespace

std::string format_term(const Term& t) {
  std::ostringstream os;
  emit(os, t, kSum);
  return os.str();
}

std::string format_formula(const Formula& f) {
  std::ostringstream os;
  emit(os, f);
  return os.str();
}

std::set<std::string> free_variables(const Term& t) {
  std::set<std::string> out;
  collect(t, out);
  return out;
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> out;
  collect(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation in the standard model with infinity as the default value.

namespace {

ExtendedElement eval_impl(const Term& t, const Assignment& env) {
  return std::visit(
      overloaded{
          [](const Literal& x) { return x.value; },
          [&](const Variable& x) -> ExtendedElement {
            auto it = env.find(x.name);
            if (it == env.end()) throw UnboundVariable(x.name);
            return it->second;
          },
          [&](const Sum& x) -> ExtendedElement {
            ExtendedElement a = eval_impl(*x.lhs, env);
            ExtendedElement b = eval_impl(*x.rhs, env);
            if (a.is_infinity() || b.is_infinity()) return ExtendedElement::infinity();
            return a.value() + b.value();
          },
          [&](const Negation& x) -> ExtendedElement {
            ExtendedElement a = eval_impl(*x.operand, env);
            if (a.is_infinity()) return a;
            return -a.value();
          },
          [&](const Division& x) -> ExtendedElement {
            ExtendedElement a = eval_impl(*x.operand, env);
            if (a.is_infinity()) return a;
            return scale(a.value(), Rational(1, x.divisor));
          },
          [&](const Application& x) -> ExtendedElement {
            ExtendedElement a = eval_impl(*x.argument, env);
            switch (x.function) {
              case Function::Psi:
                return psi(a);
              case Function::Successor:
                return successor(a);
              case Function::Predecessor:
                return predecessor(a);
              case Function::Integral:
                return integrate(a);
            }
            return ExtendedElement::infinity();
          },
      },
      t.node);
}

bool eval_impl(const Formula& f, const Assignment& env) {
  return std::visit(overloaded{
                        [&](const Equal& x) { return eval_impl(*x.lhs, env) == eval_impl(*x.rhs, env); },
                        [&](const Less& x) { return eval_impl(*x.lhs, env) < eval_impl(*x.rhs, env); },
                        [&](const Not& x) { return !eval_impl(*x.operand, env); },
                        [&](const And& x) { return eval_impl(*x.lhs, env) && eval_impl(*x.rhs, env); },
                        [&](const Or& x) { return eval_impl(*x.lhs, env) || eval_impl(*x.rhs, env); },
                    },
                    f.node);
}

void require_bound(const std::set<std::string>& vars, const Assignment& env) {
  for (const auto& v : vars) {
    if (!env.contains(v)) throw UnboundVariable(v);
  }
}

}  // namespace

ExtendedElement eval_term(const Term& t, const Assignment& env) {
  require_bound(free_variables(t), env);
  return eval_impl(t, env);
}

bool eval_formula(const Formula& f, const Assignment& env) {
  require_bound(free_variables(f), env);
  return eval_impl(f, env);
}

}  // namespace asymlog::logic
