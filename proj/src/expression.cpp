// Recursive-descent parser for coefficient expressions and element literals.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' '-'? integer)?
//   primary := integer | 't' | 'i' | '(' expr ')'

#include <cctype>
#include <sstream>

#include "qcplane/algebra.hpp"

namespace qcplane {

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction f = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        RationalFunction d = unary();
        if (d.numerator().is_zero()) fail("division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return RationalFunction(Polynomial(GaussRational(-1))) * unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!accept('^')) return base;
    bool negative = accept('-');
    mpz_class e = integer();
    if (e > 64) fail("exponent too large");
    auto n = static_cast<unsigned>(e.get_ui());
    RationalFunction out(Polynomial(GaussRational(1)));
    for (unsigned k = 0; k < n; ++k) out = out * base;
    if (negative) {
      if (out.numerator().is_zero()) fail("zero raised to a negative power");
      out = out.reciprocal();
    }
    return out;
  }

  RationalFunction primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 't') {
      ++pos_;
      return RationalFunction(Polynomial::t());
    }
    if (c == 'i') {
      ++pos_;
      return RationalFunction(Polynomial(GaussRational::i()));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      return RationalFunction(Polynomial(GaussRational(Rational(integer()))));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_{0};
};

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

RationalFunction parse_expression(std::string_view text) { return ExpressionParser(text).parse(); }

std::pair<long, CoefficientFunction> parse_term(std::string_view text) {
  std::string s = trim(text);
  auto at = s.rfind('@');
  if (at == std::string::npos) throw ParseError("element term '" + s + "' lacks '@k'");
  std::string mode = trim(std::string_view(s).substr(at + 1));
  long k = 0;
  try {
    std::size_t used = 0;
    k = std::stol(mode, &used);
    if (used != mode.size()) throw ParseError("bad mode");
  } catch (const std::exception&) {
    throw ParseError("element term '" + s + "' has a malformed mode");
  }
  RationalFunction f = parse_expression(std::string_view(s).substr(0, at));
  try {
    return {k, CoefficientFunction::rational(std::move(f))};
  } catch (const DomainError& e) {
    throw ParseError(std::string("element term '") + s + "': " + e.what());
  }
}

AlgebraElement parse_element(const DeformationParameter& q, std::string_view text) {
  std::vector<std::string> terms;
  std::string s(text);
  std::stringstream in(s);
  std::string piece;
  while (std::getline(in, piece, ';')) {
    if (!trim(piece).empty()) terms.push_back(piece);
  }
  return parse_element(q, terms);
}

AlgebraElement parse_element(const DeformationParameter& q, const std::vector<std::string>& terms) {
  AlgebraElement a(q);
  for (const auto& t : terms) {
    auto [k, f] = parse_term(t);
    a.set(k, a.coefficient(k) + f);
  }
  return a;
}

std::vector<std::string> serialize_element(const AlgebraElement& a) {
  std::vector<std::string> out;
  for (const auto& [k, f] : a.coefficients()) out.push_back(f.expression() + "@" + std::to_string(k));
  return out;
}

}  // namespace qcplane
