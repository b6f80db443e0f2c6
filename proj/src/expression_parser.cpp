#include <cctype>
#include <string>

#include "meanconvex/errors.hpp"
#include "meanconvex/formal_element.hpp"

namespace meanconvex {

namespace {

constexpr std::size_t kMaxGenerators = 64;
constexpr long kMaxExponent = 4096;

// Recursive descent over
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' unary)?
//   primary := integer | generator | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FormalElement parse() {
    FormalElement value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw ParseError(ParseError::Kind::syntax, at, message);
  }
  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FormalElement expression() {
    FormalElement value = term();
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  FormalElement term() {
    FormalElement value = unary();
    while (true) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        FormalElement divisor = unary();
        if (divisor.is_zero()) throw ParseError(ParseError::Kind::zero_division, at, "division by zero");
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  FormalElement unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  FormalElement power() {
    FormalElement base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    const FormalElement exponent = unary();
    if (!exponent.is_constant())
      throw ParseError(ParseError::Kind::non_integer_exponent, at, "exponent must be an integer constant");
    const Rational e = exponent.constant_value();
    if (denominator(e) != 1)
      throw ParseError(ParseError::Kind::non_integer_exponent, at, "exponent must be an integer");
    if (abs(e) > kMaxExponent) fail("exponent magnitude too large", at);
    const long n = numerator(e).convert_to<long>();
    if (n < 0 && base.is_zero()) throw ParseError(ParseError::Kind::zero_division, at, "negative power of zero");
    return base.pow(n);
  }

  FormalElement primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FormalElement inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
        fail("decimal literals are not supported; write rationals as a/b");
      return FormalElement(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (c == 't') {
      const std::size_t start = pos_;
      ++pos_;
      std::size_t index = 1;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        index = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          index = index * 10 + static_cast<std::size_t>(text_[pos_] - '0');
          if (index > kMaxGenerators) fail("generator index out of range", start);
          ++pos_;
        }
      }
      if (index == 0) fail("generators are numbered from t1", start);
      if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) fail("unknown identifier", start);
      return FormalElement::generator(index - 1);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FormalElement parse_element(std::string_view text) { return Parser(text).parse(); }

}  // namespace meanconvex
