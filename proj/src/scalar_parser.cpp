// Recursive-descent parser for scalar expressions:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (('*'|'/') power)*
//   power  := atom ['^' ['-'] integer]
//   atom   := integer | identifier | '(' expr ')'
//
// Division is only allowed by nonzero rational constants.

#include <cctype>

#include "lsb/superscalar.hpp"

namespace lsb {
namespace {

class ScalarParser {
 public:
  ScalarParser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

  SuperScalar parse() {
    SuperScalar x = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return SuperScalar::constant(ring_, 0) + x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SuperScalar expr() {
    SuperScalar acc;
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    acc = term();
    if (negative) acc = -acc;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  SuperScalar term() {
    SuperScalar acc = power();
    while (true) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        SuperScalar d = power();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero rational constants");
        acc *= SuperScalar(Rational(1) / d.constant_term());
      } else {
        break;
      }
    }
    return acc;
  }

  SuperScalar power() {
    SuperScalar base = atom();
    if (accept('^')) {
      bool negative = accept('-');
      skip();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent");
      long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + (text_[pos_] - '0');
        if (e > 1'000'000) fail("exponent too large");
        ++pos_;
      }
      try {
        return pow(base, negative ? -static_cast<int>(e) : static_cast<int>(e));
      } catch (const PreconditionError& err) {
        fail(err.what());
      }
    }
    return base;
  }

  SuperScalar atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SuperScalar inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return SuperScalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (!ring_ || !ring_->find(name)) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return SuperScalar::variable(ring_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SuperScalar parse_scalar(const Ring& ring, std::string_view text) { return ScalarParser(ring, text).parse(); }

}  // namespace lsb
