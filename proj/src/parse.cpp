#include <cctype>
#include <string>

#include "gfstream/series.hpp"

namespace gfs {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " (at position " + std::to_string(position) +
                            ")"),
      position_(position) {}

namespace {

// Recursive descent over the raw characters. Every evaluation happens at a
// fixed working order carried by the evaluator; division by x^v shrinks the
// order of the affected subresult, which parse() compensates for by
// re-running at a raised working order.
class Evaluator {
 public:
  Evaluator(std::string_view text, std::size_t order)
      : text_(text), order_(order) {}

  Series run() {
    Series result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  // Expr := Term (('+'|'-') Term)*
  Series expr() {
    Series acc = term();
    for (;;) {
      if (consume('+'))
        acc = add(acc, term());
      else if (consume('-'))
        acc = sub(acc, term());
      else
        return acc;
    }
  }

  // Term := Factor (('*'|'/') Factor)*
  Series term() {
    Series acc = factor();
    for (;;) {
      if (consume('*')) {
        acc = mul(acc, factor());
      } else if (consume('/')) {
        std::size_t at = pos_;
        Series divisor = factor();
        try {
          acc = div(acc, divisor);
        } catch (const std::domain_error& e) {
          throw std::domain_error(std::string(e.what()) + " (at position " +
                                  std::to_string(at) + ")");
        }
      } else {
        return acc;
      }
    }
  }

  // Factor := Primary ('^' UInt)*
  Series factor() {
    Series base = primary();
    while (consume('^')) {
      unsigned long e = parse_uint();
      Series acc = Series::constant(1, base.order());
      for (unsigned long i = 0; i < e; ++i) acc = mul(acc, base);
      base = acc;
    }
    return base;
  }

  // Primary := 'sqrt' '(' Expr ')' | '(' Expr ')' | Rational | 'x'
  // plus a leading '-' for signed literals and negated subexpressions.
  Series primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return negate(factor());
    }
    if (c == '(') {
      ++pos_;
      Series inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
    if (c == 'x' && !is_ident_char(pos_ + 1)) {
      ++pos_;
      return Series::x(order_);
    }
    if (text_.compare(pos_, 4, "sqrt") == 0 && !is_ident_char(pos_ + 4)) {
      std::size_t at = pos_;
      pos_ += 4;
      expect('(');
      Series inner = expr();
      expect(')');
      try {
        return sqrt(inner);
      } catch (const std::domain_error& e) {
        throw std::domain_error(std::string(e.what()) + " (at position " +
                                std::to_string(at) + ")");
      }
    }
    fail("expected a factor");
  }

  bool is_ident_char(std::size_t at) const {
    return at < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[at])) ||
            text_[at] == '_');
  }

  // Rational := Int ('/' UInt)?  -- the '/UInt' part binds at the lexical
  // level (no interior whitespace), so "3/8" is one literal while
  // "3/(1-x)" and "3 / 8" fall through to series division.
  Series rational_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::size_t num_end = pos_;
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      pos_ += 2;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      Rat value = rat_from_string(std::string(text_.substr(start, pos_ - start)));
      return Series::constant(value, order_);
    }
    Rat value = rat_from_string(std::string(text_.substr(start, num_end - start)));
    return Series::constant(value, order_);
  }

  unsigned long parse_uint() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected an unsigned integer exponent");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t order_;
  std::size_t pos_ = 0;
};

}  // namespace

Series parse(std::string_view text, std::size_t order) {
  // Division by x^v costs v coefficients of the working order; raise it
  // until the result reaches the requested order. The deficit per pass is a
  // fixed property of the expression, so this settles after one adjustment
  // in all but pathological nestings.
  std::size_t working = order;
  for (int attempt = 0; attempt < 32; ++attempt) {
    Series result = Evaluator(text, working).run();
    if (result.order() >= order) return result.truncated(order);
    working += order - result.order();
  }
  throw std::domain_error("expression loses too many orders to x-divisions");
}

}  // namespace gfs
