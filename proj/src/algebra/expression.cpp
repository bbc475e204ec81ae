#include "crn/algebra/expression.hpp"

#include <cctype>

#include "crn/errors.hpp"

namespace crn {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  XPoly parse() {
    XPoly v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

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

  XPoly expr() {
    XPoly v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  XPoly term() {
    XPoly v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        XPoly d = unary();
        if (!d.is_constant()) {
          pos_ = at;
          fail("division by an expression containing variables");
        }
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        v = v.scaled(d.terms()[0].coeff.inverse());
      } else {
        return v;
      }
    }
  }

  XPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  XPoly power() {
    XPoly base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (e > 1000) fail("exponent too large");
    XPoly result = XPoly::constant(ring_, Rational(1));
    for (unsigned long i = 0; i < e; ++i) result = result * base;
    return result;
  }

  XPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      XPoly v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return XPoly::constant(ring_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (auto v = ring_->var_index(name)) return XPoly::variable(ring_, *v);
      if (auto p = ring_->param_index(name))
        return XPoly::constant(ring_, ParamScalar::variable(ring_->nparams(), *p));
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

XPoly parse_xpoly(std::string_view text, const RingPtr& ring) { return ExprParser(text, ring).parse(); }

ParamScalar parse_param_scalar(std::string_view text, const RingPtr& ring) {
  XPoly v = parse_xpoly(text, ring);
  if (!v.is_constant()) throw InputError("expected a parameter-only expression: " + std::string(text));
  return v.is_zero() ? ParamScalar(ring->nparams()) : v.terms()[0].coeff;
}

}  // namespace crn
