#include "acm/parse.hpp"

#include <cctype>

namespace acm {

namespace {

class ExprParser {
 public:
  ExprParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    Polynomial f = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

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

  Polynomial expr() {
    Polynomial f = term();
    for (;;) {
      if (accept('+')) {
        f += term();
      } else if (accept('-')) {
        f -= term();
      } else {
        return f;
      }
    }
  }

  Polynomial term() {
    Polynomial f = signed_factor();
    while (accept('*')) f = f * signed_factor();
    return f;
  }

  Polynomial signed_factor() {
    if (accept('-')) return -signed_factor();
    if (accept('+')) return signed_factor();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    long long e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + (text_[pos_] - '0');
      if (e > 1000) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an exponent after '^'");
    Polynomial out = Polynomial::constant(ring_, 1);
    for (long long i = 0; i < e; ++i) out = out * base;
    return out;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const PrimeField& k = ring_->field();
      Coeff v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = k.add(k.mul(v, 10 % k.characteristic()), static_cast<Coeff>(text_[pos_] - '0'));
        ++pos_;
      }
      return Polynomial::term(ring_, v, ring_->one());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      const auto& names = ring_->names();
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return Polynomial::variable(ring_, static_cast<int>(i));
      }
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return ExprParser(ring, text).parse();
}

Polynomial parse_form(const RingPtr& ring, std::string_view text) {
  Polynomial f = parse_polynomial(ring, text);
  if (f.is_zero()) throw DomainError("expression '" + std::string(text) + "' is zero");
  if (!f.degree()) throw DomainError("expression '" + std::string(text) + "' is not homogeneous");
  return f;
}

}  // namespace acm
