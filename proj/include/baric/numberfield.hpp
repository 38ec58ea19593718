#pragma once

// Exact arithmetic in Q(l), where l is a root of 2X^2 + X + 3.
//
// The complex embedding l = (-1 - i*sqrt(23))/4 is never used for
// computation; elements are pairs (a, b) of rationals meaning a + b*l and
// products are reduced with l^2 = (-3 - l)/2.

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace baric {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown by every text parser in the library; `position` is a byte offset.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string &message)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + message),
        position_(position), message_(message) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the position prefix.
  const std::string &message() const noexcept { return message_; }

private:
  std::size_t position_;
  std::string message_;
};

class FieldElement {
public:
  FieldElement() = default;
  FieldElement(long v) : a_(v) {}
  FieldElement(Rational a) : a_(std::move(a)) { a_.canonicalize(); }
  FieldElement(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  /// The generator l.
  static FieldElement lambda() { return {Rational(0), Rational(1)}; }
  /// The conjugate root -1/2 - l.
  static FieldElement lambda_bar() { return {Rational(-1, 2), Rational(-1)}; }

  const Rational &rational_part() const { return a_; }
  const Rational &lambda_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  FieldElement conj() const { return {a_ - b_ / 2, -b_}; }

  /// N(x) = x * conj(x) = a^2 - ab/2 + 3b^2/2, always rational.
  Rational norm() const {
    return Rational(a_ * a_ - a_ * b_ / 2 + 3 * b_ * b_ / 2);
  }

  FieldElement inverse() const {
    if (is_zero())
      throw std::domain_error("division by zero in Q(l)");
    Rational n = norm();
    FieldElement c = conj();
    return {c.a_ / n, c.b_ / n};
  }

  FieldElement operator-() const { return {-a_, -b_}; }

  FieldElement &operator+=(const FieldElement &o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  FieldElement &operator-=(const FieldElement &o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  FieldElement &operator*=(const FieldElement &o) {
    // (a + bl)(c + dl) = ac + (ad + bc)l + bd l^2,  l^2 = -3/2 - l/2
    Rational bd = b_ * o.b_;
    Rational a = a_ * o.a_ - 3 * bd / 2;
    Rational b = a_ * o.b_ + b_ * o.a_ - bd / 2;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  FieldElement &operator/=(const FieldElement &o) {
    return *this *= o.inverse();
  }

  friend FieldElement operator+(FieldElement x, const FieldElement &y) {
    return x += y;
  }
  friend FieldElement operator-(FieldElement x, const FieldElement &y) {
    return x -= y;
  }
  friend FieldElement operator*(FieldElement x, const FieldElement &y) {
    return x *= y;
  }
  friend FieldElement operator/(FieldElement x, const FieldElement &y) {
    return x /= y;
  }
  friend bool operator==(const FieldElement &x, const FieldElement &y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const FieldElement &x, const FieldElement &y) {
    return !(x == y);
  }

  /// Arbitrary but fixed total order (rational part first); used only for
  /// deterministic containers, it is not a field ordering.
  friend bool operator<(const FieldElement &x, const FieldElement &y) {
    int c = cmp(x.a_, y.a_);
    if (c != 0)
      return c < 0;
    return cmp(x.b_, y.b_) < 0;
  }

  FieldElement pow(unsigned k) const {
    FieldElement r(1), base = *this;
    while (k) {
      if (k & 1)
        r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

private:
  Rational a_{0};
  Rational b_{0};
};

inline FieldElement conj(const FieldElement &x) { return x.conj(); }
inline FieldElement inverse(const FieldElement &x) { return x.inverse(); }

namespace detail {

inline std::string rational_text(const Rational &r) { return r.get_str(); }

} // namespace detail

/// Canonical text: "a", "c*l", "a + c*l", "a - c*l"; unit coefficient of l
/// is written "l".
inline std::string format(const FieldElement &x) {
  const Rational &a = x.rational_part();
  const Rational &b = x.lambda_part();
  if (sgn(b) == 0)
    return detail::rational_text(a);
  auto lpart = [](const Rational &c) {
    if (c == 1)
      return std::string("l");
    return detail::rational_text(c) + "*l";
  };
  if (sgn(a) == 0) {
    if (b == -1)
      return "-l";
    return lpart(b);
  }
  std::string out = detail::rational_text(a);
  if (sgn(b) < 0)
    return out + " - " + lpart(Rational(-b));
  return out + " + " + lpart(b);
}

inline std::ostream &operator<<(std::ostream &os, const FieldElement &x) {
  return os << format(x);
}

/// Recursive-descent reader for the field-element grammar
///   felem    ::= term (("+"|"-") term)*
///   term     ::= rational ("*"? "l")? | "l"
///   rational ::= "-"? digits ("/" digits)?
/// Whitespace is insignificant. Also usable as a sub-parser by other
/// grammars through the public parse_* members.
class FieldElementReader {
public:
  explicit FieldElementReader(std::string_view text, std::size_t offset = 0)
      : text_(text), pos_(offset) {}

  std::size_t position() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  FieldElement parse_felem() {
    FieldElement sum = parse_signed_term();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-')
        break;
      ++pos_;
      FieldElement t = parse_term();
      if (c == '+')
        sum += t;
      else
        sum -= t;
    }
    return sum;
  }

  /// A leading "-" is accepted on the first term (covers "-l").
  FieldElement parse_signed_term() {
    if (peek() == '-') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == 'l' && !ident_follows(pos_))
        return -parse_term();
      pos_ = save;
    }
    return parse_term();
  }

  FieldElement parse_term() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == 'l' && !ident_follows(pos_)) {
      ++pos_;
      return FieldElement::lambda();
    }
    Rational r = parse_rational();
    std::size_t save = pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '*') {
      std::size_t star = pos_;
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == 'l' && !ident_follows(pos_)) {
        ++pos_;
        return FieldElement(Rational(0), r);
      }
      pos_ = star;
      return FieldElement(r);
    }
    if (pos_ < text_.size() && text_[pos_] == 'l' && !ident_follows(pos_)) {
      ++pos_;
      return FieldElement(Rational(0), r);
    }
    pos_ = save;
    return FieldElement(r);
  }

  Rational parse_rational() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
      skip_ws();
    }
    Integer num = parse_digits();
    Integer den = 1;
    std::size_t save = pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      den = parse_digits();
      if (den == 0)
        throw ParseError(at, "zero denominator");
    } else {
      pos_ = save;
    }
    Rational r(num, den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(pos_, msg);
  }

private:
  bool ident_follows(std::size_t at) const {
    return at + 1 < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[at + 1])) ||
            text_[at + 1] == '_');
  }

  Integer parse_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      throw ParseError(start, "expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_;
};

inline FieldElement parse_field_element(std::string_view text) {
  FieldElementReader r(text);
  if (r.at_end())
    throw ParseError(0, "empty field element");
  FieldElement x = r.parse_felem();
  if (!r.at_end())
    r.fail(std::string("unexpected character '") + r.peek() + "'");
  return x;
}

} // namespace baric
