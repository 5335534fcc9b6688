#include "folcoh/scalar.hpp"

#include <cctype>
#include <vector>

#include "folcoh/errors.hpp"

namespace folcoh {

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error("division by zero scalar");
  Rational n = o.re_ * o.re_ + o.im_ * o.im_;
  Rational r = (re_ * o.re_ + im_ * o.im_) / n;
  im_ = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = r;
  return *this;
}

std::string Scalar::str() const {
  auto rat = [](const Rational& r) { return r.str(); };
  if (im_ == 0) return rat(re_);
  std::string im_part = (im_ == 1) ? "i" : (im_ == -1) ? "-i" : rat(im_) + "i";
  if (re_ == 0) return im_part;
  if (im_ > 0) return rat(re_) + "+" + im_part;
  return rat(re_) + im_part;
}

namespace {

// One signed term: fraction optionally followed by 'i'.
struct Term {
  Rational value;
  bool imaginary = false;
};

std::vector<Term> split_terms(const std::string& s) {
  std::vector<Term> out;
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos; };
  skip_ws();
  if (pos == s.size()) throw ParseError("empty scalar literal");
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    }
    std::string digits;
    while (pos < s.size() && (std::isdigit((unsigned char)s[pos]) || s[pos] == '/')) {
      digits += s[pos++];
    }
    skip_ws();
    bool imag = false;
    if (pos < s.size() && s[pos] == 'i') {
      imag = true;
      ++pos;
      skip_ws();
    }
    if (digits.empty() && !imag) throw ParseError("malformed scalar literal: " + s);
    Rational v;
    try {
      v = digits.empty() ? Rational(1) : Rational(digits);
    } catch (const std::exception&) {
      throw ParseError("malformed fraction '" + digits + "' in scalar: " + s);
    }
    out.push_back({sign < 0 ? Rational(-v) : v, imag});
  }
  return out;
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
  Rational re(0), im(0);
  for (const Term& t : split_terms(text)) {
    (t.imaginary ? im : re) += t.value;
  }
  return Scalar(re, im);
}

}  // namespace folcoh
