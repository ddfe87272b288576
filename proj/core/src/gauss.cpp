#include "twinbuild/gauss.hpp"

#include <cctype>
#include <ostream>

#include "twinbuild/error.hpp"

namespace tb {

GaussRat GaussRat::frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return GaussRat(q);
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero in Q(i)");
  Rational d = norm();
  return GaussRat(re_ / d, -im_ / d);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero in Q(i)");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussRat::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return "(" + imag + ")";
  std::string out = "(" + re_.get_str();
  if (sgn(im_) > 0) out += "+";
  return out + imag + ")";
}

namespace {

// Parses an optionally signed rational "a" or "a/b" starting at pos.
bool parse_rational(std::string_view s, size_t& pos, Rational& out) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  size_t digits = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits) {
    pos = start;
    return false;
  }
  std::string txt(s.substr(start, pos - start));
  if (pos < s.size() && s[pos] == '/') {
    size_t d0 = ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == d0) throw Error(ErrorCode::Parse, "missing denominator in '" + std::string(s) + "'");
    txt += "/" + std::string(s.substr(d0, pos - d0));
  }
  if (txt[0] == '+') txt.erase(0, 1);
  out.set_str(txt, 10);
  if (out.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator");
  out.canonicalize();
  return true;
}

}  // namespace

GaussRat GaussRat::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty coefficient");

  // Sum of up to two parts, each real "q" or imaginary "q i" / "i".
  GaussRat result;
  size_t pos = 0;
  int parts = 0;
  while (pos < s.size()) {
    if (++parts > 2) throw Error(ErrorCode::Parse, "malformed coefficient '" + s + "'");
    Rational q;
    size_t before = pos;
    bool have = parse_rational(s, pos, q);
    if (!have) {
      // bare "i", "+i", "-i"
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      }
      if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        result += GaussRat(Rational(0), Rational(sign));
        continue;
      }
      pos = before;
      throw Error(ErrorCode::Parse, "malformed coefficient '" + s + "'");
    }
    if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      result += GaussRat(Rational(0), q);
    } else {
      result += GaussRat(q);
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
      throw Error(ErrorCode::Parse, "malformed coefficient '" + s + "'");
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& x) { return os << x.str(); }

}  // namespace tb
