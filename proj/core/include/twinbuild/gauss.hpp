#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace tb {

using Rational = mpq_class;

// Element a + b i of Q(i).
class GaussRat {
 public:
  GaussRat() : re_(0), im_(0) {}
  GaussRat(long v) : re_(v), im_(0) {}  // NOLINT: implicit on purpose
  GaussRat(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }
  static GaussRat frac(long num, long den);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussRat inverse() const;

  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  // Total order used only for canonical sorting (real part, then imaginary).
  friend bool lex_less(const GaussRat& a, const GaussRat& b) {
    int c = cmp(a.re_, b.re_);
    return c < 0 || (c == 0 && a.im_ < b.im_);
  }

  // Canonical text: "a", "a/b", "(a+bi)", "(bi)".
  std::string str() const;
  static GaussRat parse(std::string_view text);

 private:
  Rational re_;
  Rational im_;
};

inline bool is_zero(const GaussRat& x) { return x.is_zero(); }
inline GaussRat conj(const GaussRat& x) { return x.conj(); }

std::ostream& operator<<(std::ostream& os, const GaussRat& x);

}  // namespace tb
