#pragma once

#include <string>
#include <vector>

#include "twinbuild/gauss.hpp"

namespace tb {

// Dense univariate polynomial over Q(i) in an indeterminate t, ascending coefficients.
class UPoly {
 public:
  UPoly() = default;
  UPoly(GaussRat c);  // NOLINT
  UPoly(long c) : UPoly(GaussRat(c)) {}  // NOLINT
  static UPoly t() { return UPoly(std::vector<GaussRat>{GaussRat(0), GaussRat(1)}); }
  explicit UPoly(std::vector<GaussRat> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<GaussRat>& coeffs() const { return c_; }
  const GaussRat& lead() const { return c_.back(); }
  GaussRat coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : GaussRat(0); }

  GaussRat eval(const GaussRat& x) const;
  UPoly monic() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  // Euclidean division: a = q b + r.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  static UPoly gcd(UPoly a, UPoly b);

  std::string str() const;

 private:
  void trim();
  std::vector<GaussRat> c_;
};

// Element of Q(i)(t) as num/den with gcd 1 and monic denominator.
class RatT {
 public:
  RatT() : num_(), den_(1) {}
  RatT(long c) : num_(c), den_(1) {}  // NOLINT
  RatT(GaussRat c) : num_(std::move(c)), den_(1) {}  // NOLINT
  RatT(UPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RatT(UPoly num, UPoly den);

  static RatT t() { return RatT(UPoly::t()); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RatT inverse() const;
  RatT operator-() const { return RatT(-num_, den_, true); }
  RatT& operator+=(const RatT& o);
  RatT& operator-=(const RatT& o);
  RatT& operator*=(const RatT& o);
  RatT& operator/=(const RatT& o) { return *this *= o.inverse(); }
  friend RatT operator+(RatT a, const RatT& b) { return a += b; }
  friend RatT operator-(RatT a, const RatT& b) { return a -= b; }
  friend RatT operator*(RatT a, const RatT& b) { return a *= b; }
  friend RatT operator/(RatT a, const RatT& b) { return a /= b; }
  friend bool operator==(const RatT& a, const RatT& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatT& a, const RatT& b) { return !(a == b); }

  std::string str() const;

 private:
  RatT(UPoly num, UPoly den, bool /*normalized*/) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  UPoly num_;
  UPoly den_;
};

inline bool is_zero(const UPoly& p) { return p.is_zero(); }
inline bool is_zero(const RatT& p) { return p.is_zero(); }

}  // namespace tb
