#include "twinbuild/upoly.hpp"

#include <sstream>

#include "twinbuild/error.hpp"

namespace tb {

UPoly::UPoly(GaussRat c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

UPoly::UPoly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussRat UPoly::eval(const GaussRat& x) const {
  GaussRat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  GaussRat inv = c_.back().inverse();
  UPoly r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), GaussRat(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), GaussRat(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<GaussRat> r(c_.size() + o.c_.size() - 1, GaussRat(0));
  for (size_t a = 0; a < c_.size(); ++a)
    for (size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
  c_ = std::move(r);
  trim();
  return *this;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  r = a;
  q = UPoly();
  if (a.degree() < b.degree()) return;
  std::vector<GaussRat> qc(static_cast<size_t>(a.degree() - b.degree() + 1), GaussRat(0));
  GaussRat inv = b.lead().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    GaussRat f = r.lead() * inv;
    qc[shift] = f;
    for (int k = 0; k <= b.degree(); ++k) r.c_[k + shift] -= f * b.c_[k];
    r.trim();
  }
  q = UPoly(std::move(qc));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[k].str();
    if (k == 1) os << "*t";
    if (k > 1) os << "*t^" << k;
  }
  return os.str();
}

RatT::RatT(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  normalize();
}

void RatT::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      UPoly q, r;
      UPoly::divmod(num_, g, q, r);
      num_ = q;
      UPoly::divmod(den_, g, q, r);
      den_ = q;
    }
  }
  if (!den_.lead().is_one()) {
    UPoly inv(den_.lead().inverse());
    num_ *= inv;
    den_ *= inv;
  }
}

RatT RatT::inverse() const {
  if (num_.is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  return RatT(den_, num_);
}

RatT& RatT::operator+=(const RatT& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.degree() > 0) normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatT& RatT::operator-=(const RatT& o) { return *this += -o; }

RatT& RatT::operator*=(const RatT& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  if (den_.degree() > 0) {
    normalize();
  } else if (!den_.is_zero() && !den_.lead().is_one()) {
    normalize();
  }
  if (num_.is_zero()) den_ = UPoly(1);
  return *this;
}

std::string RatT::str() const {
  if (den_.degree() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace tb
