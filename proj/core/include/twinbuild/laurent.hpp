#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "twinbuild/gauss.hpp"

namespace tb {

enum class Place { Zero, Infinity };

// Finite Laurent polynomial sum_e c_e z^e over a field F. Terms are kept
// sorted by exponent with no zero coefficients.
template <class F>
class Laurent {
 public:
  using Term = std::pair<int, F>;

  Laurent() = default;
  Laurent(F c) {  // NOLINT: scalars embed as constants
    if (!c.is_zero()) t_.emplace_back(0, std::move(c));
  }
  Laurent(long c) : Laurent(F(c)) {}  // NOLINT

  static Laurent monomial(F c, int e) {
    Laurent p;
    if (!c.is_zero()) p.t_.emplace_back(e, std::move(c));
    return p;
  }
  static Laurent z(int e = 1) { return monomial(F(1), e); }
  static Laurent from_terms(std::vector<Term> terms) {
    Laurent p;
    p.t_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
  bool is_monomial() const { return t_.size() == 1; }
  size_t size() const { return t_.size(); }

  F coeff(int e) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != t_.end() && it->first == e) return it->second;
    return F(0);
  }
  // Least / greatest exponent; undefined on zero.
  int low() const { return t_.front().first; }
  int high() const { return t_.back().first; }
  const F& low_coeff() const { return t_.front().second; }
  const F& high_coeff() const { return t_.back().second; }

  // nullopt encodes +infinity (valuation of 0).
  std::optional<int> valuation(Place place) const {
    if (t_.empty()) return std::nullopt;
    return place == Place::Zero ? low() : -high();
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& t : r.t_) t.second = -t.second;
    return r;
  }
  Laurent& operator+=(const Laurent& o) { return *this = add(*this, o, false); }
  Laurent& operator-=(const Laurent& o) { return *this = add(*this, o, true); }
  Laurent& operator*=(const Laurent& o) { return *this = mul(*this, o); }
  friend Laurent operator+(const Laurent& a, const Laurent& b) { return add(a, b, false); }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return add(a, b, true); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) { return mul(a, b); }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  Laurent scaled(const F& c) const {
    if (c.is_zero()) return Laurent();
    Laurent r = *this;
    for (auto& t : r.t_) t.second *= c;
    return r;
  }
  Laurent shifted(int e) const {
    Laurent r = *this;
    for (auto& t : r.t_) t.first += e;
    return r;
  }
  // this += c z^e * o, without temporaries for the common elimination step.
  void axpy(const F& c, int e, const Laurent& o) {
    if (c.is_zero() || o.is_zero()) return;
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
      if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first + e)) {
        out.push_back(std::move(t_[i++]));
      } else if (i == t_.size() || o.t_[j].first + e < t_[i].first) {
        out.emplace_back(o.t_[j].first + e, c * o.t_[j].second);
        ++j;
      } else {
        F v = std::move(t_[i].second);
        v += c * o.t_[j].second;
        if (!v.is_zero()) out.emplace_back(t_[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    t_ = std::move(out);
  }

  // z d/dz: sum e c_e z^e.
  Laurent z_d_dz() const {
    Laurent r;
    for (const auto& t : t_)
      if (t.first != 0) r.t_.emplace_back(t.first, t.second * F(t.first));
    return r;
  }
  // Substitution z -> 1/z.
  Laurent inverted() const {
    Laurent r;
    r.t_.reserve(t_.size());
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) r.t_.emplace_back(-it->first, it->second);
    return r;
  }
  template <class Fn>
  Laurent map_coeffs(Fn fn) const {
    Laurent r;
    for (const auto& t : t_) {
      F v = fn(t.second);
      if (!v.is_zero()) r.t_.emplace_back(t.first, std::move(v));
    }
    return r;
  }

 private:
  void normalize() {
    std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    for (auto& t : t_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        out.push_back(std::move(t));
      }
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.second.is_zero(); }),
              out.end());
    t_ = std::move(out);
  }

  static Laurent add(const Laurent& a, const Laurent& b, bool subtract) {
    Laurent r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first < b.t_[j].first)) {
        r.t_.push_back(a.t_[i++]);
      } else if (i == a.t_.size() || b.t_[j].first < a.t_[i].first) {
        r.t_.emplace_back(b.t_[j].first, subtract ? -b.t_[j].second : b.t_[j].second);
        ++j;
      } else {
        F v = subtract ? a.t_[i].second - b.t_[j].second : a.t_[i].second + b.t_[j].second;
        if (!v.is_zero()) r.t_.emplace_back(a.t_[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return r;
  }

  static Laurent mul(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return Laurent();
    Laurent r;
    if (a.t_.size() == 1) {
      for (const auto& t : b.t_) r.t_.emplace_back(t.first + a.t_[0].first, a.t_[0].second * t.second);
      return r;
    }
    const int lo = a.low() + b.low();
    const int hi = a.high() + b.high();
    std::vector<F> acc(static_cast<size_t>(hi - lo + 1), F(0));
    std::vector<char> used(acc.size(), 0);
    for (const auto& x : a.t_)
      for (const auto& y : b.t_) {
        size_t k = static_cast<size_t>(x.first + y.first - lo);
        acc[k] += x.second * y.second;
        used[k] = 1;
      }
    for (size_t k = 0; k < acc.size(); ++k)
      if (used[k] && !acc[k].is_zero()) r.t_.emplace_back(static_cast<int>(k) + lo, std::move(acc[k]));
    return r;
  }

  std::vector<Term> t_;
};

using LaurentPoly = Laurent<GaussRat>;

// Coefficientwise conjugation (the involution iota on entries).
inline LaurentPoly conj(const LaurentPoly& p) {
  return p.map_coeffs([](const GaussRat& c) { return c.conj(); });
}

}  // namespace tb
