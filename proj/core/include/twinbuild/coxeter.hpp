#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tb {

// Generator labels are 1-based, as in the usual s_1, ..., s_r.
using Word = std::vector<int>;

std::string word_to_string(const Word& w);  // "1 2 4 1", "" for the identity
Word parse_word(std::string_view text);      // accepts spaces and/or commas

enum class CoxeterKind { FiniteA, AffineA };

class CoxeterMatrix {
 public:
  static constexpr int kInfinity = -1;

  explicit CoxeterMatrix(int rank);
  CoxeterMatrix(int rank, const std::vector<int>& entries);  // row-major, kInfinity for ∞

  int rank() const { return rank_; }
  int m(int i, int j) const { return m_[static_cast<size_t>(i - 1) * rank_ + (j - 1)]; }
  void set(int i, int j, int value);
  bool is_infinite(int i, int j) const { return m(i, j) == kInfinity; }

  friend bool operator==(const CoxeterMatrix& a, const CoxeterMatrix& b) {
    return a.rank_ == b.rank_ && a.m_ == b.m_;
  }

 private:
  int rank_;
  std::vector<int> m_;
};

CoxeterMatrix coxeter_matrix(CoxeterKind kind, int n);

// Group element as the matrix of its action on the root lattice (geometric
// representation over a crystallographic Cartan matrix).
class CoxElt {
 public:
  CoxElt() = default;
  explicit CoxElt(int rank);
  int rank() const { return r_; }
  long long operator()(int i, int j) const { return a_[static_cast<size_t>(i) * r_ + j]; }
  long long& operator()(int i, int j) { return a_[static_cast<size_t>(i) * r_ + j]; }
  const std::vector<long long>& data() const { return a_; }
  friend bool operator==(const CoxElt& a, const CoxElt& b) { return a.a_ == b.a_; }
  friend bool operator!=(const CoxElt& a, const CoxElt& b) { return !(a == b); }
  size_t hash() const;

 private:
  int r_ = 0;
  std::vector<long long> a_;
};

struct CoxEltHash {
  size_t operator()(const CoxElt& e) const { return e.hash(); }
};

class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterMatrix m);

  const CoxeterMatrix& matrix() const { return m_; }
  int rank() const { return m_.rank(); }

  void check_word(const Word& w) const;
  CoxElt identity() const;
  CoxElt element(const Word& w) const;
  CoxElt inverse_element(const Word& w) const { return element(reversed(w)); }
  void mul_right(CoxElt& x, int s) const;  // x <- x s
  void mul_left(CoxElt& x, int s) const;   // x <- s x
  bool is_right_descent(const CoxElt& x, int s) const;

  // Lexicographically least reduced word of the element with inverse matrix
  // `inv` (the smallest left descent is peeled off first).
  Word normal_form_of_inverse(CoxElt inv) const;
  Word reduce(const Word& w) const;
  int length(const Word& w) const { return static_cast<int>(reduce(w).size()); }

  // Lifting-property Bruhat comparison; both words are reduced first.
  bool bruhat_leq(const Word& v, const Word& w) const;

  long long generalized_length(const Word& w, const std::vector<long long>& weights) const;
  void check_weights(const std::vector<long long>& weights) const;

  bool is_finite() const;
  Word longest_element() const;

  // Minimal representatives of the cosets w W_J with length <= max_length,
  // inside the parabolic subgroup generated by `ambient` (all generators if empty).
  std::vector<Word> min_coset_reps(const std::vector<int>& J, int max_length,
                                   const std::vector<int>& ambient = {}) const;

  bool is_min_coset_rep(const Word& reduced_w, const std::vector<int>& J) const;

  static Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

 private:
  CoxeterMatrix m_;
  std::vector<long long> cartan_;  // a_ij with s_i(α_j) = α_j − a_ij α_i
  long long a(int i, int j) const { return cartan_[static_cast<size_t>(i) * rank() + j]; }
};

bool shortlex_less(const Word& a, const Word& b);

}  // namespace tb
