#include "twinbuild/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <set>
#include <unordered_set>

#include "twinbuild/error.hpp"

namespace tb {

std::string word_to_string(const Word& w) {
  std::string out;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(w[k]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  size_t pos = 0;
  while (pos < text.size()) {
    char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++pos;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw Error(ErrorCode::Parse, "bad generator in word '" + std::string(text) + "'");
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) throw Error(ErrorCode::Parse, "generator index too large");
      ++pos;
    }
    w.push_back(v);
  }
  return w;
}

CoxeterMatrix::CoxeterMatrix(int rank) : rank_(rank), m_(static_cast<size_t>(rank) * rank, 2) {
  if (rank < 1) throw Error(ErrorCode::InvalidRank, "Coxeter rank must be positive");
  for (int i = 1; i <= rank; ++i) m_[static_cast<size_t>(i - 1) * rank + (i - 1)] = 1;
}

CoxeterMatrix::CoxeterMatrix(int rank, const std::vector<int>& entries) : CoxeterMatrix(rank) {
  if (entries.size() != m_.size()) throw Error(ErrorCode::InvalidArgument, "Coxeter matrix has wrong size");
  for (int i = 1; i <= rank; ++i)
    for (int j = 1; j <= rank; ++j) {
      int v = entries[static_cast<size_t>(i - 1) * rank + (j - 1)];
      if (i == j) {
        if (v != 1) throw Error(ErrorCode::InvalidArgument, "diagonal Coxeter entries must be 1");
        continue;
      }
      if (v != entries[static_cast<size_t>(j - 1) * rank + (i - 1)])
        throw Error(ErrorCode::InvalidArgument, "Coxeter matrix must be symmetric");
      set(i, j, v);
    }
}

void CoxeterMatrix::set(int i, int j, int value) {
  if (i == j) return;
  if (value != kInfinity && value < 2) throw Error(ErrorCode::InvalidArgument, "off-diagonal entries must be >= 2");
  m_[static_cast<size_t>(i - 1) * rank_ + (j - 1)] = value;
  m_[static_cast<size_t>(j - 1) * rank_ + (i - 1)] = value;
}

CoxeterMatrix coxeter_matrix(CoxeterKind kind, int n) {
  if (n < 2) throw Error(ErrorCode::InvalidRank, "n must be at least 2");
  if (kind == CoxeterKind::FiniteA) {
    CoxeterMatrix m(n - 1);
    for (int i = 1; i + 1 <= n - 1; ++i) m.set(i, i + 1, 3);
    return m;
  }
  CoxeterMatrix m(n);
  if (n == 2) {
    m.set(1, 2, CoxeterMatrix::kInfinity);
    return m;
  }
  for (int i = 1; i <= n; ++i) m.set(i, i % n + 1, 3);
  return m;
}

CoxElt::CoxElt(int rank) : r_(rank), a_(static_cast<size_t>(rank) * rank, 0) {}

size_t CoxElt::hash() const {
  size_t h = 1469598103934665603ull;
  for (long long v : a_) {
    h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

CoxeterGroup::CoxeterGroup(CoxeterMatrix m) : m_(std::move(m)), cartan_(static_cast<size_t>(m_.rank()) * m_.rank(), 0) {
  const int r = rank();
  for (int i = 0; i < r; ++i) {
    cartan_[static_cast<size_t>(i) * r + i] = 2;
    for (int j = i + 1; j < r; ++j) {
      long long aij = 0, aji = 0;
      switch (m_.m(i + 1, j + 1)) {
        case 2: break;
        case 3: aij = aji = -1; break;
        case 4: aij = -2; aji = -1; break;
        case 6: aij = -3; aji = -1; break;
        case CoxeterMatrix::kInfinity: aij = aji = -2; break;
        default:
          throw Error(ErrorCode::UnsupportedBond,
                      "bond m=" + std::to_string(m_.m(i + 1, j + 1)) + " has no integral root datum");
      }
      cartan_[static_cast<size_t>(i) * r + j] = aij;
      cartan_[static_cast<size_t>(j) * r + i] = aji;
    }
  }
}

void CoxeterGroup::check_word(const Word& w) const {
  for (int s : w)
    if (s < 1 || s > rank())
      throw Error(ErrorCode::InvalidWord, "generator " + std::to_string(s) + " outside 1.." + std::to_string(rank()));
}

CoxElt CoxeterGroup::identity() const {
  CoxElt e(rank());
  for (int i = 0; i < rank(); ++i) e(i, i) = 1;
  return e;
}

CoxElt CoxeterGroup::element(const Word& w) const {
  check_word(w);
  CoxElt x = identity();
  for (int s : w) mul_right(x, s);
  return x;
}

void CoxeterGroup::mul_right(CoxElt& x, int s) const {
  // (x s) e_j = x e_j − a_sj x e_s.
  const int i = s - 1;
  const int r = rank();
  for (int j = 0; j < r; ++j) {
    if (j == i) continue;
    long long c = a(i, j);
    if (c == 0) continue;
    for (int row = 0; row < r; ++row) x(row, j) -= c * x(row, i);
  }
  for (int row = 0; row < r; ++row) x(row, i) = -x(row, i);
}

void CoxeterGroup::mul_left(CoxElt& x, int s) const {
  // s y = y − <α_s^∨, y> α_s, applied to every column y.
  const int i = s - 1;
  const int r = rank();
  for (int col = 0; col < r; ++col) {
    long long pairing = 0;
    for (int j = 0; j < r; ++j) pairing += a(i, j) * x(j, col);
    x(i, col) -= pairing;
  }
}

bool CoxeterGroup::is_right_descent(const CoxElt& x, int s) const {
  // x(α_s) is a root; it is negative iff some coordinate is negative.
  for (int row = 0; row < rank(); ++row)
    if (x(row, s - 1) != 0) return x(row, s - 1) < 0;
  return false;
}

Word CoxeterGroup::normal_form_of_inverse(CoxElt inv) const {
  Word out;
  for (;;) {
    int found = 0;
    for (int s = 1; s <= rank(); ++s)
      if (is_right_descent(inv, s)) {
        found = s;
        break;
      }
    if (!found) break;
    out.push_back(found);
    mul_right(inv, found);
  }
  return out;
}

Word CoxeterGroup::reduce(const Word& w) const { return normal_form_of_inverse(inverse_element(w)); }

bool CoxeterGroup::bruhat_leq(const Word& v, const Word& w) const {
  Word rw = reduce(w);
  CoxElt x = element(reduce(v));
  for (auto it = rw.rbegin(); it != rw.rend(); ++it)
    if (is_right_descent(x, *it)) mul_right(x, *it);
  return x == identity();
}

void CoxeterGroup::check_weights(const std::vector<long long>& weights) const {
  if (static_cast<int>(weights.size()) != rank())
    throw Error(ErrorCode::InvalidWeights, "need one weight per generator");
  for (int i = 1; i <= rank(); ++i)
    for (int j = i + 1; j <= rank(); ++j) {
      int mij = m_.m(i, j);
      if (mij != CoxeterMatrix::kInfinity && mij % 2 == 1 && weights[i - 1] != weights[j - 1])
        throw Error(ErrorCode::InvalidWeights, "weights of s_" + std::to_string(i) + " and s_" + std::to_string(j) +
                                                   " must agree across an odd bond");
    }
}

long long CoxeterGroup::generalized_length(const Word& w, const std::vector<long long>& weights) const {
  check_weights(weights);
  long long total = 0;
  for (int s : reduce(w)) total += weights[s - 1];
  return total;
}

bool CoxeterGroup::is_finite() const {
  // Positive definiteness of the cosine form via Cholesky.
  const int r = rank();
  std::vector<double> b(static_cast<size_t>(r) * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int mij = m_.m(i + 1, j + 1);
      b[static_cast<size_t>(i) * r + j] =
          i == j ? 1.0 : (mij == CoxeterMatrix::kInfinity ? -1.0 : -std::cos(std::numbers::pi / mij));
    }
  for (int j = 0; j < r; ++j) {
    double d = b[static_cast<size_t>(j) * r + j];
    for (int k = 0; k < j; ++k) d -= b[static_cast<size_t>(j) * r + k] * b[static_cast<size_t>(j) * r + k];
    if (d <= 1e-12) return false;
    d = std::sqrt(d);
    b[static_cast<size_t>(j) * r + j] = d;
    for (int i = j + 1; i < r; ++i) {
      double v = b[static_cast<size_t>(i) * r + j];
      for (int k = 0; k < j; ++k) v -= b[static_cast<size_t>(i) * r + k] * b[static_cast<size_t>(j) * r + k];
      b[static_cast<size_t>(i) * r + j] = v / d;
    }
  }
  return true;
}

Word CoxeterGroup::longest_element() const {
  if (!is_finite()) throw Error(ErrorCode::NotSpherical, "Coxeter group is infinite");
  CoxElt x = identity();
  Word w;
  for (bool grew = true; grew;) {
    grew = false;
    for (int s = 1; s <= rank(); ++s)
      if (!is_right_descent(x, s)) {
        mul_right(x, s);
        w.push_back(s);
        grew = true;
        break;
      }
  }
  return reduce(w);
}

bool CoxeterGroup::is_min_coset_rep(const Word& reduced_w, const std::vector<int>& J) const {
  CoxElt x = element(reduced_w);
  for (int s : J)
    if (is_right_descent(x, s)) return false;
  return true;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Word> CoxeterGroup::min_coset_reps(const std::vector<int>& J, int max_length,
                                               const std::vector<int>& ambient) const {
  check_word(J);
  std::vector<int> gens = ambient;
  if (gens.empty())
    for (int s = 1; s <= rank(); ++s) gens.push_back(s);
  check_word(gens);
  // Each layer entry keeps w and w^{-1}: left descents of w are read off w^{-1},
  // right descents (membership test for minimality) off w.
  struct Node {
    CoxElt w, inv;
  };
  std::vector<Node> layer{{identity(), identity()}};
  std::vector<Word> out{Word{}};
  std::unordered_set<CoxElt, CoxEltHash> seen{identity()};
  for (int len = 1; len <= max_length && !layer.empty(); ++len) {
    std::vector<Node> next;
    for (const Node& node : layer) {
      for (int s : gens) {
        if (is_right_descent(node.inv, s)) continue;
        Node cand = node;
        mul_left(cand.w, s);
        if (seen.count(cand.w)) continue;
        bool minimal = true;
        for (int t : J)
          if (is_right_descent(cand.w, t)) {
            minimal = false;
            break;
          }
        if (!minimal) continue;
        mul_right(cand.inv, s);
        seen.insert(cand.w);
        out.push_back(normal_form_of_inverse(cand.inv));
        next.push_back(std::move(cand));
      }
    }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

}  // namespace tb
