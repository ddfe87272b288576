#include "twinbuild/text.hpp"

#include <cctype>

namespace tb {

namespace {

std::string monomial_text(const GaussRat& c, int e, bool leading) {
  std::string out;
  GaussRat coef = c;
  if (!leading) {
    if (c.is_real() && sgn(c.re()) < 0) {
      out = " - ";
      coef = -c;
    } else {
      out = " + ";
    }
  }
  if (e == 0) return out + coef.str();
  std::string zpart = e == 1 ? "z" : "z^" + std::to_string(e);
  if (coef.is_one()) return out + zpart;
  if (coef == GaussRat(-1)) return out + "-" + zpart;
  return out + coef.str() + "*" + zpart;
}

int parse_exponent(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::Parse, "missing exponent");
  size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') pos = 1;
  if (pos == s.size()) throw Error(ErrorCode::Parse, "missing exponent");
  for (size_t k = pos; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw Error(ErrorCode::Parse, "bad exponent '" + s + "'");
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "exponent out of range '" + s + "'");
  }
}

LaurentPoly parse_term(const std::string& term) {
  std::string s = term;
  int sign = 1;
  while (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    if (s[0] == '-') sign = -sign;
    s.erase(0, 1);
  }
  if (s.empty()) throw Error(ErrorCode::Parse, "empty term");
  int depth = 0;
  size_t zpos = std::string::npos;
  for (size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    if (s[k] == ')') --depth;
    if (depth == 0 && s[k] == 'z') {
      zpos = k;
      break;
    }
  }
  GaussRat coef(1);
  int e = 0;
  if (zpos == std::string::npos) {
    coef = GaussRat::parse(s);
  } else {
    std::string cpart = s.substr(0, zpos);
    std::string epart = s.substr(zpos + 1);
    if (!cpart.empty()) {
      if (cpart.back() != '*') throw Error(ErrorCode::Parse, "expected '*' before z in '" + term + "'");
      cpart.pop_back();
      if (cpart.empty()) throw Error(ErrorCode::Parse, "empty coefficient in '" + term + "'");
      coef = GaussRat::parse(cpart);
    }
    if (epart.empty()) {
      e = 1;
    } else {
      if (epart[0] != '^') throw Error(ErrorCode::Parse, "expected '^' after z in '" + term + "'");
      e = parse_exponent(epart.substr(1));
    }
  }
  return LaurentPoly::monomial(sign < 0 ? -coef : coef, e);
}

}  // namespace

std::string to_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool leading = true;
  for (const auto& [e, c] : p.terms()) {
    out += monomial_text(c, e, leading);
    leading = false;
  }
  return out;
}

LaurentPoly parse_laurent(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty polynomial");
  // Split at top-level '+'/'-' that do not follow '^', '(' or another sign.
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (size_t k = 0; k < s.size(); ++k) {
    char ch = s[k];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw Error(ErrorCode::Parse, "unbalanced parentheses");
    bool split = depth == 0 && (ch == '+' || ch == '-') && !cur.empty() && cur.back() != '^' &&
                 cur.back() != '*' && cur.back() != '+' && cur.back() != '-';
    if (split) {
      terms.push_back(cur);
      cur.clear();
    }
    cur.push_back(ch);
  }
  if (depth != 0) throw Error(ErrorCode::Parse, "unbalanced parentheses");
  terms.push_back(cur);
  LaurentPoly p;
  for (const auto& t : terms) p += parse_term(t);
  return p;
}

MatrixRows to_rows(const LaurentMatrix& m) {
  MatrixRows rows(static_cast<size_t>(m.n()));
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) rows[i].push_back(to_text(m(i, j)));
  return rows;
}

LaurentMatrix from_rows(const MatrixRows& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw Error(ErrorCode::Parse, "empty matrix");
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw Error(ErrorCode::Parse, "matrix is not square");
    for (int j = 0; j < n; ++j) m(i, j) = parse_laurent(rows[i][j]);
  }
  return m;
}

std::string to_text(const LaurentMatrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.n(); ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < m.n(); ++j) {
      if (j) out += ", ";
      out += to_text(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace tb
