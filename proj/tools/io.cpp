#include "io.hpp"

#include <algorithm>
#include <cctype>

#include "twinbuild/error.hpp"
#include "twinbuild/text.hpp"

namespace tbcli {

using tb::Error;
using tb::ErrorCode;

json parse_value(const std::string& text) {
  size_t p = text.find_first_not_of(" \t\n");
  if (p != std::string::npos && (text[p] == '[' || text[p] == '{' || text[p] == '"')) {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
    }
  }
  return json(text);
}

tb::CoxeterGroup parse_type(const std::string& text) {
  std::string t = text;
  bool affine = false;
  if (!t.empty() && t[0] == '~') {
    affine = true;
    t = t.substr(1);
  }
  if (t.size() >= 2 && t[0] == 'A' && t[1] == 't') {
    affine = true;
    t = "A" + t.substr(2);
  }
  if (t.size() < 2 || t[0] != 'A') throw Error(ErrorCode::Parse, "type must look like A3, ~A3 or At3, got '" + text + "'");
  int r = 0;
  for (size_t i = 1; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i])) || r > 1000)
      throw Error(ErrorCode::Parse, "bad rank in type '" + text + "'");
    r = r * 10 + (t[i] - '0');
  }
  if (r < 1) throw Error(ErrorCode::InvalidRank, "rank must be positive");
  return tb::CoxeterGroup(tb::coxeter_matrix(affine ? tb::CoxeterKind::AffineA : tb::CoxeterKind::FiniteA, r + 1));
}

std::vector<int> parse_generators(const std::string& text) {
  std::string t = text;
  if (t.rfind("J=", 0) == 0 || t.rfind("K=", 0) == 0) t = t.substr(2);
  return tb::parse_word(t);
}

namespace {

std::string cell_text(const json& e) {
  if (e.is_string()) return e.get<std::string>();
  if (e.is_number_integer()) return std::to_string(e.get<long long>());
  throw Error(ErrorCode::Parse, "matrix entries must be strings or integers");
}

std::vector<std::vector<std::string>> rows_of(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::Parse, "matrix must be a nonempty array of rows");
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw Error(ErrorCode::Parse, "matrix rows must be arrays");
    auto& row = rows.emplace_back();
    for (const auto& e : r) row.push_back(cell_text(e));
  }
  return rows;
}

}  // namespace

tb::LaurentMatrix laurent_matrix(const json& j) { return tb::from_rows(rows_of(j)); }

tb::GaussRat gauss(const json& j) { return tb::GaussRat::parse(cell_text(j)); }

tb::QMatrix gauss_matrix(const json& j) {
  auto rows = rows_of(j);
  const int r = static_cast<int>(rows.size()), c = static_cast<int>(rows[0].size());
  tb::QMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error(ErrorCode::Parse, "ragged matrix");
    for (int k = 0; k < c; ++k) m(i, k) = tb::GaussRat::parse(rows[i][k]);
  }
  return m;
}

tb::Chamber chamber(const json& j, int n) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (n < 2) throw Error(ErrorCode::InvalidRank, "--n (at least 2) is needed for '" + s + "'");
    if (s == "standard+") return tb::standard_chamber(tb::Side::Plus, n);
    if (s == "standard-") return tb::standard_chamber(tb::Side::Minus, n);
    if (s == "base+") return tb::base_chamber(tb::Side::Plus, n);
    if (s == "base-") return tb::base_chamber(tb::Side::Minus, n);
    throw Error(ErrorCode::Parse, "unknown chamber shorthand '" + s + "'");
  }
  if (!j.is_object() || !j.contains("side")) throw Error(ErrorCode::Parse, "chamber must be an object with a side");
  tb::Side side = tb::parse_side(j.at("side").get<std::string>());
  if (j.contains("rep")) return tb::Chamber{side, tb::normalize_rep(laurent_matrix(j.at("rep")))};
  if (j.contains("basis")) return tb::chamber_from_basis(side, laurent_matrix(j.at("basis")));
  throw Error(ErrorCode::Parse, "chamber needs 'rep' or 'basis'");
}

tb::Simplex simplex(const json& j, int n) {
  if (!j.is_object() || !j.contains("chamber") || !j.contains("types"))
    throw Error(ErrorCode::Parse, "simplex must be {\"chamber\": ..., \"types\": [...]}");
  tb::Simplex X{chamber(j.at("chamber"), n), {}};
  for (const auto& t : j.at("types")) {
    if (!t.is_number_integer()) throw Error(ErrorCode::Parse, "simplex types must be integers");
    X.types.push_back(t.get<int>());
  }
  std::sort(X.types.begin(), X.types.end());
  for (int t : X.types)
    if (t < 0 || t >= X.chamber.n()) throw Error(ErrorCode::InvalidArgument, "simplex type out of range");
  return X;
}

tb::SubspaceFlag flag(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "flag must be an array of subspaces (lists of rows)");
  std::vector<tb::Subspace> parts;
  for (const auto& s : j) parts.push_back(tb::span_of(gauss_matrix(s)));
  return tb::make_flag(parts);
}

json to_json(const tb::GaussRat& x) { return x.str(); }

json to_json(const tb::LaurentMatrix& m) { return tb::to_rows(m); }

json to_json(const tb::QMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    rows.push_back(row);
  }
  return rows;
}

json to_json(const tb::Chamber& C) {
  return {{"side", tb::side_name(C.side)}, {"rep", to_json(C.rep)}, {"basis", to_json(tb::canonical_basis(C))}};
}

json word_json(const tb::Word& w) { return w; }

json to_json(const tb::AffineWeylElt& x) {
  tb::Word w = tb::affine_to_word(x);
  return {{"word", w}, {"length", x.length()}};
}

json to_json(const tb::PoincareSeries& p) {
  return {{"coefficients", p.coeffs}, {"truncation", p.truncation}, {"series", p.str()}};
}

json to_json(const tb::SubspaceFlag& U) {
  json parts = json::array();
  for (const auto& V : U.parts) parts.push_back(to_json(V.basis));
  return parts;
}

}  // namespace tbcli
