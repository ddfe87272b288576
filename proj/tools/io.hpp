#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "twinbuild/building.hpp"
#include "twinbuild/cells.hpp"
#include "twinbuild/veronese.hpp"

namespace tbcli {

using nlohmann::json;

// Option text -> JSON: values starting with '[', '{' or '"' are parsed as JSON,
// anything else is taken as a plain string.
json parse_value(const std::string& text);

// "A3" (finite, rank 3) or "~A3" / "At3" (affine, rank 4).
tb::CoxeterGroup parse_type(const std::string& text);
// "J=2,3", "2,3", "2 3" or "" (empty set).
std::vector<int> parse_generators(const std::string& text);

tb::LaurentMatrix laurent_matrix(const json& j);
tb::QMatrix gauss_matrix(const json& j);
tb::GaussRat gauss(const json& j);
// "standard+", "standard-", "base+", "base-" (need n), or an object with
// "side" and one of "rep" / "basis".
tb::Chamber chamber(const json& j, int n);
// {"chamber": ..., "types": [...]}
tb::Simplex simplex(const json& j, int n);
tb::SubspaceFlag flag(const json& j);

json to_json(const tb::GaussRat& x);
json to_json(const tb::LaurentMatrix& m);
json to_json(const tb::QMatrix& m);
json to_json(const tb::Chamber& C);
json word_json(const tb::Word& w);
json to_json(const tb::AffineWeylElt& x);
json to_json(const tb::PoincareSeries& p);
json to_json(const tb::SubspaceFlag& U);

}  // namespace tbcli
