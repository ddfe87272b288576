#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(const std::vector<std::string>& args) {
  std::string cmd = quote(TWINBUILD_CLI);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

const json& schema() {
  static const json s = [] {
    std::ifstream in(TWINBUILD_SCHEMA);
    return json::parse(in);
  }();
  return s;
}

// Subset of JSON Schema used by the published schema: type, const, enum,
// required, properties, items, oneOf, allOf and local $ref.
bool valid(const json& v, const json& s) {
  if (s.contains("$ref")) {
    std::string ref = s["$ref"].get<std::string>();
    return valid(v, schema()[json::json_pointer(ref.substr(1))]);
  }
  if (s.contains("type")) {
    auto is = [&](const std::string& t) {
      if (t == "object") return v.is_object();
      if (t == "array") return v.is_array();
      if (t == "string") return v.is_string();
      if (t == "integer") return v.is_number_integer();
      if (t == "boolean") return v.is_boolean();
      if (t == "null") return v.is_null();
      return false;
    };
    bool any = false;
    if (s["type"].is_array()) {
      for (const auto& t : s["type"]) any = any || is(t.get<std::string>());
    } else {
      any = is(s["type"].get<std::string>());
    }
    if (!any) return false;
  }
  if (s.contains("const") && v != s["const"]) return false;
  if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end()) return false;
  if (s.contains("required"))
    for (const auto& k : s["required"])
      if (!v.is_object() || !v.contains(k.get<std::string>())) return false;
  if (s.contains("properties") && v.is_object())
    for (const auto& [k, sub] : s["properties"].items())
      if (v.contains(k) && !valid(v[k], sub)) return false;
  if (s.contains("items") && v.is_array())
    for (const auto& x : v)
      if (!valid(x, s["items"])) return false;
  if (s.contains("allOf"))
    for (const auto& sub : s["allOf"])
      if (!valid(v, sub)) return false;
  if (s.contains("oneOf")) {
    int hits = 0;
    for (const auto& sub : s["oneOf"]) hits += valid(v, sub);
    if (hits != 1) return false;
  }
  return true;
}

// Runs a command expected to succeed and checks the envelope and result shape.
json ok(const std::vector<std::string>& args) {
  Run r = run(args);
  INFO(r.out);
  REQUIRE(r.status == 0);
  json env = json::parse(r.out);
  CHECK(valid(env, schema()));
  CHECK(env["error"].is_null());
  const std::string cmd = env["command"].get<std::string>();
  REQUIRE(schema()["x-results"].contains(cmd));
  CHECK(valid(env["result"], schema()["x-results"][cmd]));
  return env["result"];
}

json failed(const std::vector<std::string>& args, int status) {
  Run r = run(args);
  INFO(r.out);
  CHECK(r.status == status);
  json env = json::parse(r.out);
  CHECK(valid(env, schema()));
  CHECK(env["result"].is_null());
  return env["error"];
}

const std::string kStdPlus3 = R"({"side":"plus","basis":[["1","0","0"],["0","1","0"],["0","0","1"]]})";

}  // namespace

TEST_CASE("documented examples") {
  Run r = run({"poincare", "schubert", "--type", "A3", "--quotient", "J=2,3", "--w", "", "--format", "text"});
  CHECK(r.status == 0);
  CHECK(r.out == "1\n");
  CHECK(ok({"poincare", "schubert", "--type", "A3", "--quotient", "J=2,3", "--w", ""})["series"] == "1");
  CHECK(ok({"poincare", "loop", "--n", "4", "--deg", "6"})["coefficients"] == json::array({1, 0, 1, 0, 2, 0, 3}));
  CHECK(ok({"codelta", "--c", "standard-", "--d", "standard+", "--n", "3"})["word"] == json::array());
}

TEST_CASE("coxeter commands") {
  CHECK(ok({"coxeter", "reduce", "--type", "A2", "--w", "1 2 1 2"})["word"] == json::array({2, 1}));
  CHECK(ok({"coxeter", "length", "--type", "~A2", "--w", "1 2 3 1"})["length"] == 4);
  CHECK(ok({"coxeter", "bruhat", "--type", "A3", "--v", "2", "--w", "1 2 3"})["leq"] == true);
  CHECK(ok({"coxeter", "bruhat", "--type", "A3", "--v", "2 1", "--w", "1 2 3"})["leq"] == false);
  json c = ok({"coxeter", "cosets", "--type", "~A3", "--J", "2,4", "--ambient", "1,2,4"});
  CHECK(c["representatives"] == json::parse("[[],[1],[2,1],[4,1],[2,4,1],[1,2,4,1]]"));
  CHECK(c["covers"].size() == 6);
  CHECK(ok({"coxeter", "cosets", "--type", "A3", "--J", "1,3"})["representatives"].size() == 6);
}

TEST_CASE("chamber commands and round trips") {
  CHECK(ok({"delta", "--c", "standard+", "--d", kStdPlus3, "--n", "3"})["length"] == 0);
  CHECK(ok({"opposite", "--c", "standard-", "--d", "standard+", "--n", "2"})["opposite"] == true);
  CHECK(ok({"opposite", "--c", "base-", "--d", R"({"side":"plus","rep":[["0","1"],["-1","0"]]})"})["opposite"] ==
        false);

  json dec = ok({"coords", "decode", "--n", "3", "--w", "1 2 3", "--coords", R"(["1","i","-1/2"])"});
  json ch = dec["chamber"];
  CHECK(ok({"coords", "encode", "--n", "3", "--w", "1 2 3", "--e", ch.dump()})["coords"] ==
        json::parse(R"x(["1","(i)","-1/2"])x"));
  CHECK(ok({"delta", "--c", "standard+", "--d", ch.dump(), "--n", "3"})["word"] == json::array({1, 2, 3}));
  // matrices echo back identically after parse and print
  json same = ok({"coords", "decode", "--c0", ch.dump(), "--n", "3", "--w", ""});
  CHECK(same["chamber"]["rep"] == ch["rep"]);
  CHECK(same["chamber"]["basis"] == ch["basis"]);

  json simplex = {{"chamber", "standard+"}, {"types", {0, 1}}};
  json p = ok({"project", "--simplex", simplex.dump(), "--c", ch.dump(), "--n", "3"});
  CHECK(p["delta"]["length"].get<int>() <= 3);
  json pt = ok({"project-twin", "--simplex", simplex.dump(), "--c", "standard-", "--n", "3"});
  json pc = ok({"project-twin", "--simplex", simplex.dump(), "--c", "standard-", "--n", "3", "--method", "closed"});
  CHECK(pt["codelta"] == pc["codelta"]);
  CHECK(pt["chamber"]["basis"] == pc["chamber"]["basis"]);
}

TEST_CASE("poincare and veronese commands") {
  json b = ok({"poincare", "bott-check", "--k", "2", "--deg", "5"});
  CHECK(b["agree"] == true);
  CHECK(ok({"poincare", "bott-check", "--k", "2", "--deg", "6"})["agree"] == false);
  CHECK(ok({"poincare", "schubert", "--type", "A3", "--J", "1,3"})["series"] == "1 + t^2 + 2*t^4 + t^6 + t^8");

  json s = ok({"veronese", "spherical", "--flag", R"([[["1","0"]]])", "--weights", R"(["1"])"});
  CHECK(s["matrix"] == json::parse(R"([["-1/2","0"],["0","1/2"]])"));
  json back = ok({"veronese", "spherical", "--matrix", s["matrix"].dump()});
  CHECK(back["flag"] == s["flag"]);
  CHECK(back["multiplicities"] == json::array({1, 1}));

  json a = ok({"veronese", "affine", "--loop", R"([["z","0"],["0","z^-1"]])", "--k", "0"});
  CHECK(a["matrix"] == json::parse(R"([["1","0"],["0","-1"]])"));
  CHECK(ok({"veronese", "affine", "--n", "2", "--weights", R"([[0,"1/2"],[1,"1/2"]])"})["matrix"] ==
        json::parse(R"([["1/4","0"],["0","-1/4"]])"));
  CHECK(ok({"veronese", "caveat", "--n", "2", "--N", "8"})["kernel_free"] == true);
}

TEST_CASE("verify is reproducible") {
  Run a = run({"verify", "all", "--seed", "0", "--trials", "2"});
  Run b = run({"verify", "all", "--seed", "0", "--trials", "2"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  json r = ok({"verify", "delta", "--seed", "7", "--trials", "5"});
  CHECK(r["passed"] == 5);
  CHECK(r["failed"] == 0);
  Run t = run({"verify", "cosets", "--format", "text"});
  CHECK(t.out.find("cosets: 1 passed, 0 failed") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(failed({"coxeter", "reduce", "--w", "1"}, 2)["code"] == "usage");
  CHECK(failed({"coxeter", "reduce", "--type", "B3", "--w", "1"}, 2)["code"] == "parse-error");
  CHECK(failed({"verify", "nonsense"}, 2)["code"] == "usage");
  CHECK(failed({"delta", "--c", "{bad", "--d", "standard+", "--n", "2"}, 2)["code"] == "parse-error");
  CHECK(failed({"delta", "--c", "standard+", "--d", "standard-", "--n", "2"}, 3)["code"] == "side-mismatch");
  CHECK(failed({"codelta", "--c", R"({"side":"plus","rep":[["z","0"],["0","1"]]})", "--d", "base-"}, 3)["code"] ==
        "not-special");
  CHECK(failed({"veronese", "spherical", "--matrix", R"([["1","1"],["1","-1"]])"}, 3)["message"].is_string());
  Run t = run({"delta", "--c", "standard+", "--d", "standard-", "--n", "2", "--format", "text"});
  CHECK(t.status == 3);
  CHECK(t.out.empty());
}
