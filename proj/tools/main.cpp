#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "io.hpp"
#include "twinbuild/error.hpp"
#include "twinbuild/text.hpp"
#include "twinbuild/verify.hpp"

using namespace tbcli;

namespace {

constexpr const char* kSchema = "twinbuild-cli/1";

struct Options {
  std::string format = "json";
  int n = 0;
  std::uint64_t seed = 0;
  int deg = -1;
  int trials = 0;
  int k = -1;
  int window = 8;
  int max_length = -1;
  int panel_dim = 2;
  std::string type, w, v, quotient, ambient, method = "symbolic";
  std::string c, d, e, c0 = "standard+", d0 = "standard-", simplex, coords;
  std::string flag, weights, matrix, loop, scale = "1", suite;
};

struct Outcome {
  json result;
  std::string text;
};

using Handler = std::function<Outcome(const Options&)>;

// Usage problems detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string bracket(const tb::Word& w) { return "[" + tb::word_to_string(w) + "]"; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing required option ") + flag);
}

// Rank for chamber shorthands: --n, else the size of any explicit matrix among
// the chamber-valued options.
int rank_hint(const Options& o) {
  if (o.n > 0) return o.n;
  for (const std::string* t : {&o.c, &o.d, &o.e, &o.c0, &o.d0, &o.simplex}) {
    if (t->empty()) continue;
    json j = parse_value(*t);
    if (j.is_object() && j.contains("chamber")) j = j["chamber"];
    for (const char* key : {"rep", "basis"})
      if (j.is_object() && j.contains(key) && j[key].is_array()) return static_cast<int>(j[key].size());
  }
  return 0;
}

tb::Chamber need_chamber(const std::string& text, const char* flag, const Options& o) {
  require(text, flag);
  return chamber(parse_value(text), rank_hint(o));
}

Outcome coxeter_reduce(const Options& o) {
  require(o.type, "--type");
  tb::CoxeterGroup g = parse_type(o.type);
  tb::Word r = g.reduce(tb::parse_word(o.w));
  return {{{"word", r}, {"length", r.size()}}, bracket(r)};
}

Outcome coxeter_length(const Options& o) {
  require(o.type, "--type");
  int len = parse_type(o.type).length(tb::parse_word(o.w));
  return {{{"length", len}}, std::to_string(len)};
}

Outcome coxeter_bruhat(const Options& o) {
  require(o.type, "--type");
  bool leq = parse_type(o.type).bruhat_leq(tb::parse_word(o.v), tb::parse_word(o.w));
  return {{{"leq", leq}}, yes_no(leq)};
}

Outcome coxeter_cosets(const Options& o) {
  require(o.type, "--type");
  tb::CoxeterGroup g = parse_type(o.type);
  std::vector<int> J = parse_generators(o.quotient), amb = parse_generators(o.ambient);
  bool finite = g.is_finite() || (!amb.empty() && static_cast<int>(amb.size()) < g.rank());
  int max_len = o.max_length >= 0 ? o.max_length : (finite ? 1000 : 6);
  std::vector<tb::Word> reps = g.min_coset_reps(J, max_len, amb);
  json covers = json::array();
  std::ostringstream text;
  for (size_t i = 0; i < reps.size(); ++i) {
    text << bracket(reps[i]) << "\n";
    for (size_t j = 0; j < reps.size(); ++j)
      if (reps[j].size() == reps[i].size() + 1 && g.bruhat_leq(reps[i], reps[j])) covers.push_back({i, j});
  }
  for (const auto& c : covers)
    text << bracket(reps[c[0].get<size_t>()]) << " -> " << bracket(reps[c[1].get<size_t>()]) << "\n";
  std::string t = text.str();
  if (!t.empty()) t.pop_back();
  return {{{"representatives", reps}, {"covers", covers}, {"max_length", max_len}}, t};
}

Outcome cmd_delta(const Options& o) {
  tb::AffineWeylElt x = tb::delta(need_chamber(o.c, "--c", o), need_chamber(o.d, "--d", o));
  return {to_json(x), bracket(tb::affine_to_word(x))};
}

Outcome cmd_codelta(const Options& o) {
  tb::AffineWeylElt x = tb::codelta(need_chamber(o.c, "--c", o), need_chamber(o.d, "--d", o));
  return {to_json(x), bracket(tb::affine_to_word(x))};
}

Outcome cmd_opposite(const Options& o) {
  bool op = tb::opposite(need_chamber(o.c, "--c", o), need_chamber(o.d, "--d", o));
  return {{{"opposite", op}}, yes_no(op)};
}

Outcome cmd_project(const Options& o) {
  require(o.simplex, "--simplex");
  tb::Simplex X = simplex(parse_value(o.simplex), rank_hint(o));
  tb::Chamber C = need_chamber(o.c, "--c", o);
  tb::Chamber P = tb::project(X, C);
  tb::AffineWeylElt x = tb::delta(C, P);
  return {{{"chamber", to_json(P)}, {"delta", to_json(x)}}, tb::to_text(P.rep)};
}

Outcome cmd_project_twin(const Options& o) {
  require(o.simplex, "--simplex");
  tb::Simplex X = simplex(parse_value(o.simplex), rank_hint(o));
  tb::Chamber C = need_chamber(o.c, "--c", o);
  tb::Chamber P;
  if (o.method == "symbolic") P = tb::project_twin(X, C);
  else if (o.method == "closed") P = tb::project_twin_closed(X, C);
  else throw UsageError("--method must be symbolic or closed");
  tb::AffineWeylElt x = tb::codelta(C, P);
  return {{{"chamber", to_json(P)}, {"codelta", to_json(x)}}, tb::to_text(P.rep)};
}

Outcome coords_encode(const Options& o) {
  tb::Chamber C0 = need_chamber(o.c0, "--c0", o), D0 = need_chamber(o.d0, "--d0", o);
  std::vector<tb::GaussRat> c = tb::encode_coords(C0, D0, need_chamber(o.e, "--e", o), tb::parse_word(o.w));
  json arr = json::array();
  std::string text;
  for (const auto& x : c) {
    arr.push_back(x.str());
    text += (text.empty() ? "" : " ") + x.str();
  }
  return {{{"coords", arr}}, text};
}

Outcome coords_decode(const Options& o) {
  tb::Chamber C0 = need_chamber(o.c0, "--c0", o), D0 = need_chamber(o.d0, "--d0", o);
  json arr = o.coords.empty() ? json::array() : parse_value(o.coords);
  if (!arr.is_array()) throw tb::Error(tb::ErrorCode::Parse, "--coords must be a JSON array");
  std::vector<tb::GaussRat> c;
  for (const auto& x : arr) c.push_back(gauss(x));
  tb::Chamber E = tb::decode_coords(C0, D0, tb::parse_word(o.w), c);
  return {{{"chamber", to_json(E)}}, tb::to_text(E.rep)};
}

Outcome poincare_schubert(const Options& o) {
  require(o.type, "--type");
  tb::CoxeterGroup g = parse_type(o.type);
  std::vector<int> J = parse_generators(o.quotient);
  tb::Word w;
  if (o.w == "\x01") {
    if (!g.is_finite()) throw UsageError("--w is required for affine types");
    w = g.longest_element();
  } else {
    w = tb::parse_word(o.w);
  }
  long long top = tb::cell_dim(g, w, J, o.panel_dim);
  int deg = o.deg >= 0 ? o.deg : static_cast<int>(top);
  tb::PoincareSeries p = tb::schubert_poincare(g, J, w, deg, o.panel_dim);
  json r = to_json(p);
  r["cell_dim"] = top;
  r["representative"] = tb::min_coset_rep(g, w, J);
  return {r, p.str()};
}

Outcome poincare_loop(const Options& o) {
  tb::PoincareSeries p = tb::loop_poincare(o.n, o.deg >= 0 ? o.deg : 10);
  return {to_json(p), p.str()};
}

Outcome poincare_bott(const Options& o) {
  if (o.k < 0) throw UsageError("missing required option --k");
  tb::BottComparison b = tb::bott_comparison(o.k, o.deg >= 0 ? o.deg : 2 * o.k - 1);
  return {{{"agree", b.agree}, {"grassmannian", to_json(b.grassmannian)}, {"vertices", to_json(b.vertices)}},
          yes_no(b.agree)};
}

json eigen_json(const tb::FlagRecovery& r) {
  json ev = json::array();
  for (const auto& x : r.eigenvalues) ev.push_back(x.str());
  return {{"flag", to_json(r.flag)}, {"eigenvalues", ev}, {"multiplicities", r.multiplicities}};
}

Outcome veronese_spherical(const Options& o) {
  if (!o.matrix.empty()) {
    tb::FlagRecovery r = tb::recover_flag(gauss_matrix(parse_value(o.matrix)));
    std::string types;
    for (int t : r.flag.types()) types += (types.empty() ? "" : " ") + std::to_string(t);
    return {eigen_json(r), "flag of type [" + types + "]"};
  }
  require(o.flag, "--flag or --matrix");
  tb::SubspaceFlag U = flag(parse_value(o.flag));
  std::vector<tb::GaussRat> w;
  if (o.weights.empty()) {
    for (size_t i = 0; i < U.parts.size(); ++i) w.push_back(tb::GaussRat::frac(1, static_cast<long>(U.parts.size())));
  } else {
    json arr = parse_value(o.weights);
    if (!arr.is_array()) throw tb::Error(tb::ErrorCode::Parse, "--weights must be a JSON array");
    for (const auto& x : arr) w.push_back(gauss(x));
  }
  tb::QMatrix X = tb::spherical_veronese(U, w);
  json r = eigen_json(tb::recover_flag(X));
  r["matrix"] = to_json(X);
  std::ostringstream text;
  for (int i = 0; i < X.rows(); ++i) {
    for (int j = 0; j < X.cols(); ++j) text << (j ? " " : "") << X(i, j).str();
    if (i + 1 < X.rows()) text << "\n";
  }
  return {r, text.str()};
}

Outcome veronese_affine(const Options& o) {
  tb::LaurentMatrix g;
  if (!o.loop.empty()) {
    g = laurent_matrix(parse_value(o.loop));
  } else {
    if (o.n < 2) throw UsageError("--loop or --n is required");
    g = tb::LaurentMatrix::identity(o.n);
  }
  tb::LaurentMatrix X;
  if (!o.weights.empty()) {
    json arr = parse_value(o.weights);
    std::vector<std::pair<int, tb::GaussRat>> w;
    if (!arr.is_array()) throw tb::Error(tb::ErrorCode::Parse, "--weights must be [[type, weight], ...]");
    for (const auto& p : arr) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer())
        throw tb::Error(tb::ErrorCode::Parse, "--weights must be [[type, weight], ...]");
      w.emplace_back(p[0].get<int>(), gauss(p[1]));
    }
    X = tb::barycentric_affine_veronese(g, w);
  } else {
    if (o.k < 0) throw UsageError("--k or --weights is required");
    X = tb::affine_veronese_vertex(g, o.k);
  }
  return {{{"matrix", to_json(X)}}, tb::to_text(X)};
}

Outcome veronese_caveat(const Options& o) {
  tb::GaussRat scale = tb::GaussRat::parse(o.scale);
  bool free = tb::caveat_check(o.n, o.window, scale);
  return {{{"kernel_free", free}, {"operator", to_json(tb::caveat_operator(o.n, scale))}}, yes_no(free)};
}

Outcome cmd_verify(const Options& o, int& exit_code) {
  std::vector<std::string> names;
  if (o.suite == "all") names = tb::verify_suite_names();
  else names.push_back(o.suite);
  json suites = json::array();
  int passed = 0, failed = 0;
  std::ostringstream text;
  for (const auto& name : names) {
    tb::SuiteResult r = tb::run_verify_suite(name, o.seed, o.trials);
    passed += r.passed;
    failed += r.failed;
    suites.push_back({{"suite", r.suite}, {"seed", r.seed}, {"passed", r.passed}, {"failed", r.failed},
                      {"failures", r.failures}});
    text << r.suite << ": " << r.passed << " passed, " << r.failed << " failed\n";
    for (const auto& f : r.failures) text << "  " << f << "\n";
  }
  text << "total: " << passed << " passed, " << failed << " failed";
  if (failed) exit_code = 1;
  return {{{"suites", suites}, {"passed", passed}, {"failed", failed}}, text.str()};
}

json params_of(const CLI::App* leaf) {
  json p = json::object();
  for (const CLI::Option* opt : leaf->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string name = opt->get_name(false, true);
    while (!name.empty() && name[0] == '-') name.erase(0, 1);
    if (opt->get_type_size() == 0) p[name] = true;
    else p[name] = opt->as<std::string>();
  }
  return p;
}

int emit(const Options& o, const std::string& command, const json& params, const Outcome* out,
         const std::string& code, const std::string& message, int exit_code) {
  if (o.format == "text") {
    if (out) std::cout << out->text << "\n";
    else std::cerr << "error: " << code << ": " << message << "\n";
    return exit_code;
  }
  json env = {{"schema", kSchema}, {"command", command}, {"params", params}};
  env["result"] = out ? out->result : json(nullptr);
  env["error"] = out ? json(nullptr) : json{{"code", code}, {"message", message}};
  std::cout << env.dump(2) << "\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twin building computations over Laurent polynomial lattices", "twinbuild"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::map<CLI::App*, std::pair<std::string, std::function<Outcome(const Options&, int&)>>> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& path, const std::string& desc,
                  std::function<Outcome(const Options&, int&)> fn) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    leaves[sub] = {path, std::move(fn)};
    return sub;
  };
  auto plain = [](Handler h) { return [h](const Options& opt, int&) { return h(opt); }; };

  CLI::App* cox = app.add_subcommand("coxeter", "Coxeter group words and cosets");
  cox->require_subcommand(1);
  cox->fallthrough();
  auto* red = leaf(cox, "reduce", "coxeter reduce", "Normal form of a word", plain(coxeter_reduce));
  red->add_option("--type", o.type, "A<r>, ~A<r> or At<r>")->required();
  red->add_option("--w", o.w, "Word, e.g. \"1 2 1\"");
  auto* len = leaf(cox, "length", "coxeter length", "Length of a word", plain(coxeter_length));
  len->add_option("--type", o.type)->required();
  len->add_option("--w", o.w);
  auto* bru = leaf(cox, "bruhat", "coxeter bruhat", "Is v <= w in the Bruhat order", plain(coxeter_bruhat));
  bru->add_option("--type", o.type)->required();
  bru->add_option("--v", o.v);
  bru->add_option("--w", o.w);
  auto* cos = leaf(cox, "cosets", "coxeter cosets", "Minimal coset representatives and covers", plain(coxeter_cosets));
  cos->add_option("--type", o.type)->required();
  cos->add_option("--quotient,--J", o.quotient, "Generators of W_J");
  cos->add_option("--ambient", o.ambient, "Generators of the ambient parabolic (default all)");
  cos->add_option("--max-length", o.max_length);

  for (auto [name, fn] : {std::pair{"delta", cmd_delta}, {"codelta", cmd_codelta}, {"opposite", cmd_opposite}}) {
    auto* s = leaf(&app, name, name, std::string(name) + " of two chambers", plain(fn));
    s->add_option("--c", o.c, "Chamber: JSON object or standard+/standard-/base+/base-")->required();
    s->add_option("--d", o.d)->required();
    s->add_option("--n", o.n, "Rank for chamber shorthands");
  }
  for (auto [name, fn] : {std::pair{"project", cmd_project}, {"project-twin", cmd_project_twin}}) {
    auto* s = leaf(&app, name, name, "Projection of a chamber onto a residue", plain(fn));
    s->add_option("--simplex", o.simplex, "{\"chamber\": ..., \"types\": [...]}")->required();
    s->add_option("--c", o.c)->required();
    s->add_option("--n", o.n);
    if (std::string(name) == "project-twin") s->add_option("--method", o.method, "symbolic or closed");
  }

  CLI::App* crd = app.add_subcommand("coords", "Schubert cell coordinates");
  crd->require_subcommand(1);
  crd->fallthrough();
  auto* enc = leaf(crd, "encode", "coords encode", "Coordinates of a chamber", plain(coords_encode));
  auto* dec = leaf(crd, "decode", "coords decode", "Chamber from coordinates", plain(coords_decode));
  for (auto* s : {enc, dec}) {
    s->add_option("--c0", o.c0);
    s->add_option("--d0", o.d0);
    s->add_option("--w", o.w);
    s->add_option("--n", o.n);
  }
  enc->add_option("--e", o.e)->required();
  dec->add_option("--coords", o.coords, "JSON array of coordinates");

  CLI::App* poi = app.add_subcommand("poincare", "Poincare series of cell decompositions");
  poi->require_subcommand(1);
  poi->fallthrough();
  auto* sch = leaf(poi, "schubert", "poincare schubert", "Schubert variety of wW_J", plain(poincare_schubert));
  sch->add_option("--type", o.type)->required();
  sch->add_option("--quotient,--J", o.quotient);
  o.w = "\x01";
  sch->add_option("--w", o.w, "Word (default: longest element, finite types)");
  sch->add_option("--deg", o.deg, "Truncation degree");
  sch->add_option("--panel-dim", o.panel_dim);
  auto* lp = leaf(poi, "loop", "poincare loop", "Algebraic loop space", plain(poincare_loop));
  lp->add_option("--n", o.n)->required();
  lp->add_option("--deg", o.deg);
  auto* bott = leaf(poi, "bott-check", "poincare bott-check", "Grassmannian versus vertex series", plain(poincare_bott));
  bott->add_option("--k", o.k)->required();
  bott->add_option("--deg", o.deg);

  CLI::App* ver = app.add_subcommand("veronese", "Veronese representations");
  ver->require_subcommand(1);
  ver->fallthrough();
  auto* sph = leaf(ver, "spherical", "veronese spherical", "Flag to hermitian matrix and back", plain(veronese_spherical));
  sph->add_option("--flag", o.flag, "JSON list of subspaces, each a list of spanning rows");
  sph->add_option("--weights", o.weights);
  sph->add_option("--matrix", o.matrix, "Recover the flag of this matrix instead");
  auto* aff = leaf(ver, "affine", "veronese affine", "Gauge image of a vertex", plain(veronese_affine));
  aff->add_option("--loop", o.loop);
  aff->add_option("--n", o.n);
  aff->add_option("--k", o.k);
  aff->add_option("--weights", o.weights, "[[type, weight], ...]");
  auto* cav = leaf(ver, "caveat", "veronese caveat", "Truncated eigenvector search", plain(veronese_caveat));
  cav->add_option("--n", o.n)->required();
  cav->add_option("--window,--N", o.window);
  cav->add_option("--scale", o.scale);

  auto* vfy = leaf(&app, "verify", "verify", "Randomized property suites", cmd_verify);
  std::vector<std::string> suite_names = tb::verify_suite_names();
  suite_names.push_back("all");
  vfy->add_option("suite", o.suite)->required()->check(CLI::IsMember(suite_names));
  vfy->add_option("--seed", o.seed);
  vfy->add_option("--trials", o.trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit(o, "", json::object(), nullptr, "usage", e.what(), 2);
  }

  for (auto& [sub, entry] : leaves) {
    if (!sub->parsed()) continue;
    json params = params_of(sub);
    int exit_code = 0;
    try {
      Outcome out = entry.second(o, exit_code);
      return emit(o, entry.first, params, &out, "", "", exit_code);
    } catch (const UsageError& e) {
      return emit(o, entry.first, params, nullptr, "usage", e.what(), 2);
    } catch (const tb::Error& e) {
      bool usage = e.code() == tb::ErrorCode::Parse;
      return emit(o, entry.first, params, nullptr, tb::error_code_name(e.code()), e.what(), usage ? 2 : 3);
    } catch (const json::exception& e) {
      return emit(o, entry.first, params, nullptr, "Parse", e.what(), 2);
    }
  }
  return emit(o, "", json::object(), nullptr, "usage", "no command given", 2);
}
