#include <algorithm>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcluster/coloured_roots.hpp"
#include "mcluster/complex.hpp"
#include "mcluster/derived.hpp"
#include "mcluster/json_io.hpp"
#include "mcluster/mcluster_category.hpp"
#include "mcluster/verify.hpp"

using namespace mcluster;

namespace {

// Thrown for bad user input after CLI11 has accepted the flags.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  int m = 1;
  std::string oracle = "combinatorial";
  std::string out;
  std::string format;
  std::string window = "0:0";
  std::vector<std::string> roots;
};

// CLI11 would read "-e2" as a flag, so such tokens are renamed before
// parsing and restored here.
constexpr const char* kNegTag = "~";

std::string restore_token(const std::string& s) {
  return s.rfind(kNegTag, 0) == 0 ? "-" + s.substr(1) : s;
}

RootSystem make_root_system(const Options& o) {
  try {
    DynkinType t = DynkinType::parse(o.type);
    t.validate();
    return RootSystem::build(t);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ColouredRoot parse_root(const RootSystem& rs, int m, const std::string& text) {
  try {
    ColouredRoot x = parse_coloured_root(restore_token(text), rs.rank());
    validate_coloured(rs, m, x);
    return x;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot open " + o.out);
  f << text;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError("format '" + o.format + "' is not available for this command");
}

int cmd_enumerate(Options o) {
  if (o.format.empty()) o.format = "json";
  require_format(o, {"json", "text"});
  const RootSystem rs = make_root_system(o);
  const ComplexSummary s = summarise_complex(rs, o.m, o.oracle);
  bool ok = s.theorem2.pass && s.theorem3.pass && s.oracles_agree;
  for (const auto& entry : s.theorem4) ok = ok && entry.second.pass;

  if (o.format == "json") {
    emit(o, to_json(s).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << s.type << " m=" << s.m << " oracle=" << s.oracle << "\n"
       << s.graph.size() << " coloured roots, " << s.facets.size() << " facets\n"
       << "f-vector:";
    for (auto f : s.f_vector) os << ' ' << f;
    os << "\n";
    for (const auto& facet : s.facets) {
      os << '{';
      for (std::size_t k = 0; k < facet.size(); ++k) os << (k ? ", " : "") << to_string(s.graph.nodes[facet[k]]);
      os << "}\n";
    }
    emit(o, os.str());
  }
  if (!ok) std::cerr << "verification failed; see the verification block\n";
  return ok ? 0 : 1;
}

int cmd_compat(Options o) {
  if (o.format.empty()) o.format = "text";
  require_format(o, {"text", "json"});
  const RootSystem rs = make_root_system(o);
  const ColouredRoot x = parse_root(rs, o.m, o.roots.at(0));
  const ColouredRoot y = parse_root(rs, o.m, o.roots.at(1));
  const bool comb = compatible_combinatorial(rs, o.m, x, y);
  const DerivedCategory derived(rs);
  const bool cat = MClusterCategory(derived, o.m).compatible(x, y);
  auto word = [](bool b) { return b ? "compatible" : "incompatible"; };

  if (o.format == "json") {
    Json j;
    j["x"] = to_json(x);
    j["y"] = to_json(y);
    j["combinatorial"] = comb;
    j["categorical"] = cat;
    if (o.m == 1) j["degree"] = compatibility_degree(rs, x.root, y.root);
    emit(o, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << to_string(x) << " vs " << to_string(y) << "\n"
       << "combinatorial: " << word(comb) << "\n"
       << "categorical: " << word(cat) << "\n";
    if (o.m == 1) os << "degree: " << compatibility_degree(rs, x.root, y.root) << "\n";
    emit(o, os.str());
  }
  return comb == cat ? 0 : 1;
}

int cmd_ext(Options o) {
  if (o.format.empty()) o.format = "text";
  require_format(o, {"text", "json"});
  const RootSystem rs = make_root_system(o);
  const ColouredRoot x = parse_root(rs, o.m, o.roots.at(0));
  const ColouredRoot y = parse_root(rs, o.m, o.roots.at(1));
  const DerivedCategory derived(rs);
  const MClusterCategory cat(derived, o.m);
  const DerivedObject X = cat.W(x), Y = cat.W(y);

  Json j;
  j["X"] = to_json(X);
  j["Y"] = to_json(Y);
  j["ext"] = Json::array();
  std::ostringstream os;
  os << "W" << to_string(x) << " = " << to_string(X) << "\n"
     << "W" << to_string(y) << " = " << to_string(Y) << "\n";
  for (int i = 1; i <= o.m; ++i) {
    const int e = cat.ext(X, Y, i);
    j["ext"].push_back(e);
    os << "Ext^" << i << " = " << e << "\n";
  }
  emit(o, o.format == "json" ? j.dump(2) + "\n" : os.str());
  return 0;
}

int cmd_verify(Options o) {
  if (o.format.empty()) o.format = "text";
  require_format(o, {"text", "json"});
  const RootSystem rs = make_root_system(o);
  const auto reports = verify_all(rs, o.m);
  bool ok = true;
  Json j = Json::array();
  std::ostringstream os;
  os << rs.name() << " m=" << o.m << "\n";
  for (const auto& [name, r] : reports) {
    ok = ok && r.pass;
    os << (r.pass ? "pass  " : "FAIL  ") << name << " (" << r.checked << " checked)\n";
    if (!r.pass && !r.counterexamples.empty()) os << "      first counterexample: " << r.counterexamples.front() << "\n";
    j.push_back({{"check", name}, {"result", r.pass ? "pass" : "fail"}, {"checked", r.checked},
                 {"counterexamples", r.counterexamples}});
  }
  emit(o, o.format == "json" ? j.dump(2) + "\n" : os.str());
  return ok ? 0 : 1;
}

int cmd_export_zq(Options o) {
  if (o.format.empty()) o.format = "dot";
  require_format(o, {"dot"});
  const RootSystem rs = make_root_system(o);
  static const std::regex range(R"((-?\d+)(?::(-?\d+))?)");
  std::smatch match;
  if (!std::regex_match(o.window, match, range)) throw UsageError("window must look like LO:HI");
  const int lo = std::stoi(match[1]);
  const int hi = match[2].matched ? std::stoi(match[2]) : lo;
  emit(o, DerivedCategory(rs).export_zq_dot(lo, hi));
  return 0;
}

int cmd_orbit(Options o) {
  if (o.format.empty()) o.format = "text";
  require_format(o, {"text", "json"});
  const RootSystem rs = make_root_system(o);
  const ColouredRoot start = parse_root(rs, o.m, o.roots.at(0));
  std::vector<ColouredRoot> orbit{start};
  for (ColouredRoot x = rotation_Rm(rs, o.m, start); !(x == start); x = rotation_Rm(rs, o.m, x)) {
    if (orbit.size() > rotation_cap(rs, o.m)) throw std::logic_error("orbit did not close");
    orbit.push_back(x);
  }
  if (o.format == "json") {
    Json j = Json::array();
    for (const auto& x : orbit) j.push_back(to_json(x));
    emit(o, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& x : orbit) os << to_string(x) << "\n";
    os << "length " << orbit.size() << "\n";
    emit(o, os.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_limit_from_env();

  static const std::regex neg_simple(R"(-[eE]\d+)");
  std::vector<std::string> args(argv + 1, argv + argc);
  for (auto& a : args)
    if (std::regex_match(a, neg_simple)) a = kNegTag + a.substr(1);
  std::reverse(args.begin(), args.end());  // CLI11 consumes vectors from the back

  CLI::App app{"m-cluster complexes: enumeration, compatibility and verification"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub, bool with_m) {
    sub->add_option("--type", o.type, "Dynkin type such as A3, D4, E6")->required();
    if (with_m) sub->add_option("--m", o.m, "Number of colours")->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "Write to this file instead of stdout");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
  };

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate the facets of the complex");
  add_common(enumerate, true);
  enumerate->add_option("--oracle", o.oracle, "Compatibility oracle")
      ->check(CLI::IsMember({"combinatorial", "categorical", "both"}));

  auto* compat = app.add_subcommand("compat", "Decide compatibility of two coloured roots");
  add_common(compat, true);
  compat->add_option("roots", o.roots, "Two coloured roots, e.g. 1,1:2 and -e1")->required()->expected(2);

  auto* ext = app.add_subcommand("ext", "Ext dimensions between the images of two coloured roots");
  add_common(ext, true);
  ext->add_option("roots", o.roots, "Two coloured roots")->required()->expected(2);

  auto* verify = app.add_subcommand("verify", "Run every structural check for one type and m");
  add_common(verify, true);

  auto* zq = app.add_subcommand("export-zq", "DOT drawing of the translation quiver");
  add_common(zq, false);
  zq->add_option("--window", o.window, "Coarse-degree range LO:HI");

  auto* orbit = app.add_subcommand("orbit", "Orbit of a coloured root under the coloured rotation");
  add_common(orbit, true);
  orbit->add_option("root", o.roots, "A coloured root")->required()->expected(1);

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*enumerate) return cmd_enumerate(o);
    if (*compat) return cmd_compat(o);
    if (*ext) return cmd_ext(o);
    if (*verify) return cmd_verify(o);
    if (*zq) return cmd_export_zq(o);
    if (*orbit) return cmd_orbit(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
