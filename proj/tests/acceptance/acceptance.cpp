// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Optional argv[1] is the mcluster CLI binary, used to check that
// two `enumerate` runs write identical bytes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "../oracles.hpp"
#include "mcluster/complex.hpp"
#include "mcluster/json_io.hpp"
#include "mcluster/mcluster_category.hpp"
#include "mcluster/verify.hpp"

using namespace mcluster;

namespace {

struct Instance {
  const char* type;
  int m;
};

// A1-A4 with m = 1..3, D4 with m = 1..2.
const std::vector<Instance> kBase = {{"A1", 1}, {"A1", 2}, {"A1", 3}, {"A2", 1}, {"A2", 2}, {"A2", 3},
                                     {"A3", 1}, {"A3", 2}, {"A3", 3}, {"A4", 1}, {"A4", 2}, {"A4", 3},
                                     {"D4", 1}, {"D4", 2}};

RootSystem build(const char* name) { return RootSystem::build(DynkinType::parse(name)); }

std::vector<Root> almost_positive(const RootSystem& rs) {
  std::vector<Root> out = rs.positive_roots();
  for (int i = 0; i < rs.rank(); ++i) out.push_back(Root::negative_simple(rs.rank(), i));
  return out;
}

struct Outcome {
  bool pass = true;
  std::size_t checked = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (!ok && pass) first_failure = describe();
    pass = pass && ok;
  }
  void absorb(const VerificationReport& r, const std::string& where) {
    checked += r.checked;
    if (!r.pass && pass)
      first_failure = where + ": " + (r.counterexamples.empty() ? "failed" : r.counterexamples.front());
    pass = pass && r.pass;
  }
};

int failures = 0;

void run(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.first_failure = std::string("exception: ") + e.what();
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << (o.pass ? "PASS" : "FAIL") << "  ACCEPTANCE " << id << "  " << title << "  (" << o.checked
            << " checks, " << ms << " ms)";
  if (!o.pass) std::cout << "  first failure: " << o.first_failure;
  std::cout << std::endl;
  if (!o.pass) ++failures;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (const auto& [type, m] : kBase) {
    const auto rs = build(type);
    const DerivedCategory d(rs);
    const MClusterCategory c(d, m);
    const ColouredGroundSet ground(rs, m);
    for (const auto& x : ground.nodes())
      for (const auto& y : ground.nodes()) {
        const bool comb = compatible_combinatorial(rs, m, x, y);
        const bool cat = c.compatible(x, y);
        o.expect(comb == cat, [&] { return std::string(type) + " m=" + std::to_string(m) + " " + to_string(x) + " " + to_string(y); });
      }
  }
  return o;
}

Outcome facet_sizes() {
  Outcome o;
  auto instances = kBase;
  instances.push_back({"E6", 1});
  for (const auto& [type, m] : instances) {
    const auto rs = build(type);
    const auto g = build_graph(rs, m, Oracle::combinatorial);
    const auto facets = enumerate_facets(g);
    for (const auto& f : facets)
      o.expect(static_cast<int>(f.size()) == rs.rank(),
               [&] { return std::string(type) + " m=" + std::to_string(m) + " facet of size " + std::to_string(f.size()); });
  }
  return o;
}

Outcome complement_counts() {
  Outcome o;
  for (const auto& [type, m] : kBase) {
    const auto rs = build(type);
    const auto g = build_graph(rs, m, Oracle::combinatorial);
    for (const auto& f : enumerate_facets(g))
      for (std::size_t k = 0; k < f.size(); ++k) {
        Face t = f;
        t.erase(t.begin() + static_cast<long>(k));
        const auto comps = complements(g, t, rs.rank());
        o.expect(static_cast<int>(comps.size()) == m + 1, [&] {
          return std::string(type) + " m=" + std::to_string(m) + ": " + std::to_string(comps.size()) + " complements";
        });
      }
  }
  return o;
}

Outcome parabolic_restriction() {
  Outcome o;
  for (const char* type : {"A2", "A3", "A4", "D4"})
    for (int m : {1, 2}) {
      const auto rs = build(type);
      for (int drop = 0; drop < rs.rank(); ++drop) {
        std::vector<int> keep;
        for (int v = 0; v < rs.rank(); ++v)
          if (v != drop) keep.push_back(v);
        for (Oracle oracle : {Oracle::combinatorial, Oracle::categorical})
          o.absorb(verify_parabolic_restriction(rs, m, keep, oracle),
                   std::string(type) + " m=" + std::to_string(m) + " without vertex " + std::to_string(drop + 1));
      }
    }
  return o;
}

Outcome rotation_and_shift() {
  Outcome o;
  for (const char* type : {"A1", "A2", "A3", "A4", "D4"}) {
    const DerivedCategory d(build(type));
    o.absorb(check_rotation_is_shift(d), type);
  }
  for (const auto& [type, m] : kBase) {
    const DerivedCategory d(build(type));
    const MClusterCategory c(d, m);
    o.absorb(check_coloured_rotation_is_shift(c), std::string(type) + " m=" + std::to_string(m));
  }
  return o;
}

Outcome ext_symmetry() {
  Outcome o;
  const std::vector<Instance> instances = {{"A2", 1}, {"A2", 2}, {"A2", 3}, {"A3", 1}, {"A3", 2}, {"D4", 1}};
  for (const auto& [type, m] : instances) {
    const DerivedCategory d(build(type));
    const MClusterCategory c(d, m);
    const ColouredGroundSet ground(d.root_system(), m);
    for (const auto& x : ground.nodes())
      for (const auto& y : ground.nodes())
        for (int i = 1; i <= m; ++i) {
          const DerivedObject X = c.W(x), Y = c.W(y);
          o.expect(c.ext(X, Y, i) == c.ext(Y, X, m + 1 - i), [&] {
            return std::string(type) + " " + to_string(X) + " " + to_string(Y) + " i=" + std::to_string(i);
          });
        }
  }
  return o;
}

Outcome degree_equals_ext() {
  Outcome o;
  for (const char* type : {"A1", "A2", "A3", "A4", "D4"}) {
    const DerivedCategory d(build(type));
    const MClusterCategory c(d, 1);
    const auto& rs = d.root_system();
    const auto roots = almost_positive(rs);
    for (const auto& b : roots)
      for (const auto& a : roots) {
        const int deg = compatibility_degree(rs, b, a);
        o.expect(c.ext(d.V(b), d.V(a), 1) == deg, [&] { return std::string(type) + " " + to_string(b) + " " + to_string(a); });
        o.expect(compatibility_degree(rs, a, b) == deg,
                 [&] { return std::string(type) + " asymmetric at " + to_string(b) + " " + to_string(a); });
      }
  }
  return o;
}

std::vector<std::vector<bool>> dense(const CompatibilityGraph& g) {
  std::vector<std::vector<bool>> out(g.size(), std::vector<bool>(g.size()));
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) out[a][b] = g.adjacent(a, b);
  return out;
}

Outcome facet_counts() {
  Outcome o;
  struct Fixture {
    const char* type;
    char family;
    int n, m;
    std::size_t expected;
  };
  for (const auto& f : {Fixture{"A2", 'A', 2, 1, 5}, Fixture{"A2", 'A', 2, 2, 12}, Fixture{"A3", 'A', 3, 1, 14}}) {
    const auto g = build_graph(build(f.type), f.m, Oracle::combinatorial);
    const auto facets = enumerate_facets(g);
    const auto naive = oracle::naive_maximal_cliques(dense(g));
    const std::string where = std::string(f.type) + " m=" + std::to_string(f.m);
    o.expect(facets.size() == f.expected, [&] { return where + ": " + std::to_string(facets.size()) + " facets"; });
    o.expect(naive.size() == f.expected, [&] { return where + ": naive scan finds " + std::to_string(naive.size()); });
    o.expect(facets == naive, [&] { return where + ": facet lists differ from the naive scan"; });
    o.expect(oracle::fuss_catalan(f.family, f.n, f.m) == f.expected, [&] { return where + ": Fuss-Catalan product differs"; });
  }
  return o;
}

Outcome internal_consistency() {
  Outcome o;
  // Hom - Ext^1 against the Euler form, evaluated here from the diagram.
  for (const char* type : {"A3", "D4"}) {
    const DerivedCategory d(build(type));
    const auto& rs = d.root_system();
    const auto& roots = rs.positive_roots();
    for (std::size_t a = 0; a < roots.size(); ++a)
      for (std::size_t b = 0; b < roots.size(); ++b) {
        int chi = 0;
        for (int i = 0; i < rs.rank(); ++i) chi += roots[a].coeffs[i] * roots[b].coeffs[i];
        for (auto [u, v] : rs.edges()) {
          const int s = rs.in_plus(u) ? u : v, t = rs.in_plus(u) ? v : u;
          chi -= roots[a].coeffs[s] * roots[b].coeffs[t];
        }
        const auto& M = d.indecomposable(static_cast<int>(a)).rep;
        const auto& N = d.indecomposable(static_cast<int>(b)).rep;
        o.expect(hom_dim(M, N) - ext1_dim(M, N) == chi, [&] { return std::string(type) + " Euler identity " + to_string(roots[a]) + " " + to_string(roots[b]); });
      }
  }

  // Serre duality on coarse degrees -1, 0, 1 of A3.
  const DerivedCategory a3(build("A3"));
  std::vector<DerivedObject> slices;
  for (int s = -1; s <= 1; ++s)
    for (const auto& beta : a3.root_system().positive_roots()) slices.push_back({beta, s});
  for (const auto& x : slices)
    for (const auto& y : slices)
      o.expect(a3.hom(x, shift(y, 1)) == a3.hom(y, a3.tau(x)), [&] { return "Serre duality " + to_string(x) + " " + to_string(y); });

  // Coarse degree on five slices.
  for (const char* type : {"A3", "D4"}) {
    const DerivedCategory d(build(type));
    for (int s = -2; s <= 2; ++s)
      for (const auto& beta : d.root_system().positive_roots()) {
        const DerivedObject x{beta, s};
        const int df = d.fine_degree(x), h = d.h();
        // ceil(df / h) by search, without shared helpers.
        int c = -10;
        while (c * h < df) ++c;
        o.expect(d.coarse_degree(x) == c && c == -s, [&] { return "coarse degree of " + to_string(x); });
      }
  }

  // Widening the orbit-sum range by two on each side changes nothing.
  for (const auto& [type, m] : kBase) {
    const DerivedCategory d(build(type));
    const MClusterCategory c(d, m);
    const ColouredGroundSet ground(d.root_system(), m);
    for (const auto& x : ground.nodes())
      for (const auto& y : ground.nodes())
        for (int i = 1; i <= m; ++i) {
          const DerivedObject X = c.W(x), Y = c.W(y);
          o.expect(c.ext(X, Y, i) == c.ext(X, Y, i, 2), [&] { return "orbit range " + to_string(X) + " " + to_string(Y); });
        }
  }
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

Outcome determinism(const char* cli) {
  Outcome o;
  for (const auto& [type, m] : std::vector<Instance>{{"A2", 1}, {"A3", 2}, {"D4", 2}}) {
    const auto rs = build(type);
    for (const char* oracle : {"combinatorial", "categorical", "both"}) {
      const std::string a = to_json(summarise_complex(rs, m, oracle)).dump(2);
      const std::string b = to_json(summarise_complex(rs, m, oracle)).dump(2);
      o.expect(a == b, [&] { return std::string(type) + " " + oracle + ": in-process summaries differ"; });
    }
  }
  if (cli) {
    const auto dir = std::filesystem::temp_directory_path() / ("mcluster_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    for (const char* flags : {"--type A2 --m 1", "--type A3 --m 2 --oracle both", "--type D4 --m 2 --oracle categorical"}) {
      std::string outputs[2];
      for (int run = 0; run < 2; ++run) {
        const auto file = dir / ("run" + std::to_string(run) + ".json");
        const std::string cmd = std::string("\"") + cli + "\" enumerate " + flags + " --out \"" + file.string() + "\"";
        o.expect(std::system(cmd.c_str()) == 0, [&] { return "command failed: " + cmd; });
        outputs[run] = slurp(file);
      }
      o.expect(!outputs[0].empty() && outputs[0] == outputs[1], [&] { return std::string("CLI output differs for ") + flags; });
    }
    std::filesystem::remove_all(dir);
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_limit_from_env();
  const char* cli = argc > 1 ? argv[1] : nullptr;

  run(1, "combinatorial and categorical compatibility agree", oracle_equivalence);
  run(2, "every facet has n elements", facet_sizes);
  run(3, "every almost complete set has m+1 complements", complement_counts);
  run(4, "compatibility restricts to parabolic subsystems", parabolic_restriction);
  run(5, "rotation corresponds to the shift", rotation_and_shift);
  run(6, "Ext^i(X,Y) = Ext^{m+1-i}(Y,X)", ext_symmetry);
  run(7, "compatibility degree equals Ext^1 and is symmetric", degree_equals_ext);
  run(8, "facet counts 5, 12, 14", facet_counts);
  run(9, "Euler form, Serre duality, gradings, orbit range", internal_consistency);
  run(10, "enumerate output is byte-identical across runs", [cli] { return determinism(cli); });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
