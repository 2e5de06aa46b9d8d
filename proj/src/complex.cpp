#include "mcluster/complex.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>

namespace mcluster {

std::string to_string(Oracle o) {
  return o == Oracle::combinatorial ? "combinatorial" : "categorical";
}

Oracle parse_oracle(const std::string& text) {
  if (text == "combinatorial") return Oracle::combinatorial;
  if (text == "categorical") return Oracle::categorical;
  throw std::invalid_argument("unknown oracle '" + text + "'");
}

namespace {

int support_component(const RootSystem& rs, const ColouredRoot& x) {
  for (int v = 0; v < rs.rank(); ++v)
    if (x.root.coeffs[v] != 0) return rs.component_of(v);
  throw std::invalid_argument("zero root");
}

// Evaluates an oracle one irreducible component at a time.
class ComponentOracle {
 public:
  ComponentOracle(const RootSystem& rs, int m, Oracle oracle, const DerivedCategory* prebuilt = nullptr)
      : rs_(&rs), m_(m), oracle_(oracle) {
    for (std::size_t c = 0; c < rs.component_vertices().size(); ++c) {
      auto part = std::make_unique<Part>(Part{rs.component(static_cast<int>(c)), nullptr, nullptr});
      if (oracle == Oracle::categorical) {
        const DerivedCategory* derived = prebuilt;
        if (!derived || !rs.is_irreducible()) {
          part->owned = std::make_unique<DerivedCategory>(part->system);
          derived = part->owned.get();
        }
        part->category = std::make_unique<MClusterCategory>(*derived, m);
      }
      parts_.push_back(std::move(part));
    }
  }

  bool compatible(const ColouredRoot& x, const ColouredRoot& y) const {
    const int cx = support_component(*rs_, x), cy = support_component(*rs_, y);
    if (cx != cy) return true;
    const Part& part = *parts_[cx];
    const auto& verts = rs_->component_vertices()[cx];
    const ColouredRoot lx{RootSystem::restrict_to(x.root, verts), x.colour};
    const ColouredRoot ly{RootSystem::restrict_to(y.root, verts), y.colour};
    if (oracle_ == Oracle::categorical) return part.category->compatible(lx, ly);
    return compatible_combinatorial(part.system, m_, lx, ly);
  }

 private:
  struct Part {
    RootSystem system;
    std::unique_ptr<DerivedCategory> owned;
    std::unique_ptr<MClusterCategory> category;
  };
  const RootSystem* rs_;
  int m_;
  Oracle oracle_;
  std::vector<std::unique_ptr<Part>> parts_;
};

boost::dynamic_bitset<> neighbours_of(const CompatibilityGraph& g, std::size_t v) {
  auto nb = g.adjacency[v];
  nb.reset(v);
  return nb;
}

void bron_kerbosch(const std::vector<boost::dynamic_bitset<>>& nbrs, Face& clique,
                   boost::dynamic_bitset<> P, boost::dynamic_bitset<> X, std::vector<Face>& out) {
  if (P.none()) {
    if (X.none()) {
      Face f = clique;
      std::sort(f.begin(), f.end());
      out.push_back(std::move(f));
    }
    return;
  }
  // Pivot: vertex of P | X with the most neighbours in P.
  const auto PX = P | X;
  std::size_t pivot = PX.find_first();
  std::size_t best = (P & nbrs[pivot]).count();
  for (auto u = PX.find_next(pivot); u != PX.npos; u = PX.find_next(u)) {
    const std::size_t c = (P & nbrs[u]).count();
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  const auto candidates = P - nbrs[pivot];
  for (auto v = candidates.find_first(); v != candidates.npos; v = candidates.find_next(v)) {
    clique.push_back(static_cast<int>(v));
    bron_kerbosch(nbrs, clique, P & nbrs[v], X & nbrs[v], out);
    clique.pop_back();
    P.reset(v);
    X.set(v);
  }
}

}  // namespace

bool compatible_componentwise(const RootSystem& rs, int m, const ColouredRoot& x,
                              const ColouredRoot& y, Oracle oracle) {
  validate_coloured(rs, m, x);
  validate_coloured(rs, m, y);
  return ComponentOracle(rs, m, oracle).compatible(x, y);
}

CompatibilityGraph build_graph(const RootSystem& rs, int m, Oracle oracle, Execution ex,
                               const DerivedCategory* derived) {
  const ColouredGroundSet ground(rs, m);
  const long long N = static_cast<long long>(ground.size());
  std::vector<char> verdict(std::size_t(N * N), 0);

  std::optional<ComponentOracle> categorical;
  if (oracle == Oracle::categorical) categorical.emplace(rs, m, oracle, derived);
  auto decide = [&](long long k) -> char {
    const int a = static_cast<int>(k / N), b = static_cast<int>(k % N);
    if (categorical) return categorical->compatible(ground.node(a), ground.node(b));
    return ground.compatible(a, b);
  };
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long k = 0; k < N * N; ++k) verdict[k] = decide(k);
  } else {
    for (long long k = 0; k < N * N; ++k) verdict[k] = decide(k);
  }

  CompatibilityGraph g;
  g.nodes = ground.nodes();
  g.oracle = oracle;
  g.adjacency.assign(N, boost::dynamic_bitset<>(N));
  for (long long a = 0; a < N; ++a)
    for (long long b = 0; b < N; ++b)
      if (verdict[a * N + b]) g.adjacency[a].set(b);
  return g;
}

std::vector<Face> enumerate_facets(const CompatibilityGraph& g, Execution ex) {
  const std::size_t N = g.size();
  std::vector<boost::dynamic_bitset<>> nbrs;
  nbrs.reserve(N);
  for (std::size_t v = 0; v < N; ++v) nbrs.push_back(neighbours_of(g, v));

  std::vector<Face> facets;
  if (N == 0) return facets;

  // Split the top level of the search into independent branches.
  boost::dynamic_bitset<> P(N), X(N);
  P.set();
  std::size_t pivot = 0, best = 0;
  for (std::size_t u = 0; u < N; ++u) {
    const std::size_t c = nbrs[u].count();
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  struct Branch {
    int v;
    boost::dynamic_bitset<> P, X;
  };
  std::vector<Branch> branches;
  const auto candidates = P - nbrs[pivot];
  for (auto v = candidates.find_first(); v != candidates.npos; v = candidates.find_next(v)) {
    branches.push_back({static_cast<int>(v), P & nbrs[v], X & nbrs[v]});
    P.reset(v);
    X.set(v);
  }

  const long long count = static_cast<long long>(branches.size());
  std::vector<std::vector<Face>> found(branches.size());
  auto run = [&](long long k) {
    Face clique{branches[k].v};
    bron_kerbosch(nbrs, clique, branches[k].P, branches[k].X, found[k]);
  };
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long k = 0; k < count; ++k) run(k);
  } else {
    for (long long k = 0; k < count; ++k) run(k);
  }
  for (auto& part : found) facets.insert(facets.end(), part.begin(), part.end());
  std::sort(facets.begin(), facets.end());
  return facets;
}

namespace {

void count_faces(const std::vector<boost::dynamic_bitset<>>& nbrs, std::size_t size,
                 const boost::dynamic_bitset<>& extend, std::vector<std::size_t>& counts) {
  if (counts.size() <= size) counts.resize(size + 1, 0);
  ++counts[size];
  for (auto v = extend.find_first(); v != extend.npos; v = extend.find_next(v)) {
    auto next = extend & nbrs[v];
    // Only extend by larger indices so each face is counted once.
    for (auto u = next.find_first(); u != next.npos && u <= v; u = next.find_next(u)) next.reset(u);
    count_faces(nbrs, size + 1, next, counts);
  }
}

}  // namespace

std::vector<std::size_t> f_vector(const CompatibilityGraph& g, int rank) {
  std::vector<boost::dynamic_bitset<>> nbrs;
  for (std::size_t v = 0; v < g.size(); ++v) nbrs.push_back(neighbours_of(g, v));
  std::vector<std::size_t> counts(std::size_t(rank) + 1, 0);
  boost::dynamic_bitset<> all(g.size());
  all.set();
  count_faces(nbrs, 0, all, counts);
  return counts;
}

namespace {

std::string face_string(const CompatibilityGraph& g, const Face& f) {
  std::string s = "{";
  for (std::size_t k = 0; k < f.size(); ++k) s += (k ? ", " : "") + to_string(g.nodes[f[k]]);
  return s + "}";
}

boost::dynamic_bitset<> common_neighbours(const CompatibilityGraph& g, const Face& face) {
  boost::dynamic_bitset<> common(g.size());
  common.set();
  for (int v : face) common &= g.adjacency[v];
  for (int v : face) common.reset(v);
  return common;
}

}  // namespace

VerificationReport verify_facet_sizes(const CompatibilityGraph& g, const std::vector<Face>& facets, int n) {
  VerificationReport report;
  for (const auto& f : facets) {
    ++report.checked;
    if (static_cast<int>(f.size()) != n)
      report.fail("facet " + face_string(g, f) + " has size " + std::to_string(f.size()));
  }
  return report;
}

std::vector<int> complements(const CompatibilityGraph& g, const Face& almost_complete, int n) {
  if (static_cast<int>(almost_complete.size()) != n - 1)
    throw std::invalid_argument("almost complete set must have n - 1 members");
  for (std::size_t a = 0; a < almost_complete.size(); ++a) {
    const int v = almost_complete[a];
    if (v < 0 || static_cast<std::size_t>(v) >= g.size()) throw std::invalid_argument("node index out of range");
    for (std::size_t b = 0; b < a; ++b) {
      if (almost_complete[b] == v) throw std::invalid_argument("repeated node in almost complete set");
      if (!g.adjacent(v, almost_complete[b]))
        throw std::invalid_argument("almost complete set is not pairwise compatible");
    }
  }
  const auto common = common_neighbours(g, almost_complete);
  std::vector<int> out;
  for (auto x = common.find_first(); x != common.npos; x = common.find_next(x)) {
    auto rest = common & g.adjacency[x];
    rest.reset(x);
    if (rest.none()) out.push_back(static_cast<int>(x));
  }
  return out;
}

VerificationReport verify_complements(const CompatibilityGraph& g, const std::vector<Face>& facets, int n,
                                      int m) {
  VerificationReport report;
  for (const auto& f : facets) {
    if (static_cast<int>(f.size()) != n) {
      report.fail("facet " + face_string(g, f) + " has the wrong size");
      continue;
    }
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face t = f;
      t.erase(t.begin() + static_cast<long>(drop));
      ++report.checked;
      const auto comps = complements(g, t, n);
      const auto candidates = common_neighbours(g, t).count();
      const bool contains = std::find(comps.begin(), comps.end(), f[drop]) != comps.end();
      if (static_cast<int>(comps.size()) != m + 1 || static_cast<int>(candidates) != m + 1 || !contains)
        report.fail(face_string(g, t) + " has " + std::to_string(comps.size()) + " complements and " +
                    std::to_string(candidates) + " compatible roots");
    }
  }
  return report;
}

VerificationReport verify_parabolic_restriction(const RootSystem& rs, int m, const std::vector<int>& keep,
                                                Oracle oracle) {
  const RootSystem psi = rs.parabolic(keep);
  const auto& verts = psi.ambient_vertices();
  std::vector<bool> kept(rs.rank(), false);
  for (int v : verts) kept[v] = true;

  const ColouredGroundSet ground(rs, m);
  std::vector<ColouredRoot> supported;
  for (const auto& x : ground.nodes()) {
    bool inside = true;
    for (int v = 0; v < rs.rank(); ++v)
      if (x.root.coeffs[v] != 0 && !kept[v]) inside = false;
    if (inside) supported.push_back(x);
  }

  const ComponentOracle big(rs, m, oracle);
  const ComponentOracle small(psi, m, oracle);
  VerificationReport report;
  for (const auto& x : supported)
    for (const auto& y : supported) {
      ++report.checked;
      const bool in_phi = big.compatible(x, y);
      const bool in_psi = small.compatible({RootSystem::restrict_to(x.root, verts), x.colour},
                                           {RootSystem::restrict_to(y.root, verts), y.colour});
      if (in_phi != in_psi)
        report.fail(to_string(x) + " vs " + to_string(y) + ": " + (in_phi ? "compatible" : "incompatible") +
                    " in " + rs.name() + ", " + (in_psi ? "compatible" : "incompatible") + " in " +
                    psi.name());
    }
  return report;
}

}  // namespace mcluster
