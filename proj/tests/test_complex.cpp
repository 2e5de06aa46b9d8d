#include <doctest.h>

#include <stdexcept>

#include "mcluster/complex.hpp"
#include "oracles.hpp"

using namespace mcluster;

namespace {

RootSystem build(const char* name) { return RootSystem::build(DynkinType::parse(name)); }

Root r(std::vector<int> c) { return Root{std::move(c)}; }

std::vector<std::vector<bool>> dense(const CompatibilityGraph& g) {
  std::vector<std::vector<bool>> out(g.size(), std::vector<bool>(g.size()));
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) out[a][b] = g.adjacent(a, b);
  return out;
}

struct Instance {
  const char* type;
  int m;
};

const Instance kSmall[] = {{"A1", 1}, {"A1", 3}, {"A2", 1}, {"A2", 2}, {"A2", 3}, {"A3", 1},
                           {"A3", 2}, {"A4", 1}, {"D4", 1}, {"D4", 2}};

}  // namespace

TEST_CASE("A1 with one colour") {
  const auto g = build_graph(build("A1"), 1, Oracle::combinatorial);
  REQUIRE(g.size() == 2);
  CHECK(g.nodes[0] == ColouredRoot{r({1}), 1});
  CHECK(g.nodes[1] == ColouredRoot{r({-1}), 1});
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(enumerate_facets(g) == std::vector<Face>{{0}, {1}});
  CHECK(f_vector(g, 1) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("A2 with one colour is a pentagon") {
  const auto g = build_graph(build("A2"), 1, Oracle::combinatorial);
  REQUIRE(g.size() == 5);
  for (std::size_t v = 0; v < 5; ++v) CHECK(g.adjacency[v].count() == 3);  // itself and two neighbours
  const auto facets = enumerate_facets(g);
  CHECK(facets.size() == 5);
  for (const auto& f : facets) CHECK(f.size() == 2);
  CHECK(f_vector(g, 2) == std::vector<std::size_t>{1, 5, 5});
}

TEST_CASE("facet counts") {
  CHECK(enumerate_facets(build_graph(build("A2"), 2, Oracle::combinatorial)).size() == 12);
  CHECK(enumerate_facets(build_graph(build("A3"), 1, Oracle::combinatorial)).size() == 14);
  CHECK(oracle::fuss_catalan('A', 2, 1) == 5);
  CHECK(oracle::fuss_catalan('A', 2, 2) == 12);
  CHECK(oracle::fuss_catalan('A', 3, 1) == 14);
}

TEST_CASE("graphs are symmetric with a full diagonal, and the oracles agree") {
  for (const auto& [type, m] : kSmall) {
    const auto rs = build(type);
    const auto comb = build_graph(rs, m, Oracle::combinatorial);
    const auto cat = build_graph(rs, m, Oracle::categorical);
    CHECK(comb == cat);
    CHECK(cat.oracle == Oracle::categorical);
    CHECK(comb.size() == static_cast<std::size_t>(m) * rs.num_positive() + rs.rank());
    for (std::size_t a = 0; a < comb.size(); ++a) {
      CHECK(comb.adjacent(a, a));
      for (std::size_t b = 0; b < comb.size(); ++b) CHECK(comb.adjacent(a, b) == comb.adjacent(b, a));
    }
    CHECK(enumerate_facets(comb) == enumerate_facets(cat));
  }
}

TEST_CASE("pivoting enumeration matches a naive scan") {
  const Instance cases[] = {{"A1", 2}, {"A2", 1}, {"A2", 2}, {"A2", 5}, {"A3", 1}, {"A3", 2},
                            {"A3", 3}, {"A4", 1}, {"A4", 2}, {"A4", 3}, {"D4", 1}, {"D4", 2}};
  for (const auto& [type, m] : cases) {
    const auto g = build_graph(build(type), m, Oracle::combinatorial);
    REQUIRE(g.size() <= 40);
    CAPTURE(type);
    CAPTURE(m);
    CHECK(enumerate_facets(g) == oracle::naive_maximal_cliques(dense(g)));
  }
}

TEST_CASE("facet counts follow the Fuss-Catalan product") {
  struct Case {
    char family;
    int n;
    int m;
  };
  const Case cases[] = {{'A', 1, 4}, {'A', 3, 2}, {'A', 4, 3}, {'A', 5, 2}, {'D', 4, 2},
                        {'D', 5, 1}, {'D', 6, 1}, {'E', 6, 1}, {'E', 6, 2}, {'E', 7, 1}};
  for (const auto& c : cases) {
    const auto rs = RootSystem::build({static_cast<Family>(c.family), c.n});
    CAPTURE(rs.name());
    CAPTURE(c.m);
    const auto g = build_graph(rs, c.m, Oracle::combinatorial);
    const auto facets = enumerate_facets(g);
    CHECK(facets.size() == oracle::fuss_catalan(c.family, c.n, c.m));
    CHECK(verify_facet_sizes(g, facets, c.n).pass);
    CHECK(f_vector(g, c.n).back() == facets.size());
  }
}

TEST_CASE("facet sizes and complement counts") {
  for (const auto& [type, m] : kSmall) {
    const auto rs = build(type);
    const auto g = build_graph(rs, m, Oracle::combinatorial);
    const auto facets = enumerate_facets(g);
    const auto sizes = verify_facet_sizes(g, facets, rs.rank());
    CHECK(sizes.pass);
    CHECK(sizes.checked == facets.size());
    const auto comps = verify_complements(g, facets, rs.rank(), m);
    CHECK(comps.pass);
    CHECK(comps.checked == facets.size() * rs.rank());
    for (const auto& f : facets)
      for (std::size_t k = 0; k < f.size(); ++k) {
        Face t = f;
        t.erase(t.begin() + static_cast<long>(k));
        CHECK(complements(g, t, rs.rank()).size() == static_cast<std::size_t>(m + 1));
      }
  }
}

TEST_CASE("complements of an empty set in rank one") {
  const auto g = build_graph(build("A1"), 3, Oracle::combinatorial);
  CHECK(complements(g, {}, 1) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("complements reject bad input") {
  const auto g = build_graph(build("A2"), 1, Oracle::combinatorial);
  CHECK_THROWS_AS(complements(g, {}, 2), std::invalid_argument);
  CHECK_THROWS_AS(complements(g, {0, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(complements(g, {7}, 2), std::invalid_argument);
  const auto g3 = build_graph(build("A3"), 1, Oracle::combinatorial);
  int a = -1, b = -1;
  for (std::size_t x = 0; x < g3.size() && a < 0; ++x)
    for (std::size_t y = 0; y < g3.size(); ++y)
      if (!g3.adjacent(x, y)) {
        a = static_cast<int>(x);
        b = static_cast<int>(y);
        break;
      }
  REQUIRE(a >= 0);
  CHECK_THROWS_AS(complements(g3, {a, b}, 3), std::invalid_argument);
  CHECK_THROWS_AS(complements(g3, {a, a}, 3), std::invalid_argument);
}

TEST_CASE("verifiers report failures") {
  auto g = build_graph(build("A2"), 1, Oracle::combinatorial);
  auto facets = enumerate_facets(g);
  facets.push_back({0});
  const auto sizes = verify_facet_sizes(g, facets, 2);
  CHECK_FALSE(sizes.pass);
  CHECK(sizes.counterexamples.size() == 1);
  // Making two incompatible roots compatible breaks the complement count.
  g.adjacency[0].set();
  for (auto& row : g.adjacency) row.set(0);
  CHECK_FALSE(verify_complements(g, enumerate_facets(g), 2, 1).pass);
}

TEST_CASE("f-vector") {
  for (const auto& [type, m] : kSmall) {
    const auto rs = build(type);
    const auto g = build_graph(rs, m, Oracle::combinatorial);
    const auto f = f_vector(g, rs.rank());
    REQUIRE(f.size() == static_cast<std::size_t>(rs.rank() + 1));
    CHECK(f[0] == 1);
    CHECK(f[1] == g.size());
    CHECK(f.back() == enumerate_facets(g).size());
  }
  const auto a1 = build_graph(build("A1"), 1, Oracle::combinatorial);
  CHECK(f_vector(a1, 2) == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("parabolic restriction") {
  const auto a3 = build("A3");
  for (int m : {1, 2})
    for (Oracle o : {Oracle::combinatorial, Oracle::categorical}) {
      const auto end = verify_parabolic_restriction(a3, m, {0, 1}, o);
      CHECK(end.pass);
      CHECK(end.checked == std::size_t(3 * m + 2) * (3 * m + 2));
      const auto middle = verify_parabolic_restriction(a3, m, {0, 2}, o);
      CHECK(middle.pass);
      CHECK(middle.checked == std::size_t(2 * m + 2) * (2 * m + 2));
      CHECK(verify_parabolic_restriction(a3, m, {0, 1, 2}, o).pass);
    }
  for (const char* name : {"A4", "D4", "D5"})
    for (int drop = 0; drop < 4; ++drop) {
      const auto rs = build(name);
      std::vector<int> keep;
      for (int v = 0; v < rs.rank(); ++v)
        if (v != drop) keep.push_back(v);
      CHECK(verify_parabolic_restriction(rs, 2, keep, Oracle::categorical).pass);
    }
}

TEST_CASE("roots in different components are compatible") {
  const auto sub = build("A3").parabolic({0, 2});
  for (Oracle o : {Oracle::combinatorial, Oracle::categorical}) {
    CHECK(compatible_componentwise(sub, 2, {r({1, 0}), 2}, {r({0, 1}), 1}, o));
    CHECK(compatible_componentwise(sub, 2, {r({-1, 0}), 1}, {r({0, 1}), 2}, o));
    CHECK_FALSE(compatible_componentwise(sub, 2, {r({-1, 0}), 1}, {r({1, 0}), 1}, o));
    CHECK_FALSE(compatible_componentwise(sub, 2, {r({0, 1}), 1}, {r({0, 1}), 2}, o));
  }
}

TEST_CASE("serial and parallel kernels agree") {
  for (const auto& [type, m] : std::vector<Instance>{{"A4", 3}, {"D4", 2}, {"E6", 1}}) {
    const auto rs = build(type);
    for (Oracle o : {Oracle::combinatorial, Oracle::categorical}) {
      const auto s = build_graph(rs, m, o, Execution::serial);
      const auto p = build_graph(rs, m, o, Execution::parallel);
      CHECK(s == p);
      CHECK(enumerate_facets(s, Execution::serial) == enumerate_facets(p, Execution::parallel));
    }
  }
}

TEST_CASE("oracle names") {
  CHECK(parse_oracle("categorical") == Oracle::categorical);
  CHECK(to_string(Oracle::combinatorial) == "combinatorial");
  CHECK_THROWS_AS(parse_oracle("both"), std::invalid_argument);
}
