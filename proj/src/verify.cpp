#include "mcluster/verify.hpp"

#include "mcluster/coloured_roots.hpp"
#include "mcluster/derived.hpp"
#include "mcluster/mcluster_category.hpp"

namespace mcluster {

namespace {

std::vector<Root> almost_positive(const RootSystem& rs) {
  std::vector<Root> out = rs.positive_roots();
  for (int i = 0; i < rs.rank(); ++i) out.push_back(Root::negative_simple(rs.rank(), i));
  return out;
}

void merge(VerificationReport& into, const VerificationReport& r) {
  into.checked += r.checked;
  for (const auto& c : r.counterexamples) into.fail(c);
  into.pass = into.pass && r.pass;
}

}  // namespace

VerificationReport check_oracle_equivalence(const RootSystem& rs, int m, Execution ex) {
  VerificationReport rep;
  DerivedCategory derived(rs, ex);
  const auto comb = build_graph(rs, m, Oracle::combinatorial, ex);
  const auto cat = build_graph(rs, m, Oracle::categorical, ex, &derived);
  for (std::size_t a = 0; a < comb.size(); ++a)
    for (std::size_t b = 0; b < comb.size(); ++b, ++rep.checked)
      if (comb.adjacent(a, b) != cat.adjacent(a, b))
        rep.fail(to_string(comb.nodes[a]) + " vs " + to_string(comb.nodes[b]) + ": combinatorial " +
                 (comb.adjacent(a, b) ? "compatible" : "incompatible") + ", categorical " +
                 (cat.adjacent(a, b) ? "compatible" : "incompatible"));
  if (enumerate_facets(comb, ex) != enumerate_facets(cat, ex)) rep.fail("facet lists differ");
  return rep;
}

VerificationReport check_rotation_is_shift(const DerivedCategory& d) {
  VerificationReport rep;
  const MClusterCategory c1(d, 1);
  for (const Root& a : almost_positive(d.root_system())) {
    ++rep.checked;
    const DerivedObject lhs = d.V(rotation_R(d.root_system(), a));
    const DerivedObject rhs = c1.reduce(shift(d.V(a), 1));
    if (!(lhs == rhs)) rep.fail("a = " + to_string(a) + ": V(R a) = " + to_string(lhs) + ", V(a)[1] = " + to_string(rhs));
  }
  return rep;
}

VerificationReport check_coloured_rotation_is_shift(const MClusterCategory& c) {
  VerificationReport rep;
  const ColouredGroundSet ground(c.derived().root_system(), c.m());
  for (const auto& x : ground.nodes()) {
    ++rep.checked;
    if (!c.lemma2_check(x)) rep.fail("x = " + to_string(x));
  }
  return rep;
}

VerificationReport check_ext_symmetry(const MClusterCategory& c) {
  VerificationReport rep;
  const ColouredGroundSet ground(c.derived().root_system(), c.m());
  std::vector<DerivedObject> objects;
  for (const auto& x : ground.nodes()) objects.push_back(c.W(x));
  for (const auto& X : objects)
    for (const auto& Y : objects)
      for (int i = 1; i <= c.m(); ++i, ++rep.checked)
        if (!c.lemma3_check(X, Y, i))
          rep.fail("X = " + to_string(X) + ", Y = " + to_string(Y) + ", i = " + std::to_string(i));
  return rep;
}

VerificationReport check_degree_equals_ext(const DerivedCategory& d) {
  VerificationReport rep;
  const RootSystem& rs = d.root_system();
  const MClusterCategory c1(d, 1);
  const auto roots = almost_positive(rs);
  for (const Root& b : roots)
    for (const Root& a : roots) {
      ++rep.checked;
      const int deg = compatibility_degree(rs, b, a);
      const int ext = c1.ext(d.V(b), d.V(a), 1);
      if (deg != ext)
        rep.fail("(" + to_string(b) + " || " + to_string(a) + ") = " + std::to_string(deg) + " but Ext^1 = " +
                 std::to_string(ext));
      if (deg != compatibility_degree(rs, a, b)) rep.fail("degree not symmetric at " + to_string(b) + ", " + to_string(a));
    }
  return rep;
}

std::vector<NamedReport> verify_all(const RootSystem& rs, int m, Execution ex) {
  std::vector<NamedReport> out;
  const DerivedCategory derived(rs, ex);
  const MClusterCategory cat(derived, m);

  out.push_back({"oracle equivalence", check_oracle_equivalence(rs, m, ex)});

  const auto g = build_graph(rs, m, Oracle::combinatorial, ex);
  const auto facets = enumerate_facets(g, ex);
  out.push_back({"facet size", verify_facet_sizes(g, facets, rs.rank())});
  out.push_back({"complement count", verify_complements(g, facets, rs.rank(), m)});

  VerificationReport parabolic;
  for (int drop = 0; rs.rank() >= 2 && drop < rs.rank(); ++drop) {
    std::vector<int> keep;
    for (int v = 0; v < rs.rank(); ++v)
      if (v != drop) keep.push_back(v);
    for (Oracle o : {Oracle::combinatorial, Oracle::categorical})
      merge(parabolic, verify_parabolic_restriction(rs, m, keep, o));
  }
  out.push_back({"parabolic restriction", parabolic});

  out.push_back({"rotation vs shift (m = 1)", check_rotation_is_shift(derived)});
  out.push_back({"rotation vs shift", check_coloured_rotation_is_shift(cat)});
  out.push_back({"ext symmetry", check_ext_symmetry(cat)});
  out.push_back({"degree equals ext (m = 1)", check_degree_equals_ext(derived)});
  return out;
}

}  // namespace mcluster
