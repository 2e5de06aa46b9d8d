#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "mcluster/coloured_roots.hpp"
#include "mcluster/derived.hpp"
#include "mcluster/execution.hpp"
#include "mcluster/mcluster_category.hpp"

namespace mcluster {

enum class Oracle { combinatorial, categorical };

std::string to_string(Oracle o);
Oracle parse_oracle(const std::string& text);

/// Compatibility relation on the coloured ground set. The diagonal is set:
/// every coloured root is compatible with itself.
struct CompatibilityGraph {
  std::vector<ColouredRoot> nodes;
  std::vector<boost::dynamic_bitset<>> adjacency;
  Oracle oracle = Oracle::combinatorial;

  std::size_t size() const { return nodes.size(); }
  bool adjacent(std::size_t a, std::size_t b) const { return adjacency[a][b]; }
  bool operator==(const CompatibilityGraph& other) const {
    return nodes == other.nodes && adjacency == other.adjacency;
  }
};

/// Facets and faces are sorted vectors of node indices.
using Face = std::vector<int>;

/// All-pairs compatibility. The categorical oracle needs an irreducible
/// root system; pass `derived` to reuse an already built category.
CompatibilityGraph build_graph(const RootSystem& rs, int m, Oracle oracle,
                               Execution ex = Execution::parallel,
                               const DerivedCategory* derived = nullptr);

/// Maximal cliques (pivoting Bron-Kerbosch), lexicographically sorted.
/// The parallel path fans out over the top-level branches.
std::vector<Face> enumerate_facets(const CompatibilityGraph& g, Execution ex = Execution::parallel);

/// Face counts by size 0..rank, by extending cliques one vertex at a time.
std::vector<std::size_t> f_vector(const CompatibilityGraph& g, int rank);

struct VerificationReport {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;

  void fail(std::string what) {
    pass = false;
    if (counterexamples.size() < 20) counterexamples.push_back(std::move(what));
  }
};

/// Every facet has exactly n members.
VerificationReport verify_facet_sizes(const CompatibilityGraph& g, const std::vector<Face>& facets, int n);

/// Nodes x outside `almost_complete` with almost_complete + {x} a facet.
/// Throws std::invalid_argument unless the input is a pairwise compatible
/// set of n - 1 nodes.
std::vector<int> complements(const CompatibilityGraph& g, const Face& almost_complete, int n);

/// For every facet F and x in F, F - {x} has exactly m + 1 complements.
VerificationReport verify_complements(const CompatibilityGraph& g, const std::vector<Face>& facets,
                                      int n, int m);

/// Compatibility of coloured roots inside a possibly reducible system:
/// roots in different components are compatible, otherwise the oracle is
/// evaluated in the irreducible component.
bool compatible_componentwise(const RootSystem& rs, int m, const ColouredRoot& x,
                              const ColouredRoot& y, Oracle oracle);

/// For all pairs of coloured roots supported on `keep`, compatibility in
/// rs agrees with compatibility in rs.parabolic(keep).
VerificationReport verify_parabolic_restriction(const RootSystem& rs, int m, const std::vector<int>& keep,
                                                Oracle oracle);

}  // namespace mcluster
