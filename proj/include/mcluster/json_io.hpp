#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mcluster/coloured_roots.hpp"
#include "mcluster/complex.hpp"
#include "mcluster/derived.hpp"
#include "mcluster/quiver_rep.hpp"
#include "mcluster/root_system.hpp"

namespace mcluster {

using Json = nlohmann::ordered_json;

// Vertex labels in JSON and in the text syntax are 1-based.

Json to_json(const RootSystem& rs);
Json to_json(const ColouredRoot& x);
Json to_json(const DerivedObject& x);
Json to_json(const Representation& rep);

/// "1,1,0:2" is coefficients with colour 2; the colour defaults to 1.
/// "-e2" is the negative simple root -alpha_2. Throws std::invalid_argument.
ColouredRoot parse_coloured_root(const std::string& text, int rank);

/// Everything `enumerate` writes for one oracle run.
struct ComplexSummary {
  std::string type;
  int rank = 0;
  int m = 1;
  std::string oracle;
  CompatibilityGraph graph;
  std::vector<Face> facets;
  std::vector<std::size_t> f_vector;
  VerificationReport theorem2;
  VerificationReport theorem3;
  /// One entry per deleted vertex.
  std::vector<std::pair<int, VerificationReport>> theorem4;
  bool oracles_agree = true;  // only meaningful when oracle == "both"
};

ComplexSummary summarise_complex(const RootSystem& rs, int m, const std::string& oracle,
                                 Execution ex = Execution::parallel);
Json to_json(const ComplexSummary& s);

}  // namespace mcluster
