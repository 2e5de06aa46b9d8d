#include "mcluster/json_io.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace mcluster {

namespace {

Json labels(const std::vector<int>& vertices) {
  Json out = Json::array();
  for (int v : vertices) out.push_back(v + 1);
  return out;
}

Json report_json(const VerificationReport& r) {
  Json out;
  out["pass"] = r.pass;
  out["checked"] = r.checked;
  out["counterexamples"] = r.counterexamples;
  return out;
}

}  // namespace

Json to_json(const RootSystem& rs) {
  Json out;
  out["type"] = rs.name();
  out["rank"] = rs.rank();
  out["cartan"] = rs.cartan();
  Json roots = Json::array();
  for (const auto& r : rs.positive_roots()) roots.push_back(r.coeffs);
  out["positive_roots"] = std::move(roots);
  out["I_plus"] = labels(rs.I_plus());
  out["I_minus"] = labels(rs.I_minus());
  if (rs.is_irreducible()) out["h"] = rs.coxeter_number();
  else out["h"] = nullptr;
  return out;
}

Json to_json(const ColouredRoot& x) {
  Json out;
  out["coeffs"] = x.root.coeffs;
  out["colour"] = x.colour;
  return out;
}

Json to_json(const DerivedObject& x) {
  Json out;
  out["coeffs"] = x.beta.coeffs;
  out["shift"] = x.shift;
  return out;
}

Json to_json(const Representation& rep) {
  Json out;
  out["dims"] = rep.dims;
  Json maps = Json::array();
  for (std::size_t a = 0; a < rep.maps.size(); ++a) {
    const auto& arr = rep.quiver.arrows()[a];
    Json m;
    m["source"] = arr.source + 1;
    m["target"] = arr.target + 1;
    Json rows = Json::array();
    for (int r = 0; r < rep.maps[a].rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < rep.maps[a].cols(); ++c) {
        std::ostringstream os;
        os << rep.maps[a].at(r, c);
        row.push_back(os.str());
      }
      rows.push_back(std::move(row));
    }
    m["matrix"] = std::move(rows);
    maps.push_back(std::move(m));
  }
  out["maps"] = std::move(maps);
  return out;
}

ColouredRoot parse_coloured_root(const std::string& text, int rank) {
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("cannot parse coloured root '" + text + "': " + why);
  };
  if (text.size() >= 3 && text[0] == '-' && (text[1] == 'e' || text[1] == 'E')) {
    std::size_t used = 0;
    int i = 0;
    try {
      i = std::stoi(text.substr(2), &used);
    } catch (const std::exception&) {
      throw bad("bad vertex");
    }
    if (used != text.size() - 2 || i < 1 || i > rank) throw bad("vertex out of range");
    return {Root::negative_simple(rank, i - 1), 1};
  }
  std::string coeff_part = text;
  int colour = 1;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    coeff_part = text.substr(0, colon);
    try {
      std::size_t used = 0;
      colour = std::stoi(text.substr(colon + 1), &used);
      if (used != text.size() - colon - 1) throw bad("bad colour");
    } catch (const std::invalid_argument&) {
      throw bad("bad colour");
    } catch (const std::out_of_range&) {
      throw bad("bad colour");
    }
  }
  Root r;
  std::stringstream ss(coeff_part);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      r.coeffs.push_back(std::stoi(item, &used));
      if (used != item.size()) throw bad("bad coefficient");
    } catch (const std::invalid_argument&) {
      throw bad("bad coefficient");
    } catch (const std::out_of_range&) {
      throw bad("bad coefficient");
    }
  }
  if (r.rank() != rank) throw bad("expected " + std::to_string(rank) + " coefficients");
  return {std::move(r), colour};
}

ComplexSummary summarise_complex(const RootSystem& rs, int m, const std::string& oracle, Execution ex) {
  ComplexSummary s;
  s.type = rs.name();
  s.rank = rs.rank();
  s.m = m;
  s.oracle = oracle;

  std::vector<Oracle> oracles;
  if (oracle == "both") oracles = {Oracle::combinatorial, Oracle::categorical};
  else oracles = {parse_oracle(oracle)};

  std::optional<DerivedCategory> derived;
  std::vector<CompatibilityGraph> graphs;
  for (Oracle o : oracles) {
    if (o == Oracle::categorical && rs.is_irreducible() && !derived) derived.emplace(rs, ex);
    graphs.push_back(build_graph(rs, m, o, ex, derived ? &*derived : nullptr));
  }
  std::vector<std::vector<Face>> facet_lists;
  for (const auto& g : graphs) facet_lists.push_back(enumerate_facets(g, ex));
  for (std::size_t k = 1; k < graphs.size(); ++k)
    s.oracles_agree = s.oracles_agree && graphs[k] == graphs[0] && facet_lists[k] == facet_lists[0];

  s.graph = graphs.back();
  s.facets = facet_lists.back();
  s.f_vector = f_vector(s.graph, s.rank);
  s.theorem2 = verify_facet_sizes(s.graph, s.facets, s.rank);
  s.theorem3 = verify_complements(s.graph, s.facets, s.rank, m);
  if (s.rank >= 2)
    for (int drop = 0; drop < s.rank; ++drop) {
      std::vector<int> keep;
      for (int v = 0; v < s.rank; ++v)
        if (v != drop) keep.push_back(v);
      VerificationReport merged;
      for (Oracle o : oracles) {
        auto r = verify_parabolic_restriction(rs, m, keep, o);
        merged.checked += r.checked;
        for (auto& c : r.counterexamples) merged.fail(std::move(c));
        merged.pass = merged.pass && r.pass;
      }
      s.theorem4.emplace_back(drop, std::move(merged));
    }
  return s;
}

Json to_json(const ComplexSummary& s) {
  Json out;
  out["type"] = s.type;
  out["rank"] = s.rank;
  out["m"] = s.m;
  out["oracle"] = s.oracle;
  Json nodes = Json::array();
  for (const auto& x : s.graph.nodes) nodes.push_back(to_json(x));
  out["nodes"] = std::move(nodes);
  out["facets"] = s.facets;
  out["f_vector"] = s.f_vector;
  Json verification;
  verification["theorem2"] = s.theorem2.pass ? "pass" : "fail";
  verification["theorem3"] = s.theorem3.pass ? "pass" : "fail";
  Json t4 = Json::array();
  for (const auto& [drop, report] : s.theorem4) {
    Json entry;
    entry["deleted_vertex"] = drop + 1;
    entry["result"] = report.pass ? "pass" : "fail";
    entry["pairs"] = report.checked;
    t4.push_back(std::move(entry));
  }
  verification["theorem4"] = std::move(t4);
  if (s.oracle == "both") verification["oracles_agree"] = s.oracles_agree;
  verification["details"] = {{"theorem2", report_json(s.theorem2)}, {"theorem3", report_json(s.theorem3)}};
  out["verification"] = std::move(verification);
  return out;
}

}  // namespace mcluster
