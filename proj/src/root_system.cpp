#include "mcluster/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mcluster {

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

bool Root::is_positive() const {
  bool nonzero = false;
  for (int c : coeffs) {
    if (c < 0) return false;
    nonzero = nonzero || c != 0;
  }
  return nonzero;
}

bool Root::is_negative_simple() const {
  int hits = 0;
  for (int c : coeffs) {
    if (c == -1) ++hits;
    else if (c != 0) return false;
  }
  return hits == 1;
}

int Root::negative_simple_vertex() const {
  for (int i = 0; i < rank(); ++i)
    if (coeffs[i] == -1) return i;
  return -1;
}

Root Root::simple(int n, int i) {
  Root r{std::vector<int>(n, 0)};
  r.coeffs[i] = 1;
  return r;
}

Root Root::negative_simple(int n, int i) {
  Root r{std::vector<int>(n, 0)};
  r.coeffs[i] = -1;
  return r;
}

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

Root Root::operator+(const Root& other) const {
  Root r = *this;
  for (int i = 0; i < rank(); ++i) r.coeffs[i] += other.coeffs[i];
  return r;
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < r.rank(); ++i) os << (i ? "," : "") << r.coeffs[i];
  os << ')';
  return os.str();
}

void DynkinType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
  }
  if (!ok) throw std::invalid_argument("invalid rank " + std::to_string(rank) +
                                       " for family " + std::string(1, static_cast<char>(family)));
}

std::string DynkinType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

DynkinType DynkinType::parse(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("bad Dynkin type '" + text + "'");
  DynkinType t{};
  switch (text[0]) {
    case 'A': case 'a': t.family = Family::A; break;
    case 'D': case 'd': t.family = Family::D; break;
    case 'E': case 'e': t.family = Family::E; break;
    default: throw std::invalid_argument("unknown family in '" + text + "'");
  }
  std::size_t used = 0;
  try {
    t.rank = std::stoi(text.substr(1), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rank in '" + text + "'");
  }
  if (used != text.size() - 1) throw std::invalid_argument("bad rank in '" + text + "'");
  t.validate();
  return t;
}

namespace {

std::vector<Edge> family_edges(DynkinType t) {
  std::vector<Edge> e;
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 2; ++i) e.push_back({i, i + 1});
      e.push_back({n - 3, n - 2});
      e.push_back({n - 3, n - 1});
      break;
    case Family::E:
      for (int i = 0; i + 1 < n - 1; ++i) e.push_back({i, i + 1});
      e.push_back({2, n - 1});
      break;
  }
  return e;
}

// Recognises a connected simply-laced tree: returns nullopt for anything
// that is not a finite-type diagram.
std::optional<DynkinType> classify(const std::vector<int>& vertices,
                                   const std::vector<std::vector<int>>& nbrs) {
  const int k = static_cast<int>(vertices.size());
  int branch = -1;
  for (int v : vertices) {
    const int deg = static_cast<int>(nbrs[v].size());
    if (deg > 3) return std::nullopt;
    if (deg == 3) {
      if (branch >= 0) return std::nullopt;
      branch = v;
    }
  }
  if (branch < 0) return DynkinType{Family::A, k};
  std::vector<int> arms;
  for (int start : nbrs[branch]) {
    int prev = branch, cur = start, len = 1;
    while (nbrs[cur].size() == 2) {
      const int next = nbrs[cur][0] == prev ? nbrs[cur][1] : nbrs[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return DynkinType{Family::D, k};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return DynkinType{Family::E, k};
  return std::nullopt;
}

}  // namespace

RootSystem RootSystem::build(DynkinType type) {
  type.validate();
  const int n = type.rank;
  auto edges = family_edges(type);

  // 2-colour the tree from vertex 0.
  std::vector<std::vector<int>> nbrs(n);
  for (auto [a, b] : edges) {
    nbrs[a].push_back(b);
    nbrs[b].push_back(a);
  }
  std::vector<int> colour(n, -1);
  colour[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : nbrs[v])
      if (colour[w] < 0) {
        colour[w] = 1 - colour[v];
        queue.push_back(w);
      }
  }
  std::vector<bool> in_plus(n);
  for (int i = 0; i < n; ++i) in_plus[i] = colour[i] == 1;
  std::vector<int> ambient(n);
  std::iota(ambient.begin(), ambient.end(), 0);
  return from_diagram(n, std::move(edges), std::move(in_plus), std::move(ambient));
}

RootSystem RootSystem::from_diagram(int n, std::vector<Edge> edges,
                                    std::vector<bool> in_plus,
                                    std::vector<int> ambient) {
  if (n < 1) throw std::invalid_argument("root system needs at least one vertex");
  if (static_cast<int>(in_plus.size()) != n || static_cast<int>(ambient.size()) != n)
    throw std::invalid_argument("bipartition/ambient size mismatch");
  RootSystem rs;
  rs.n_ = n;
  rs.edges_ = std::move(edges);
  rs.in_plus_ = std::move(in_plus);
  rs.ambient_ = std::move(ambient);
  rs.finish();
  return rs;
}

void RootSystem::finish() {
  const int n = n_;
  cartan_.assign(n, std::vector<int>(n, 0));
  neighbours_.assign(n, {});
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  for (auto [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
      throw std::invalid_argument("bad diagram edge");
    if (cartan_[a][b] != 0) throw std::invalid_argument("duplicate diagram edge");
    if (in_plus_[a] == in_plus_[b])
      throw std::invalid_argument("diagram edge inside one part of the bipartition");
    cartan_[a][b] = cartan_[b][a] = -1;
    neighbours_[a].push_back(b);
    neighbours_[b].push_back(a);
  }
  for (auto& v : neighbours_) std::sort(v.begin(), v.end());
  plus_.clear();
  minus_.clear();
  for (int i = 0; i < n; ++i) (in_plus_[i] ? plus_ : minus_).push_back(i);

  // Connected components.
  component_of_.assign(n, -1);
  components_.clear();
  for (int s = 0; s < n; ++s) {
    if (component_of_[s] >= 0) continue;
    const int c = static_cast<int>(components_.size());
    components_.emplace_back();
    std::deque<int> queue{s};
    component_of_[s] = c;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      components_[c].push_back(v);
      for (int w : neighbours_[v])
        if (component_of_[w] < 0) {
          component_of_[w] = c;
          queue.push_back(w);
        }
    }
    std::sort(components_[c].begin(), components_[c].end());
  }
  if (static_cast<int>(edges_.size()) != n - static_cast<int>(components_.size()))
    throw std::invalid_argument("diagram is not a forest");

  component_types_.clear();
  for (const auto& comp : components_) {
    auto t = classify(comp, neighbours_);
    if (!t) throw std::invalid_argument("diagram component is not of type A, D or E");
    component_types_.push_back(t);
  }

  // Positive roots: closure of the simple roots under the simple reflections.
  positive_.clear();
  index_.clear();
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root a = Root::simple(n, i);
    index_.emplace(a.coeffs, static_cast<int>(positive_.size()));
    positive_.push_back(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    Root beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Root gamma = reflect(i, beta);
      if (!gamma.is_positive() || index_.count(gamma.coeffs)) continue;
      index_.emplace(gamma.coeffs, static_cast<int>(positive_.size()));
      positive_.push_back(gamma);
      queue.push_back(std::move(gamma));
    }
  }

  component_h_.clear();
  for (const auto& comp : components_) {
    int count = 0;
    for (const auto& r : positive_)
      if (std::any_of(comp.begin(), comp.end(), [&](int v) { return r.coeffs[v] != 0; }))
        ++count;
    const int k = static_cast<int>(comp.size());
    if ((2 * count) % k != 0) throw std::logic_error("|Phi| is not a multiple of the rank");
    component_h_.push_back(2 * count / k);
  }
}

std::optional<DynkinType> RootSystem::type() const {
  if (!is_irreducible()) return std::nullopt;
  return component_types_.front();
}

int RootSystem::coxeter_number() const {
  if (!is_irreducible())
    throw std::logic_error("Coxeter number requested for reducible system " + name());
  return component_h_.front();
}

std::string RootSystem::name() const {
  std::string out;
  for (std::size_t c = 0; c < component_types_.size(); ++c) {
    if (c) out += "x";
    out += component_types_[c]->name();
  }
  return out;
}

int RootSystem::positive_index(const Root& r) const {
  if (r.rank() != n_) return -1;
  auto it = index_.find(r.coeffs);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const Root& r) const {
  return positive_index(r) >= 0 || positive_index(-r) >= 0;
}

bool RootSystem::is_almost_positive(const Root& r) const {
  if (r.rank() != n_) return false;
  return positive_index(r) >= 0 || r.is_negative_simple();
}

Root RootSystem::reflect(int i, const Root& beta) const {
  if (i < 0 || i >= n_) throw std::out_of_range("reflection vertex out of range");
  int pairing = 0;
  for (int j = 0; j < n_; ++j) pairing += beta.coeffs[j] * cartan_[j][i];
  Root out = beta;
  out.coeffs[i] -= pairing;
  return out;
}

RootSystem RootSystem::parabolic(std::vector<int> keep) const {
  if (keep.empty()) throw std::invalid_argument("parabolic subsystem needs a nonempty vertex set");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> relabel(n_, -1);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] < 0 || keep[k] >= n_) throw std::invalid_argument("parabolic vertex out of range");
    relabel[keep[k]] = static_cast<int>(k);
  }
  std::vector<Edge> edges;
  for (auto [a, b] : edges_)
    if (relabel[a] >= 0 && relabel[b] >= 0) edges.push_back({relabel[a], relabel[b]});
  std::vector<bool> in_plus;
  for (int v : keep) in_plus.push_back(in_plus_[v]);
  return from_diagram(static_cast<int>(keep.size()), std::move(edges), std::move(in_plus), keep);
}

RootSystem RootSystem::component(int index) const {
  return parabolic(components_.at(index));
}

Root RootSystem::restrict_to(const Root& r, const std::vector<int>& vertices) {
  Root out{std::vector<int>(vertices.size())};
  for (std::size_t k = 0; k < vertices.size(); ++k) out.coeffs[k] = r.coeffs[vertices[k]];
  return out;
}

}  // namespace mcluster
