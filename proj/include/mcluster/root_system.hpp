#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mcluster {

/// Integer coefficient vector over the simple roots. Also used as the
/// dimension vector of a quiver representation.
struct Root {
  std::vector<int> coeffs;

  int rank() const { return static_cast<int>(coeffs.size()); }
  int height() const;
  bool is_positive() const;  // nonzero, all coefficients >= 0
  bool is_negative_simple() const;
  /// Vertex i for -alpha_i; undefined unless is_negative_simple().
  int negative_simple_vertex() const;
  bool uses(int vertex) const { return coeffs[vertex] != 0; }

  static Root simple(int n, int i);
  static Root negative_simple(int n, int i);

  Root operator-() const;
  Root operator+(const Root& other) const;
  auto operator<=>(const Root&) const = default;
  bool operator==(const Root&) const = default;
};

std::string to_string(const Root& r);

enum class Family : char { A = 'A', D = 'D', E = 'E' };

struct DynkinType {
  Family family;
  int rank;

  /// Throws std::invalid_argument when the rank is outside the family bounds.
  void validate() const;
  std::string name() const;
  static DynkinType parse(const std::string& text);
  bool operator==(const DynkinType&) const = default;
};

struct Edge {
  int a;
  int b;
  bool operator==(const Edge&) const = default;
};

/// Simply-laced root system with a fixed bipartition of its diagram.
///
/// Vertices are 0-based internally. The labelling of the irreducible
/// families follows the usual pictures:
///   A_n: path 0-1-...-(n-1)
///   D_n: path 0..n-3, with n-2 and n-1 both attached to n-3
///   E_n: path 0..n-2, with n-1 attached to 2
/// Vertex 0 is always placed in I_plus.
///
/// Reducible systems arise as parabolic subsystems; they keep the
/// bipartition of the system they were cut from.
class RootSystem {
 public:
  static RootSystem build(DynkinType type);

  /// General constructor for a simply-laced forest. `in_plus[i]` picks the
  /// part of vertex i; `ambient[i]` is the label of vertex i in whatever
  /// system this one was cut from (identity for a freshly built system).
  static RootSystem from_diagram(int n, std::vector<Edge> edges,
                                 std::vector<bool> in_plus,
                                 std::vector<int> ambient);

  int rank() const { return n_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }
  const std::vector<int>& I_plus() const { return plus_; }
  const std::vector<int>& I_minus() const { return minus_; }
  bool in_plus(int i) const { return in_plus_[i]; }
  const std::vector<int>& neighbours(int i) const { return neighbours_[i]; }
  const std::vector<int>& ambient_vertices() const { return ambient_; }

  bool is_irreducible() const { return components_.size() == 1; }
  /// Irreducible type; empty for reducible systems.
  std::optional<DynkinType> type() const;
  /// Coxeter number; throws std::logic_error on a reducible system.
  int coxeter_number() const;
  /// e.g. "A3", "A1xA1"
  std::string name() const;

  /// Vertex sets of the connected components, each sorted.
  const std::vector<std::vector<int>>& component_vertices() const {
    return components_;
  }
  /// Component index containing a vertex.
  int component_of(int vertex) const { return component_of_[vertex]; }

  /// Index into positive_roots(), or -1.
  int positive_index(const Root& r) const;
  bool is_root(const Root& r) const;
  bool is_almost_positive(const Root& r) const;

  Root reflect(int i, const Root& beta) const;

  /// Subsystem on the induced subdiagram of `keep` (vertices of this
  /// system, any order). Vertices of the result are numbered by increasing
  /// label and its ambient_vertices() map back here; the bipartition is
  /// inherited.
  RootSystem parabolic(std::vector<int> keep) const;

  /// Irreducible component `index`, relabelled from 0. Its
  /// ambient_vertices() are vertices of *this* system.
  RootSystem component(int index) const;

  /// Maps a root of this system into the coefficient space of a
  /// subsystem given by `vertices` (labels of this system, sorted).
  static Root restrict_to(const Root& r, const std::vector<int>& vertices);

 private:
  RootSystem() = default;
  void finish();

  int n_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> neighbours_;
  std::vector<bool> in_plus_;
  std::vector<int> plus_;
  std::vector<int> minus_;
  std::vector<int> ambient_;
  std::vector<Root> positive_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<int>> components_;
  std::vector<int> component_of_;
  std::vector<std::optional<DynkinType>> component_types_;
  std::vector<int> component_h_;
};

}  // namespace mcluster
