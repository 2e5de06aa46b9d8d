#pragma once

#include <vector>

#include "mcluster/rational_matrix.hpp"
#include "mcluster/root_system.hpp"

namespace mcluster {

struct Arrow {
  int source;
  int target;
  bool operator==(const Arrow&) const = default;
};

/// Orientation of a Dynkin forest. Arrow order is stable under reflection,
/// so representations of reflected quivers keep their map indices.
class Quiver {
 public:
  Quiver() = default;
  Quiver(int n, std::vector<Arrow> arrows);

  /// Q_bip: one arrow per diagram edge, from I_plus to I_minus.
  static Quiver bipartite(const RootSystem& rs);

  int size() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  bool is_sink(int k) const;
  bool is_source(int k) const;
  /// Reverses every arrow at k.
  Quiver reflected_at(int k) const;

  bool operator==(const Quiver&) const = default;

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
};

struct Representation {
  Quiver quiver;
  std::vector<int> dims;
  /// maps[a] is dims[target] x dims[source] for arrow a.
  std::vector<RationalMatrix> maps;

  Root dimension_vector() const { return Root{dims}; }
  /// Throws std::invalid_argument on shape mismatches.
  void validate() const;
};

Representation simple_representation(const Quiver& q, int i);
Representation projective(const Quiver& q, int i);
Representation injective(const Quiver& q, int i);

/// BGP reflection functors. `k` must be a sink (resp. source) of rep.quiver;
/// the result lives on rep.quiver.reflected_at(k).
Representation reflect_at_sink(const Representation& rep, int k);
Representation reflect_at_source(const Representation& rep, int k);

/// How an indecomposable was produced, for reproducibility.
struct IndecomposableRecord {
  Representation rep;
  /// Vertex whose simple representation the construction starts from.
  int start_vertex = -1;
  /// Sink reflections applied to the dimension vector, in order. The
  /// representation is obtained by undoing them with source reflections.
  std::vector<int> sink_sequence;
  int endomorphism_dim = 0;
};

/// The indecomposable of Q_bip with dimension vector beta. Sinks are
/// reflected in sweeps (I_minus then I_plus, each in vertex order) until
/// beta becomes a simple root at a sink.
IndecomposableRecord build_indecomposable(const RootSystem& rs, const Root& beta);
Representation indecomposable_for_root(const RootSystem& rs, const Root& beta);

/// Dimension of the space of intertwiners M -> N, by exact kernel rank.
int hom_dim(const Representation& M, const Representation& N);

/// <d, e> = sum_i d_i e_i - sum_{a: i -> j} d_i e_j.
int euler_form(const Quiver& q, const std::vector<int>& d, const std::vector<int>& e);
int euler_form(const RootSystem& rs, const std::vector<int>& d, const std::vector<int>& e);

/// hom_dim - euler_form; throws std::logic_error if that is negative.
int ext1_dim(const Representation& M, const Representation& N);

}  // namespace mcluster
