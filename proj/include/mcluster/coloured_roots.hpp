#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mcluster/root_system.hpp"

namespace mcluster {

enum class Sign { plus, minus };

/// A positive root with a colour in [1, m], or a negative simple root
/// (always colour 1).
struct ColouredRoot {
  Root root;
  int colour = 1;

  bool is_negative_simple() const { return root.is_negative_simple(); }
  auto operator<=>(const ColouredRoot&) const = default;
  bool operator==(const ColouredRoot&) const = default;
};

std::string to_string(const ColouredRoot& x);

/// Throws std::invalid_argument unless x lies in the coloured ground set
/// for this root system and m.
void validate_coloured(const RootSystem& rs, int m, const ColouredRoot& x);

/// tau_+ / tau_- on almost positive roots.
Root tau_eps(const RootSystem& rs, Sign eps, const Root& beta);

/// R = tau_+ tau_-, and its inverse tau_- tau_+.
Root rotation_R(const RootSystem& rs, const Root& beta);
Root rotation_R_inverse(const RootSystem& rs, const Root& beta);

/// Coloured rotation: bumps the colour of a positive root below m, and
/// otherwise applies R and resets the colour to 1.
ColouredRoot rotation_Rm(const RootSystem& rs, int m, const ColouredRoot& x);
ColouredRoot rotation_Rm_inverse(const RootSystem& rs, int m, const ColouredRoot& x);

/// Upper bound on joint-rotation steps: the size of the coloured ground
/// set plus one. Any orbit is shorter than this.
std::size_t rotation_cap(const RootSystem& rs, int m);

/// (beta || alpha) for m = 1. Rotates both arguments by R until alpha is a
/// negative simple -alpha_i, then reads the alpha_i coefficient of beta.
/// Symmetry is not assumed; it is a tested property.
int compatibility_degree(const RootSystem& rs, const Root& beta, const Root& alpha);

/// Compatibility on the coloured ground set, decided from the rotation
/// rules alone.
bool compatible_combinatorial(const RootSystem& rs, int m, const ColouredRoot& x,
                              const ColouredRoot& y);

/// Indexed view of the coloured ground set. Node order: each positive
/// root (closure order) with colours 1..m, then -alpha_1..-alpha_n.
class ColouredGroundSet {
 public:
  ColouredGroundSet(const RootSystem& rs, int m);

  int m() const { return m_; }
  const RootSystem& root_system() const { return *rs_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<ColouredRoot>& nodes() const { return nodes_; }
  const ColouredRoot& node(int k) const { return nodes_[k]; }
  int index_of(const ColouredRoot& x) const;

  /// R_m as a permutation of node indices.
  int rotate(int k) const { return rotation_[k]; }
  bool is_negative_simple(int k) const { return neg_vertex_[k] >= 0; }

  /// Same decision as compatible_combinatorial(), on indices.
  bool compatible(int a, int b) const;

 private:
  const RootSystem* rs_;
  int m_;
  std::vector<ColouredRoot> nodes_;
  std::map<ColouredRoot, int> index_;
  std::vector<int> rotation_;
  std::vector<int> neg_vertex_;
};

}  // namespace mcluster
