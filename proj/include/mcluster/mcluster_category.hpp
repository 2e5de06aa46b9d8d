#pragma once

#include <utility>

#include "mcluster/coloured_roots.hpp"
#include "mcluster/derived.hpp"

namespace mcluster {

/// The orbit category D^b / G with G = tau^-1 [m]. Objects are named by
/// their representative in the fundamental domain, i.e. fine degree in
/// [-mh+1, 2]. Holds a reference to `derived`, which must outlive it.
class MClusterCategory {
 public:
  MClusterCategory(const DerivedCategory& derived, int m);

  int m() const { return m_; }
  const DerivedCategory& derived() const { return *derived_; }

  /// beta^j -> V(beta)[j-1]; -alpha_i -> I_i[-1].
  DerivedObject W(const ColouredRoot& x) const;
  /// Inverse of W on fundamental-domain objects; throws otherwise.
  ColouredRoot W_inverse(const DerivedObject& x) const;

  bool in_fundamental_domain(const DerivedObject& x) const;
  /// G^p x = tau^-p x [pm], for any integer p.
  DerivedObject G_power(const DerivedObject& x, int p) const;
  /// Representative of the G-orbit of x inside the fundamental domain.
  DerivedObject reduce(const DerivedObject& x) const;

  /// Values of p for which Hom(G^p X, Y[i]) can be nonzero: coarse degrees
  /// of G^p X and Y[i] must differ by 0 or 1.
  std::pair<int, int> orbit_range(const DerivedObject& X, const DerivedObject& Y, int i) const;

  /// dim Ext^i(X, Y) = sum_p dim Hom(G^p X, Y[i]) over orbit_range(),
  /// widened by `margin` on both sides.
  int ext(const DerivedObject& X, const DerivedObject& Y, int i, int margin = 0) const;

  /// Compatible iff Ext^i(W x, W y) = 0 for i = 1..m.
  bool compatible(const ColouredRoot& x, const ColouredRoot& y) const;

  /// reduce(W(x)[1]) == W(R_m(x)).
  bool lemma2_check(const ColouredRoot& x) const;
  /// Ext^i(X, Y) == Ext^{m+1-i}(Y, X).
  bool lemma3_check(const DerivedObject& X, const DerivedObject& Y, int i) const;

 private:
  const DerivedCategory* derived_;
  int m_;
};

}  // namespace mcluster
