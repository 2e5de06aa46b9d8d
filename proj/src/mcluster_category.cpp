#include "mcluster/mcluster_category.hpp"

#include <stdexcept>

namespace mcluster {

MClusterCategory::MClusterCategory(const DerivedCategory& derived, int m)
    : derived_(&derived), m_(m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
}

DerivedObject MClusterCategory::W(const ColouredRoot& x) const {
  validate_coloured(derived_->root_system(), m_, x);
  if (x.is_negative_simple()) return derived_->V(x.root);
  return {x.root, x.colour - 1};
}

ColouredRoot MClusterCategory::W_inverse(const DerivedObject& x) const {
  derived_->check(x);
  if (x.shift >= 0 && x.shift < m_) return {x.beta, x.shift + 1};
  if (x.shift == -1)
    for (int i = 0; i < derived_->root_system().rank(); ++i)
      if (derived_->injective_root(i) == x.beta)
        return {Root::negative_simple(x.beta.rank(), i), 1};
  throw std::invalid_argument(to_string(x) + " is outside the fundamental domain");
}

bool MClusterCategory::in_fundamental_domain(const DerivedObject& x) const {
  const int d = derived_->fine_degree(x);
  return d <= 2 && d >= -m_ * derived_->h() + 1;
}

DerivedObject MClusterCategory::G_power(const DerivedObject& x, int p) const {
  DerivedObject out = x;
  for (int k = 0; k < p; ++k) out = derived_->tau_inverse(out);
  for (int k = 0; k > p; --k) out = derived_->tau(out);
  return shift(out, p * m_);
}

DerivedObject MClusterCategory::reduce(const DerivedObject& x) const {
  // G moves the fine degree by -(mh + 2), the width of the window, so the
  // number of steps is determined up front.
  const int step = m_ * derived_->h() + 2;
  const int d = derived_->fine_degree(x);
  const int p = ceil_div(d - 2, step);
  DerivedObject out = G_power(x, p);
  if (!in_fundamental_domain(out))
    throw std::logic_error("reduction of " + to_string(x) + " missed the fundamental domain");
  return out;
}

std::pair<int, int> MClusterCategory::orbit_range(const DerivedObject& X, const DerivedObject& Y,
                                                  int i) const {
  const int h = derived_->h();
  const int step = m_ * h + 2;
  const int c = derived_->coarse_degree(shift(Y, i));
  // Need d_C(G^p X) in {c, c+1}, i.e. d_F(X) - p*step in [h(c-1)+1, h(c+1)].
  const int dx = derived_->fine_degree(X);
  return {ceil_div(dx - h * (c + 1), step), floor_div(dx - h * (c - 1) - 1, step)};
}

int MClusterCategory::ext(const DerivedObject& X, const DerivedObject& Y, int i, int margin) const {
  if (i < 1 || i > m_) throw std::invalid_argument("Ext degree out of range [1, m]");
  const auto [lo, hi] = orbit_range(X, Y, i);
  const DerivedObject target = shift(Y, i);
  int total = 0;
  for (int p = lo - margin; p <= hi + margin; ++p) total += derived_->hom(G_power(X, p), target);
  return total;
}

bool MClusterCategory::compatible(const ColouredRoot& x, const ColouredRoot& y) const {
  const DerivedObject X = W(x), Y = W(y);
  for (int i = 1; i <= m_; ++i)
    if (ext(X, Y, i) != 0) return false;
  return true;
}

bool MClusterCategory::lemma2_check(const ColouredRoot& x) const {
  const auto& rs = derived_->root_system();
  return reduce(shift(W(x), 1)) == W(rotation_Rm(rs, m_, x));
}

bool MClusterCategory::lemma3_check(const DerivedObject& X, const DerivedObject& Y, int i) const {
  return ext(X, Y, i) == ext(Y, X, m_ + 1 - i);
}

}  // namespace mcluster
