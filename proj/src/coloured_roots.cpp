#include "mcluster/coloured_roots.hpp"

#include <stdexcept>

namespace mcluster {

std::string to_string(const ColouredRoot& x) {
  if (x.is_negative_simple()) return "-e" + std::to_string(x.root.negative_simple_vertex() + 1);
  return to_string(x.root) + "^" + std::to_string(x.colour);
}

void validate_coloured(const RootSystem& rs, int m, const ColouredRoot& x) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (x.root.rank() != rs.rank()) throw std::invalid_argument("coloured root has wrong rank");
  if (x.root.is_negative_simple()) {
    if (x.colour != 1) throw std::invalid_argument("negative simple roots have colour 1");
    return;
  }
  if (rs.positive_index(x.root) < 0)
    throw std::invalid_argument(to_string(x.root) + " is not an almost positive root");
  if (x.colour < 1 || x.colour > m)
    throw std::invalid_argument("colour " + std::to_string(x.colour) + " out of range [1," +
                                std::to_string(m) + "]");
}

Root tau_eps(const RootSystem& rs, Sign eps, const Root& beta) {
  if (!rs.is_almost_positive(beta))
    throw std::invalid_argument(to_string(beta) + " is not almost positive");
  const bool plus = eps == Sign::plus;
  if (beta.is_negative_simple() && rs.in_plus(beta.negative_simple_vertex()) != plus)
    return beta;
  Root out = beta;
  // Reflections within one part commute, so the order is irrelevant.
  for (int i : plus ? rs.I_plus() : rs.I_minus()) out = rs.reflect(i, out);
  return out;
}

Root rotation_R(const RootSystem& rs, const Root& beta) {
  return tau_eps(rs, Sign::plus, tau_eps(rs, Sign::minus, beta));
}

Root rotation_R_inverse(const RootSystem& rs, const Root& beta) {
  return tau_eps(rs, Sign::minus, tau_eps(rs, Sign::plus, beta));
}

ColouredRoot rotation_Rm(const RootSystem& rs, int m, const ColouredRoot& x) {
  validate_coloured(rs, m, x);
  if (!x.is_negative_simple() && x.colour < m) return {x.root, x.colour + 1};
  return {rotation_R(rs, x.root), 1};
}

ColouredRoot rotation_Rm_inverse(const RootSystem& rs, int m, const ColouredRoot& x) {
  validate_coloured(rs, m, x);
  if (!x.is_negative_simple() && x.colour > 1) return {x.root, x.colour - 1};
  Root r = rotation_R_inverse(rs, x.root);
  return {r, r.is_negative_simple() ? 1 : m};
}

std::size_t rotation_cap(const RootSystem& rs, int m) {
  return static_cast<std::size_t>(m) * rs.num_positive() + rs.rank() + 1;
}

int compatibility_degree(const RootSystem& rs, const Root& beta, const Root& alpha) {
  if (!rs.is_almost_positive(beta) || !rs.is_almost_positive(alpha))
    throw std::invalid_argument("compatibility degree needs almost positive roots");
  Root b = beta, a = alpha;
  const std::size_t cap = rotation_cap(rs, 1);
  for (std::size_t step = 0; step <= cap; ++step) {
    if (a.is_negative_simple()) {
      if (b.is_negative_simple()) return 0;
      return b.coeffs[a.negative_simple_vertex()];
    }
    b = rotation_R(rs, b);
    a = rotation_R(rs, a);
  }
  throw std::logic_error("R-orbit of " + to_string(alpha) + " has no negative simple root");
}

namespace {

bool decide_m1(const ColouredRoot& x, const ColouredRoot& y) {
  if (x.is_negative_simple() && y.is_negative_simple()) return true;
  if (x.is_negative_simple()) return !y.root.uses(x.root.negative_simple_vertex());
  return !x.root.uses(y.root.negative_simple_vertex());
}

}  // namespace

bool compatible_combinatorial(const RootSystem& rs, int m, const ColouredRoot& x,
                              const ColouredRoot& y) {
  validate_coloured(rs, m, x);
  validate_coloured(rs, m, y);
  ColouredRoot a = x, b = y;
  const std::size_t cap = rotation_cap(rs, m);
  for (std::size_t step = 0; step <= cap; ++step) {
    if (a.is_negative_simple() || b.is_negative_simple()) return decide_m1(a, b);
    a = rotation_Rm(rs, m, a);
    b = rotation_Rm(rs, m, b);
  }
  throw std::logic_error("joint R_m rotation exceeded its cap");
}

ColouredGroundSet::ColouredGroundSet(const RootSystem& rs, int m) : rs_(&rs), m_(m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  for (const Root& r : rs.positive_roots())
    for (int c = 1; c <= m; ++c) nodes_.push_back({r, c});
  for (int i = 0; i < rs.rank(); ++i) nodes_.push_back({Root::negative_simple(rs.rank(), i), 1});
  for (std::size_t k = 0; k < nodes_.size(); ++k) index_.emplace(nodes_[k], static_cast<int>(k));
  rotation_.reserve(nodes_.size());
  neg_vertex_.reserve(nodes_.size());
  for (const auto& x : nodes_) {
    rotation_.push_back(index_of(rotation_Rm(rs, m, x)));
    neg_vertex_.push_back(x.is_negative_simple() ? x.root.negative_simple_vertex() : -1);
  }
}

int ColouredGroundSet::index_of(const ColouredRoot& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw std::invalid_argument(to_string(x) + " is not in the ground set");
  return it->second;
}

bool ColouredGroundSet::compatible(int a, int b) const {
  const std::size_t cap = nodes_.size() + 1;
  for (std::size_t step = 0; step <= cap; ++step) {
    const int va = neg_vertex_[a], vb = neg_vertex_[b];
    if (va >= 0 && vb >= 0) return true;
    if (va >= 0) return !nodes_[b].root.uses(va);
    if (vb >= 0) return !nodes_[a].root.uses(vb);
    a = rotation_[a];
    b = rotation_[b];
  }
  throw std::logic_error("joint R_m rotation exceeded its cap");
}

}  // namespace mcluster
