#pragma once

#include <string>
#include <vector>

#include "mcluster/execution.hpp"
#include "mcluster/quiver_rep.hpp"
#include "mcluster/root_system.hpp"

namespace mcluster {

/// V(beta)[shift]: the canonical name of an indecomposable of the bounded
/// derived category, beta a positive root.
struct DerivedObject {
  Root beta;
  int shift = 0;

  auto operator<=>(const DerivedObject&) const = default;
  bool operator==(const DerivedObject&) const = default;
};

std::string to_string(const DerivedObject& x);

inline DerivedObject shift(const DerivedObject& x, int k) { return {x.beta, x.shift + k}; }

/// Fine degree of each module indecomposable (indexed like
/// RootSystem::positive_roots()), all within [-h+1, 0].
struct FineDegreeTable {
  std::vector<int> phi;
  int h = 0;
};

/// Projectives sit at 0 (I_minus) and -1 (I_plus); each tau^-1 step lowers
/// the degree by 2. Throws std::logic_error if the walk does not tile the
/// window exactly.
FineDegreeTable build_fine_table(const RootSystem& rs);

/// Coxeter transformation s_{I+} s_{I-} on dimension vectors, which is tau
/// on non-projective indecomposables; and its inverse.
Root coxeter(const RootSystem& rs, const Root& d);
Root coxeter_inverse(const RootSystem& rs, const Root& d);

/// dim Hom between all pairs of module indecomposables, row-major
/// (reps.size() x reps.size()). The parallel kernel fans out over pairs.
std::vector<int> compute_hom_table(const std::vector<Representation>& reps, Execution ex);

/// D^b of the path algebra of Q_bip, for an irreducible root system.
/// Everything is built up front; afterwards all queries are const and
/// safe to call concurrently.
class DerivedCategory {
 public:
  explicit DerivedCategory(const RootSystem& rs, Execution ex = Execution::parallel);

  const RootSystem& root_system() const { return rs_; }
  const Quiver& quiver() const { return quiver_; }
  int h() const { return table_.h; }
  const FineDegreeTable& fine_table() const { return table_; }
  const IndecomposableRecord& indecomposable(int index) const { return modules_[index]; }
  const Root& projective_root(int i) const { return proj_[i]; }
  const Root& injective_root(int i) const { return inj_[i]; }

  /// Throws std::invalid_argument unless x.beta is a positive root.
  void check(const DerivedObject& x) const;

  int fine_degree(const DerivedObject& x) const;
  int coarse_degree(const DerivedObject& x) const;

  DerivedObject tau(const DerivedObject& x) const;
  DerivedObject tau_inverse(const DerivedObject& x) const;

  int module_hom(int a, int b) const { return hom_[std::size_t(a) * modules_.size() + b]; }
  int module_ext1(int a, int b) const;

  /// Hom(V(b)[s], V(c)[t]): module Hom when t = s, Ext^1 when t = s + 1,
  /// zero otherwise.
  int hom(const DerivedObject& x, const DerivedObject& y) const;

  /// V on almost positive roots: beta -> V(beta), -alpha_i -> I_i[-1].
  DerivedObject V(const Root& almost_positive) const;

  /// DOT digraph of Z Q_bip^op restricted to coarse degrees [lo, hi].
  std::string export_zq_dot(int lo, int hi) const;

 private:
  int index_of(const Root& beta) const;

  RootSystem rs_;
  Quiver quiver_;
  FineDegreeTable table_;
  std::vector<IndecomposableRecord> modules_;
  std::vector<int> hom_;
  std::vector<Root> proj_;
  std::vector<Root> inj_;
  std::vector<int> proj_vertex_;  // per root index: i if it is dim P_i, else -1
  std::vector<int> inj_vertex_;
};

}  // namespace mcluster
