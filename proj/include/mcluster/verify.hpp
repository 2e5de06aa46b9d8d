#pragma once

#include <string>
#include <vector>

#include "mcluster/complex.hpp"
#include "mcluster/execution.hpp"
#include "mcluster/root_system.hpp"

namespace mcluster {

struct NamedReport {
  std::string name;
  VerificationReport report;
};

/// Oracle agreement on all pairs (also compares facet lists).
VerificationReport check_oracle_equivalence(const RootSystem& rs, int m, Execution ex = Execution::parallel);

/// V(R(a)) equals V(a)[1] reduced into the m = 1 fundamental domain, for
/// every almost positive root a.
VerificationReport check_rotation_is_shift(const DerivedCategory& d);

/// reduce(W(x)[1]) == W(R_m(x)) for every coloured root.
VerificationReport check_coloured_rotation_is_shift(const MClusterCategory& c);

/// Ext^i(X, Y) == Ext^{m+1-i}(Y, X) over all fundamental-domain pairs.
VerificationReport check_ext_symmetry(const MClusterCategory& c);

/// m = 1: dim Ext^1(V(b), V(a)) == (b || a), and the degree is symmetric.
VerificationReport check_degree_equals_ext(const DerivedCategory& d);

/// Everything `verify` runs for one irreducible root system and m.
std::vector<NamedReport> verify_all(const RootSystem& rs, int m, Execution ex = Execution::parallel);

}  // namespace mcluster
