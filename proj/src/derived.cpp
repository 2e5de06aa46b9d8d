#include "mcluster/derived.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace mcluster {

void apply_thread_limit_from_env() {
  if (const char* env = std::getenv("MCLUSTER_THREADS")) {
    const int threads = std::atoi(env);
    if (threads > 0) omp_set_num_threads(threads);
  }
}

std::string to_string(const DerivedObject& x) {
  return "V" + to_string(x.beta) + "[" + std::to_string(x.shift) + "]";
}

Root coxeter(const RootSystem& rs, const Root& d) {
  Root out = d;
  for (int i : rs.I_minus()) out = rs.reflect(i, out);
  for (int i : rs.I_plus()) out = rs.reflect(i, out);
  return out;
}

Root coxeter_inverse(const RootSystem& rs, const Root& d) {
  Root out = d;
  for (int i : rs.I_plus()) out = rs.reflect(i, out);
  for (int i : rs.I_minus()) out = rs.reflect(i, out);
  return out;
}

FineDegreeTable build_fine_table(const RootSystem& rs) {
  FineDegreeTable table;
  table.h = rs.coxeter_number();
  table.phi.assign(rs.num_positive(), 1);  // 1 = unassigned, outside the window
  const Quiver q = Quiver::bipartite(rs);
  std::size_t assigned = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    Root d = projective(q, i).dimension_vector();
    int degree = rs.in_plus(i) ? -1 : 0;
    while (d.is_positive()) {
      const int idx = rs.positive_index(d);
      if (idx < 0) throw std::logic_error("tau^-1 orbit left the root system at " + to_string(d));
      if (table.phi[idx] != 1) throw std::logic_error("fine degree assigned twice");
      if (degree < -table.h + 1) throw std::logic_error("fine degree below the module window");
      table.phi[idx] = degree;
      ++assigned;
      d = coxeter_inverse(rs, d);
      degree -= 2;
    }
  }
  if (assigned != rs.num_positive()) throw std::logic_error("fine degree table incomplete");
  return table;
}

std::vector<int> compute_hom_table(const std::vector<Representation>& reps, Execution ex) {
  const long long count = static_cast<long long>(reps.size());
  std::vector<int> table(std::size_t(count * count), 0);
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long long k = 0; k < count * count; ++k)
      table[k] = hom_dim(reps[k / count], reps[k % count]);
  } else {
    for (long long k = 0; k < count * count; ++k)
      table[k] = hom_dim(reps[k / count], reps[k % count]);
  }
  return table;
}

DerivedCategory::DerivedCategory(const RootSystem& rs, Execution ex)
    : rs_(rs), quiver_(Quiver::bipartite(rs)), table_(build_fine_table(rs)) {
  const auto& roots = rs_.positive_roots();
  const int count = static_cast<int>(roots.size());
  modules_.resize(count);
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < count; ++k) modules_[k] = build_indecomposable(rs_, roots[k]);
  } else {
    for (int k = 0; k < count; ++k) modules_[k] = build_indecomposable(rs_, roots[k]);
  }
  std::vector<Representation> reps;
  reps.reserve(count);
  for (const auto& rec : modules_) reps.push_back(rec.rep);
  hom_ = compute_hom_table(reps, ex);

  proj_vertex_.assign(count, -1);
  inj_vertex_.assign(count, -1);
  for (int i = 0; i < rs_.rank(); ++i) {
    proj_.push_back(projective(quiver_, i).dimension_vector());
    inj_.push_back(injective(quiver_, i).dimension_vector());
    proj_vertex_[index_of(proj_.back())] = i;
    inj_vertex_[index_of(inj_.back())] = i;
  }
}

int DerivedCategory::index_of(const Root& beta) const {
  const int idx = rs_.positive_index(beta);
  if (idx < 0) throw std::invalid_argument(to_string(beta) + " is not a positive root");
  return idx;
}

void DerivedCategory::check(const DerivedObject& x) const { index_of(x.beta); }

int DerivedCategory::fine_degree(const DerivedObject& x) const {
  return table_.phi[index_of(x.beta)] - x.shift * table_.h;
}

int DerivedCategory::coarse_degree(const DerivedObject& x) const {
  return ceil_div(fine_degree(x), table_.h);
}

DerivedObject DerivedCategory::tau(const DerivedObject& x) const {
  const int i = proj_vertex_[index_of(x.beta)];
  if (i >= 0) return {inj_[i], x.shift - 1};
  Root d = coxeter(rs_, x.beta);
  if (rs_.positive_index(d) < 0) throw std::logic_error("tau left the module slice");
  return {std::move(d), x.shift};
}

DerivedObject DerivedCategory::tau_inverse(const DerivedObject& x) const {
  const int i = inj_vertex_[index_of(x.beta)];
  if (i >= 0) return {proj_[i], x.shift + 1};
  Root d = coxeter_inverse(rs_, x.beta);
  if (rs_.positive_index(d) < 0) throw std::logic_error("tau^-1 left the module slice");
  return {std::move(d), x.shift};
}

int DerivedCategory::module_ext1(int a, int b) const {
  const int ext = module_hom(a, b) -
                  euler_form(quiver_, rs_.positive_roots()[a].coeffs, rs_.positive_roots()[b].coeffs);
  if (ext < 0) throw std::logic_error("negative Ext^1 dimension");
  return ext;
}

int DerivedCategory::hom(const DerivedObject& x, const DerivedObject& y) const {
  const int a = index_of(x.beta), b = index_of(y.beta);
  switch (y.shift - x.shift) {
    case 0: return module_hom(a, b);
    case 1: return module_ext1(a, b);
    default: return 0;
  }
}

DerivedObject DerivedCategory::V(const Root& almost_positive) const {
  if (almost_positive.is_negative_simple())
    return {inj_[almost_positive.negative_simple_vertex()], -1};
  index_of(almost_positive);
  return {almost_positive, 0};
}

std::string DerivedCategory::export_zq_dot(int lo, int hi) const {
  std::ostringstream os;
  os << "digraph ZQ {\n";
  if (lo > hi) {
    os << "}\n";
    return os.str();
  }
  const int h = table_.h;
  const int d_min = h * (lo - 1) + 1, d_max = h * hi;

  // Vertex (i, k) of Z Q_bip^op carries tau^k P_i.
  struct Vertex {
    int i, k, fine;
    DerivedObject obj;
  };
  std::vector<Vertex> vertices;
  for (int i = 0; i < rs_.rank(); ++i) {
    const int off = rs_.in_plus(i) ? 1 : 0;  // fine degree 2k - off
    const int k_lo = ceil_div(d_min + off, 2), k_hi = floor_div(d_max + off, 2);
    if (k_lo > k_hi) continue;
    DerivedObject obj{proj_[i], 0};
    for (int k = 0; k > k_lo; --k) obj = tau_inverse(obj);
    for (int k = 0; k < k_lo; ++k) obj = tau(obj);
    for (int k = k_lo; k <= k_hi; ++k) {
      const int fine = 2 * k - off;
      if (fine_degree(obj) != fine) throw std::logic_error("ZQ vertex fine degree mismatch");
      vertices.push_back({i, k, fine, obj});
      obj = tau(obj);
    }
  }
  std::sort(vertices.begin(), vertices.end(), [](const Vertex& a, const Vertex& b) {
    return std::tie(b.fine, a.i) < std::tie(a.fine, b.i);
  });
  auto id = [](int i, int k) {
    return "v" + std::to_string(i + 1) + "_" + (k < 0 ? "m" + std::to_string(-k) : std::to_string(k));
  };
  auto present = [&](int i, int k) {
    return std::any_of(vertices.begin(), vertices.end(),
                       [&](const Vertex& v) { return v.i == i && v.k == k; });
  };
  for (const auto& v : vertices)
    os << "  " << id(v.i, v.k) << " [label=\"(" << v.i + 1 << "," << v.k << ") dF=" << v.fine
       << " " << to_string(v.obj) << "\"];\n";
  // Arrow i -> j of Q gives (j,p) -> (i,p) and (i,p) -> (j,p-1).
  for (const auto& v : vertices)
    for (const auto& a : quiver_.arrows()) {
      if (v.i == a.target && present(a.source, v.k))
        os << "  " << id(v.i, v.k) << " -> " << id(a.source, v.k) << ";\n";
      if (v.i == a.source && present(a.target, v.k - 1))
        os << "  " << id(v.i, v.k) << " -> " << id(a.target, v.k - 1) << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace mcluster
