#include "mcluster/quiver_rep.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mcluster {

Quiver::Quiver(int n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows)) {
  for (const auto& a : arrows_)
    if (a.source < 0 || a.target < 0 || a.source >= n_ || a.target >= n_ || a.source == a.target)
      throw std::invalid_argument("bad arrow");
}

Quiver Quiver::bipartite(const RootSystem& rs) {
  std::vector<Arrow> arrows;
  for (auto [a, b] : rs.edges()) {
    if (rs.in_plus(a)) arrows.push_back({a, b});
    else arrows.push_back({b, a});
  }
  return Quiver(rs.rank(), std::move(arrows));
}

bool Quiver::is_sink(int k) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [k](const Arrow& a) { return a.source == k; });
}

bool Quiver::is_source(int k) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [k](const Arrow& a) { return a.target == k; });
}

Quiver Quiver::reflected_at(int k) const {
  Quiver q = *this;
  for (auto& a : q.arrows_)
    if (a.source == k || a.target == k) std::swap(a.source, a.target);
  return q;
}

void Representation::validate() const {
  if (static_cast<int>(dims.size()) != quiver.size())
    throw std::invalid_argument("representation has wrong number of vertices");
  if (maps.size() != quiver.arrows().size())
    throw std::invalid_argument("representation has wrong number of maps");
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const auto& arr = quiver.arrows()[a];
    if (maps[a].rows() != dims[arr.target] || maps[a].cols() != dims[arr.source])
      throw std::invalid_argument("arrow matrix shape does not match dimensions");
  }
}

namespace {

Representation zero_rep(const Quiver& q) {
  Representation rep{q, std::vector<int>(q.size(), 0), {}};
  for (std::size_t a = 0; a < q.arrows().size(); ++a) rep.maps.emplace_back(0, 0);
  return rep;
}

// Fills 1x1 identity maps wherever both ends are one-dimensional.
Representation thin_rep(const Quiver& q, const std::vector<bool>& support) {
  Representation rep{q, std::vector<int>(q.size(), 0), {}};
  for (int i = 0; i < q.size(); ++i) rep.dims[i] = support[i] ? 1 : 0;
  for (const auto& a : q.arrows()) {
    RationalMatrix m(rep.dims[a.target], rep.dims[a.source]);
    if (support[a.source] && support[a.target]) m.at(0, 0) = 1;
    rep.maps.push_back(std::move(m));
  }
  return rep;
}

std::vector<bool> reachable(const Quiver& q, int start, bool forward) {
  std::vector<bool> seen(q.size(), false);
  seen[start] = true;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const auto& a : q.arrows()) {
      const int from = forward ? a.source : a.target;
      const int to = forward ? a.target : a.source;
      if (from == v && !seen[to]) {
        seen[to] = true;
        queue.push_back(to);
      }
    }
  }
  return seen;
}

}  // namespace

Representation simple_representation(const Quiver& q, int i) {
  Representation rep = zero_rep(q);
  rep.dims[i] = 1;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrows()[a];
    rep.maps[a] = RationalMatrix(rep.dims[arr.target], rep.dims[arr.source]);
  }
  return rep;
}

// On a tree there is at most one path between two vertices, so projectives
// and injectives are thin.
Representation projective(const Quiver& q, int i) { return thin_rep(q, reachable(q, i, true)); }

Representation injective(const Quiver& q, int i) { return thin_rep(q, reachable(q, i, false)); }

Representation reflect_at_sink(const Representation& rep, int k) {
  const Quiver& q = rep.quiver;
  if (!q.is_sink(k)) throw std::invalid_argument("reflect_at_sink: vertex is not a sink");
  std::vector<int> incoming;
  int total = 0;
  for (std::size_t a = 0; a < q.arrows().size(); ++a)
    if (q.arrows()[a].target == k) {
      incoming.push_back(static_cast<int>(a));
      total += rep.dims[q.arrows()[a].source];
    }
  // phi = [M_a1 | M_a2 | ...] : (+)_j V_j -> V_k; new V_k = ker phi.
  RationalMatrix phi(rep.dims[k], total);
  int offset = 0;
  for (int a : incoming) {
    const auto& m = rep.maps[a];
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) phi.at(r, offset + c) = m.at(r, c);
    offset += m.cols();
  }
  const RationalMatrix kernel = phi.nullspace();
  Representation out = rep;
  out.quiver = q.reflected_at(k);
  out.dims[k] = kernel.cols();
  offset = 0;
  for (int a : incoming) {
    const int dj = rep.dims[q.arrows()[a].source];
    out.maps[a] = kernel.row_block(offset, dj);
    offset += dj;
  }
  return out;
}

Representation reflect_at_source(const Representation& rep, int k) {
  const Quiver& q = rep.quiver;
  if (!q.is_source(k)) throw std::invalid_argument("reflect_at_source: vertex is not a source");
  std::vector<int> outgoing;
  int total = 0;
  for (std::size_t a = 0; a < q.arrows().size(); ++a)
    if (q.arrows()[a].source == k) {
      outgoing.push_back(static_cast<int>(a));
      total += rep.dims[q.arrows()[a].target];
    }
  // psi = [M_a1; M_a2; ...] : V_k -> (+)_j V_j; new V_k = coker psi, realised
  // by a projection whose rows span the left kernel of psi.
  RationalMatrix psi(total, rep.dims[k]);
  int offset = 0;
  for (int a : outgoing) {
    const auto& m = rep.maps[a];
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) psi.at(offset + r, c) = m.at(r, c);
    offset += m.rows();
  }
  const RationalMatrix projection = psi.transpose().nullspace().transpose();
  Representation out = rep;
  out.quiver = q.reflected_at(k);
  out.dims[k] = projection.rows();
  offset = 0;
  for (int a : outgoing) {
    const int dj = rep.dims[q.arrows()[a].target];
    RationalMatrix block(projection.rows(), dj);
    for (int r = 0; r < projection.rows(); ++r)
      for (int c = 0; c < dj; ++c) block.at(r, c) = projection.at(r, offset + c);
    out.maps[a] = std::move(block);
    offset += dj;
  }
  return out;
}

IndecomposableRecord build_indecomposable(const RootSystem& rs, const Root& beta) {
  if (rs.positive_index(beta) < 0)
    throw std::invalid_argument(to_string(beta) + " is not a positive root");
  const int n = rs.rank();
  std::vector<int> sweep = rs.I_minus();
  sweep.insert(sweep.end(), rs.I_plus().begin(), rs.I_plus().end());

  IndecomposableRecord rec{zero_rep(Quiver::bipartite(rs)), -1, {}, 0};
  Quiver q = Quiver::bipartite(rs);
  Root gamma = beta;
  const std::size_t cap = 2 * (rs.num_positive() + 1) * n;
  for (std::size_t step = 0; rec.start_vertex < 0; ++step) {
    if (step > cap) throw std::logic_error("reflection sweep did not terminate");
    const int k = sweep[step % sweep.size()];
    if (!q.is_sink(k)) throw std::logic_error("sweep vertex is not a sink");
    if (gamma == Root::simple(n, k)) {
      rec.start_vertex = k;
      break;
    }
    gamma = rs.reflect(k, gamma);
    if (!gamma.is_positive()) throw std::logic_error("sink reflection left the positive roots");
    rec.sink_sequence.push_back(k);
    q = q.reflected_at(k);
  }

  Representation rep = simple_representation(q, rec.start_vertex);
  for (auto it = rec.sink_sequence.rbegin(); it != rec.sink_sequence.rend(); ++it)
    rep = reflect_at_source(rep, *it);
  if (!(rep.quiver == Quiver::bipartite(rs)) || rep.dimension_vector() != beta)
    throw std::logic_error("reflection functors did not reproduce " + to_string(beta));
  rep.validate();
  rec.endomorphism_dim = hom_dim(rep, rep);
  rec.rep = std::move(rep);
  return rec;
}

Representation indecomposable_for_root(const RootSystem& rs, const Root& beta) {
  return build_indecomposable(rs, beta).rep;
}

int hom_dim(const Representation& M, const Representation& N) {
  if (!(M.quiver == N.quiver)) throw std::invalid_argument("hom_dim: representations of different quivers");
  const Quiver& q = M.quiver;
  const int n = q.size();
  // Unknown f_i is an N_i x M_i block, stored row-major at offset[i].
  std::vector<int> offset(n + 1, 0);
  for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + N.dims[i] * M.dims[i];
  const int vars = offset[n];
  if (vars == 0) return 0;
  int eqs = 0;
  for (const auto& a : q.arrows()) eqs += N.dims[a.target] * M.dims[a.source];
  if (eqs == 0) return vars;

  // For a: s -> t, N_a f_s - f_t M_a = 0.
  RationalMatrix system(eqs, vars);
  int row = 0;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto [s, t] = q.arrows()[ai];
    const auto& Na = N.maps[ai];
    const auto& Ma = M.maps[ai];
    const int Ms = M.dims[s], Ns = N.dims[s], Nt = N.dims[t];
    for (int r = 0; r < Nt; ++r)
      for (int c = 0; c < Ms; ++c, ++row) {
        for (int k = 0; k < Ns; ++k)
          if (Na.at(r, k).numerator() != 0) system.at(row, offset[s] + k * Ms + c) += Na.at(r, k);
        for (int k = 0; k < M.dims[t]; ++k)
          if (Ma.at(k, c).numerator() != 0) system.at(row, offset[t] + r * M.dims[t] + k) -= Ma.at(k, c);
      }
  }
  return vars - system.rank();
}

int euler_form(const Quiver& q, const std::vector<int>& d, const std::vector<int>& e) {
  if (static_cast<int>(d.size()) != q.size() || static_cast<int>(e.size()) != q.size())
    throw std::invalid_argument("euler_form: vector length mismatch");
  int sum = 0;
  for (int i = 0; i < q.size(); ++i) sum += d[i] * e[i];
  for (const auto& a : q.arrows()) sum -= d[a.source] * e[a.target];
  return sum;
}

int euler_form(const RootSystem& rs, const std::vector<int>& d, const std::vector<int>& e) {
  return euler_form(Quiver::bipartite(rs), d, e);
}

int ext1_dim(const Representation& M, const Representation& N) {
  const int ext = hom_dim(M, N) - euler_form(M.quiver, M.dims, N.dims);
  if (ext < 0) throw std::logic_error("negative Ext^1 dimension");
  return ext;
}

}  // namespace mcluster
