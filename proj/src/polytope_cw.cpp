#include "toric/polytope_cw.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <queue>
#include <random>

namespace toric {

namespace {

// Edge traversal sign: +1 when the edge's intrinsic orientation (toward the
// larger endpoint index) agrees with traversing from `from` to `to`.
int traversal_sign(int from, int to) { return to > from ? 1 : -1; }

}  // namespace

int DualCW::cell_of_cone(const Fan& fan, int cone_id) const {
  const Cone& c = fan.cone(cone_id);
  int celldim = n - c.dim;
  const auto& level = fan.cones_of_dim(c.dim);
  auto it = std::find(level.begin(), level.end(), cone_id);
  assert(it != level.end());
  (void)celldim;
  return int(it - level.begin());
}

DualCW build_dual_cw(const Fan& fan) {
  const int n = fan.ambient_dim();
  DualCW cw;
  cw.n = n;
  cw.cells.resize(size_t(n) + 1);
  // Dimension k cells are duals of (n-k)-cones, ordered as in the fan.
  for (int k = 0; k < n; ++k) {
    const auto& ids = fan.cones_of_dim(n - k);
    for (size_t i = 0; i < ids.size(); ++i)
      cw.cells[size_t(k)].push_back(DualCell{int(i), k, ids[i]});
  }
  cw.cells[size_t(n)].push_back(DualCell{0, n, -1});

  ChainComplex cx;
  cx.dims.resize(size_t(n) + 1);
  for (int k = 0; k <= n; ++k) cx.dims[size_t(k)] = int(cw.cells[size_t(k)].size());
  cx.d.resize(size_t(n) + 1);
  cx.d[0] = IntMatrix(0, cx.dims[0]);

  // Vertex cell index by cone id (vertices are duals of maximal cones).
  std::map<int, int> vcell;
  {
    const auto& ids = fan.cones_of_dim(n);
    for (size_t i = 0; i < ids.size(); ++i) vcell[ids[i]] = int(i);
  }
  // Edge cell index by cone id (duals of (n-1)-cones).
  std::map<int, int> ecell;
  {
    const auto& ids = fan.cones_of_dim(n - 1);
    for (size_t i = 0; i < ids.size(); ++i) ecell[ids[i]] = int(i);
  }

  // d1: each edge joins the cells of the two maximal cones containing its
  // dual (n-1)-cone; oriented from the smaller to the larger cell index.
  {
    IntMatrix d1(cx.dims[0], cx.dims[1]);
    const auto& ids = fan.cones_of_dim(n - 1);
    for (size_t e = 0; e < ids.size(); ++e) {
      std::vector<int> ends;
      if (n == 3) {
        ends = fan.cofaces_of_2cone(ids[e]);
      } else {
        int ray = fan.cone(ids[e]).ray_ids[0];
        for (int c2 : fan.cones_of_dim(2)) {
          const auto& rs = fan.cone(c2).ray_ids;
          if (rs[0] == ray || rs[1] == ray) ends.push_back(c2);
        }
      }
      if (ends.size() != 2)
        throw OrientationInconsistent("edge cell without exactly two endpoints");
      int u = vcell.at(ends[0]), v = vcell.at(ends[1]);
      if (u == v) throw OrientationInconsistent("degenerate edge");
      d1(std::max(u, v), int(e)) = 1;
      d1(std::min(u, v), int(e)) = -1;
    }
    cx.d[1] = std::move(d1);
  }

  // d2 and the signed boundary cycles.
  {
    IntMatrix d2(cx.dims[1], cx.dims[2]);
    const int n2 = cx.dims[2];
    cw.cycles2.resize(size_t(n2));
    for (int f = 0; f < n2; ++f) {
      // Walk the edge/vertex cycle of the 2-cell.
      std::vector<std::pair<int, int>> walk;  // (edge cone id, following vertex cone id)
      if (n == 3) {
        int ray = cw.cells[2][size_t(f)].dual_cone_id;
        walk = fan.ray_star(fan.cone(ray).ray_ids[0]);
      } else {
        // Single top cell of a polygon: edges in angular order; the 2-cones
        // are stored in angular order, 2-cone k spanning rays (k, k+1).
        const auto& sect = fan.cones_of_dim(2);
        const int f1 = int(sect.size());
        for (int k = 0; k < f1; ++k) {
          const auto& a = fan.cone(sect[size_t(k)]).ray_ids;
          const auto& b = fan.cone(sect[size_t((k + 1) % f1)]).ray_ids;
          // shared ray of consecutive sectors
          int shared = (a[0] == b[0] || a[0] == b[1]) ? a[0] : a[1];
          walk.emplace_back(fan.cones_of_dim(1)[size_t(shared)], sect[size_t((k + 1) % f1)]);
        }
      }
      // walk[k] = (edge e_k, vertex w_k) with e_{k+1} joining w_k, w_{k+1};
      // e_0 joins w_last and w_0. Assign signs so the 1-chain is a cycle.
      const size_t len = walk.size();
      for (size_t k = 0; k < len; ++k) {
        int e = ecell.at(walk[k].first);
        int to = vcell.at(walk[k].second);
        int from = vcell.at(walk[(k + len - 1) % len].second);
        int s = traversal_sign(from, to);
        d2(e, f) += s;
        cw.cycles2[size_t(f)].emplace_back(e, s);
      }
    }
    cx.d[2] = std::move(d2);
  }

  if (n == 3) {
    // Orient the 3-cell: propagate facet signs across shared edges so the
    // total 2-boundary cancels.
    const int nf = cx.dims[2];
    std::vector<int> eps(size_t(nf), 0);
    std::map<int, std::vector<int>> facets_of_edge;
    for (int f = 0; f < nf; ++f)
      for (auto& [e, s] : cw.cycles2[size_t(f)]) facets_of_edge[e].push_back(f);
    std::queue<int> bfs;
    eps[0] = 1;
    bfs.push(0);
    auto edge_sign = [&](int f, int e) {
      for (auto& [ee, s] : cw.cycles2[size_t(f)])
        if (ee == e) return s;
      throw OrientationInconsistent("edge not on facet");
    };
    while (!bfs.empty()) {
      int f = bfs.front();
      bfs.pop();
      for (auto& [e, s] : cw.cycles2[size_t(f)]) {
        auto& fs = facets_of_edge[e];
        if (fs.size() != 2) throw OrientationInconsistent("edge not on exactly two facets");
        int g = fs[0] == f ? fs[1] : fs[0];
        int want = -eps[size_t(f)] * s * edge_sign(g, e);
        if (eps[size_t(g)] == 0) {
          eps[size_t(g)] = want;
          bfs.push(g);
        } else if (eps[size_t(g)] != want) {
          throw OrientationInconsistent("boundary 2-sphere is not orientable");
        }
      }
    }
    IntMatrix d3(nf, 1);
    for (int f = 0; f < nf; ++f) {
      if (eps[size_t(f)] == 0) throw OrientationInconsistent("facet graph is disconnected");
      d3(f, 0) = eps[size_t(f)];
    }
    cx.d[3] = std::move(d3);
  }

  if (!cx.dd_zero()) throw OrientationInconsistent("dual CW boundary does not square to zero");
  cw.complex = std::move(cx);
  return cw;
}

const std::vector<std::pair<int, int>>& boundary_cycle_of_2cell(const DualCW& cw, int cell2) {
  return cw.cycles2.at(size_t(cell2));
}

ChainComplex permute_cells(const ChainComplex& cx, unsigned seed) {
  std::mt19937 rng(seed);
  const int t = cx.top();
  std::vector<std::vector<int>> perm(size_t(t) + 1);
  for (int k = 0; k <= t; ++k) {
    perm[size_t(k)].resize(size_t(cx.dims[size_t(k)]));
    std::iota(perm[size_t(k)].begin(), perm[size_t(k)].end(), 0);
    std::shuffle(perm[size_t(k)].begin(), perm[size_t(k)].end(), rng);
  }
  ChainComplex out;
  out.dims = cx.dims;
  out.d.resize(cx.d.size());
  out.d[0] = cx.d[0];
  for (int k = 1; k <= t; ++k) {
    const IntMatrix& m = cx.d[size_t(k)];
    IntMatrix p(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        p(perm[size_t(k - 1)][size_t(i)], perm[size_t(k)][size_t(j)]) = m(i, j);
    out.d[size_t(k)] = std::move(p);
  }
  return out;
}

}  // namespace toric
