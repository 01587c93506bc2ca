#include "toric/surface.hpp"

#include <cassert>
#include <stdexcept>

namespace toric {

SurfaceComplex build_surface_complex(const Fan& fan2, bool alt_convention) {
  if (fan2.ambient_dim() != 2)
    throw std::invalid_argument("build_surface_complex: 2D fan required");
  DualCW cw = build_dual_cw(fan2);
  const int f1 = int(fan2.rays().size());
  const int f2 = int(fan2.cones_of_dim(2).size());

  ChainComplex cx;
  cx.dims = {f2, f1, 1 + f1, 2, 1};
  cx.d.resize(5);
  cx.d[0] = IntMatrix(0, f2);

  // C1 and C0 are carried entirely by the base polytope: the fiber over an
  // edge is a circle with one 0-cell, the fiber over a vertex a point.
  cx.d[1] = cw.complex.d[1];

  // C2 column 0 is the polygon 2-cell against the fiber 0-cell; the product
  // cells e^1_tau x e^1_P have zero boundary (side faces cancel on the
  // one-vertex circle, end faces collapse over vertices).
  {
    IntMatrix d2(f1, 1 + f1);
    for (int e = 0; e < f1; ++e) d2(e, 0) = cw.complex.d[2](e, 0);
    cx.d[2] = std::move(d2);
  }

  // d3 rows carry the generator components of each ray.
  {
    IntMatrix d3(1 + f1, 2);
    for (int i = 0; i < f1; ++i) {
      const IntVec& g = fan2.rays()[size_t(i)].gen;
      if (!alt_convention) {
        d3(1 + i, 0) = g[0];
        d3(1 + i, 1) = -g[1];
      } else {
        d3(1 + i, 0) = -g[1];
        d3(1 + i, 1) = g[0];
      }
    }
    cx.d[3] = std::move(d3);
  }

  cx.d[4] = IntMatrix(2, 1);  // top cell has vanishing boundary

  if (!cx.dd_zero()) throw std::logic_error("surface complex: dd != 0");

  SurfaceComplex sc;
  sc.betti = cx.betti();
  sc.cx = std::move(cx);
  return sc;
}

SurfaceLink vertex_link_surface(const Fan& fan2, int cone2_id) {
  const Cone& sigma = fan2.cone(cone2_id);
  if (sigma.dim != 2) throw std::invalid_argument("vertex_link_surface: 2-cone required");
  const IntVec& g1 = fan2.rays()[size_t(sigma.ray_ids[0])].gen;
  const IntVec& g2 = fan2.rays()[size_t(sigma.ray_ids[1])].gen;

  SurfaceLink link;
  link.cone2_id = cone2_id;
  link.d2 = IntMatrix{{0, 0}, {-g1[0], g1[1]}, {-g2[0], g2[1]}};
  link.d1 = IntMatrix{{1, 0, 0}, {-1, 0, 0}};

  ChainComplex cx;
  cx.dims = {2, 3, 2, 1};
  cx.d = {IntMatrix(0, 2), link.d1, link.d2, IntMatrix(2, 1)};
  if (!cx.dd_zero()) throw std::logic_error("surface link: dd != 0");
  link.betti = cx.betti();

  IntMatrix block{{-g1[0], g1[1]}, {-g2[0], g2[1]}};
  link.det_abs = abs_int(det(block));
  SmithForm f = smith_normal_form(block);
  for (const auto& d : f.diagonal)
    if (d > 1) link.torsion.push_back(d);
  link.z_sphere = link.det_abs == 1;
  return link;
}

SurfaceCensus surface_singularity_census(const Fan& fan2) {
  SurfaceCensus census;
  for (int cid : fan2.maximal_cones()) {
    SurfaceLink link = vertex_link_surface(fan2, cid);
    bool smooth = link.z_sphere;
    census.vertices.push_back({cid, link.det_abs, smooth});
    census.all_smooth = census.all_smooth && smooth;
  }
  return census;
}

}  // namespace toric
