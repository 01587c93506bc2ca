#pragma once

#include "toric/chain_complex.hpp"
#include "toric/fan.hpp"
#include "toric/polytope_cw.hpp"

namespace toric {

/// Full CW chain complex of the real 4-dimensional toric variety of a
/// complete 2D fan. Degrees 0..4, cell counts (f2, f1, 1+f1, 2, 1).
struct SurfaceComplex {
  ChainComplex cx;
  std::vector<int> betti;  // b_0..b_4 over Q
};

/// `alt_convention` swaps which torus 1-cell each generator component feeds;
/// every reported rank is invariant under the choice.
SurfaceComplex build_surface_complex(const Fan& fan2, bool alt_convention = false);

/// Link of a torus-fixed point: a 3-dimensional lens-like space.
struct SurfaceLink {
  int cone2_id = -1;
  IntMatrix d2, d1;           // chain complex C3=1, C2=2, C1=3, C0=2; d3 = 0
  std::vector<int> betti;     // (b0,b1,b2,b3), always (1,0,0,1)
  Int det_abs;                // |det| of the generator matrix
  std::vector<Int> torsion;   // invariant factors > 1 of H_1(L;Z)
  bool z_sphere = false;      // |det| == 1, then L is S^3
};

SurfaceLink vertex_link_surface(const Fan& fan2, int cone2_id);

struct SurfaceCensusEntry {
  int cone2_id = -1;
  Int det_abs;
  bool smooth = false;
};

struct SurfaceCensus {
  std::vector<SurfaceCensusEntry> vertices;
  bool all_smooth = true;
};

SurfaceCensus surface_singularity_census(const Fan& fan2);

}  // namespace toric
