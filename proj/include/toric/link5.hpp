#pragma once

#include <string>
#include <vector>

#include "toric/chain_complex.hpp"
#include "toric/fan.hpp"

namespace toric {

enum class RayType { AType, BType };

/// AType: no zero coordinate (torus fiber carries two 2-cells, three
/// 1-cells). BType: at least one zero (one 2-cell, two 1-cells).
struct RayClass {
  RayType type = RayType::AType;
  std::vector<int> zeros;  // vanishing coordinate positions, 0-based
};

RayClass classify_ray(const IntVec& g);

/// Convention knobs; every reported rank is invariant under them.
struct LinkBuildOptions {
  bool flip_b_sign = false;  // negate the BType 1-cell template rows
};

/// Signals a construction bug: the truncated d3 acquired a kernel.
class TruncationDegenerate : public std::runtime_error {
 public:
  explicit TruncationDegenerate(const std::string& w) : std::runtime_error(w) {}
};

/// An asserted rank identity of the partial 6-dimensional operators failed.
class RankMismatch : public std::runtime_error {
 public:
  explicit RankMismatch(const std::string& w) : std::runtime_error(w) {}
};

/// Full chain complex of the 5-dimensional link of a torus-fixed point.
/// Cell counts (a+b, 2(a+b), 1+3a+2b, 3+2a+b, 3, 1) in degrees 0..5.
struct Link5Complex {
  int cone3_id = -1;
  VertexStar star;
  int a = 0, b = 0;  // AType / BType rays in the star
  ChainComplex cx;
  std::vector<int> betti;  // b_0..b_5
  // Bookkeeping for truncation: per edge j, its block of C3 columns
  // ([start, start+n) with n = 2 for AType pairs, 1 for BType) and whether
  // the edge ray is AType.
  std::vector<int> c3_col_start;
  std::vector<int> c3_col_count;
  std::vector<bool> edge_is_a;
};

Link5Complex build_link5_complex(const Fan& fan3, int cone3_id,
                                 const LinkBuildOptions& opts = {});

/// Closed form (1, 0, f-3, f-3, 0, 1). Requires f_x1 >= 3.
std::vector<int> link5_betti_formula(int f_x1);

/// Degree-3 Moore truncation L_{<3}: all cells of degree >= 4 removed, all
/// BType fiber 2-cells removed, and the negative-signed 2-cell of each AType
/// fiber removed.
struct TruncatedLink {
  int cone3_id = -1;
  ChainComplex cx;                         // degrees 0..3
  std::vector<std::string> removed_cells;  // human-readable labels
  std::vector<int> betti;                  // (1, 0, f-3, 0)
};

TruncatedLink moore_truncate_link(const Link5Complex& link);

/// 3-dimensional link of a codimension-4 stratum (a 2-cone), analyzed in the
/// saturated lattice Z^3 n span(sigma).
struct EdgeLinkAnalysis {
  int cone2_id = -1;
  std::vector<IntVec> basis;  // saturation basis, two 3-vectors
  IntMatrix coords;           // 2x2: generators in that basis
  Int det_abs;                // torsion order of H_1(L;Z)
  std::vector<int> betti;     // (1,0,0,1)
  bool z_sphere = false;
};

EdgeLinkAnalysis edge_link_homology(const Fan& fan3, int cone2_id);

/// The d5/d4 operators of the 6-dimensional total complex together with the
/// asserted rank identities and the directly computed top homology ranks.
struct PartialSixOperators {
  IntMatrix d5;  // (3 + 2*gamma + omega) x 3
  IntMatrix d4;  // (1 + 3*gamma + 2*omega) x (3 + 2*gamma + omega)
  int gamma = 0, omega = 0;
  int rk_im_d5 = 0, rk_ker_d4 = 0, rk_im_d4 = 0;
  int h6 = 0, h5 = 0, h4 = 0;
};

PartialSixOperators partial_sixfold_operators(const Fan& fan3,
                                              const LinkBuildOptions& opts = {});

}  // namespace toric
