#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toric/chain_complex.hpp"
#include "toric/fan.hpp"

namespace toric {

/// Defensive: signals an inconsistent global orientation. Unreachable for
/// validated fans.
class OrientationInconsistent : public std::runtime_error {
 public:
  explicit OrientationInconsistent(const std::string& what) : std::runtime_error(what) {}
};

struct DualCell {
  int id = -1;            // index within its dimension
  int dim = 0;            // 0..n
  int dual_cone_id = -1;  // -1 for the top cell (dual of the origin)
};

/// Regular CW structure of the dual polytope P(Sigma) with consistent
/// incidence signs; cells correspond to cones in complementary dimension
/// plus one top cell.
struct DualCW {
  int n = 0;
  std::vector<std::vector<DualCell>> cells;  // by dimension
  ChainComplex complex;                      // boundary matrices d^P_1..d^P_n
  // Signed boundary cycle of each 2-cell: (edge index, sign), in traversal
  // order.
  std::vector<std::vector<std::pair<int, int>>> cycles2;

  /// Cell index (within dimension n - dim cone) of the cell dual to a cone.
  int cell_of_cone(const Fan& fan, int cone_id) const;
};

DualCW build_dual_cw(const Fan& fan);

/// Signed edge cycle of a 2-cell (index within dimension 2).
const std::vector<std::pair<int, int>>& boundary_cycle_of_2cell(const DualCW& cw, int cell2);

/// Same complex with cells renumbered by a seeded permutation in every
/// dimension. Homology ranks are invariant; tests recompute with this.
ChainComplex permute_cells(const ChainComplex& cx, unsigned seed);

}  // namespace toric
